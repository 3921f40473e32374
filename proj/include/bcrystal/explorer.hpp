#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bcrystal/isomorphism.hpp"
#include "bcrystal/kostant.hpp"
#include "bcrystal/tableau.hpp"

/*
  Crystal-graph generation and the cross-realization verification harness.

  generate() closes the highest-weight element under f_1..f_n up to a given
  number of applications.  Since every f step subtracts exactly one simple
  root, BFS depth equals the height of minus the weight, new elements can
  only appear in the next level, and levels are deduplicated and sorted so
  repeated runs produce identical graphs.
*/

namespace bcrystal {

enum class Realization { tableaux, kostant };

inline constexpr long kDefaultVertexCap = 5'000'000;

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Elem>
struct CrystalGraph {
  LieType type;
  int depth = 0;
  std::vector<Elem> vertices;                // BFS order, levels sorted
  std::vector<std::array<int, 3>> edges;     // (source, i, target) indices

  bool operator==(const CrystalGraph&) const = default;
};

using TableauGraph = CrystalGraph<MLTableau>;
using KostantGraph = CrystalGraph<KostantPartition>;

TableauGraph generate_tableau_graph(LieType t, int depth,
                                    long vertex_cap = kDefaultVertexCap);
KostantGraph generate_kostant_graph(LieType t, int depth,
                                    long vertex_cap = kDefaultVertexCap);

std::string export_dot(const TableauGraph& graph);
std::string export_dot(const KostantGraph& graph);

// Number of ways to write `target` (nonnegative simple-root coordinates) as
// a Z>=0-combination of the positive roots; brute-force recursion,
// independent of the crystal operators.
long count_root_decompositions(LieType t, const std::vector<int>& target);

// Per-weight element counts in the two realizations, complete for all
// weights of height <= depth.
std::map<Weight, std::pair<long, long>> weight_census(LieType t, int depth);

struct CheckReport {
  std::string name;
  long elements = 0;
  long checks = 0;
  std::vector<std::string> violations;  // expected empty

  bool passed() const { return violations.empty(); }
};

// psi intertwines e/f and preserves wt, epsilon, phi on every element.
CheckReport verify_commutation(LieType t, int depth);
// ME and FE readings induce the same operators.
CheckReport verify_readings(LieType t, int depth);
// to_tableau(to_kostant(T)) = T, and psi is a weight-fiber bijection.
CheckReport verify_roundtrip(LieType t, int depth);
// Census columns agree with each other and with the brute-force counter.
CheckReport verify_census(LieType t, int depth);
// e(f(x)) = x, f(e(x)) = x where defined, wt(f x) = wt(x) - a_i, and
// epsilon counts the exact number of e applications, in both realizations.
CheckReport verify_axioms(LieType t, int depth);

}  // namespace bcrystal
