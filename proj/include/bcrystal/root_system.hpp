#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

/*
  Root-system data for the finite types B_n and C_n (n >= 2): Cartan
  matrices, the positive roots in the beta/gamma labeling, their expansions
  in simple-root and epsilon coordinates, and the coroot pairing.

  Positive roots come in two families.  In type B_n:
      beta(i,k)  = a_i + ... + a_k                      1 <= i <= k <= n
      gamma(i,k) = a_i + ... + a_{k-1} + 2a_k + ... + 2a_n   1 <= i < k <= n
  In type C_n:
      beta(i,k)  = a_i + ... + a_k                      1 <= i <= k <  n
      gamma(i,k) = a_i + ... + a_{n-1} + a_n + a_{n-1} + ... + a_k
                                                        1 <= i <= k <= n
  Both types have n^2 positive roots.  Weights are stored as integer
  coefficient vectors over the simple-root basis.
*/

namespace bcrystal {

enum class Kind { B, C };

struct LieType {
  Kind kind;
  int rank;

  LieType(Kind k, int n) : kind(k), rank(n) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
  }
  auto operator<=>(const LieType&) const = default;
};

std::string to_string(LieType t);

enum class RootFamily { beta, gamma };

// Symbolic positive root; text form "B(i,k)" / "G(i,k)".
struct RootLabel {
  RootFamily family;
  int i;
  int k;

  auto operator<=>(const RootLabel&) const = default;
};

inline RootLabel beta(int i, int k) { return {RootFamily::beta, i, k}; }
inline RootLabel gamma(int i, int k) { return {RootFamily::gamma, i, k}; }

std::string to_string(const RootLabel& r);
RootLabel parse_root_label(const std::string& text);

bool is_valid_root(LieType t, const RootLabel& r);

// Integer coefficient vectors over the simple roots a_1..a_n.
using RootVector = std::vector<int>;
using Weight = std::vector<int>;

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);

// Result of stepping a positive root by +-a_i: another positive root, the
// zero vector, or nothing (the step leaves the root system).
class RootStep {
 public:
  static RootStep none() { return RootStep{State::none, {}}; }
  static RootStep zero() { return RootStep{State::zero, {}}; }
  static RootStep to(RootLabel r) { return RootStep{State::root, r}; }

  bool is_none() const { return state_ == State::none; }
  bool is_zero() const { return state_ == State::zero; }
  bool is_root() const { return state_ == State::root; }
  RootLabel root() const {
    if (!is_root()) throw std::logic_error("RootStep holds no root");
    return root_;
  }

 private:
  enum class State { none, zero, root };
  RootStep(State s, RootLabel r) : state_(s), root_(r) {}
  State state_;
  RootLabel root_;
};

enum class StepDir { add, sub };

class RootSystem {
 public:
  explicit RootSystem(LieType t);

  // Shared per-type instance (immutable, safe across threads).
  static const RootSystem& get(LieType t);

  LieType type() const { return type_; }
  int rank() const { return type_.rank; }

  // Entry a[i][j] (0-based) of the Cartan matrix as displayed for the type:
  // B_n has a[n-1][n-2] = -2, C_n has a[n-2][n-1] = -2.
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  // All n^2 positive roots, ordered by (family, i, k).
  const std::vector<RootLabel>& positive_roots() const { return roots_; }

  const RootVector& simple_expansion(const RootLabel& r) const;
  RootVector epsilon_expansion(const RootLabel& r) const;

  // <a_i^dual, w> for w in simple-root coordinates: row i of the Cartan
  // matrix dotted with the coefficients.
  int pairing(int i, const Weight& w) const;

  // Table lookup of r +- a_i over the simple-root expansions.
  RootStep step(const RootLabel& r, int i, StepDir dir) const;

  int root_index(const RootLabel& r) const;

 private:
  void check_root(const RootLabel& r) const;

  LieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootLabel> roots_;
  std::vector<RootVector> expansions_;
  std::map<RootLabel, int> index_;
  std::map<RootVector, RootLabel> by_vector_;
};

// Free-function views of the same data.
inline std::vector<std::vector<int>> cartan_matrix(LieType t) {
  return RootSystem::get(t).cartan_matrix();
}
inline std::vector<RootLabel> positive_roots(LieType t) {
  return RootSystem::get(t).positive_roots();
}
inline RootVector expand_simple(LieType t, const RootLabel& r) {
  return RootSystem::get(t).simple_expansion(r);
}
inline RootVector expand_epsilon(LieType t, const RootLabel& r) {
  return RootSystem::get(t).epsilon_expansion(r);
}
inline int coroot_pairing(LieType t, int i, const Weight& w) {
  return RootSystem::get(t).pairing(i, w);
}
inline RootStep root_step(LieType t, const RootLabel& r, int i, StepDir dir) {
  return RootSystem::get(t).step(r, i, dir);
}

// Sum of the coefficients; BFS depth of a crystal element is -coefficient_sum
// of its weight.
int coefficient_sum(const Weight& w);

}  // namespace bcrystal
