#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcrystal/brackets.hpp"
#include "bcrystal/root_system.hpp"

/*
  Kostant partitions: multisets of positive roots with the bracketing
  sequences over the Phi_i root orders and the crystal operators, including
  the exceptional i = n rules of type C.

  For i < n (both types) the bracket blocks are, for j = 1..i-1,
      )^c[beta(j,i)] (^c[beta(j,i-1)] )^c[gamma(j,i)] (^c[gamma(j,i+1)]
  followed by )^c[beta(i,i)].  For i = n the blocks are
      type B:  )^c[beta(j,n)] (^2c[beta(j,n-1)] )^2c[gamma(j,n)] (^c[beta(j,n)]
               ... )^c[beta(n,n)]
      type C:  )^c[gamma(j,j)] (^c[beta(j,n-1)] )^c[gamma(j,n)] (^c[gamma(j,j)]
               ... )^c[gamma(n,n)]
*/

namespace bcrystal {

struct KpBracketSource {
  RootLabel root;
  int copy;  // 0-based within the block, ranging over the doubled count
};

using KpBracket = Bracket<KpBracketSource>;

// One block of the Phi_i bracketing: `factor` is 2 for the doubled type-B
// i = n blocks and 1 otherwise.
struct PhiBlock {
  RootLabel root;
  BracketSide side;
  int factor;
};

std::vector<PhiBlock> phi_blocks(LieType t, int i);

class KostantPartition {
 public:
  static KostantPartition zero(LieType t) { return KostantPartition(t, {}); }
  static KostantPartition from_counts(LieType t,
                                      std::map<RootLabel, int> counts);

  LieType type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::map<RootLabel, int>& counts() const { return counts_; }
  int count(const RootLabel& r) const;
  bool is_zero() const { return counts_.empty(); }

  std::vector<KpBracket> bracketing(int i) const;
  // Canceled form ")...)(...(" with (root, copy) provenance.
  std::vector<KpBracket> signature(int i) const;

  KostantPartition f(int i) const;
  std::optional<KostantPartition> e(int i) const;

  Weight weight() const;
  int epsilon(int i) const;
  int phi(int i) const;

  std::string to_text() const;

  bool operator==(const KostantPartition&) const = default;
  auto operator<=>(const KostantPartition&) const = default;

 private:
  KostantPartition(LieType t, std::map<RootLabel, int> counts)
      : type_(t), counts_(std::move(counts)) {}

  // delta may be negative; a count driven below zero is an internal error.
  void bump(const RootLabel& r, int delta);
  KostantPartition f_generic(const std::vector<KpBracket>& sig, int i) const;
  KostantPartition f_type_c_top(const std::vector<KpBracket>& sig) const;
  std::optional<KostantPartition> e_generic(const std::vector<KpBracket>& sig,
                                            int i) const;
  std::optional<KostantPartition> e_type_c_top(
      const std::vector<KpBracket>& sig) const;

  LieType type_;
  std::map<RootLabel, int> counts_;
};

}  // namespace bcrystal
