#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bcrystal/kostant.hpp"
#include "bcrystal/root_system.hpp"

/*
  Stack notation for Kostant partitions.  Every positive root is drawn as a
  column of levels, each holding one value once or twice:

    type B:  beta(j,k)  = j..k bottom-up;
             gamma(l,m) = l..n-1, the doubled level "n n", then n-1 down to m.
    type C:  beta(j,k)  = j..k;
             gamma(l,m) = l..n-1, a single n, then n-1 down to m (for m = n
                          just the column l..n);
             gamma(h,h) = doubled levels h..n-1 with a single n on top.

  Crystal moves add or remove a value i at the top of a stack.  A move is
  valid when the result is again the stack of a root, the empty stack, or --
  type C with i = n only -- two identical single-root stacks side by side
  (the doubled column splits in half).  These predicates reproduce exactly
  the Phi_i bracket blocks; the tableau/Kostant operators never run through
  this module, it only renders and cross-validates.
*/

namespace bcrystal {

struct StackLevel {
  int value;
  int width;  // 1 or 2
  auto operator<=>(const StackLevel&) const = default;
};

// Levels bottom to top.
using Stack = std::vector<StackLevel>;

Stack stack_of(LieType t, const RootLabel& r);

enum class StackMoveKind { root, split, empty, none };

struct StackMove {
  StackMoveKind kind;
  RootLabel root;  // result root for `root`, one of the halves for `split`

  static StackMove none() { return {StackMoveKind::none, beta(1, 1)}; }
  static StackMove empty() { return {StackMoveKind::empty, beta(1, 1)}; }
  static StackMove to(RootLabel r) { return {StackMoveKind::root, r}; }
  static StackMove split(RootLabel r) { return {StackMoveKind::split, r}; }

  bool valid() const { return kind != StackMoveKind::none; }
  bool operator==(const StackMove& other) const {
    if (kind != other.kind) return false;
    if (kind == StackMoveKind::root || kind == StackMoveKind::split)
      return root == other.root;
    return true;
  }
};

// Simulate placing value i on top of the stack of r / removing it from the
// top.  remove_top yields `empty` exactly when r = a_i, and in type C with
// i = n both moves can split gamma(k,k) into two identical stacks.
StackMove add_top(LieType t, const RootLabel& r, int i);
StackMove remove_top(LieType t, const RootLabel& r, int i);

// ASCII rendering: stacks ordered by (family, i, k) with counts expanded,
// drawn side by side, levels top-down, doubled levels as "v v".
std::string render_stacks(const KostantPartition& partition);

}  // namespace bcrystal
