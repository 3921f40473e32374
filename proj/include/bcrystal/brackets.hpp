#pragma once

#include <cstddef>
#include <vector>

/*
  Bracketing sequences shared by the tableau and Kostant-partition
  signatures.  An item is ')' or '(' plus provenance for the box or root copy
  it came from.  Cancellation is a single left-to-right pass matching each
  ')' with the nearest pending '('; the survivors keep their original order
  and always form ")...)(...(".
*/

namespace bcrystal {

enum class BracketSide { close, open };  // ')' , '('

template <typename Source>
struct Bracket {
  BracketSide side;
  Source source;
};

template <typename Source>
std::vector<Bracket<Source>> cancel_brackets(
    const std::vector<Bracket<Source>>& seq) {
  std::vector<bool> dead(seq.size(), false);
  std::vector<size_t> pending;
  for (size_t idx = 0; idx < seq.size(); ++idx) {
    if (seq[idx].side == BracketSide::open) {
      pending.push_back(idx);
    } else if (!pending.empty()) {
      dead[pending.back()] = true;
      dead[idx] = true;
      pending.pop_back();
    }
  }
  std::vector<Bracket<Source>> out;
  for (size_t idx = 0; idx < seq.size(); ++idx)
    if (!dead[idx]) out.push_back(seq[idx]);
  return out;
}

template <typename Source>
int count_side(const std::vector<Bracket<Source>>& seq, BracketSide side) {
  int c = 0;
  for (const auto& item : seq)
    if (item.side == side) ++c;
  return c;
}

}  // namespace bcrystal
