#include "bcrystal/stacks.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace bcrystal {

Stack stack_of(LieType t, const RootLabel& r) {
  if (!is_valid_root(t, r))
    throw std::invalid_argument("root " + to_string(r) + " is not valid in " +
                                to_string(t));
  const int n = t.rank;
  Stack s;
  if (r.family == RootFamily::beta) {
    for (int v = r.i; v <= r.k; ++v) s.push_back({v, 1});
    return s;
  }
  if (t.kind == Kind::B) {
    for (int v = r.i; v < n; ++v) s.push_back({v, 1});
    s.push_back({n, 2});
    for (int v = n - 1; v >= r.k; --v) s.push_back({v, 1});
    return s;
  }
  if (r.i == r.k) {
    for (int v = r.i; v < n; ++v) s.push_back({v, 2});
    s.push_back({n, 1});
    return s;
  }
  for (int v = r.i; v < n; ++v) s.push_back({v, 1});
  s.push_back({n, 1});
  for (int v = n - 1; v >= r.k; --v) s.push_back({v, 1});
  return s;
}

namespace {

// stack -> root lookup per type, built once.
const std::map<Stack, RootLabel>& stack_table(LieType t) {
  static std::mutex mutex;
  static std::map<LieType, std::unique_ptr<std::map<Stack, RootLabel>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[t];
  if (!slot) {
    slot = std::make_unique<std::map<Stack, RootLabel>>();
    for (const RootLabel& r : RootSystem::get(t).positive_roots())
      (*slot)[stack_of(t, r)] = r;
  }
  return *slot;
}

bool all_doubled(const Stack& s) {
  return std::all_of(s.begin(), s.end(),
                     [](const StackLevel& l) { return l.width == 2; });
}

}  // namespace

StackMove add_top(LieType t, const RootLabel& r, int i) {
  const auto& table = stack_table(t);
  Stack s = stack_of(t, r);

  // New single level on top.
  {
    Stack c = s;
    c.push_back({i, 1});
    auto it = table.find(c);
    if (it != table.end()) return StackMove::to(it->second);
  }
  // Widen a single top level carrying the same value.
  if (!s.empty() && s.back().value == i && s.back().width == 1) {
    Stack c = s;
    c.back().width = 2;
    auto it = table.find(c);
    if (it != table.end()) return StackMove::to(it->second);
    // Type C, i = n: a fully doubled column splits into two copies.  The
    // added n must merge with existing levels; a lone doubled n is the
    // no-'(' fallback, not a split.
    if (t.kind == Kind::C && i == t.rank && c.size() >= 2 && all_doubled(c)) {
      Stack half;
      for (const StackLevel& l : c) half.push_back({l.value, 1});
      auto half_it = table.find(half);
      if (half_it != table.end()) return StackMove::split(half_it->second);
    }
  }
  return StackMove::none();
}

StackMove remove_top(LieType t, const RootLabel& r, int i) {
  const auto& table = stack_table(t);
  Stack s = stack_of(t, r);
  if (s.back().value != i) return StackMove::none();

  if (s.back().width == 2) {
    Stack c = s;
    c.back().width = 1;
    auto it = table.find(c);
    return it != table.end() ? StackMove::to(it->second) : StackMove::none();
  }
  Stack c = s;
  c.pop_back();
  if (c.empty()) return StackMove::empty();
  auto it = table.find(c);
  if (it != table.end()) return StackMove::to(it->second);
  if (t.kind == Kind::C && i == t.rank && all_doubled(c)) {
    Stack half;
    for (const StackLevel& l : c) half.push_back({l.value, 1});
    auto half_it = table.find(half);
    if (half_it != table.end()) return StackMove::split(half_it->second);
  }
  return StackMove::none();
}

std::string render_stacks(const KostantPartition& partition) {
  const LieType t = partition.type();
  std::vector<Stack> stacks;
  for (const auto& [root, c] : partition.counts())
    for (int copy = 0; copy < c; ++copy) stacks.push_back(stack_of(t, root));
  if (stacks.empty()) return "";

  // Each stack becomes a block of lines, top level first.
  std::vector<std::vector<std::string>> blocks;
  std::vector<size_t> widths;
  size_t height = 0;
  for (const Stack& s : stacks) {
    std::vector<std::string> lines;
    size_t width = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      std::string text = std::to_string(it->value);
      if (it->width == 2) text += " " + text;
      width = std::max(width, text.size());
      lines.push_back(std::move(text));
    }
    height = std::max(height, lines.size());
    widths.push_back(width);
    blocks.push_back(std::move(lines));
  }

  // Bottom-aligned, two spaces between stacks, trailing blanks trimmed.
  std::ostringstream out;
  for (size_t line = 0; line < height; ++line) {
    std::string text;
    for (size_t b = 0; b < blocks.size(); ++b) {
      const auto& lines = blocks[b];
      std::string cell;
      if (line + lines.size() >= height) cell = lines[line + lines.size() - height];
      cell.resize(widths[b], ' ');
      if (b) text += "  ";
      text += cell;
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
  return out.str();
}

}  // namespace bcrystal
