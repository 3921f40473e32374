#include "bcrystal/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace bcrystal {

std::string to_string(Entry e) {
  if (e.is_zero()) return "0";
  if (e.is_letter()) return std::to_string(e.value());
  return std::to_string(e.value()) + "b";
}

bool is_valid_entry(LieType t, Entry e) {
  if (e.is_zero()) return t.kind == Kind::B;
  return e.value() >= 1 && e.value() <= t.rank;
}

// Position along the fundamental-crystal chain, 0-based.
static int ordinal(LieType t, Entry e) {
  const int n = t.rank;
  if (e.is_letter()) return e.value() - 1;
  if (e.is_zero()) return n;
  return t.kind == Kind::B ? 2 * n + 1 - e.value() : 2 * n - e.value();
}

static Entry entry_at_ordinal(LieType t, int pos) {
  const int n = t.rank;
  const int size = t.kind == Kind::B ? 2 * n + 1 : 2 * n;
  if (pos < 0 || pos >= size) throw std::logic_error("alphabet overrun");
  if (pos < n) return Entry::letter(pos + 1);
  if (t.kind == Kind::B) {
    if (pos == n) return Entry::zero();
    return Entry::bar(2 * n + 1 - pos);
  }
  return Entry::bar(2 * n - pos);
}

Entry successor(LieType t, Entry e) {
  return entry_at_ordinal(t, ordinal(t, e) + 1);
}

Entry predecessor(LieType t, Entry e) {
  return entry_at_ordinal(t, ordinal(t, e) - 1);
}

std::pair<int, int> entry_brackets(LieType t, int i, Entry e) {
  const int n = t.rank;
  if (i < 1 || i > n) throw std::out_of_range("operator index out of range");
  if (!is_valid_entry(t, e))
    throw std::invalid_argument("entry " + to_string(e) + " not in alphabet of " +
                                to_string(t));
  if (i < n) {
    if (e == Entry::letter(i) || e == Entry::bar(i + 1)) return {0, 1};
    if (e == Entry::letter(i + 1) || e == Entry::bar(i)) return {1, 0};
    return {0, 0};
  }
  if (t.kind == Kind::B) {
    if (e == Entry::letter(n)) return {0, 2};
    if (e.is_zero()) return {1, 1};
    if (e == Entry::bar(n)) return {2, 0};
    return {0, 0};
  }
  if (e == Entry::letter(n)) return {0, 1};
  if (e == Entry::bar(n)) return {1, 0};
  return {0, 0};
}

MLTableau MLTableau::highest_weight(LieType t) {
  return MLTableau(t, std::vector<std::vector<Entry>>(t.rank));
}

MLTableau MLTableau::from_canonical(LieType t,
                                    std::vector<std::vector<Entry>> rows) {
  const int n = t.rank;
  if (static_cast<int>(rows.size()) != n)
    throw MalformedTableau(0, "expected " + std::to_string(n) + " rows");
  for (int j = 1; j <= n; ++j) {
    auto& row = rows[j - 1];
    std::sort(row.begin(), row.end());
    int zeros = 0;
    for (Entry e : row) {
      if (!is_valid_entry(t, e))
        throw MalformedTableau(3, "entry " + to_string(e) + " not in alphabet");
      if (!(Entry::letter(j) < e))
        throw MalformedTableau(3, "row " + std::to_string(j) +
                                      " holds entry " + to_string(e) +
                                      " not above its shaded letter");
      if (Entry::bar(j) < e)
        throw MalformedTableau(3, "row " + std::to_string(j) +
                                      " holds entry " + to_string(e) +
                                      " above its bar bound");
      if (e.is_zero()) ++zeros;
    }
    if (zeros > 1)
      throw MalformedTableau(4, "row " + std::to_string(j) +
                                    " holds more than one 0");
  }
  return MLTableau(t, std::move(rows));
}

MLTableau MLTableau::from_rows(LieType t,
                               const std::vector<std::vector<Entry>>& full_rows) {
  const int n = t.rank;
  if (static_cast<int>(full_rows.size()) != n)
    throw MalformedTableau(0, "expected " + std::to_string(n) + " rows");

  std::vector<std::vector<Entry>> canonical(n);
  for (int j = n; j >= 1; --j) {
    const auto& row = full_rows[j - 1];
    for (size_t p = 0; p + 1 < row.size(); ++p)
      if (row[p + 1] < row[p])
        throw MalformedTableau(2, "row " + std::to_string(j) +
                                      " is not weakly increasing");
    int shaded = 0, zeros = 0;
    for (Entry e : row) {
      if (!is_valid_entry(t, e))
        throw MalformedTableau(3, "entry " + to_string(e) + " not in alphabet");
      if (e < Entry::letter(j))
        throw MalformedTableau(0, "row " + std::to_string(j) +
                                      " holds entry " + to_string(e) +
                                      " below its row letter");
      if (Entry::bar(j) < e)
        throw MalformedTableau(3, "row " + std::to_string(j) +
                                      " holds entry " + to_string(e) +
                                      " above its bar bound");
      if (e == Entry::letter(j)) ++shaded;
      if (e.is_zero()) ++zeros;
    }
    if (zeros > 1)
      throw MalformedTableau(4, "row " + std::to_string(j) +
                                    " holds more than one 0");
    const int below = j < n ? static_cast<int>(full_rows[j].size()) : 0;
    if (shaded != below + 1)
      throw MalformedTableau(1, "row " + std::to_string(j) + " has " +
                                    std::to_string(shaded) + " shaded boxes, wants " +
                                    std::to_string(below + 1));
    canonical[j - 1].assign(row.begin() + shaded, row.end());
  }
  return MLTableau(t, std::move(canonical));
}

std::vector<int> MLTableau::shaded_counts() const {
  const int n = type_.rank;
  std::vector<int> shaded(n);
  int below = 0;  // total boxes of the row underneath
  for (int j = n; j >= 1; --j) {
    shaded[j - 1] = below + 1;
    below = shaded[j - 1] + static_cast<int>(rows_[j - 1].size());
  }
  return shaded;
}

std::vector<std::vector<Entry>> MLTableau::expanded_rows() const {
  const int n = type_.rank;
  std::vector<int> shaded = shaded_counts();
  std::vector<std::vector<Entry>> out(n);
  for (int j = 1; j <= n; ++j) {
    out[j - 1].assign(shaded[j - 1], Entry::letter(j));
    out[j - 1].insert(out[j - 1].end(), rows_[j - 1].begin(), rows_[j - 1].end());
  }
  return out;
}

std::vector<std::pair<Entry, BoxRef>> MLTableau::reading(ReadingMode mode) const {
  const int n = type_.rank;
  std::vector<std::vector<Entry>> expanded = expanded_rows();
  std::vector<std::pair<Entry, BoxRef>> word;
  if (mode == ReadingMode::ME) {
    for (int j = 1; j <= n; ++j)
      for (int pos = static_cast<int>(expanded[j - 1].size()) - 1; pos >= 0; --pos)
        word.push_back({expanded[j - 1][pos], BoxRef{j, pos}});
  } else {
    // Row widths strictly decrease, so every column is a top segment.
    const int width = static_cast<int>(expanded[0].size());
    for (int col = width - 1; col >= 0; --col)
      for (int j = 1; j <= n; ++j) {
        if (col >= static_cast<int>(expanded[j - 1].size())) break;
        word.push_back({expanded[j - 1][col], BoxRef{j, col}});
      }
  }
  return word;
}

std::vector<TableauBracket> MLTableau::bracketing(int i, ReadingMode mode) const {
  std::vector<int> shaded = shaded_counts();
  std::vector<TableauBracket> seq;
  for (const auto& [entry, box] : reading(mode)) {
    auto [closes, opens] = entry_brackets(type_, i, entry);
    TableauBracketSource src{box, entry, box.pos < shaded[box.row - 1]};
    for (int c = 0; c < closes; ++c) seq.push_back({BracketSide::close, src});
    for (int c = 0; c < opens; ++c) seq.push_back({BracketSide::open, src});
  }
  return seq;
}

std::vector<TableauBracket> MLTableau::signature(int i, ReadingMode mode) const {
  return cancel_brackets(bracketing(i, mode));
}

static void insert_sorted(std::vector<Entry>& row, Entry e) {
  row.insert(std::upper_bound(row.begin(), row.end(), e), e);
}

static void erase_one(std::vector<Entry>& row, Entry e) {
  auto it = std::find(row.begin(), row.end(), e);
  if (it == row.end())
    throw std::logic_error("entry " + to_string(e) + " missing from its row");
  row.erase(it);
}

MLTableau MLTableau::f(int i, ReadingMode mode) const {
  std::vector<TableauBracket> sig = signature(i, mode);
  auto it = std::find_if(sig.begin(), sig.end(), [](const TableauBracket& b) {
    return b.side == BracketSide::open;
  });
  // Row i always contributes a surviving '(' from its shaded block.
  if (it == sig.end()) throw std::logic_error("signature lost the row-i '('");

  const TableauBracketSource& src = it->source;
  std::vector<std::vector<Entry>> rows = rows_;
  if (src.shaded) {
    // Bumping a shaded i also inserts a column 1..i; in canonical storage
    // both amount to one new unshaded successor in row i.
    if (src.box.row != i || src.entry != Entry::letter(i))
      throw std::logic_error("shaded '(' outside row i");
    insert_sorted(rows[i - 1], successor(type_, src.entry));
  } else {
    erase_one(rows[src.box.row - 1], src.entry);
    insert_sorted(rows[src.box.row - 1], successor(type_, src.entry));
  }
  return MLTableau(type_, std::move(rows));
}

std::optional<MLTableau> MLTableau::e(int i, ReadingMode mode) const {
  std::vector<TableauBracket> sig = signature(i, mode);
  auto it = std::find_if(sig.rbegin(), sig.rend(), [](const TableauBracket& b) {
    return b.side == BracketSide::close;
  });
  if (it == sig.rend()) return std::nullopt;

  // A shaded box can never carry the rightmost ')': the shaded i+1 block of
  // row i+1 cancels against the longer shaded i block of row i.
  const TableauBracketSource& src = it->source;
  if (src.shaded) throw std::logic_error("shaded ')' survived cancellation");
  Entry prev = predecessor(type_, src.entry);
  std::vector<std::vector<Entry>> rows = rows_;
  erase_one(rows[src.box.row - 1], src.entry);
  // Turning the box back into the row letter deletes its column.
  if (!(src.box.row == i && prev == Entry::letter(i)))
    insert_sorted(rows[src.box.row - 1], prev);
  return MLTableau(type_, std::move(rows));
}

Weight MLTableau::weight() const {
  const RootSystem& rs = RootSystem::get(type_);
  const int n = type_.rank;
  Weight w(n, 0);
  auto subtract = [&](const RootLabel& r, int mult) {
    const RootVector& v = rs.simple_expansion(r);
    for (int j = 0; j < n; ++j) w[j] -= mult * v[j];
  };
  for (int j = 1; j <= n; ++j)
    for (Entry e : rows_[j - 1]) {
      if (type_.kind == Kind::B) {
        if (e.is_zero())
          subtract(beta(j, n), 1);
        else if (e.is_letter())
          subtract(beta(j, e.value() - 1), 1);
        else if (e.value() == j)
          subtract(beta(j, n), 2);
        else
          subtract(gamma(j, e.value()), 1);
      } else {
        if (e.is_letter())
          subtract(beta(j, e.value() - 1), 1);
        else
          subtract(gamma(j, e.value()), 1);
      }
    }
  return w;
}

int MLTableau::epsilon(int i, ReadingMode mode) const {
  return count_side(signature(i, mode), BracketSide::close);
}

int MLTableau::phi(int i, ReadingMode mode) const {
  return epsilon(i, mode) + RootSystem::get(type_).pairing(i, weight());
}

std::string MLTableau::to_text() const {
  std::ostringstream out;
  out << '[';
  for (size_t j = 0; j < rows_.size(); ++j) {
    if (j) out << '|';
    for (size_t p = 0; p < rows_[j].size(); ++p) {
      if (p) out << ' ';
      out << rows_[j][p].code();
    }
  }
  out << ']';
  return out.str();
}

}  // namespace bcrystal
