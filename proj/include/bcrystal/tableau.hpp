#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcrystal/brackets.hpp"
#include "bcrystal/root_system.hpp"

/*
  Marginally large tableaux of types B_n and C_n.

  The alphabet is 1 < ... < n < 0 < nbar < ... < 1bar in type B and the same
  without 0 in type C.  Row j of a marginally large tableau starts with a
  block of "shaded" j's whose length is exactly one more than the total
  length of row j+1; everything to their right is strictly larger than j and
  at most jbar.  Only the unshaded part carries information, so a tableau is
  stored canonically as n sorted multisets of unshaded entries and the
  shaded blocks are recomputed on demand.  Crystal operators, readings,
  signatures and weights follow the usual bracketing conventions on the
  expanded form.
*/

namespace bcrystal {

// One letter of the alphabet, encoded as +k (letter k), 0, or -k (bar k).
class Entry {
 public:
  static Entry letter(int k) { return Entry(k); }
  static Entry zero() { return Entry(0); }
  static Entry bar(int k) { return Entry(-k); }
  static Entry from_code(int code) { return Entry(code); }

  bool is_letter() const { return code_ > 0; }
  bool is_zero() const { return code_ == 0; }
  bool is_bar() const { return code_ < 0; }
  // Letter value k for letter/bar entries.
  int value() const { return code_ < 0 ? -code_ : code_; }
  int code() const { return code_; }

  bool operator==(const Entry&) const = default;
  // Alphabet order: letters ascending, then 0, then bars n..1.
  std::strong_ordering operator<=>(const Entry& other) const {
    int ga = group(), gb = other.group();
    if (ga != gb) return ga <=> gb;
    return code_ <=> other.code_;
  }

 private:
  explicit Entry(int code) : code_(code) {}
  int group() const { return code_ > 0 ? 0 : code_ == 0 ? 1 : 2; }
  int code_;
};

std::string to_string(Entry e);

bool is_valid_entry(LieType t, Entry e);
Entry successor(LieType t, Entry e);     // next letter of the alphabet
Entry predecessor(LieType t, Entry e);   // previous letter

// Bracket contribution (#close, #open) of an entry for index i: the number
// of consecutive i-arrows entering/leaving its node in the fundamental
// crystal.  Type B, i = n: n -> "((", 0 -> ")(", nbar -> "))".
std::pair<int, int> entry_brackets(LieType t, int i, Entry e);

enum class ReadingMode { ME, FE };

// Position of a box in the expanded tableau; row is 1-based, pos counts from
// the leftmost box of the row.
struct BoxRef {
  int row;
  int pos;
  auto operator<=>(const BoxRef&) const = default;
};

struct TableauBracketSource {
  BoxRef box;
  Entry entry;
  bool shaded;
};

using TableauBracket = Bracket<TableauBracketSource>;

class MalformedTableau : public std::invalid_argument {
 public:
  MalformedTableau(int condition, const std::string& what)
      : std::invalid_argument(what), condition_(condition) {}
  // 1 = shaded count, 2 = row order, 3 = entry bounds, 4 = zero
  // multiplicity, 0 = other structural defect.
  int condition() const { return condition_; }

 private:
  int condition_;
};

class MLTableau {
 public:
  // The highest-weight element: all boxes shaded.
  static MLTableau highest_weight(LieType t);

  // Build from fully expanded rows (shaded blocks included), validating the
  // defining conditions; throws MalformedTableau.
  static MLTableau from_rows(LieType t,
                             const std::vector<std::vector<Entry>>& full_rows);

  // Build from canonical rows (unshaded entries only).  Rows are sorted
  // here; entry bounds and zero multiplicity are validated.
  static MLTableau from_canonical(LieType t,
                                  std::vector<std::vector<Entry>> rows);

  LieType type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<std::vector<Entry>>& rows() const { return rows_; }

  std::vector<int> shaded_counts() const;
  std::vector<std::vector<Entry>> expanded_rows() const;

  // Every box exactly once: ME by rows top to bottom, each right to left;
  // FE by columns right to left, each top to bottom.
  std::vector<std::pair<Entry, BoxRef>> reading(ReadingMode mode) const;

  std::vector<TableauBracket> bracketing(int i, ReadingMode mode) const;
  // Canceled form ")...)(...(" with box provenance.
  std::vector<TableauBracket> signature(int i,
                                        ReadingMode mode = ReadingMode::ME) const;

  MLTableau f(int i, ReadingMode mode = ReadingMode::ME) const;
  std::optional<MLTableau> e(int i, ReadingMode mode = ReadingMode::ME) const;

  Weight weight() const;
  int epsilon(int i, ReadingMode mode = ReadingMode::ME) const;
  int phi(int i, ReadingMode mode = ReadingMode::ME) const;

  std::string to_text() const;

  bool operator==(const MLTableau&) const = default;
  auto operator<=>(const MLTableau&) const = default;

 private:
  MLTableau(LieType t, std::vector<std::vector<Entry>> rows)
      : type_(t), rows_(std::move(rows)) {}

  LieType type_;
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace bcrystal
