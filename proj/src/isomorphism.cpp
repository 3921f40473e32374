#include "bcrystal/isomorphism.hpp"

#include <algorithm>

namespace bcrystal {

KostantPartition row_to_kostant(LieType t, int j, const std::vector<Entry>& row) {
  const int n = t.rank;
  if (j < 1 || j > n) throw std::out_of_range("row index out of range");

  std::vector<int> letters(n + 1, 0), bars(n + 1, 0);
  int zeros = 0;
  for (Entry e : row) {
    if (!is_valid_entry(t, e) || !(Entry::letter(j) < e) || Entry::bar(j) < e)
      throw std::invalid_argument("entry " + to_string(e) +
                                  " cannot sit unshaded in row " +
                                  std::to_string(j));
    if (e.is_zero())
      ++zeros;
    else if (e.is_letter())
      ++letters[e.value()];
    else
      ++bars[e.value()];
  }

  std::map<RootLabel, int> counts;
  auto add = [&counts](const RootLabel& r, int c) {
    if (c > 0) counts[r] += c;
  };

  // Top-letter rules: (n,nbar) pairs, zeros, and the whole of row n.
  if (j == n) {
    if (t.kind == Kind::B)
      add(beta(n, n), 2 * bars[n] + zeros);
    else
      add(gamma(n, n), bars[n]);
  } else {
    const int pairs_n = std::min(letters[n], bars[n]);
    if (t.kind == Kind::B) {
      add(beta(j, n), 2 * pairs_n + zeros);
    } else {
      add(gamma(j, j), pairs_n);
    }
    add(beta(j, n - 1), letters[n] - pairs_n);  // unpaired n
    add(gamma(j, n), bars[n] - pairs_n);        // unpaired nbar

    // jbar boxes.
    add(beta(j, j), bars[j]);
    add(gamma(j, j + 1), bars[j]);

    // Pairs (k,kbar) and unpaired letters for j < k < n.
    for (int k = j + 1; k < n; ++k) {
      const int pairs = std::min(letters[k], bars[k]);
      add(beta(j, k), pairs);
      add(gamma(j, k + 1), pairs);
      add(beta(j, k - 1), letters[k] - pairs);
      add(gamma(j, k), bars[k] - pairs);
    }
  }
  return KostantPartition::from_counts(t, std::move(counts));
}

KostantPartition to_kostant(const MLTableau& tableau) {
  const LieType t = tableau.type();
  std::map<RootLabel, int> counts;
  for (int j = 1; j <= t.rank; ++j) {
    KostantPartition part = row_to_kostant(t, j, tableau.rows()[j - 1]);
    for (const auto& [root, c] : part.counts()) counts[root] += c;
  }
  return KostantPartition::from_counts(t, std::move(counts));
}

MLTableau to_tableau(const KostantPartition& partition) {
  const LieType t = partition.type();
  const int n = t.rank;
  std::vector<std::vector<Entry>> rows(n);

  for (int j = 1; j <= n; ++j) {
    std::vector<int> letters(n + 1, 0), bars(n + 1, 0);
    int zeros = 0;

    if (j == n) {
      if (t.kind == Kind::B) {
        const int c = partition.count(beta(n, n));
        zeros = c % 2;
        bars[n] = (c - zeros) / 2;
      } else {
        bars[n] = partition.count(gamma(n, n));
      }
    } else {
      if (t.kind == Kind::B) {
        const int c = partition.count(beta(j, n));
        zeros = c % 2;
        letters[n] = bars[n] = (c - zeros) / 2;
      } else {
        letters[n] = bars[n] = partition.count(gamma(j, j));
      }
      for (int k = j + 1; k <= n; ++k) {
        const int cb = partition.count(beta(j, k - 1));
        const int cg = partition.count(gamma(j, k));
        const int paired = std::min(cb, cg);
        if (k == j + 1) {
          bars[j] += paired;  // jbar boxes
        } else {
          letters[k - 1] += paired;
          bars[k - 1] += paired;
        }
        letters[k] += cb - paired;
        bars[k] += cg - paired;
      }
    }

    std::vector<Entry>& row = rows[j - 1];
    for (int k = j + 1; k <= n; ++k)
      row.insert(row.end(), letters[k], Entry::letter(k));
    row.insert(row.end(), zeros, Entry::zero());
    for (int k = n; k >= j; --k) row.insert(row.end(), bars[k], Entry::bar(k));
  }
  return MLTableau::from_canonical(t, std::move(rows));
}

}  // namespace bcrystal
