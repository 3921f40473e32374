#pragma once

#include <vector>

#include "bcrystal/kostant.hpp"
#include "bcrystal/tableau.hpp"

/*
  The crystal isomorphism between marginally large tableaux and Kostant
  partitions, applied row by row, and its inverse.

  For row j, letters n and nbar are first paired off; in type B each (n,nbar)
  pair gives 2(beta(j,n)), each 0 gives (beta(j,n)) and in row n each nbar
  gives 2(beta(n,n)); in type C each pair gives (gamma(j,j)) and in row n
  each nbar gives (gamma(n,n)).  For the remaining boxes of row j < n: each
  jbar gives (beta(j,j)) + (gamma(j,j+1)); each pair (k,kbar) with j < k < n
  gives (beta(j,k)) + (gamma(j,k+1)); an unpaired k gives (beta(j,k-1)) and
  an unpaired kbar gives (gamma(j,k)).

  The inverse reads the counts with first index j back into row j; each
  count pair (c[beta(j,k-1)], c[gamma(j,k)]) is consumed by exactly one
  level k, so the reconstruction is unique and level-independent.
*/

namespace bcrystal {

KostantPartition row_to_kostant(LieType t, int j, const std::vector<Entry>& row);

KostantPartition to_kostant(const MLTableau& tableau);

MLTableau to_tableau(const KostantPartition& partition);

}  // namespace bcrystal
