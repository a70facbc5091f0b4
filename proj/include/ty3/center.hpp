#pragma once

#include "ty3/tables.hpp"

namespace ty3 {

// Central generating series assembled from the Drinfeld coefficients:
//   C(u) = D[-1,-1](-u) D[-1,-1](u-1) G(u-2) - D[-1,1](-u) D[1,-1](u-1) G(u-2).
ElementSeries centerSeries(const DrinfeldTable& t);

// The determinant series built directly from six ordered triple products
// of S-entries at arguments -u, u-1, u-2 (indices ordered (-1,1,0)).
// dropLastTerm is the negative-control hook.
ElementSeries sixTermSdet(const STable& s, bool dropLastTerm = false);

}  // namespace ty3
