#pragma once

#include "jmaass/real.hpp"

#include <vector>

namespace jmaass::specfun {

// Kloosterman sum S(m,n;c) = sum_{d mod c, (d,c)=1} e^{2 pi i (m d + n dbar)/c}
// at the current working precision. The value is real (d <-> -d pairs terms
// into conjugates); the full complex value is returned so callers can check.
Cplx kloosterman(long m, long n, long c);

// Batched double-precision sweep: returns tables[i][c-1] = S(m, ns[i]; c)
// for c = 1..cmax, sharing one modular-inverse pass per c. Accurate to a few
// ulp times phi(c); intended for long Kloosterman-zeta style summations
// where the per-term weight already decays.
std::vector<std::vector<double>> kloosterman_tables(long m, const std::vector<long>& ns,
                                                    long cmax);

}  // namespace jmaass::specfun
