#include "jmaass/kloosterman.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jmaass::specfun {

namespace {

// gcd(d, c) with the inverse of d mod c when coprime; single pass.
long ext_inverse(long d, long c, long& g) {
    long r0 = c, r1 = d, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    g = r0;
    long inv = t0 % c;
    if (inv < 0) inv += c;
    return inv;
}

long mod_c(long v, long c) {
    long r = v % c;
    return r < 0 ? r + c : r;
}

}  // namespace

Cplx kloosterman(long m, long n, long c) {
    if (c < 1) throw std::domain_error("kloosterman: c >= 1");
    if (c == 1) return Cplx(Real(1));
    Real twopi_over_c = 2 * const_pi() / c;
    Cplx sum(Real(0));
    for (long d = 1; d < c; ++d) {
        long g;
        long dinv = ext_inverse(d, c, g);
        if (g != 1) continue;
        long phase = mod_c(mod_c(m * d, c) + mod_c(n * dinv, c), c);
        Real t = twopi_over_c * phase;
        sum += Cplx(cos(t), sin(t));
    }
    return sum;
}

std::vector<std::vector<double>> kloosterman_tables(long m, const std::vector<long>& ns,
                                                    long cmax) {
    std::vector<std::vector<double>> out(ns.size(), std::vector<double>(static_cast<size_t>(cmax), 0.0));
    for (size_t i = 0; i < ns.size(); ++i) out[i][0] = 1.0;  // c = 1
    const double twopi = 6.283185307179586476925286766559;
    for (long c = 2; c <= cmax; ++c) {
        const double w = twopi / static_cast<double>(c);
        // d and c-d give conjugate terms, so only cosines survive; run half
        // the range and double, handling a self-paired midpoint if coprime
        // (only c = 2).
        for (long d = 1; 2 * d <= c; ++d) {
            long g;
            long dinv = ext_inverse(d, c, g);
            if (g != 1) continue;
            double factor = (2 * d == c) ? 1.0 : 2.0;
            for (size_t i = 0; i < ns.size(); ++i) {
                long phase = mod_c(mod_c(m * d, c) + mod_c(ns[i] * dinv, c), c);
                out[i][static_cast<size_t>(c - 1)] +=
                    factor * std::cos(w * static_cast<double>(phase));
            }
        }
    }
    return out;
}

}  // namespace jmaass::specfun
