#include "jmaass/hyperbolic.hpp"

#include <numeric>

namespace jmaass::hyperbolic {

Mat2 mul(const Mat2& l, const Mat2& r) {
    Mat2 m;
    m.a = l.a * r.a + l.b * r.c;
    m.b = l.a * r.b + l.b * r.d;
    m.c = l.c * r.a + l.d * r.c;
    m.d = l.c * r.b + l.d * r.d;
    return m;
}

HPoint apply(const Mat2& g, const HPoint& z) {
    Real a(g.a), b(g.b), c(g.c), d(g.d);
    Real den = (c * z.x + d) * (c * z.x + d) + c * c * z.y * z.y;
    Real nx = (a * z.x + b) * (c * z.x + d) + a * c * z.y * z.y;
    return HPoint(nx / den, z.y / den);
}

Reduced reduce(const HPoint& z0) {
    HPoint z = z0;
    Mat2 g;
    for (int iter = 0; iter < 20000; ++iter) {
        // translate into |Re| <= 1/2
        Real n = floor(z.x + Real(1) / 2);
        if (n != 0) {
            Int ni(static_cast<long>(n));  // safe: reductions shrink fast
            if (abs(n) > Real(1) << 60) ni = Int(n.str(0, std::ios_base::fixed));
            z = HPoint(z.x - n, z.y);
            Mat2 t;
            t.b = -ni;
            g = mul(t, g);
        }
        Real norm = z.x * z.x + z.y * z.y;
        if (norm < 1) {
            // invert
            z = HPoint(-z.x / norm, z.y / norm);
            Mat2 s;
            s.a = 0; s.b = -1; s.c = 1; s.d = 0;
            g = mul(s, g);
            continue;
        }
        // boundary ties
        if (norm == 1 && z.x > 0) {
            z = HPoint(-z.x, z.y);
            // -1/z on the unit circle
            Mat2 s;
            s.a = 0; s.b = -1; s.c = 1; s.d = 0;
            g = mul(s, g);
        }
        if (z.x == Real(1) / 2) {
            z = HPoint(-z.x, z.y);
            Mat2 t;
            t.b = -1;
            g = mul(t, g);
        }
        return {z, g};
    }
    throw std::runtime_error("reduce: iteration cap exceeded");
}

int stabilizer_order(const HPoint& zeta) {
    Reduced r = reduce(zeta);
    Real tol = pow10(6 - static_cast<long>(current_digits()));
    Real band = tol * 1000;
    Real di = abs(r.z.z() - Cplx(Real(0), Real(1)));
    Real half = Real(1) / 2;
    Real s32 = sqrt(Real(3)) / 2;
    Real drho = abs(r.z.z() - Cplx(-half, s32));
    Real drho2 = abs(r.z.z() - Cplx(half, s32));
    Real dmin = std::min(di, std::min(drho, drho2));
    if (di < tol) return 2;
    if (drho < tol || drho2 < tol) return 3;
    if (dmin < band)
        throw std::runtime_error(
            "stabilizer_order: point within ambiguity band of a corner; raise precision");
    return 1;
}

Frame frame(const HPoint& zeta, const HPoint& z) {
    Cplx X = (z.z() - zeta.z()) / (z.z() - conj(zeta.z()));
    return {X, abs(X)};
}

HPoint frame_point(const HPoint& zeta, const Cplx& X) {
    Cplx z = (zeta.z() - conj(zeta.z()) * X) / (Cplx(Real(1)) - X);
    return HPoint(z);
}

Real cosh_dist(const HPoint& z, const HPoint& zeta) {
    Cplx diff = z.z() - zeta.z();
    return 1 + norm(diff) / (2 * z.y * zeta.y);
}

std::vector<Coset> coset_enumerate(long bound) {
    if (bound < 1) throw std::domain_error("coset_enumerate: bound >= 1");
    std::vector<Coset> out;
    out.push_back({0, 1, 1, 0});
    for (long c = 1; c <= bound; ++c) {
        for (long d = 0; d < c; ++d) {
            if (std::gcd(c, d) != 1) continue;
            // complete (c,d) to a determinant-one matrix
            long a = 0, b = -1;
            if (d != 0) {
                // find a with a*d == 1 (mod c), then b = (a d - 1)/c
                long r0 = c, r1 = d, t0 = 0, t1 = 1;
                while (r1 != 0) {
                    long q = r0 / r1;
                    long r2 = r0 - q * r1;
                    long t2 = t0 - q * t1;
                    r0 = r1; r1 = r2;
                    t0 = t1; t1 = t2;
                }
                a = t0 % c;
                if (a < 0) a += c;
                b = (a * d - 1) / c;
            } else {
                a = 1;  // c = 1, d = 0: (1 -1; 1 0)... b = -1 gives det 1
                b = -1;
            }
            out.push_back({c, d, a, b});
        }
    }
    return out;
}

}  // namespace jmaass::hyperbolic
