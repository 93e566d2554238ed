#pragma once

#include "jmaass/real.hpp"

#include <stdexcept>
#include <vector>

namespace jmaass::hyperbolic {

// Point of the upper half plane.
struct HPoint {
    Real x, y;
    HPoint(Real x_, Real y_) : x(std::move(x_)), y(std::move(y_)) {
        if (!(y > 0)) throw std::domain_error("HPoint: y > 0 required");
    }
    explicit HPoint(const Cplx& z) : HPoint(z.re, z.im) {}
    Cplx z() const { return Cplx(x, y); }
};

// Integer 2x2 matrix with det 1.
struct Mat2 {
    Int a{1}, b{0}, c{0}, d{1};
};

Mat2 mul(const Mat2& l, const Mat2& r);
HPoint apply(const Mat2& g, const HPoint& z);

struct Reduced {
    HPoint z;
    Mat2 gamma;  // z_reduced = gamma * z_input
};

// Standard fundamental domain reduction: |Re| <= 1/2, |z| >= 1, ties broken
// to Re <= 0 on the unit circle and Re = -1/2 on the strip boundary.
Reduced reduce(const HPoint& z);

// Half the order of the PSL2(Z)-stabilizer times two... concretely: 2 at
// points equivalent to i, 3 at points equivalent to rho = e^{i pi/3}, else 1.
// Points within the ambiguity band around a corner (beyond the detection
// tolerance but too close to classify) raise.
int stabilizer_order(const HPoint& zeta);

struct Frame {
    Cplx X;
    Real r;
};
// X_zeta(z) = (z - zeta)/(z - conj(zeta)), r = |X|.
Frame frame(const HPoint& zeta, const HPoint& z);

// Disk coordinates around zeta: the z with X_zeta(z) = X.
HPoint frame_point(const HPoint& zeta, const Cplx& X);

// cosh d(z, zeta) = 1 + |z-zeta|^2 / (2 y eta)
Real cosh_dist(const HPoint& z, const HPoint& zeta);

// One representative (c, d mod c) per coset of Gamma_inf in PSL2(Z) with
// 0 <= c <= bound, completed to a matrix (a b; c d). c = 0 contributes the
// identity.
struct Coset {
    long c, d;
    long a, b;
};
std::vector<Coset> coset_enumerate(long bound);

}  // namespace jmaass::hyperbolic
