#pragma once

#include "jmaass/real.hpp"

#include <stdexcept>

namespace jmaass::specfun {

struct ValueWithError {
    Real value;
    Real error;  // absolute error estimate
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- exponential integral family ------------------------------------------

// Entire function Ein(w) = sum_{n>=1} (-1)^{n+1} w^n / (n! n). Guard digits
// absorb the alternating-series cancellation for large |w|.
Cplx ein(const Cplx& w);
Real ein(const Real& x);

// E_1 on the principal branch (w off the negative real axis).
Cplx e1(const Cplx& w);
Real e1(const Real& x);  // x > 0
// Exponential integral Ei(x), x != 0.
Real ei(const Real& x);

// Incomplete gamma Gamma(s,w), principal branch in w. Series route for
// moderate |w|, Legendre continued fraction for large Re(w).
Cplx inc_gamma(const Cplx& s, const Cplx& w);
// Generalized exponential integral E_s(w) = w^{s-1} Gamma(1-s, w);
// rejects the branch cut w in (-inf, 0].
Cplx gen_expint(const Cplx& s, const Cplx& w);

// log Gamma / Gamma for complex arguments (Stirling with argument shift).
Cplx lgamma_c(const Cplx& z);
Cplx tgamma_c(const Cplx& z);

// --- W family ---------------------------------------------------------------

// W_kappa(w) = (-2w)^{1-kappa} Re(E_kappa(-2w)), real-valued for w != 0.
// Closed forms for kappa in {0,2}; generic integer kappa via the E-route.
Real W(int kappa, const Real& w);
// Defining route through Re E_kappa(-2w) (independent oracle).
Real W_via_E(int kappa, const Real& w);
// Gamma-function route of the two-branch lemma (independent oracle);
// returns the full complex value whose real part is W.
Cplx W_via_gamma(int kappa, const Real& w);

// boldW_s(w) = int_{sgn(w) inf}^{w} W_{2-s}(-t) t^{-s} e^{2t} dt for integer s.
ValueWithError boldW(int s, const Real& w);

// --- Bessel ------------------------------------------------------------------

Real bessel_i(const Real& nu, const Real& x);
Real bessel_j(const Real& nu, const Real& x);
Real bessel_k(const Real& nu, const Real& x);
// j-th order-derivative of I_nu(x) at nu = 1 (j = 0..3), by the psi-series.
Real bessel_i_dnu1(int j, const Real& x);
// [d/ds I_{s-1/2}(w)]_{s=1} closed form.
Real dI_dorder_at_half(const Real& w);
// [d/dnu K_nu(x)]_{nu=1/2} closed form.
Real dK_dorder_at_half(const Real& x);

// --- Legendre Q and the Green seed -----------------------------------------

// Q_{s-1}(w) for real s > 0, w > 1, by the cosh-integral representation.
ValueWithError legendre_q(const Real& sm1, const Real& w);
// mixed derivative d^2/(ds dw) Q_{s-1}(w) at given (s, w)
ValueWithError legendre_q_dsdw(const Real& s, const Real& w);
// B(r) by direct quadrature of its integral form, r in (0,1).
ValueWithError b_of_r(const Real& r);

// --- elliptic radial basis ---------------------------------------------------

// beta(w; a, b) for integer a, b via the binomial series (t0-independent
// form). Requires 0 < w < 1 (series in 1-w).
Real beta_series(const Real& w, long a, long b);
// Defining form with explicit t0 (independent oracle).
ValueWithError beta_integral(const Real& w, long a, long b, const Real& t0);
// boldbeta_{a,b}(r) = -2 int_0^r t^{2b-1} (1-t^2)^{-a-1} beta(1-t^2; a, 1-b) dt
ValueWithError boldbeta(long a, long b, const Real& r);
// (log(1-r^2) + r^2) / (1-r^2)
Real b24(const Real& r);

// --- zeta helpers ------------------------------------------------------------

Real zeta(const Real& s);          // real s != 1
Real sigma_power(long n, const Real& s);  // sum_{d|n} d^s
Real sigma_int(long n, int k);            // exact-ish integer power sum

}  // namespace jmaass::specfun
