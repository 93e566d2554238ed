#pragma once

#include "jmaass/real.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jmaass::qseries {

// Truncated Laurent series in q with exact rational coefficients.
// Coefficients are stored for exponents lo()..trunc() inclusive; below lo()
// the series is exactly zero, above trunc() it is unknown. Every operation
// certifies only what is provable from the operands' windows.
class QLaurent {
public:
    QLaurent() : lo_(0), trunc_(-1) {}
    QLaurent(long lo, long trunc) : lo_(lo), trunc_(trunc) {
        if (trunc >= lo) coeffs_.assign(static_cast<size_t>(trunc - lo + 1), Rat(0));
    }

    static QLaurent zero(long trunc) { return QLaurent(0, trunc); }
    static QLaurent constant(const Rat& c, long trunc);
    static QLaurent monomial(const Rat& c, long expo, long trunc);

    long lo() const { return lo_; }
    long trunc() const { return trunc_; }
    bool is_zero() const;
    // Lowest exponent with a nonzero coefficient; throws on the zero series.
    long valuation() const;

    const Rat& coeff(long m) const;
    Rat& at(long m);

    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent operator*(const QLaurent& o) const;
    QLaurent operator-() const;

    // Requires the divisor's lowest-order coefficient to be invertible.
    QLaurent div(const QLaurent& g) const;
    // q * d/dq
    QLaurent qddq() const;
    QLaurent pow_int(long e) const;
    QLaurent truncated(long new_trunc) const;

    // Numerical evaluation at q (|q| small enough for the dropped tail to be
    // below the caller's tolerance; no tail bound is attached here).
    Cplx eval(const Cplx& q) const;

    std::string str(long max_terms = 12) const;

private:
    long lo_;      // lowest stored exponent
    long trunc_;   // highest certified exponent
    std::vector<Rat> coeffs_;

    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
};

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// delta(z) = q prod_{n>=1} (1-q^n)^24, certified through q^N.
QLaurent delta_qexp(long N);
// E_4 = 1 + 240 sum sigma_3(n) q^n
QLaurent e4_qexp(long N);
// E_2 = 1 - 24 sum sigma_1(n) q^n (holomorphic part of the weight-two
// Eisenstein series; the -3/(pi y) completion lives in the forms module).
QLaurent e2_qexp(long N);
// j = E_4^3 / delta, j_1 = j - 744
QLaurent j_qexp(long N);
QLaurent j1_qexp(long N);

// Exact Hecke action at integer weight. Output certified through
// floor(f.trunc()/n); hecke_to raises TruncationError if that is < N.
QLaurent hecke(const QLaurent& f, long n, int weight);
QLaurent hecke_to(const QLaurent& f, long n, int weight, long N);

struct FaberResult {
    std::vector<Rat> poly;   // degree-n monic polynomial, poly[k] = coeff of X^k
    QLaurent certificate;    // poly evaluated at j_1, certified through q^N
};
// The unique monic P_n with P_n(j_1) = q^{-n} + O(q) and vanishing constant
// term (P_0 = 1).
FaberResult faber_poly(long n, long N);

// Dense integer polynomials in an indeterminate X; used for identities whose
// coefficients live in Z[X], with X standing for j_1 at an unspecified point.
using XPoly = std::vector<Int>;  // XPoly[k] = coeff of X^k

std::string xpoly_str(const XPoly& p);

// Outcome of an exact identity check. Passing means every certified
// coefficient matched exactly (no tolerance).
struct ExactCheck {
    bool pass = false;
    long order_checked = -1;
    std::string mismatch;  // empty when pass
};

// Generating-series identity: sum_n F_n(X) q^n = q (d/dq) j_1 / (X - j_1),
// as an identity in Z[X][[q]] through q^N. Both q^0 coefficients equal 1.
ExactCheck akn_check(long N);

// Divisor series identity for f = (j-1728)^a * j^b (weight 0):
//   a*H_i + b*H_rho = -q (d/dq) f / f
// where the H-coefficients are Faber polynomials at j_1 = 984 resp. -744.
ExactCheck bko_check(long a, long b, long N);

// Bivariate product identity (exact integers, total degree D):
//   j_1(zeta) - j_1(z) = e^{-2 pi i zeta} prod (1 - e^{2 pi i m zeta} e^{2 pi i n z})^{c(mn)}
ExactCheck denominator_check(long D);

// JSON document {valuation, trunc, coeffs: [decimal strings]}.
std::string to_json(const QLaurent& f);
QLaurent qlaurent_from_json(const std::string& text);

}  // namespace jmaass::qseries
