#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <utility>

namespace jmaass {

namespace mp = boost::multiprecision;

// Working precision is runtime-configurable. All real arithmetic goes
// through MPFR; exact arithmetic through GMP.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Int = mp::mpz_int;
using Rat = mp::mpq_rational;

// Scoped working precision (decimal digits). The MPFR default precision in
// this Boost version is process-wide, so precision changes must not race:
// the suite runner batches concurrent checks by precision and sets the
// guard once per batch.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10)
        : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

inline unsigned current_digits() { return Real::default_precision(); }

// 10^(2-p): the advertised relative-accuracy intent at p digits.
Real default_tolerance();
// 10^(-k)
Real pow10(long k);

// Constants at the current working precision (cached per precision).
const Real& const_pi();
const Real& const_euler();   // Euler-Mascheroni
const Real& const_log2();
const Real& const_zeta_prime_2();  // zeta'(2)
// C = -24*gamma + 24*log(2) + 144*zeta'(2)/pi^2, the additive constant
// normalizing the Eisenstein limit function.
const Real& const_eisenstein_limit_shift();

// Minimal complex type over Real. std::complex is only specified for
// builtin floating point, and we need full-precision transcendentals.
struct Cplx {
    Real re{}, im{};

    Cplx() = default;
    Cplx(Real r) : re(std::move(r)) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(int r) : re(r) {}
    Cplx(long r) : re(r) {}
    Cplx(double r) : re(r) {}

    Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
    Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
    Cplx& operator*=(const Cplx& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Cplx& operator/=(const Cplx& o) {
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = r;
        return *this;
    }
};

inline Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
inline Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
inline Cplx operator*(Cplx a, const Cplx& b) { return a *= b; }
inline Cplx operator/(Cplx a, const Cplx& b) { return a /= b; }
inline Cplx operator-(const Cplx& a) { return Cplx(-a.re, -a.im); }
inline Cplx operator+(const Cplx& a) { return a; }
inline bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }

inline Cplx conj(const Cplx& a) { return Cplx(a.re, -a.im); }
inline Real abs(const Cplx& a) { return sqrt(a.re * a.re + a.im * a.im); }
inline Real norm(const Cplx& a) { return a.re * a.re + a.im * a.im; }
inline Real arg(const Cplx& a) { return atan2(a.im, a.re); }

inline Cplx exp(const Cplx& a) {
    Real e = exp(a.re);
    return Cplx(e * cos(a.im), e * sin(a.im));
}
// Principal branch; log(-x) = log(x) + i*pi for x > 0.
inline Cplx log(const Cplx& a) { return Cplx(log(abs(a)), arg(a)); }
inline Cplx sqrt(const Cplx& a) {
    Real m = abs(a);
    if (m == 0) return Cplx(Real(0));
    Real r = sqrt((m + a.re) / 2);
    Real i = sqrt((m - a.re) / 2);
    if (a.im < 0) i = -i;
    return Cplx(r, i);
}
inline Cplx pow(const Cplx& a, const Cplx& b) { return exp(b * log(a)); }
inline Cplx pow(const Cplx& a, const Real& b) { return exp(Cplx(b) * log(a)); }
inline Cplx pow(const Cplx& a, long n);

// exp(2*pi*i*z)
inline Cplx q_of(const Cplx& z) {
    Real t = 2 * const_pi();
    Real e = exp(-t * z.im);
    return Cplx(e * cos(t * z.re), e * sin(t * z.re));
}

inline Cplx pow(const Cplx& a, long n) {
    if (n < 0) return Cplx(Real(1)) / pow(a, -n);
    Cplx r(Real(1)), b = a;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

std::string to_string(const Real& x, int digits = 0);
std::string to_string(const Cplx& z, int digits = 0);

}  // namespace jmaass
