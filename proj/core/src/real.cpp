#include "jmaass/real.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <map>
#include <sstream>

namespace jmaass {

Real default_tolerance() {
    return pow10(2 - static_cast<long>(current_digits()));
}

Real pow10(long k) {
    Real t = 10;
    return k >= 0 ? pow(t, static_cast<unsigned long>(k))
                  : 1 / pow(t, static_cast<unsigned long>(-k));
}

namespace {

// Cache per working precision; thread-local so no locking needed.
template <class F>
const Real& cached(int slot, F&& make) {
    thread_local std::map<std::pair<int, unsigned>, Real> cache;
    auto key = std::make_pair(slot, current_digits());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make()).first;
    return it->second;
}

Real zeta_prime_at_2() {
    // Central difference at boosted precision; zeta is smooth at 2 so the
    // only concern is cancellation, absorbed by the extra digits.
    PrecisionGuard g(current_digits() + 12);
    Real h = pow10(-static_cast<long>(current_digits()) / 3);
    Real z1 = boost::math::zeta(Real(2) + h), z2 = boost::math::zeta(Real(2) - h);
    return (z1 - z2) / (2 * h);
}

}  // namespace

const Real& const_pi() {
    return cached(0, [] { return boost::math::constants::pi<Real>(); });
}
const Real& const_euler() {
    return cached(1, [] { return boost::math::constants::euler<Real>(); });
}
const Real& const_log2() {
    return cached(2, [] { return log(Real(2)); });
}
const Real& const_zeta_prime_2() {
    return cached(3, [] { return Real(zeta_prime_at_2()); });
}
const Real& const_eisenstein_limit_shift() {
    return cached(4, [] {
        Real pi = const_pi();
        return -24 * const_euler() + 24 * const_log2()
               + 144 * const_zeta_prime_2() / (pi * pi);
    });
}

std::string to_string(const Real& x, int digits) {
    std::ostringstream os;
    os.precision(digits > 0 ? digits : static_cast<int>(current_digits()));
    os << x;
    return os.str();
}

std::string to_string(const Cplx& z, int digits) {
    std::string s = to_string(z.re, digits);
    if (z.im != 0) {
        s += (z.im < 0 ? " - " : " + ") + to_string(abs(z.im), digits) + "*i";
    }
    return s;
}

}  // namespace jmaass
