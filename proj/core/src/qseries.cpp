#include "jmaass/qseries.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace jmaass::qseries {

namespace {
const Rat kZero(0);
}

QLaurent QLaurent::constant(const Rat& c, long trunc) {
    return monomial(c, 0, trunc);
}

QLaurent QLaurent::monomial(const Rat& c, long expo, long trunc) {
    if (expo > trunc) throw TruncationError("monomial beyond truncation");
    QLaurent f(expo, trunc);
    f.coeffs_[0] = c;
    return f;
}

bool QLaurent::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

long QLaurent::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return lo_ + static_cast<long>(i);
    throw std::logic_error("valuation of zero series");
}

const Rat& QLaurent::coeff(long m) const {
    if (m > trunc_)
        throw TruncationError("coefficient q^" + std::to_string(m) +
                              " beyond certified order " + std::to_string(trunc_));
    if (m < lo_) return kZero;
    return coeffs_[static_cast<size_t>(m - lo_)];
}

Rat& QLaurent::at(long m) {
    if (m > trunc_ || m < lo_) throw TruncationError("exponent outside window");
    return coeffs_[static_cast<size_t>(m - lo_)];
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    long nlo = std::min(lo_, o.lo_);
    long ntr = std::min(trunc_, o.trunc_);
    QLaurent r(nlo, ntr);
    for (long m = nlo; m <= ntr; ++m) {
        Rat c(0);
        if (m >= lo_ && m <= trunc_) c += coeffs_[static_cast<size_t>(m - lo_)];
        if (m >= o.lo_ && m <= o.trunc_) c += o.coeffs_[static_cast<size_t>(m - o.lo_)];
        r.coeffs_[static_cast<size_t>(m - nlo)] = c;
    }
    *this = std::move(r);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    return *this += -o;
}

QLaurent QLaurent::operator-() const {
    QLaurent r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QLaurent QLaurent::operator*(const QLaurent& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return QLaurent(0, -1);
    // Known through min(N1 + lo2, N2 + lo1): the first unknown coefficient of
    // either factor would first affect that exponent.
    long nlo = lo_ + o.lo_;
    long ntr = std::min(trunc_ + o.lo_, o.trunc_ + lo_);
    QLaurent r(nlo, ntr);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        long mi = lo_ + static_cast<long>(i);
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            long m = mi + o.lo_ + static_cast<long>(j);
            if (m > ntr) break;
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[static_cast<size_t>(m - nlo)] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

QLaurent QLaurent::div(const QLaurent& g) const {
    if (g.coeffs_.empty() || g.is_zero()) throw std::domain_error("division by zero series");
    long gv = g.valuation();
    // Divisor normalized so its lowest coefficient is the constant term.
    const Rat& g0 = g.coeff(gv);
    long hlo = lo_ - gv;
    long len_f = trunc_ - lo_ + 1;
    long len_g = g.trunc_ - gv + 1;
    long len = std::min(len_f, len_g);
    if (len <= 0) return QLaurent(0, -1);
    QLaurent r(hlo, hlo + len - 1);
    for (long k = 0; k < len; ++k) {
        Rat acc = coeffs_[static_cast<size_t>(k)];
        for (long j = 0; j < k; ++j) {
            const Rat& gc = g.coeffs_[static_cast<size_t>(k - j + (gv - g.lo_))];
            if (gc != 0) acc -= r.coeffs_[static_cast<size_t>(j)] * gc;
        }
        r.coeffs_[static_cast<size_t>(k)] = acc / g0;
    }
    return r;
}

QLaurent QLaurent::qddq() const {
    QLaurent r = *this;
    for (size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] *= Rat(lo_ + static_cast<long>(i));
    return r;
}

QLaurent QLaurent::pow_int(long e) const {
    if (e < 0) return QLaurent::monomial(Rat(1), 0, trunc_ - lo_).div(*this).pow_int(-e);
    if (e == 0) return QLaurent::constant(Rat(1), trunc_ - lo_);
    // Square-and-multiply; operator* does the window bookkeeping.
    QLaurent base = *this;
    long ee = e;
    bool any = false;
    QLaurent acc;
    while (ee) {
        if (ee & 1) {
            acc = any ? acc * base : base;
            any = true;
        }
        ee >>= 1;
        if (ee) base = base * base;
    }
    return acc;
}

QLaurent QLaurent::truncated(long new_trunc) const {
    if (new_trunc > trunc_) throw TruncationError("cannot extend certification");
    QLaurent r(lo_, new_trunc);
    for (long m = lo_; m <= new_trunc; ++m)
        r.coeffs_[static_cast<size_t>(m - lo_)] = coeff(m);
    return r;
}

Cplx QLaurent::eval(const Cplx& q) const {
    // Horner from the top, then multiply by q^lo.
    Cplx acc(Real(0));
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= q;
        if (coeffs_[i] != 0)
            acc += Cplx(Real(numerator(coeffs_[i])) / Real(denominator(coeffs_[i])));
    }
    return acc * pow(q, lo_);
}

std::string QLaurent::str(long max_terms) const {
    std::ostringstream os;
    long shown = 0;
    for (long m = lo_; m <= trunc_ && shown < max_terms; ++m) {
        const Rat& c = coeff(m);
        if (c == 0) continue;
        if (shown) os << " + ";
        os << c << "*q^" << m;
        ++shown;
    }
    os << " + O(q^" << trunc_ + 1 << ")";
    return os.str();
}

namespace {

// Euler function prod (1-q^n) via the pentagonal number theorem.
QLaurent euler_product(long N) {
    QLaurent f(0, N);
    f.at(0) = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 > N && g2 > N) break;
        Rat s((k % 2) ? -1 : 1);
        if (g1 <= N) f.at(g1) += s;
        if (g2 <= N) f.at(g2) += s;
    }
    return f;
}

std::vector<Int> divisor_power_sums(long N, int k) {
    std::vector<Int> sigma(static_cast<size_t>(N + 1), Int(0));
    for (long d = 1; d <= N; ++d) {
        Int dk = 1;
        for (int i = 0; i < k; ++i) dk *= d;
        for (long m = d; m <= N; m += d) sigma[static_cast<size_t>(m)] += dk;
    }
    return sigma;
}

}  // namespace

QLaurent delta_qexp(long N) {
    if (N < 1) throw std::domain_error("delta_qexp needs N >= 1");
    if (N > 200000) throw std::domain_error("delta_qexp: N beyond configured maximum");
    QLaurent eta24 = euler_product(N - 1).pow_int(24);
    QLaurent r(1, N);
    for (long m = 0; m <= N - 1; ++m) r.at(m + 1) = eta24.coeff(m);
    return r;
}

QLaurent e4_qexp(long N) {
    QLaurent f(0, N);
    f.at(0) = 1;
    auto s3 = divisor_power_sums(N, 3);
    for (long m = 1; m <= N; ++m) f.at(m) = Rat(240) * Rat(s3[static_cast<size_t>(m)]);
    return f;
}

QLaurent e2_qexp(long N) {
    QLaurent f(0, N);
    f.at(0) = 1;
    auto s1 = divisor_power_sums(N, 1);
    for (long m = 1; m <= N; ++m) f.at(m) = Rat(-24) * Rat(s1[static_cast<size_t>(m)]);
    return f;
}

QLaurent j_qexp(long N) {
    if (N < 0) throw std::domain_error("j_qexp needs N >= 0");
    // E_4^3 certified through q^(N+1), delta through q^(N+1); the quotient is
    // then certified through q^N (valuation of delta is 1).
    QLaurent num = e4_qexp(N + 1).pow_int(3);
    QLaurent den = delta_qexp(N + 2);
    return num.truncated(N + 1).div(den);
}

QLaurent j1_qexp(long N) {
    QLaurent j = j_qexp(N);
    j.at(0) -= 744;
    return j;
}

QLaurent hecke(const QLaurent& f, long n, int weight) {
    if (n < 1) throw std::domain_error("hecke needs n >= 1");
    if (weight > 1) throw std::domain_error("hecke: weights above 1 not supported exactly");
    if (f.trunc() < f.lo()) return QLaurent(0, -1);
    // Certified through floor(trunc/n): the (a,d) = (1,n) branch needs the
    // input at q^{nM} to produce q^M.
    auto fdiv = [](long a, long b) {
        long q = a / b;
        if ((a % b) && ((a < 0) != (b < 0))) --q;
        return q;
    };
    long Nout = fdiv(f.trunc(), n);
    long lo_out = f.lo() >= 0 ? fdiv(f.lo(), n) : f.lo() * n;
    if (Nout < lo_out) return QLaurent(lo_out, lo_out - 1);
    QLaurent r(lo_out, Nout);
    for (long a = 1; a <= n; ++a) {
        if (n % a) continue;
        long d = n / a;
        Int dpow = 1;  // d^(1-weight), kept exact
        for (int i = 0; i < 1 - weight; ++i) dpow *= d;
        for (long m = f.lo(); m <= f.trunc(); ++m) {
            if (m % d) continue;
            const Rat& c = f.coeff(m);
            if (c == 0) continue;
            long M = (m / d) * a;
            if (M < r.lo() || M > r.trunc()) continue;
            r.at(M) += c * Rat(dpow);
        }
    }
    return r;
}

QLaurent hecke_to(const QLaurent& f, long n, int weight, long N) {
    QLaurent r = hecke(f, n, weight);
    if (r.trunc() < N)
        throw TruncationError("hecke: certified through q^" + std::to_string(r.trunc()) +
                              " < requested q^" + std::to_string(N) +
                              " (input needs trunc >= n*N)");
    return r.truncated(N);
}

FaberResult faber_poly(long n, long N) {
    if (n < 0 || N < n) throw std::domain_error("faber_poly needs 0 <= n <= N");
    // j1^k loses one certified order per multiplication (valuation -1), so
    // start from q^{N+n} to keep every power certified through q^N.
    QLaurent j1 = j1_qexp(N + n);
    std::vector<QLaurent> pw;
    pw.reserve(static_cast<size_t>(n + 1));
    pw.push_back(QLaurent::constant(Rat(1), N + n));
    for (long k = 1; k <= n; ++k) pw.push_back(pw.back() * j1);

    // Solve for alpha_0..alpha_{n-1}: coefficients of q^-(n-1)..q^-1 and q^0
    // of j1^n + sum alpha_k j1^k must vanish. Triangular going downward in
    // the exponent: j1^k has valuation -k and unit leading coefficient, so
    // at q^-e only the powers k >= e contribute and alpha_e enters with
    // coefficient 1.
    std::vector<Rat> alpha(static_cast<size_t>(n), Rat(0));
    QLaurent target = pw[static_cast<size_t>(n)];
    for (long e = n - 1; e >= 0; --e) {
        Rat acc = target.coeff(-e);
        for (long k = e + 1; k <= n - 1; ++k)
            acc += alpha[static_cast<size_t>(k)] * pw[static_cast<size_t>(k)].coeff(-e);
        alpha[static_cast<size_t>(e)] = -acc;
    }
    std::vector<Rat> poly(static_cast<size_t>(n + 1), Rat(0));
    poly[static_cast<size_t>(n)] = 1;
    QLaurent cert = pw[static_cast<size_t>(n)];
    for (long k = 0; k < n; ++k) {
        poly[static_cast<size_t>(k)] = alpha[static_cast<size_t>(k)];
        if (alpha[static_cast<size_t>(k)] != 0) {
            QLaurent t = pw[static_cast<size_t>(k)];
            for (auto m = t.lo(); m <= t.trunc(); ++m) t.at(m) *= alpha[static_cast<size_t>(k)];
            cert += t;
        }
    }
    cert = cert.truncated(N);
    return {std::move(poly), std::move(cert)};
}

std::string xpoly_str(const XPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        if (!first) os << " + ";
        os << p[k];
        if (k >= 1) os << "*X" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// Series in q with coefficients in Z[X], exponents 0..N.
struct XSeries {
    std::vector<XPoly> c;  // c[m] = coefficient of q^m
    explicit XSeries(long N) : c(static_cast<size_t>(N + 1)) {}
    long order() const { return static_cast<long>(c.size()) - 1; }
};

XPoly xadd(const XPoly& a, const XPoly& b) {
    XPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

XPoly xmul(const XPoly& a, const XPoly& b) {
    if (a.empty() || b.empty()) return {};
    XPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

bool xis_zero(const XPoly& a) {
    for (const auto& v : a)
        if (v != 0) return false;
    return true;
}

// f/g in Z[X][[q]] where g has constant term 1 (in q).
XSeries xdivide(const XSeries& f, const XSeries& g) {
    XSeries h(std::min(f.order(), g.order()));
    for (long k = 0; k <= h.order(); ++k) {
        XPoly acc = f.c[static_cast<size_t>(k)];
        for (long j = 0; j < k; ++j) {
            const XPoly& gc = g.c[static_cast<size_t>(k - j)];
            if (xis_zero(gc) || xis_zero(h.c[static_cast<size_t>(j)])) continue;
            XPoly t = xmul(h.c[static_cast<size_t>(j)], gc);
            for (auto& v : t) v = -v;
            acc = xadd(acc, t);
        }
        h.c[static_cast<size_t>(k)] = std::move(acc);
    }
    return h;
}

Int rat_to_int(const Rat& r) {
    if (denominator(r) != 1) throw std::logic_error("expected integral coefficient");
    return numerator(r);
}

}  // namespace

ExactCheck akn_check(long N) {
    if (N < 1) throw std::domain_error("akn_check needs N >= 1");
    QLaurent j1 = j1_qexp(N + 1);

    // Right side: q (d/dq) j_1 / (X - j_1) as a power series in q.
    // Multiply both numerator and denominator by -q so they start at q^0.
    XSeries num(N), den(N);
    QLaurent dj = j1.qddq();
    for (long m = 0; m <= N; ++m) {
        // -q * (q d/dq j_1) has coefficient -dj(m-1) at q^m
        Int nv = (m - 1 >= dj.lo()) ? -rat_to_int(dj.coeff(m - 1)) : Int(0);
        num.c[static_cast<size_t>(m)] = XPoly{nv};
        // -q * (X - j_1): q^m coefficient is j1(m-1) - X*delta_{m=1}
        Int dv = (m - 1 >= j1.lo()) ? rat_to_int(j1.coeff(m - 1)) : Int(0);
        XPoly d{dv};
        if (m == 1) d.push_back(Int(-1));
        den.c[static_cast<size_t>(m)] = std::move(d);
    }
    XSeries rhs = xdivide(num, den);

    ExactCheck res;
    res.order_checked = N;
    for (long n = 0; n <= N; ++n) {
        XPoly fab(static_cast<size_t>(n + 1), Int(0));
        auto fr = faber_poly(n, std::max(n, 1L));
        for (long k = 0; k <= n; ++k) fab[static_cast<size_t>(k)] = rat_to_int(fr.poly[static_cast<size_t>(k)]);
        XPoly diff = rhs.c[static_cast<size_t>(n)];
        for (size_t k = 0; k < fab.size(); ++k) {
            if (diff.size() <= k) diff.resize(k + 1, Int(0));
            diff[k] -= fab[k];
        }
        if (!xis_zero(diff)) {
            res.mismatch = "q^" + std::to_string(n) + ": rhs - faber = " + xpoly_str(diff);
            return res;
        }
    }
    res.pass = true;
    return res;
}

ExactCheck bko_check(long a, long b, long N) {
    if (N < 1) throw std::domain_error("bko_check needs N >= 1");
    QLaurent j1 = j1_qexp(N + 1);
    QLaurent j = j1;
    j.at(0) += 744;

    // LHS: a * H_i + b * H_rho with H-coefficients F_n(984), F_n(-744).
    // RHS: -q (d/dq) f / f for f = (j-1728)^a j^b, computed via the
    // logarithmic derivative to stay in exact arithmetic:
    //   -q f'/f = -a * q j' /(j-1728) - b * q j' / j.
    QLaurent jm1728 = j;
    jm1728.at(0) -= 1728;
    QLaurent dj = j.qddq();

    // Both quotients have numerator valuation -1 and denominator valuation -1.
    QLaurent rhs = QLaurent::zero(N);
    if (a != 0) {
        QLaurent t = dj.div(jm1728);
        for (long m = t.lo(); m <= std::min(t.trunc(), N); ++m) rhs.at(m) -= Rat(a) * t.coeff(m);
    }
    if (b != 0) {
        QLaurent t = dj.div(j);
        for (long m = t.lo(); m <= std::min(t.trunc(), N); ++m) rhs.at(m) -= Rat(b) * t.coeff(m);
    }

    ExactCheck res;
    res.order_checked = N;
    Rat xi(984), xrho(-744);
    for (long n = 0; n <= N; ++n) {
        auto fr = faber_poly(n, std::max(n, 1L));
        Rat fi(0), frho(0);
        Rat pi(1), prho(1);
        for (long k = 0; k <= n; ++k) {
            fi += fr.poly[static_cast<size_t>(k)] * pi;
            frho += fr.poly[static_cast<size_t>(k)] * prho;
            pi *= xi;
            prho *= xrho;
        }
        Rat lhs = Rat(a) * fi + Rat(b) * frho;
        if (lhs != rhs.coeff(n)) {
            std::ostringstream os;
            os << "q^" << n << ": lhs = " << lhs << ", rhs = " << rhs.coeff(n);
            res.mismatch = os.str();
            return res;
        }
    }
    res.pass = true;
    return res;
}

namespace {

// Dense bivariate integer series with exponents of p and q each in
// [-1, box]; multiplication certifies the intersection box.
struct BiSeries {
    long box;
    std::vector<Int> c;  // (a+1) * (box+2) + (b+1)
    explicit BiSeries(long box_) : box(box_), c(static_cast<size_t>((box_ + 2) * (box_ + 2)), Int(0)) {}
    Int& at(long a, long b) { return c[static_cast<size_t>((a + 1) * (box + 2) + (b + 1))]; }
    const Int& at(long a, long b) const { return c[static_cast<size_t>((a + 1) * (box + 2) + (b + 1))]; }
};

// Multiply into acc the factor (1 - p^m q^n)^e for e >= 0, exact within the
// nonnegative-exponent box (all factor exponents are nonnegative).
void mul_factor(BiSeries& acc, long m, long n, const Int& e) {
    long kmax = std::min(acc.box / std::max(m, 1L), acc.box / std::max(n, 1L));
    // binomial expansion: sum_k C(e,k) (-1)^k p^{mk} q^{nk}
    std::vector<Int> binom(static_cast<size_t>(kmax + 1));
    binom[0] = 1;
    for (long k = 1; k <= kmax; ++k)
        binom[static_cast<size_t>(k)] =
            binom[static_cast<size_t>(k - 1)] * (e - (k - 1)) / k;
    BiSeries out(acc.box);
    for (long a = 0; a <= acc.box; ++a)
        for (long b = 0; b <= acc.box; ++b) {
            const Int& v = acc.at(a, b);
            if (v == 0) continue;
            for (long k = 0; k <= kmax; ++k) {
                long aa = a + m * k, bb = b + n * k;
                if (aa > acc.box || bb > acc.box) break;
                Int t = binom[static_cast<size_t>(k)] * v;
                if (k & 1) t = -t;
                out.at(aa, bb) += t;
            }
        }
    acc = std::move(out);
}

}  // namespace

ExactCheck denominator_check(long D) {
    if (D < 2) throw std::domain_error("denominator_check needs D >= 2");
    long box = D + 1;
    QLaurent j1 = j1_qexp(box * box);  // c(mn) for m,n <= box

    BiSeries prod(box);
    prod.at(0, 0) = 1;
    for (long m = 1; m <= box; ++m)
        for (long n = 1; n <= box; ++n) {
            Int e = rat_to_int(j1.coeff(m * n));
            if (e == 0) continue;
            if (e < 0) throw std::logic_error("unexpected negative exponent");
            mul_factor(prod, m, n, e);
        }

    ExactCheck res;
    res.order_checked = D;
    // RHS = (p^{-1} - q^{-1}) * prod ; compare with
    // LHS = p^{-1} + sum c(m) p^m - q^{-1} - sum c(n) q^n
    // on the certified region a, b in [-1, D].
    for (long aa = -1; aa <= D; ++aa)
        for (long bb = -1; bb <= D; ++bb) {
            Int rhs(0);
            if (aa + 1 <= box && bb >= 0) rhs += prod.at(aa + 1, bb);
            if (bb + 1 <= box && aa >= 0) rhs -= prod.at(aa, bb + 1);
            Int lhs(0);
            if (bb == 0) {
                if (aa == -1)
                    lhs += 1;
                else if (aa >= 1)
                    lhs += rat_to_int(j1.coeff(aa));
            }
            if (aa == 0) {
                if (bb == -1)
                    lhs -= 1;
                else if (bb >= 1)
                    lhs -= rat_to_int(j1.coeff(bb));
            }
            if (lhs != rhs) {
                std::ostringstream os;
                os << "p^" << aa << " q^" << bb << ": lhs = " << lhs << ", rhs = " << rhs;
                res.mismatch = os.str();
                return res;
            }
        }
    res.pass = true;
    return res;
}

std::string to_json(const QLaurent& f) {
    nlohmann::json j;
    j["valuation"] = f.lo();
    j["trunc"] = f.trunc();
    std::vector<std::string> cs;
    for (long m = f.lo(); m <= f.trunc(); ++m) {
        std::ostringstream os;
        os << f.coeff(m);
        cs.push_back(os.str());
    }
    j["coeffs"] = cs;
    return j.dump(2);
}

QLaurent qlaurent_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    long lo = j.at("valuation").get<long>();
    long tr = j.at("trunc").get<long>();
    QLaurent f(lo, tr);
    auto cs = j.at("coeffs").get<std::vector<std::string>>();
    for (size_t i = 0; i < cs.size() && static_cast<long>(i) <= tr - lo; ++i)
        f.at(lo + static_cast<long>(i)) = Rat(cs[i]);
    return f;
}

}  // namespace jmaass::qseries
