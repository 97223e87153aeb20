#include "idv/exact.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <boost/multiprecision/integer.hpp>

#include "idv/specfun.hpp"

namespace idv {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int degree, Rational c) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::integral() const {
    std::vector<Rational> d(c_.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i] / static_cast<long>(i + 1);
    return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

Poly compose(const Poly& f, const Poly& g) {
    Poly acc;
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * g + Poly({*it});
    return acc;
}

// ---------------------------------------------------------------- identities

Rational euler_finite_difference(const Poly& p, int n) {
    if (n < 1) throw PreconditionError("euler_finite_difference needs n >= 1");
    Rational s = 0;
    for (int k = 0; k <= n; ++k) {
        Rational term = Rational(binomial(n, k)) * p(Rational(k));
        if (k % 2) s -= term;
        else s += term;
    }
    return s;
}

namespace {

void partitions(int remaining, int min_part, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = min_part; part <= remaining; ++part) {
        cur.push_back(part);
        partitions(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::pair<MultiIndex, BigInt>> mo_coefficients(int n) {
    if (n < 1) throw PreconditionError("mo_coefficients needs n >= 1");
    std::vector<MultiIndex> parts;
    MultiIndex cur;
    partitions(n, 1, cur, parts);
    // order by length, then lexicographically, so (n) comes first
    std::stable_sort(parts.begin(), parts.end(),
                     [](const MultiIndex& a, const MultiIndex& b) { return a.size() < b.size(); });
    std::vector<std::pair<MultiIndex, BigInt>> out;
    const BigInt nf = factorial(n);
    for (const auto& k : parts) {
        BigInt den = 1;
        std::map<int, int> mult;
        for (int ki : k) {
            den *= factorial(ki);
            ++mult[ki];
        }
        for (const auto& [_, a] : mult) den *= factorial(a);
        out.emplace_back(k, nf / den);
    }
    return out;
}

bool compose_derivative_check(const Poly& f, const Poly& g, int n, const Rational& x) {
    if (n < 1 || n > 8) throw PreconditionError("compose_derivative_check supports 1 <= n <= 8");
    std::vector<Poly> fd{f}, gd{g};
    for (int i = 1; i <= n; ++i) {
        fd.push_back(fd.back().derivative());
        gd.push_back(gd.back().derivative());
    }
    const Rational gx = g(x);
    Rational lhs = 0;
    for (const auto& [k, c] : mo_coefficients(n)) {
        Rational prod = Rational(c);
        for (int ki : k) prod *= gd[ki](x);
        lhs += fd[k.size()](gx) * prod;
    }
    Poly h = compose(f, g);
    for (int i = 0; i < n; ++i) h = h.derivative();
    return lhs == h(x);
}

bool lagrange_reciprocal_identity(const std::vector<Rational>& z) {
    const std::size_t n = z.size();
    if (n < 1 || n > 8) throw PreconditionError("lagrange identity supports 1..8 points");
    for (std::size_t i = 0; i < n; ++i) {
        if (z[i] == 0) throw PreconditionError("points must be nonzero");
        for (std::size_t j = i + 1; j < n; ++j)
            if (z[i] == z[j]) throw PreconditionError("points must be distinct");
    }
    Rational lhs = 0, prod = 1;
    for (std::size_t k = 0; k < n; ++k) {
        Rational t = 1 / z[k];
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) t /= (z[k] - z[j]);
        lhs += t;
        prod *= z[k];
    }
    Rational rhs = (n % 2 == 1 ? Rational(1) : Rational(-1)) / prod;
    return lhs == rhs;
}

Rational gregory_coefficient(int k) {
    if (k < 1) throw PreconditionError("gregory_coefficient needs k >= 1");
    Poly p({Rational(1)});
    for (int i = 0; i < k; ++i) p = p * Poly({Rational(-i), Rational(1)});
    Poly P = p.integral();
    Rational v = P(Rational(1)) / Rational(factorial(k));
    return (k % 2 == 1) ? v : -v;
}

// ---------------------------------------------------------------- suite

namespace {

Rational pow_rat(const Rational& x, long e) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

BigInt pow2(long e) { return BigInt(1) << static_cast<unsigned>(e); }

bool dbl_binom_12415(long n) {
    BigInt s = 0;
    for (long j = 0; j <= 2 * n; ++j)
        for (long k = j / 2; k <= j; ++k) s += binomial(2 * n + 2, 2 * k + 1) * binomial(n + 1, 2 * k - j);
    return s == pow2(3 * n + 1);
}

bool alt_recip_4951(long n) {
    Rational p1 = 0, p2 = 0;
    for (long k = 1; k <= n; ++k) {
        const int sg = (k % 2 == 1) ? 1 : -1;
        p1 += Rational(sg) * Rational(binomial(n, k - 1)) / k;
        p2 += Rational(sg) / (Rational(k) * Rational(binomial(n, k)));
    }
    const Rational target = Rational(n % 2 == 1 ? 2 : 0, n + 1);
    return p1 == target && p2 == target;
}

bool quicky_1140a(long n, long m) {
    BigInt s = 0;
    for (long k = 0; k <= n; ++k) {
        BigInt t = binomial(m + k, k) * binomial(m + n + 1, n - k);
        if (k % 2) s -= t;
        else s += t;
    }
    return s == 1;
}

bool elem_1449(long n) {
    BigInt a = 0;
    for (long k = 3; k <= 2 * n + 1; ++k) {
        BigInt t = binomial(2 * n + 1, k) * binomial(k - 1, 2) * pow2(k - 3);
        if (k % 2 == 0) a -= t;  // (-1)^{k-1}
        else a += t;
    }
    return a == BigInt(n) * n;
}

// Lower bound for log(y), y >= 1 rational: split off powers of two and use
// the all-positive series 2*atanh(z), truncated.
Rational log_lower_bound(Rational y) {
    static const Rational log2_lb = [] {
        Rational z(1, 3), z2 = z * z, s = 0, pw = z;
        for (int j = 0; j < 30; ++j) {
            s += pw / (2 * j + 1);
            pw *= z2;
        }
        return 2 * s;
    }();
    long t = 0;
    while (y >= 2) {
        y /= 2;
        ++t;
    }
    Rational z = (y - 1) / (y + 1), z2 = z * z, s = 0, pw = z;
    for (int j = 0; j < 30; ++j) {
        s += pw / (2 * j + 1);
        pw *= z2;
    }
    return Rational(t) * log2_lb + 2 * s;
}

bool harmonic_ineq_4900(long nmax) {
    constexpr long kExact = 1000;
    std::vector<Rational> H(kExact + 1);
    H[0] = 0;
    for (long k = 1; k <= kExact; ++k) H[k] = H[k - 1] + Rational(1, k);
    std::map<long, Rational> lb_cache;
    auto H_lower = [&](long N) -> Rational {
        if (N <= kExact) return H[N];
        auto it = lb_cache.find(N);
        if (it != lb_cache.end()) return it->second;
        // 1/k >= integral_k^{k+1} dx/x for every k > kExact
        Rational v = H[kExact] + log_lower_bound(Rational(N + 1, kExact + 1));
        lb_cache.emplace(N, v);
        return v;
    };
    std::vector<double> Hd(static_cast<std::size_t>(nmax + 1), 0.0);
    for (long k = 1; k <= nmax; ++k) Hd[k] = Hd[k - 1] + 1.0 / static_cast<double>(k);
    for (long m = 1; m <= nmax; ++m)
        for (long n = m; n <= nmax; ++n)
            for (long p = n; p <= nmax; ++p)
                for (long q = p; q <= nmax; ++q) {
                    // H_N > log(N+1); a clear floating-point margin settles the tuple
                    const double gap = 3.0 + std::log(static_cast<double>(m * n * p * q) + 1.0) -
                                       (Hd[m] + Hd[n] + Hd[p] + Hd[q]);
                    if (gap > 1e-9) continue;
                    const Rational lhs = H[m] + H[n] + H[p] + H[q];
                    const long prod = m * n * p * q;
                    if (lhs <= 3 + H_lower(prod)) continue;
                    // bound too weak: fall back to the exact value
                    if (prod <= kExact) return false;
                    if (!(lhs <= 3 + harmonic(prod, 1))) return false;
                }
    return true;
}

bool trig_sum_4854(long n, long r, long s) {
    double acc = 0.0;
    const double w = std::numbers::pi / static_cast<double>(n + 1);
    for (long j = 1; j <= n; ++j) {
        const double v = std::sin(j * r * w) + std::sin(j * s * w);
        acc += v * v;
    }
    const double target = r == s ? 2.0 * (n + 1) : static_cast<double>(n + 1);
    return std::fabs(acc - target) <= 1e-9 * target;
}

bool cheb_partfrac_1296(long n, double t) {
    const double lhs = n / std::cos(n * t);
    double rhs = 0.0;
    for (long k = 1; k <= n; ++k) {
        const double th = (2.0 * k - 1.0) * std::numbers::pi / (2.0 * n);
        const double term = std::sin(th) / (std::cos(t) - std::cos(th));
        rhs += (k % 2 == 1) ? term : -term;
    }
    return std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, std::fabs(lhs));
}

bool cheb_product_12436(long n, double x) {
    double lhs = 1.0;
    for (long k = 1; k <= n; ++k) {
        const double sk = std::sin(k * std::numbers::pi / (2.0 * n));
        lhs *= x + sk * sk;
    }
    const double rhs = std::ldexp(1.0, static_cast<int>(-2 * n + 2)) * (x + 1.0) *
                       chebyshev(ChebKind::U, static_cast<int>(n - 1), 2.0 * x + 1.0);
    return std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, std::fabs(lhs));
}

}  // namespace

Rational discriminant_2184(const Rational& a, const Rational& b) {
    // generic cubic discriminant of A z^3 + B z^2 + C z + D
    const Rational A = a, B = b, C = a - 1, D = b;
    return 18 * A * B * C * D - 4 * B * B * B * D + B * B * C * C - 4 * A * C * C * C - 27 * A * A * D * D;
}

int count_real_roots_cubic(double c3, double c2, double c1, double c0) {
    if (c3 == 0) throw PreconditionError("leading coefficient must be nonzero");
    auto p = [&](double z) { return ((c3 * z + c2) * z + c1) * z + c0; };
    const double R = 1.0 + std::max({std::fabs(c2 / c3), std::fabs(c1 / c3), std::fabs(c0 / c3)});
    std::vector<double> pts;
    constexpr int kGrid = 4000;
    for (int i = 0; i <= kGrid; ++i) pts.push_back(-R + 2.0 * R * i / kGrid);
    // the turning points separate any pair of close roots the grid could miss
    const double qa = 3 * c3, qb = 2 * c2, qc = c1, disc = qb * qb - 4 * qa * qc;
    if (disc > 0) {
        const double sq = std::sqrt(disc);
        const double t = -0.5 * (qb + std::copysign(sq, qb));
        if (t != 0) {
            pts.push_back(t / qa);
            pts.push_back(qc / t);
        }
    }
    std::sort(pts.begin(), pts.end());
    int count = 0;
    double prev = p(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double cur = p(pts[i]);
        if ((prev < 0 && cur > 0) || (prev > 0 && cur < 0)) ++count;
        if (cur != 0) prev = cur;
    }
    return count;
}

bool binomial_identity_suite(std::string_view name, const SuiteParams& p) {
    auto need = [](bool ok, const char* what) {
        if (!ok) throw PreconditionError(std::string("parameters out of bounds for ") + what);
    };
    if (name == "dbl_binom_12415") {
        need(p.n >= 0 && p.n <= 30, "dbl_binom_12415");
        return dbl_binom_12415(p.n);
    }
    if (name == "alt_recip_4951") {
        need(p.n >= 1 && p.n <= 30, "alt_recip_4951");
        return alt_recip_4951(p.n);
    }
    if (name == "quicky_1140a") {
        need(p.n >= 0 && p.m >= 0 && p.n <= 30 && p.m <= 30, "quicky_1140a");
        return quicky_1140a(p.n, p.m);
    }
    if (name == "elem_1449") {
        need(p.n >= 1 && p.n <= 30, "elem_1449");
        return elem_1449(p.n);
    }
    if (name == "harmonic_ineq_4900") {
        need(p.n >= 1 && p.n <= 30, "harmonic_ineq_4900");
        return harmonic_ineq_4900(p.n);
    }
    if (name == "trig_sum_4854") {
        need(p.n >= 1 && p.n <= 30 && p.r >= 1 && p.s >= 1 && p.r <= p.n && p.s <= p.n, "trig_sum_4854");
        return trig_sum_4854(p.n, p.r, p.s);
    }
    if (name == "cheb_partfrac_1296") {
        need(p.n >= 1 && p.n <= 30, "cheb_partfrac_1296");
        return cheb_partfrac_1296(p.n, p.x);
    }
    if (name == "cheb_product_12436") {
        need(p.n >= 1 && p.n <= 30, "cheb_product_12436");
        return cheb_product_12436(p.n, p.x);
    }
    if (name == "discriminant_2184") {
        const Rational& a = p.a;
        const Rational& b = p.b;
        const Rational expanded = -4 * pow_rat(a, 4) - 8 * a * a * b * b - 4 * pow_rat(b, 4) + 12 * pow_rat(a, 3) -
                                  20 * a * b * b - 12 * a * a + b * b + 4 * a;
        const Rational inner = b * b + a * a + Rational(5, 2) * a - Rational(1, 8);
        const Rational factored = -4 * (inner * inner - 8 * pow_rat(a + Rational(1, 8), 3));
        const Rational direct = discriminant_2184(a, b);
        if (!(expanded == factored && expanded == direct)) return false;
        if (a != 0 && direct != 0) {
            const int roots = count_real_roots_cubic(to_double(a), to_double(b), to_double(a - 1), to_double(b));
            if (direct > 0 && roots != 3) return false;
            if (direct < 0 && roots != 1) return false;
        }
        return true;
    }
    throw PreconditionError("unknown identity suite member: " + std::string(name));
}

// ---------------------------------------------------------------- searches

std::vector<long> primes_upto(long N, long block) {
    if (N > 100000000L) throw PreconditionError("primes_upto cap is 1e8");
    if (block < 16) throw PreconditionError("block size too small");
    std::vector<long> out;
    if (N < 2) return out;
    const long root = static_cast<long>(std::sqrt(static_cast<double>(N))) + 1;
    std::vector<char> small(static_cast<std::size_t>(root + 1), 1);
    std::vector<long> base;
    for (long i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (long j = i * i; j <= root; j += i) small[j] = 0;
    }
    std::vector<char> seg(static_cast<std::size_t>(block));
    for (long lo = 2; lo <= N; lo += block) {
        const long hi = std::min(N, lo + block - 1);
        std::fill(seg.begin(), seg.end(), 1);
        for (long p : base) {
            if (p * p > hi) break;
            long start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (long j = start; j <= hi; j += p) seg[j - lo] = 0;
        }
        for (long i = lo; i <= hi; ++i)
            if (seg[i - lo]) out.push_back(i);
    }
    return out;
}

namespace {

bool is_square(const BigInt& v, BigInt* root = nullptr) {
    if (v < 0) return false;
    BigInt r = boost::multiprecision::sqrt(v);
    if (root) *root = r;
    return r * r == v;
}

BigInt bigpow(long base, long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

std::vector<Solution> search_diophantine(std::string_view kind, long bound) {
    auto cap = [&](long c) {
        if (bound > c || bound < 0) throw PreconditionError("search bound exceeds cap for " + std::string(kind));
    };
    std::vector<Solution> out;
    if (kind == "factorial_power_2117") {
        // (m+1)^n = m! + 1, reported as (n, m)
        cap(300);
        for (long m = 1; m <= bound; ++m) {
            const BigInt target = factorial(m) + 1;
            BigInt pw = m + 1;
            for (long n = 1; n <= bound && pw <= target; ++n, pw *= (m + 1))
                if (pw == target) out.push_back({n, m});
        }
    } else if (kind == "pow23_square_4803") {
        // 2^{2a} + 3^{2b} = (2c+1)^2 with a, b, c >= 1
        cap(400);
        for (long a = 1; a <= bound; ++a)
            for (long b = 1; b <= bound; ++b) {
                BigInt root;
                if (is_square(bigpow(4, a) + bigpow(9, b), &root) && root % 2 == 1)
                    out.push_back({a, b, static_cast<long>((root - 1) / 2)});
            }
    } else if (kind == "quintuplet_108E") {
        cap(100000000L - 14);
        const auto ps = primes_upto(bound + 14);
        std::vector<char> isp(static_cast<std::size_t>(bound + 15), 0);
        for (long p : ps) isp[p] = 1;
        for (long n = 1; n <= bound; ++n)
            if (isp[n] && isp[n + 2] && isp[n + 6] && isp[n + 8] && isp[n + 14]) out.push_back({n});
    } else if (kind == "pair_4855") {
        // a^b - b^a = a - b over positive integers
        cap(80);
        for (long a = 1; a <= bound; ++a)
            for (long b = 1; b <= bound; ++b)
                if (bigpow(a, b) - bigpow(b, a) == BigInt(a - b)) out.push_back({a, b});
    } else if (kind == "cube_square_4811") {
        // sqrt(n^3+1) + sqrt(n+2) in Z forces both radicands to be squares
        cap(10000000L);
        for (long n = 1; n <= bound; ++n) {
            const BigInt c = BigInt(n) * n * n + 1;
            if (is_square(BigInt(n + 2)) && is_square(c)) out.push_back({n});
        }
    } else if (kind == "norm_1447") {
        // (20 + 24 sqrt2)^n = (24 + 20 sqrt2)^m, compared as pairs in Z[sqrt2]
        cap(80);
        auto powers = [&](long u, long v) {
            std::vector<std::pair<BigInt, BigInt>> pw{{1, 0}};
            for (long i = 1; i <= bound; ++i) {
                const auto& [x, y] = pw.back();
                pw.emplace_back(x * u + 2 * y * v, x * v + y * u);
            }
            return pw;
        };
        const auto P = powers(20, 24), Q = powers(24, 20);
        for (long n = 0; n <= bound; ++n)
            for (long m = 0; m <= bound; ++m)
                if (P[n] == Q[m]) out.push_back({n, m});
    } else {
        throw PreconditionError("unknown search kind: " + std::string(kind));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Matrix gl_sum(int q, int n) {
    if ((q != 2 && q != 3 && q != 5) || n < 1 || n > 3 || (q > 3 && n > 2))
        throw PreconditionError("gl_sum supports q in {2,3,5}, small n");
    const int cells = n * n;
    long total = 1;
    for (int i = 0; i < cells; ++i) total *= q;
    auto det_mod = [&](std::vector<int> a) {
        int det = 1;
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int r = c; r < n; ++r)
                if (a[r * n + c] % q) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            if (piv != c) {
                for (int k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
                det = (q - det) % q;
            }
            det = det * a[c * n + c] % q;
            int inv = 1;
            while (inv * a[c * n + c] % q != 1) ++inv;
            for (int r = c + 1; r < n; ++r) {
                const int f = a[r * n + c] * inv % q;
                for (int k = c; k < n; ++k) a[r * n + k] = ((a[r * n + k] - f * a[c * n + k]) % q + q) % q;
            }
        }
        return det;
    };
    Matrix sum(n, std::vector<int>(n, 0));
    std::vector<int> a(cells);
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < cells; ++i) {
            a[i] = static_cast<int>(c % q);
            c /= q;
        }
        if (det_mod(a) == 0) continue;
        for (int i = 0; i < cells; ++i) sum[i / n][i % n] = (sum[i / n][i % n] + a[i]) % q;
    }
    return sum;
}

}  // namespace idv
