#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <hgmpl/bounded.hpp>
#include <hgmpl/rational.hpp>

namespace hgmpl {

// exponents of the three formal variables
struct Mono {
    int a = 0;
    int b = 0;
    int c = 0;
    int deg() const { return a + b + c; }
    auto operator<=>(const Mono&) const = default;
};

namespace detail {

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
    static Rational from_ratio(long long num, long long den) { return Rational(num, den); }
    static bool is_zero(const Rational& r) { return r == 0; }
};

template <>
struct CoeffOps<long double> {
    static long double from_ratio(long long num, long long den) {
        return static_cast<long double>(num) / static_cast<long double>(den);
    }
    static bool is_zero(long double v) { return v == 0.0L; }
};

template <>
struct CoeffOps<Bounded> {
    static Bounded from_ratio(long long num, long long den) {
        long double q = static_cast<long double>(num) / static_cast<long double>(den);
        long double e = (den != 0 && num % den == 0) ? 0.0L : kEps * std::fabs(q);
        return Bounded(q, e);
    }
    static bool is_zero(const Bounded& v) { return v.v == 0.0L && v.err == 0.0L; }
};

} // namespace detail

// trivariate power series truncated at a total degree cap
template <class C>
class TriSeries {
public:
    explicit TriSeries(int cap) : cap_(cap) {
        if (cap < 0) throw std::invalid_argument("TriSeries cap must be nonnegative");
    }

    static TriSeries one(int cap) {
        TriSeries s(cap);
        s.add(Mono{}, detail::CoeffOps<C>::from_ratio(1, 1));
        return s;
    }

    int cap() const { return cap_; }
    const std::map<Mono, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C{} : it->second;
    }

    void add(const Mono& m, const C& v) {
        if (m.deg() > cap_) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!detail::CoeffOps<C>::is_zero(v)) terms_.emplace(m, v);
        } else {
            it->second = it->second + v;
            if (detail::CoeffOps<C>::is_zero(it->second)) terms_.erase(it);
        }
    }

    TriSeries& operator+=(const TriSeries& o) {
        cap_ = std::min(cap_, o.cap_);
        std::erase_if(terms_, [&](const auto& t) { return t.first.deg() > cap_; });
        for (const auto& [m, v] : o.terms_) add(m, v);
        return *this;
    }

    TriSeries& operator-=(const TriSeries& o) {
        cap_ = std::min(cap_, o.cap_);
        std::erase_if(terms_, [&](const auto& t) { return t.first.deg() > cap_; });
        for (const auto& [m, v] : o.terms_) add(m, -v);
        return *this;
    }

    friend TriSeries operator+(TriSeries x, const TriSeries& y) { return x += y; }
    friend TriSeries operator-(TriSeries x, const TriSeries& y) { return x -= y; }

    friend TriSeries operator*(const TriSeries& x, const TriSeries& y) {
        TriSeries r(std::min(x.cap_, y.cap_));
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) {
                Mono m{mx.a + my.a, mx.b + my.b, mx.c + my.c};
                if (m.deg() > r.cap_) continue;
                r.add(m, cx * cy);
            }
        return r;
    }

    friend TriSeries operator*(const C& s, const TriSeries& x) {
        TriSeries r(x.cap_);
        for (const auto& [m, v] : x.terms_) r.add(m, s * v);
        return r;
    }

    bool operator==(const TriSeries& o) const { return terms_ == o.terms_; }

private:
    int cap_;
    std::map<Mono, C> terms_;
};

template <class C>
TriSeries<C> linear_form(int cap, const std::array<long long, 3>& u) {
    TriSeries<C> s(cap);
    s.add(Mono{1, 0, 0}, detail::CoeffOps<C>::from_ratio(u[0], 1));
    s.add(Mono{0, 1, 0}, detail::CoeffOps<C>::from_ratio(u[1], 1));
    s.add(Mono{0, 0, 1}, detail::CoeffOps<C>::from_ratio(u[2], 1));
    return s;
}

// exp of a series with vanishing constant term
template <class C>
TriSeries<C> ts_exp(const TriSeries<C>& s) {
    if (!detail::CoeffOps<C>::is_zero(s.coeff(Mono{})))
        throw std::invalid_argument("ts_exp requires a vanishing constant term");
    TriSeries<C> result = TriSeries<C>::one(s.cap());
    TriSeries<C> term = TriSeries<C>::one(s.cap());
    for (int k = 1; k <= s.cap(); ++k) {
        term = detail::CoeffOps<C>::from_ratio(1, k) * (term * s);
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

// one factor Gamma(1 - u1*v1 - u2*v2 - u3*v3)^sign of a gamma-function product
struct GammaFactor {
    int sign = 1;
    std::array<long long, 3> u{0, 0, 0};
};

// product of gamma factors as a series in the three formal variables, using
// log Gamma(1 - w) = c w + sum_{n >= 2} zeta(n) w^n / n.  The Euler constant
// c has to cancel between the factors; that cancellation is checked exactly
// on the integer linear forms before any numerics happen.
template <class C>
TriSeries<C> gamma_product(const std::vector<GammaFactor>& factors, int cap,
                           const std::vector<C>& zeta) {
    std::array<long long, 3> csum{0, 0, 0};
    for (const GammaFactor& f : factors)
        for (int i = 0; i < 3; ++i) csum[i] += f.sign * f.u[i];
    if (csum[0] != 0 || csum[1] != 0 || csum[2] != 0)
        throw std::domain_error("gamma product leaves an uncancelled Euler-constant term");
    if (cap >= 2 && static_cast<int>(zeta.size()) < cap + 1)
        throw std::invalid_argument("gamma_product needs zeta values up to the cap");

    TriSeries<C> logsum(cap);
    for (const GammaFactor& f : factors) {
        TriSeries<C> lf = linear_form<C>(cap, f.u);
        TriSeries<C> power = lf;
        for (int n = 2; n <= cap; ++n) {
            power = power * lf;
            if (power.is_zero()) break;
            logsum += (detail::CoeffOps<C>::from_ratio(f.sign, n) * zeta[n]) * power;
        }
    }
    return ts_exp(logsum);
}

// exp of a one-variable truncated series a (a[0] must vanish), via the
// recurrence b_k = (1/k) sum_{j=1}^{k} j a_j b_{k-j}
template <class C>
std::vector<C> exp_series(const std::vector<C>& a) {
    if (a.empty()) return {};
    if (!detail::CoeffOps<C>::is_zero(a[0]))
        throw std::invalid_argument("exp_series requires a vanishing constant term");
    std::vector<C> b(a.size(), C{});
    b[0] = detail::CoeffOps<C>::from_ratio(1, 1);
    for (std::size_t k = 1; k < a.size(); ++k) {
        C acc{};
        for (std::size_t j = 1; j <= k; ++j)
            acc = acc + detail::CoeffOps<C>::from_ratio(static_cast<long long>(j),
                                                        static_cast<long long>(k)) *
                            (a[j] * b[k - j]);
        b[k] = acc;
    }
    return b;
}

// B_0 .. B_n with B_1 = -1/2, by the defining recurrence
inline std::vector<Rational> bernoulli_numbers(int n_max) {
    std::vector<Rational> B(static_cast<std::size_t>(n_max) + 1);
    B[0] = 1;
    for (int m = 1; m <= n_max; ++m) {
        Rational s = 0;
        for (int j = 0; j < m; ++j) s += Rational(big_binom(m + 1, j)) * B[j];
        B[m] = -s / Rational(m + 1);
    }
    return B;
}

namespace detail {

inline long double ipow(long double x, int e) {
    long double r = 1.0L;
    while (e > 0) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

} // namespace detail

// zeta(s) for integer s >= 2 by Euler-Maclaurin summation; accurate to a few
// ulps of long double (the first omitted correction term is below 1e-30)
inline long double zeta_em(int s) {
    if (s < 2) throw std::invalid_argument("zeta_em requires s >= 2");
    constexpr int N = 32;
    constexpr int J = 12;
    static const std::vector<Rational> B = bernoulli_numbers(2 * J);

    long double sum = 0.0L;
    for (int k = N - 1; k >= 1; --k) sum += 1.0L / detail::ipow(static_cast<long double>(k), s);
    long double Nl = static_cast<long double>(N);
    sum += 0.5L / detail::ipow(Nl, s);
    sum += 1.0L / (static_cast<long double>(s - 1) * detail::ipow(Nl, s - 1));
    long double rising = static_cast<long double>(s);
    for (int j = 1; j <= J; ++j) {
        // rising = s (s+1) ... (s + 2j - 2)
        long double coef = static_cast<long double>(Rational(B[2 * j]) /
                                                    Rational(factorial(2 * j)));
        sum += coef * rising / detail::ipow(Nl, s + 2 * j - 1);
        rising *= static_cast<long double>(s + 2 * j - 1) * static_cast<long double>(s + 2 * j);
    }
    return sum;
}

// [0, 0, zeta(2), zeta(3), ..., zeta(n_max)]
inline std::vector<long double> zeta_values(int n_max) {
    std::vector<long double> z(static_cast<std::size_t>(std::max(n_max, 1)) + 1, 0.0L);
    for (int n = 2; n <= n_max; ++n) z[n] = zeta_em(n);
    return z;
}

} // namespace hgmpl
