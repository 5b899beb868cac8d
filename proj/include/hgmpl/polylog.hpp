#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <hgmpl/bounded.hpp>
#include <hgmpl/series.hpp>
#include <hgmpl/word.hpp>

namespace hgmpl {

// the requested accuracy cannot be certified within the term budget
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvalContext {
    long double target_abs_error = 1e-17L;
    long long max_terms = 4'000'000;
    long double split_point = 0.6L;  // direct summation at or below, path splitting above
    long double anchor = 0.5L;       // interior point used by the splitting evaluator
};

namespace detail {

inline long double factorial_ld(int n) {
    long double r = 1.0L;
    for (int i = 2; i <= n; ++i) r *= static_cast<long double>(i);
    return r;
}

inline Bounded bounded_ipow(const Bounded& x, int e) {
    Bounded r(1.0L);
    Bounded b = x;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

inline Bounded inv_pow(long long t, int k) {
    return bounded_ipow(Bounded(1.0L) / Bounded(static_cast<long double>(t)), k);
}

inline Bounded log_bounded(long double z) {
    long double v = std::log(z);
    return Bounded(v, 4.0L * kEps * std::fabs(v));
}

} // namespace detail

// numerical evaluation of iterated-integral values of words at real z in [0, 1],
// with certified absolute error bounds
class LiEvaluator {
public:
    explicit LiEvaluator(EvalContext ctx = {}) : ctx_(ctx) {}

    const EvalContext& context() const { return ctx_; }

    // truncated nested summation for words ending in y (or the empty word);
    // converges for 0 <= z < 1, practical up to roughly z = 0.7
    Bounded li_series(const Word& w, long double z) {
        if (w.empty()) return Bounded(1.0L);
        if (!w.is_h1()) throw std::invalid_argument("li_series needs a word ending in y");
        if (z == 0.0L) return Bounded(0.0L);
        auto key = std::make_pair(w.to_string(), z);
        if (auto it = series_cache_.find(key); it != series_cache_.end()) return it->second;

        const std::vector<int> k = index_from_word(w);
        const int n = static_cast<int>(k.size());
        // A[j] = sum over t > m_j > ... > m_n of prod m_i^{-k_i}; A[n+1] stays 1
        std::vector<Bounded> A(static_cast<std::size_t>(n) + 2);
        A[static_cast<std::size_t>(n) + 1] = Bounded(1.0L);
        Bounded sum(0.0L);
        Bounded zpow(1.0L);
        const Bounded zb(z);
        const long double rstar = (1.0L + z) / 2.0L;
        const long double inv_fact = 1.0L / detail::factorial_ld(n - 1);
        for (long long t = 1;; ++t) {
            zpow = zpow * zb;
            sum += zpow * detail::inv_pow(t, k[0]) * A[2];
            for (int j = 2; j <= n; ++j)
                A[j] += detail::inv_pow(t, k[static_cast<std::size_t>(j) - 1]) *
                        A[static_cast<std::size_t>(j) + 1];
            if (t >= 4) {
                // future term-bound ratios are at most z * (log growth)^(n-1)
                long double tl = static_cast<long double>(t);
                long double logratio =
                    (1.0L + std::log(tl + 1.0L)) / (1.0L + std::log(tl));
                long double ratio = z * std::pow(logratio, static_cast<long double>(n - 1));
                if (ratio < rstar) {
                    long double tail = 1.02L * std::pow(z, tl + 1.0L) *
                                       std::pow(tl + 1.0L, static_cast<long double>(-k[0])) *
                                       std::pow(1.0L + std::log(tl + 1.0L),
                                                static_cast<long double>(n - 1)) *
                                       inv_fact / (1.0L - rstar);
                    if (tail <= ctx_.target_abs_error) {
                        sum.err += tail;
                        break;
                    }
                }
            }
            if (t >= ctx_.max_terms)
                throw precision_error("series truncation bound still above target after " +
                                      std::to_string(t) + " terms");
        }
        series_cache_.emplace(key, sum);
        return sum;
    }

    // words with trailing x resolved through the shuffle regularization and log powers;
    // valid wherever li_series is
    Bounded li_ext(const Word& w, long double z) {
        if (w.empty()) return Bounded(1.0L);
        if (z == 0.0L) return Bounded(0.0L);
        const int n = w.trailing_x();
        if (n == 0) return li_series(w, z);
        const Word base = w.prefix(w.weight() - n);
        const Bounded lz = detail::log_bounded(z);
        Bounded total(0.0L);
        Bounded logpow(1.0L);
        for (int j = 0; j <= n; ++j) {
            // coefficient log^j z / j! against reg(base x^(n-j))
            FormalSum r = reg1(concat(base, x_power(n - j)));
            Bounded piece(0.0L);
            for (const auto& [u, c] : r.terms())
                piece += Bounded(static_cast<long double>(c)) * li_series(u, z);
            total += piece * logpow;
            logpow = logpow * lz * (Bounded(1.0L) / Bounded(static_cast<long double>(j + 1)));
        }
        return total;
    }

    // path splitting at the anchor: valid for split_point < z < 1
    Bounded li_split(const Word& w, long double z) {
        const long double s = ctx_.anchor;
        const int len = static_cast<int>(w.weight());
        Bounded total(0.0L);
        for (int i = 0; i <= len; ++i)
            total += anchored(w.prefix(i).tau(), 1.0L - z, 1.0L - s) *
                     li_ext(w.suffix_from(i), s);
        return total;
    }

    // value at z = 1; defined for words whose regularization is admissible
    // (an admissible word followed by a trailing run of x, or all x)
    Bounded li_at_one(const Word& w) {
        FormalSum r = reg1(w);
        Bounded total(0.0L);
        for (const auto& [u, c] : r.terms()) {
            if (!u.is_admissible())
                throw std::domain_error("value diverges at z = 1 for this word");
            total += Bounded(static_cast<long double>(c)) * convolution_at_one(u);
        }
        return total;
    }

    // strategy dispatcher on [0, 1]
    Bounded li(const Word& w, long double z) {
        if (z < 0.0L || z > 1.0L)
            throw std::domain_error("evaluation is supported for z in [0, 1]");
        if (w.empty()) return Bounded(1.0L);
        if (z == 1.0L) return li_at_one(w);
        if (z == 0.0L) return Bounded(0.0L);
        if (z <= ctx_.split_point) return li_ext(w, z);
        return li_split(w, z);
    }

    Bounded li(const std::vector<int>& index, long double z) {
        return li(word_from_index(index), z);
    }

    Bounded zeta(const std::vector<int>& index) {
        Word w = word_from_index(index);
        if (!w.is_admissible())
            throw std::domain_error("zeta values need a leading exponent of at least 2");
        return li_at_one(w);
    }

private:
    // iterated integral of v along [a, b], both endpoints at or below the split point
    Bounded anchored(const Word& v, long double a, long double b) {
        if (v.empty()) return Bounded(1.0L);
        auto key = std::make_tuple(v.to_string(), a, b);
        if (auto it = anchored_cache_.find(key); it != anchored_cache_.end()) return it->second;
        const int r = static_cast<int>(v.weight());
        std::vector<Bounded> A(static_cast<std::size_t>(r) + 1);
        A[0] = Bounded(1.0L);
        for (int i = 1; i <= r; ++i) {
            Bounded acc = li_ext(v.prefix(i), b);
            for (int j = 0; j < i; ++j)
                acc -= A[static_cast<std::size_t>(j)] *
                       li_ext(v.suffix_from(j).prefix(i - j), a);
            A[static_cast<std::size_t>(i)] = acc;
            anchored_cache_.emplace(std::make_tuple(v.prefix(i).to_string(), a, b), acc);
        }
        return A[static_cast<std::size_t>(r)];
    }

    // admissible words at z = 1 through the two-sided expansion around the anchor
    Bounded convolution_at_one(const Word& w) {
        auto it = one_cache_.find(w.to_string());
        if (it != one_cache_.end()) return it->second;
        const long double s = ctx_.anchor;
        const int len = static_cast<int>(w.weight());
        Bounded total(0.0L);
        for (int i = 0; i <= len; ++i)
            total += li_ext(w.prefix(i).tau(), 1.0L - s) * li_ext(w.suffix_from(i), s);
        one_cache_.emplace(w.to_string(), total);
        return total;
    }

    EvalContext ctx_;
    std::map<std::pair<std::string, long double>, Bounded> series_cache_;
    std::map<std::tuple<std::string, long double, long double>, Bounded> anchored_cache_;
    std::map<std::string, Bounded> one_cache_;
};

// Gauss series sum_m (alpha)_m (beta)_m / ((gamma)_m m!) z^m for |z| < 1,
// with a dominated-ratio tail certificate
inline Bounded gauss_F(long double alpha, long double beta, long double gamma, long double z,
                       const EvalContext& ctx = {}) {
    if (gamma <= 0.0L && gamma == std::floor(gamma))
        throw std::invalid_argument("gauss_F pole: gamma is a nonpositive integer");
    if (std::fabs(z) >= 1.0L)
        throw std::domain_error("gauss_F needs |z| < 1");
    Bounded term(1.0L);
    Bounded sum(1.0L);
    const long double az = std::fabs(z);
    // uniform bound on all later term ratios: |t_{j+1}/t_j| <= az * f(j) with
    // f(j) = (j+a)(j+b)/((j-g)(j+1)) <= 1 + (c1 + c0/m) m/((m+1)(m-g)) for j >= m
    const long double a = std::fabs(alpha);
    const long double b = std::fabs(beta);
    const long double g = std::fmax(0.0L, -gamma);
    const long double c1 = std::fabs(a + b + g - 1.0L);
    const long double c0 = a * b + g;
    for (long long m = 0;; ++m) {
        long double ml = static_cast<long double>(m);
        if (m > 0 && ml > g + 1.0L) {
            long double delta = (c1 + c0 / ml) * ml / ((ml + 1.0L) * (ml - g));
            long double r = az * (1.0L + delta);
            if (r < 1.0L) {
                long double tail = upper_abs(term) * r / (1.0L - r);
                if (tail <= ctx.target_abs_error) {
                    sum.err += tail;
                    break;
                }
            }
        }
        term = term * (Bounded(alpha + ml) * Bounded(beta + ml) /
                       (Bounded(gamma + ml) * Bounded(ml + 1.0L))) *
               Bounded(z);
        sum += term;
        if (m + 1 >= ctx.max_terms)
            throw precision_error("gauss series truncation bound still above target after " +
                                  std::to_string(m + 1) + " terms");
    }
    return sum;
}

// the hypergeometric solution expanded in the three formal variables, as an
// oracle independent of the word machinery: parameters alpha = -v3, beta = v1,
// gamma = 1 - v2 - v3, each Taylor term expanded exactly over the rationals
// (the denominator by geometric series), then summed over the z powers with a
// measured-L1 geometric tail
struct FLambdaSeries {
    TriSeries<Bounded> series;
    long double tail = 0.0L;  // L1 bound on everything beyond the truncation
};

inline FLambdaSeries f_lambda_expansion(long double z, int degree_cap,
                                        const EvalContext& ctx = {}) {
    if (z <= 0.0L || z >= 1.0L)
        throw std::domain_error("f_lambda_expansion needs 0 < z < 1");
    const int D = degree_cap;
    TriSeries<Rational> P = TriSeries<Rational>::one(D);
    TriSeries<Bounded> acc(D);
    acc.add(Mono{}, Bounded(1.0L));
    Bounded zpow(1.0L);
    const Bounded zb(z);
    FLambdaSeries out{TriSeries<Bounded>(D), 0.0L};
    for (long long m = 1;; ++m) {
        TriSeries<Rational> lin1(D);  // (m-1) + v1
        lin1.add(Mono{}, Rational(m - 1));
        lin1.add(Mono{1, 0, 0}, 1);
        TriSeries<Rational> lin2(D);  // (m-1) - v3
        lin2.add(Mono{}, Rational(m - 1));
        lin2.add(Mono{0, 0, 1}, -1);
        TriSeries<Rational> geom(D);  // 1 / (1 - (v2+v3)/m) truncated
        {
            TriSeries<Rational> ratio(D);
            ratio.add(Mono{0, 1, 0}, Rational(1, m));
            ratio.add(Mono{0, 0, 1}, Rational(1, m));
            TriSeries<Rational> pw = TriSeries<Rational>::one(D);
            geom = pw;
            for (int j = 1; j <= D; ++j) {
                pw = pw * ratio;
                geom += pw;
            }
        }
        P = Rational(1, m * m) * (P * lin1 * lin2 * geom);
        zpow = zpow * zb;
        long double l1 = 0.0L;
        for (const auto& [mono, coeff] : P.terms()) {
            long double c = static_cast<long double>(coeff);
            acc.add(mono, Bounded(c, kEps * std::fabs(c)) * zpow);
            l1 += std::fabs(c);
        }
        if (m >= 3) {
            long double rhat = z / (1.0L - 2.0L / (static_cast<long double>(m) + 1.0L));
            if (rhat < 1.0L) {
                long double tail = 1.02L * l1 * std::pow(z, static_cast<long double>(m)) *
                                   rhat / (1.0L - rhat);
                if (tail <= ctx.target_abs_error) {
                    out.tail = tail;
                    break;
                }
            }
        }
        if (m >= ctx.max_terms)
            throw precision_error("f_lambda truncation bound still above target after " +
                                  std::to_string(m) + " terms");
    }
    out.series = acc;
    return out;
}

} // namespace hgmpl
