#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <hgmpl/polylog.hpp>

using namespace hgmpl;

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kLog2 = std::numbers::ln2_v<long double>;

bool close(long double a, long double b, long double tol) { return std::fabs(a - b) <= tol; }

// plain nested-loop truncation, shares nothing with the evaluator
long double li_bruteforce(const std::vector<int>& k, long double z, int M) {
    std::vector<int> m(k.size());
    long double total = 0.0L;
    // depth up to 3 is enough for the oracle comparisons here
    if (k.size() == 1) {
        for (int m1 = 1; m1 <= M; ++m1)
            total += std::pow(z, m1) / std::pow((long double)m1, k[0]);
    } else if (k.size() == 2) {
        for (int m1 = 2; m1 <= M; ++m1)
            for (int m2 = 1; m2 < m1; ++m2)
                total += std::pow(z, m1) /
                         (std::pow((long double)m1, k[0]) * std::pow((long double)m2, k[1]));
    } else {
        REQUIRE(k.size() == 3);
        for (int m1 = 3; m1 <= M; ++m1)
            for (int m2 = 2; m2 < m1; ++m2)
                for (int m3 = 1; m3 < m2; ++m3)
                    total += std::pow(z, m1) /
                             (std::pow((long double)m1, k[0]) * std::pow((long double)m2, k[1]) *
                              std::pow((long double)m3, k[2]));
    }
    return total;
}

} // namespace

TEST_CASE("direct series against the nested-loop oracle") {
    LiEvaluator ev;
    struct Case {
        std::vector<int> k;
        long double z;
    };
    for (const Case& c : {Case{{2}, 0.3L}, Case{{1}, 0.5L}, Case{{3}, 0.5L}, Case{{2, 1}, 0.3L},
                          Case{{1, 2}, 0.5L}, Case{{1, 1}, 0.45L}, Case{{2, 1, 1}, 0.4L},
                          Case{{3, 1, 2}, 0.55L}}) {
        Bounded got = ev.li(c.k, c.z);
        long double want = li_bruteforce(c.k, c.z, 260);
        CHECK(close(got.v, want, got.err + 1e-15L));
        CHECK(got.err < 1e-15L);
    }
}

TEST_CASE("classical closed forms at small z") {
    LiEvaluator ev;
    CHECK(close(ev.li(std::vector<int>{1}, 0.5L).v, kLog2, 1e-17L));
    CHECK(close(ev.li(Word("x"), 0.3L).v, std::log(0.3L), 1e-17L));
    // dilogarithm reflection value at 1/2
    CHECK(close(ev.li(std::vector<int>{2}, 0.5L).v,
                kPi * kPi / 12.0L - kLog2 * kLog2 / 2.0L, 1e-16L));
    // word with a leading y and trailing x
    CHECK(close(ev.li(Word("yx"), 0.5L).v, -kPi * kPi / 12.0L - kLog2 * kLog2 / 2.0L, 1e-16L));
}

TEST_CASE("shuffle homomorphism numerically") {
    LiEvaluator ev;
    std::mt19937 rng(20240818);
    const long double z = 0.45L;
    for (int trial = 0; trial < 25; ++trial) {
        int lu = 1 + int(rng() % 3), lv = 1 + int(rng() % 3);
        std::string su, sv;
        for (int i = 0; i < lu; ++i) su += (rng() & 1) ? 'y' : 'x';
        for (int i = 0; i < lv; ++i) sv += (rng() & 1) ? 'y' : 'x';
        Word u(su), v(sv);
        FormalSum sh = shuffle(u, v);
        Bounded lhs(0.0L);
        for (const auto& [w, c] : sh.terms())
            lhs += Bounded(static_cast<long double>(c)) * ev.li(w, z);
        Bounded rhs = ev.li(u, z) * ev.li(v, z);
        CHECK(close(lhs.v, rhs.v, lhs.err + rhs.err + 1e-15L));
    }
}

TEST_CASE("path splitting agrees with direct summation") {
    LiEvaluator ev;
    for (const char* s : {"xy", "xyy", "yxy", "yyx", "xxyx", "xyxy", "y"}) {
        Word w(s);
        for (long double z : {0.55L, 0.75L}) {
            Bounded split = ev.li_split(w, z);
            Bounded direct = ev.li_ext(w, z);
            CHECK(close(split.v, direct.v, 10.0L * (split.err + direct.err) + 1e-15L));
        }
    }
}

TEST_CASE("values at one") {
    LiEvaluator ev;
    Bounded z2 = ev.zeta({2});
    CHECK(close(z2.v, kPi * kPi / 6.0L, z2.err + 1e-17L));
    CHECK(z2.err < 1e-15L);

    // depth reduction zeta(2,1) = zeta(3), and the Euler-Maclaurin cross-check
    Bounded z21 = ev.zeta({2, 1});
    Bounded z3 = ev.zeta({3});
    CHECK(close(z21.v, z3.v, z21.err + z3.err + 1e-17L));
    CHECK(close(z3.v, zeta_em(3), z3.err + 1e-17L));
    CHECK(close(ev.zeta({4}).v, zeta_em(4), 1e-16L));
    CHECK(close(ev.zeta({2, 1, 1}).v, zeta_em(4), 1e-15L));

    // trailing-x words resolve through regularization: Li(yx; 1) = -zeta(2)
    CHECK(close(ev.li(Word("yx"), 1.0L).v, -kPi * kPi / 6.0L, 1e-15L));
    // all-x words vanish at 1
    CHECK(ev.li(Word("xx"), 1.0L).v == 0.0L);

    CHECK_THROWS_AS(ev.zeta({1}), std::domain_error);
    CHECK_THROWS_AS(ev.zeta({1, 2}), std::domain_error);
    CHECK_THROWS_AS(ev.li(Word("yxy"), 1.0L), std::domain_error);
}

TEST_CASE("reflection identity near one exercises the splitting path") {
    LiEvaluator ev;
    const long double z = 1.0L - 1e-5L;
    Bounded lhs = ev.li(std::vector<int>{2}, z) + ev.li(std::vector<int>{2}, 1.0L - z) +
                  Bounded(std::log(z)) * Bounded(std::log(1.0L - z));
    CHECK(close(lhs.v, kPi * kPi / 6.0L, 10.0L * lhs.err + 1e-14L));
}

TEST_CASE("evaluation domain") {
    LiEvaluator ev;
    CHECK_THROWS_AS(ev.li(Word("xy"), -0.1L), std::domain_error);
    CHECK_THROWS_AS(ev.li(Word("xy"), 1.5L), std::domain_error);
    CHECK(ev.li(Word("xy"), 0.0L).v == 0.0L);
    CHECK(ev.li(Word::unit(), 0.7L).v == 1.0L);
}

TEST_CASE("term budget produces a precision error") {
    EvalContext ctx;
    ctx.max_terms = 3;
    LiEvaluator ev(ctx);
    CHECK_THROWS_AS(ev.li(std::vector<int>{2}, 0.2L), precision_error);
}

TEST_CASE("boundedness below one half") {
    LiEvaluator ev;
    for (long double z : {0.1L, 0.25L, 0.49L})
        for (int k = 2; k <= 6; ++k)
            for (const Word& w : h1_words_of_weight(k)) {
                Bounded val = ev.li(w, z);
                CHECK(std::fabs(val.v) < 1.0L);
            }
}

TEST_CASE("differential relations by central differences") {
    LiEvaluator ev;
    const long double h = 1e-5L;
    for (long double z : {0.2L, 0.4L}) {
        for (const char* s : {"xyy", "xxy", "xyxy"}) {
            Word w(s);
            Word rest = w.suffix_from(1);
            long double num = (ev.li(w, z + h).v - ev.li(w, z - h).v) / (2.0L * h);
            long double want = ev.li(rest, z).v / z;
            CHECK(close(num, want, 1e-6L * std::fabs(want) + 1e-9L));
        }
        for (const char* s : {"yxy", "yy", "yxxy"}) {
            Word w(s);
            Word rest = w.suffix_from(1);
            long double num = (ev.li(w, z + h).v - ev.li(w, z - h).v) / (2.0L * h);
            long double want = ev.li(rest, z).v / (1.0L - z);
            CHECK(close(num, want, 1e-6L * std::fabs(want) + 1e-9L));
        }
    }
}

TEST_CASE("gauss series") {
    CHECK(gauss_F(0.3L, 0.7L, 1.1L, 0.0L).v == 1.0L);
    Bounded g = gauss_F(1.0L, 1.0L, 2.0L, 0.5L);
    CHECK(close(g.v, -std::log(0.5L) / 0.5L, g.err + 1e-16L));
    Bounded arc = gauss_F(0.5L, 0.5L, 1.5L, 0.25L);
    CHECK(close(arc.v, kPi / 3.0L, arc.err + 1e-16L));
    CHECK_THROWS_AS(gauss_F(1.0L, 1.0L, 0.0L, 0.5L), std::invalid_argument);
    CHECK_THROWS_AS(gauss_F(1.0L, 1.0L, -2.0L, 0.5L), std::invalid_argument);
    CHECK_THROWS_AS(gauss_F(1.0L, 1.0L, 2.0L, 1.0L), std::domain_error);

    EvalContext tiny;
    tiny.max_terms = 4;
    CHECK_THROWS_AS(gauss_F(1.0L, 1.0L, 2.0L, 0.9L, tiny), precision_error);

    // limit toward z = 1 approaches the gamma-ratio value
    long double a = 0.3L, b = 0.4L, c = 3.4L;
    Bounded near_one = gauss_F(a, b, c, 1.0L - 1e-6L);
    long double at_one = std::tgamma(c) * std::tgamma(c - a - b) /
                         (std::tgamma(c - a) * std::tgamma(c - b));
    CHECK(close(near_one.v, at_one, 1e-5L));
}

TEST_CASE("hypergeometric lambda expansion oracle") {
    LiEvaluator ev;
    const long double z = 0.3L;
    FLambdaSeries f = f_lambda_expansion(z, 4);
    CHECK(f.tail < 1e-17L);

    CHECK(f.series.coeff(Mono{0, 0, 0}).v == 1.0L);
    CHECK(detail::CoeffOps<Bounded>::is_zero(f.series.coeff(Mono{1, 0, 0})));
    CHECK(detail::CoeffOps<Bounded>::is_zero(f.series.coeff(Mono{0, 2, 0})));

    auto want = [&](const std::vector<std::vector<int>>& idx) {
        Bounded s(0.0L);
        for (const auto& k : idx) s += ev.li(k, z);
        return s;
    };
    struct Check {
        Mono m;
        std::vector<std::vector<int>> idx;
    };
    // low-degree table: every coefficient is minus a sum of polylogarithms
    for (const Check& c :
         {Check{{1, 0, 1}, {{2}}}, Check{{2, 0, 1}, {{2, 1}}}, Check{{1, 0, 2}, {{3}}},
          Check{{1, 1, 1}, {{3}, {2, 1}}}, Check{{2, 0, 2}, {{3, 1}}},
          Check{{1, 0, 3}, {{4}}}, Check{{3, 0, 1}, {{2, 1, 1}}}}) {
        Bounded got = f.series.coeff(c.m);
        Bounded w = want(c.idx);
        CHECK(close(got.v, -w.v, got.err + w.err + f.tail + 1e-14L));
    }

    EvalContext tiny;
    tiny.max_terms = 2;
    CHECK_THROWS_AS(f_lambda_expansion(0.5L, 3, tiny), precision_error);
    CHECK_THROWS_AS(f_lambda_expansion(0.0L, 3), std::domain_error);
}
