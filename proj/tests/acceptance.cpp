#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <hgmpl/identities.hpp>

// Acceptance gate: one line per criterion, nonzero exit if any line fails.
// Tolerances and time limits are pinned here and nowhere else.

using namespace hgmpl;

namespace {

constexpr long double kTolOracle = 1e-10L;      // series vs independent oracle
constexpr long double kTolConnection = 1e-9L;   // solution-basis product
constexpr long double kTolDilogHalf = 1e-11L;   // half-argument dilog value
constexpr long double kTolSumFormula = 1e-9L;
constexpr long double kTolDuality = 1e-9L;
constexpr long double kTolGammaSchur = 1e-8L;
constexpr long double kTolTrailing = 1e-9L;
constexpr long double kTolSingular = 1e-8L;
constexpr long double kTolEvenZeta = 1e-10L;
constexpr long double kTolDerivRel = 1e-6L;

constexpr long long kMsExact = 10'000;
constexpr long long kMsOracle = 60'000;
constexpr long long kMsSumFormula = 120'000;

int failures = 0;

std::string fmt(long double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << static_cast<double>(v);
    return os.str();
}

void emit(int number, bool pass, const std::string& text) {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << text
              << std::endl;
    if (!pass) ++failures;
}

long double worst_of(const std::vector<IdentityReport>& rs) {
    long double w = 0.0L;
    for (const IdentityReport& r : rs) w = std::max(w, r.deviation);
    return w;
}

} // namespace

int main() {
    IdentityChecker checker;

    // 1: exact algebra (shuffle laws, reg1 displays, tau, T0 collapse and closed form)
    {
        detail::Stopwatch sw;
        long double dev = worst_of(checker.check_shuffle_laws(20240819u));
        dev = std::max(dev, worst_of(checker.check_reg1_laws()));
        dev = std::max(dev, worst_of(checker.check_t0_lemma(7)));
        const long long ms = sw.ms();
        std::ostringstream os;
        os << "exact algebra suite, mismatches=" << static_cast<long long>(dev) << ", t=" << ms
           << "ms (limit " << kMsExact << "ms)";
        emit(1, dev == 0.0L && ms < kMsExact, os.str());
    }

    // 2: series coefficients vs the independent recurrence oracle, with the
    //    displayed low-degree table term-for-term
    {
        detail::Stopwatch sw;
        long double dev = 0.0L;
        for (const long double z : {0.2L, 0.3L, 0.5L})
            dev = std::max(dev, worst_of(checker.check_f_expansion(z, 5)));
        const long long ms = sw.ms();
        std::ostringstream os;
        os << "expansion vs oracle, z in {0.2,0.3,0.5}, D=5, max|D|=" << fmt(dev) << " (tol "
           << fmt(kTolOracle) << "), t=" << ms << "ms (limit " << kMsOracle << "ms)";
        emit(2, dev < kTolOracle && ms < kMsOracle, os.str());
    }

    // 3: product of the two solution bases equals the gamma ratio; the
    //    single-v1-v3 slice gives Euler inversion, with the dilog value at 1/2
    {
        long double dev = 0.0L, inv = 0.0L, half = 0.0L;
        for (const long double z : {0.3L, 0.5L, 0.7L}) {
            dev = std::max(dev, worst_of(checker.check_connection_product(z, 4)));
            const std::vector<IdentityReport> rs = checker.check_euler_inversion(z, 4);
            inv = std::max(inv, rs.at(0).deviation);
            half = std::max(half, rs.at(1).deviation);
        }
        std::ostringstream os;
        os << "solution matching, z in {0.3,0.5,0.7}, D=4, max|D|=" << fmt(dev)
           << ", inversion=" << fmt(inv) << " (tol " << fmt(kTolConnection)
           << "), dilog(1/2)=" << fmt(half) << " (tol " << fmt(kTolDilogHalf) << ")";
        emit(3, dev < kTolConnection && inv < kTolConnection && half < kTolDilogHalf, os.str());
    }

    // 4: sum formula over all depths up to weight 8
    {
        detail::Stopwatch sw;
        const long double dev = worst_of(checker.check_sum_formula(8));
        const long long ms = sw.ms();
        std::ostringstream os;
        os << "sum formula, w<=8, max|D|=" << fmt(dev) << " (tol " << fmt(kTolSumFormula)
           << "), t=" << ms << "ms (limit " << kMsSumFormula << "ms)";
        emit(4, dev < kTolSumFormula && ms < kMsSumFormula, os.str());
    }

    // 5: duality of profile sums at 1, exact word bijection plus values
    {
        const std::vector<IdentityReport> rs = checker.check_duality(8);
        const long double bij = rs.at(0).deviation;
        const long double dev = rs.at(1).deviation;
        std::ostringstream os;
        os << "duality, k<=8, bijection mismatches=" << static_cast<long long>(bij)
           << ", max|D|=" << fmt(dev) << " (tol " << fmt(kTolDuality) << ")";
        emit(5, bij == 0.0L && dev < kTolDuality, os.str());
    }

    // 6: gamma-Schur expression of the value sums
    {
        const long double dev = worst_of(checker.check_gamma_schur(6));
        std::ostringstream os;
        os << "gamma-Schur values, l+m+n<=6, max|D|=" << fmt(dev) << " (tol "
           << fmt(kTolGammaSchur) << ")";
        emit(6, dev < kTolGammaSchur, os.str());
    }

    // 7: trailing-x regularized values vs the binomial closed form
    {
        const long double dev = worst_of(checker.check_trailing_x_values(6));
        std::ostringstream os;
        os << "trailing-x closed form, |w|+n<=6, max|D|=" << fmt(dev) << " (tol "
           << fmt(kTolTrailing) << ")";
        emit(7, dev < kTolTrailing, os.str());
    }

    // 8: singular connection row to D=4 with its one- and two-v2 specializations;
    //    the height-combination family is run and its outcome reported alongside
    {
        const std::vector<IdentityReport> rs = checker.check_singular_connection(4);
        long double dev = worst_of(rs);
        dev = std::max(dev, worst_of(checker.check_two_v2_values(6)));
        const std::vector<IdentityReport> hc = checker.check_height_combination(5);
        std::ostringstream os;
        os << "singular connection, D=4 plus specializations, max|D|=" << fmt(dev) << " (tol "
           << fmt(kTolSingular) << "); height family l<=5: max|D|=" << fmt(hc.at(0).deviation)
           << " -> " << (hc.at(0).pass ? "pass" : "FAIL");
        emit(8, dev < kTolSingular, os.str());
    }

    // 9: even zeta values against Bernoulli numbers
    {
        const long double dev = worst_of(checker.check_even_zeta(12));
        std::ostringstream os;
        os << "even zeta vs Bernoulli, n<=12, max|D|=" << fmt(dev) << " (tol "
           << fmt(kTolEvenZeta) << ")";
        emit(9, dev < kTolEvenZeta, os.str());
    }

    // 10: analytic sanity: unit bound, finite differences, direct-sum agreement
    {
        const long double bound = worst_of(checker.check_unit_bound(8));
        const long double rel = worst_of(checker.check_derivative_relations());
        const long double ratio = worst_of(checker.check_direct_sum_agreement(6, 200000));
        std::ostringstream os;
        os << "analytic sanity, max|Li|=" << fmt(bound) << " (<1), derivative rel="
           << fmt(rel) << " (tol " << fmt(kTolDerivRel) << "), direct-sum ratio=" << fmt(ratio)
           << " (<=1)";
        emit(10, bound < 1.0L && rel < kTolDerivRel && ratio <= 1.0L, os.str());
    }

    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << (10 - failures) << "/10)" << std::endl;
    return failures == 0 ? 0 : 1;
}
