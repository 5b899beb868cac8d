#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <hgmpl/report_io.hpp>

namespace {

constexpr long double kPrecisionFloor = 1e-14L;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string tok =
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty entry in list: " + s);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("list entries must be integers, got: " + tok);
        }
        if (used != tok.size())
            throw std::invalid_argument("list entries must be integers, got: " + tok);
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

long double resolve_precision(const std::optional<double>& flag) {
    long double p = 1e-13L;
    if (const char* env = std::getenv("HGMPL_PRECISION")) {
        char* end = nullptr;
        const long double v = std::strtold(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0L))
            throw std::invalid_argument("HGMPL_PRECISION must be a positive real");
        p = v;
    }
    if (flag) p = static_cast<long double>(*flag);
    if (p < kPrecisionFloor)
        throw std::invalid_argument(
            "precision targets below 1e-14 exceed what long double arithmetic can certify");
    return p;
}

void print_value(const hgmpl::Bounded& v, const std::string& strategy) {
    std::cout << "value     " << std::scientific << std::setprecision(18)
              << static_cast<double>(v.v) << '\n'
              << "error     " << std::setprecision(3) << static_cast<double>(v.err) << '\n'
              << "strategy  " << strategy << '\n';
}

struct EvalArgs {
    std::string index;
    std::string word;
    double z = 0.5;
    double alpha = 0.0, beta = 0.0, gamma = 1.0;
    std::optional<double> precision;
    std::optional<long long> max_terms;
};

hgmpl::EvalContext make_context(const std::optional<double>& precision,
                                const std::optional<long long>& max_terms) {
    hgmpl::EvalContext ctx;
    ctx.target_abs_error = resolve_precision(precision);
    if (max_terms) {
        if (*max_terms < 1) throw std::invalid_argument("--max-terms must be positive");
        ctx.max_terms = *max_terms;
    }
    return ctx;
}

int run_eval_zeta(const EvalArgs& a) {
    hgmpl::LiEvaluator ev(make_context(a.precision, a.max_terms));
    const std::vector<int> idx = parse_int_list(a.index);
    print_value(ev.zeta(idx), "regularized convolution at 1");
    return 0;
}

int run_eval_li(const EvalArgs& a) {
    hgmpl::LiEvaluator ev(make_context(a.precision, a.max_terms));
    if (a.index.empty() == a.word.empty())
        throw std::invalid_argument("eval li needs exactly one of --index or --word");
    const long double z = static_cast<long double>(a.z);
    hgmpl::Word w;
    if (!a.index.empty()) {
        const std::vector<int> idx = parse_int_list(a.index);
        for (int k : idx)
            if (k < 1) throw std::invalid_argument("index entries must be >= 1");
        w = hgmpl::word_from_index(idx);
    } else {
        w = hgmpl::Word(a.word);
    }
    std::string strategy;
    if (z == 1.0L)
        strategy = "regularized convolution at 1";
    else if (z > ev.context().split_point)
        strategy = "path splitting";
    else
        strategy = "direct series";
    print_value(ev.li(w, z), strategy);
    return 0;
}

int run_eval_f(const EvalArgs& a) {
    const hgmpl::EvalContext ctx = make_context(a.precision, a.max_terms);
    const hgmpl::Bounded v =
        hgmpl::gauss_F(static_cast<long double>(a.alpha), static_cast<long double>(a.beta),
                       static_cast<long double>(a.gamma), static_cast<long double>(a.z), ctx);
    print_value(v, "certified series");
    return 0;
}

int run_transform(const std::string& which, const std::string& mu_text) {
    const hgmpl::MuSequence mu = parse_int_list(mu_text);
    hgmpl::check_mu(mu);
    hgmpl::FormalSum result;
    if (which == "t0")
        result = hgmpl::T0(mu);
    else if (which == "t0p")
        result = hgmpl::T0prime(mu);
    else if (which == "t1")
        result = hgmpl::T1(mu);
    else if (which == "tinf")
        result = hgmpl::T_infty(mu);
    else
        throw std::invalid_argument("--which must be one of t0, t0p, t1, tinf");
    std::cout << hgmpl::to_text(result);
    return 0;
}

struct VerifyArgs {
    std::string identity;
    bool all = false;
    bool quick = false;
    std::string format = "table";
    std::vector<double> zs;
    std::optional<int> degree;
    std::optional<int> max_weight;
    unsigned seed = 20240819u;
    std::optional<double> precision;
};

int run_verify(const VerifyArgs& a) {
    if (a.all == !a.identity.empty())
        throw std::invalid_argument("verify needs exactly one of --identity or --all");
    if (a.format != "table" && a.format != "jsonl")
        throw std::invalid_argument("--format must be table or jsonl");

    hgmpl::RunOptions opt;
    opt.degree = a.quick ? 4 : 5;
    opt.max_weight = a.quick ? 6 : 8;
    opt.direct_terms = a.quick ? 100000 : 200000;
    opt.seed = a.seed;
    if (a.degree) opt.degree = *a.degree;
    if (a.max_weight) opt.max_weight = *a.max_weight;
    if (opt.degree < 2 || opt.degree > 6)
        throw std::invalid_argument("--degree must lie in [2, 6]");
    if (opt.max_weight < 3 || opt.max_weight > 10)
        throw std::invalid_argument("--max-weight must lie in [3, 10]");

    std::optional<double> precision = a.precision;
    if (!precision && a.quick) precision = 1e-9;
    if (!precision) precision = 1e-11;
    hgmpl::EvalContext ctx;
    ctx.target_abs_error = resolve_precision(precision);

    std::vector<long double> zs;
    for (double z : a.zs) {
        if (!(z > 0.0 && z < 1.0))
            throw std::invalid_argument("--z samples must lie in (0, 1)");
        zs.push_back(static_cast<long double>(z));
    }
    if (zs.empty()) zs.push_back(0.5L);

    std::vector<std::string> names;
    if (a.all)
        names = hgmpl::identity_names();
    else
        names.push_back(a.identity);

    const auto z_dependent = [](const std::string& n) {
        return n == "main-thm1" || n == "main-thm2" || n == "euler-inversion";
    };

    hgmpl::IdentityChecker checker(ctx);
    std::vector<hgmpl::IdentityReport> reports;
    for (const std::string& name : names) {
        const std::size_t runs = z_dependent(name) ? zs.size() : 1;
        for (std::size_t i = 0; i < runs; ++i) {
            hgmpl::RunOptions o = opt;
            o.z = zs[i];
            for (hgmpl::IdentityReport& r : hgmpl::run_identity(checker, name, o))
                reports.push_back(std::move(r));
        }
    }
    hgmpl::sort_reports(reports);

    if (a.format == "jsonl") {
        for (const hgmpl::IdentityReport& r : reports) std::cout << hgmpl::to_json_line(r) << '\n';
    } else {
        std::cout << hgmpl::format_table(reports);
    }

    int failed = 0;
    for (const hgmpl::IdentityReport& r : reports)
        if (!r.pass) {
            ++failed;
            std::cerr << "FAILED " << r.identity << " [" << r.params << "] deviation "
                      << std::scientific << std::setprecision(6)
                      << static_cast<double>(r.deviation) << " exceeds budget "
                      << static_cast<double>(r.budget) << '\n';
        }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shuffle-algebra and polylogarithm toolkit"};
    app.require_subcommand(1);

    EvalArgs ea;
    VerifyArgs va;
    std::string which = "t0";
    std::string mu_text;

    CLI::App* eval = app.add_subcommand("eval", "evaluate a single quantity");
    eval->require_subcommand(1);

    CLI::App* zeta = eval->add_subcommand("zeta", "multiple zeta value for an admissible index");
    zeta->add_option("--index", ea.index, "comma-separated exponents, leading entry >= 2")
        ->required();

    CLI::App* li = eval->add_subcommand("li", "multiple polylogarithm at z");
    li->add_option("--index", ea.index, "comma-separated exponents");
    li->add_option("--word", ea.word, "word over {x,y}");
    li->add_option("--z", ea.z, "evaluation point in [0, 1]");

    CLI::App* gf = eval->add_subcommand("f", "Gauss hypergeometric series 2F1");
    gf->add_option("--alpha", ea.alpha, "first parameter")->required();
    gf->add_option("--beta", ea.beta, "second parameter")->required();
    gf->add_option("--gamma", ea.gamma, "third parameter")->required();
    gf->add_option("--z", ea.z, "evaluation point, |z| < 1")->required();

    for (CLI::App* sub : {zeta, li, gf}) {
        sub->add_option("--precision", [&ea](const CLI::results_t& r) {
               ea.precision = std::stod(r.at(0));
               return true;
           },
           "target absolute error, at least 1e-14");
        sub->add_option("--max-terms", [&ea](const CLI::results_t& r) {
               ea.max_terms = std::stoll(r.at(0));
               return true;
           },
           "cap on direct summation length");
    }

    CLI::App* tr = app.add_subcommand("transform", "apply a sequence transform to mu");
    tr->add_option("--which", which, "t0, t0p, t1, or tinf");
    tr->add_option("--mu", mu_text, "comma-separated entries from {1,2,3}")->required();

    CLI::App* verify = app.add_subcommand("verify", "check one or all identities");
    verify->add_option("--identity", va.identity, "identity name");
    verify->add_flag("--all", va.all, "run every identity");
    verify->add_flag("--quick", va.quick, "smaller caps and looser precision");
    verify->add_option("--format", va.format, "table or jsonl");
    verify->add_option("--z", va.zs, "sample points in (0, 1), repeatable");
    verify->add_option("--degree", [&va](const CLI::results_t& r) {
              va.degree = std::stoi(r.at(0));
              return true;
          },
          "series truncation degree, at most 6");
    verify->add_option("--max-weight", [&va](const CLI::results_t& r) {
              va.max_weight = std::stoi(r.at(0));
              return true;
          },
          "word weight cap, at most 10");
    verify->add_option("--seed", va.seed, "seed for randomized sweeps");
    verify->add_option("--precision", [&va](const CLI::results_t& r) {
              va.precision = std::stod(r.at(0));
              return true;
          },
          "target absolute error, at least 1e-14");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (zeta->parsed()) return run_eval_zeta(ea);
        if (li->parsed()) return run_eval_li(ea);
        if (gf->parsed()) return run_eval_f(ea);
        if (tr->parsed()) return run_transform(which, mu_text);
        if (verify->parsed()) return run_verify(va);
    } catch (const hgmpl::precision_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
