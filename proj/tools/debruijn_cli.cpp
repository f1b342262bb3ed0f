// Command-line front end: stationary, spectrum, correlate, simulate,
// verify, export-matrix.
//
// Exit codes: 0 ok, 2 input error, 3 verification failure, 4 resource cap.

#include <CLI11.hpp>
#include <debruijn/debruijn.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::json;
using namespace debruijn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;
constexpr int kExitCap = 4;

struct RateSource {
    std::string rates_file;
    std::string special;  // "", "bernoulli", "skin-deep"
    std::string y_csv;    // bernoulli weights
    std::string x = "1";  // skin-deep rate
    int n = 2;
    int L = 1;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--rates", rates_file, "rate system JSON file");
        cmd->add_option("--special", special, "inline specialization: bernoulli|skin-deep");
        cmd->add_option("--y", y_csv, "bernoulli weights, comma separated rationals");
        cmd->add_option("--x", x, "skin-deep repeat rate (rational)");
        cmd->add_option("--n", n, "alphabet size (specials)");
        cmd->add_option("--L", L, "word length (specials)");
    }

    RateSystem resolve() const {
        if (rates_file.empty() == special.empty())
            throw std::invalid_argument("need exactly one of --rates and --special");
        if (!rates_file.empty()) {
            std::ifstream in(rates_file);
            if (!in) throw std::invalid_argument("cannot open rate file " + rates_file);
            json j;
            in >> j;
            return RateSystem::from_json(j);
        }
        if (special == "bernoulli") {
            BernoulliSpec spec;
            spec.L = L;
            std::istringstream is(y_csv);
            std::string tok;
            while (std::getline(is, tok, ',')) spec.y.push_back(parse_rational(tok));
            if (spec.y.size() < 2)
                throw std::invalid_argument("--y needs at least two weights");
            return bernoulli_rates(spec);
        }
        if (special == "skin-deep") return skin_deep_rates({parse_rational(x), n, L});
        throw std::invalid_argument("unknown specialization '" + special + "'");
    }
};

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

json partition_json(const PartitionFunction& pf) {
    return {{"formula", format_rational(pf.formula)},
            {"denominator_lcm", pf.lcm_value.str()},
            {"scaled_formula", pf.scaled_formula.str()},
            {"numerator_gcd", pf.numerator_gcd.str()},
            {"oracle_agrees", pf.agree()}};
}

int cmd_stationary(const RateSource& src, const std::string& format) {
    RateSystem R = src.resolve();
    StationaryVector sv = stationary_vector(R);
    PartitionFunction pf = partition_function(R);
    auto words = all_words(R.n(), R.L());
    if (format == "csv") {
        std::cout << "word,prob\n";
        for (std::size_t i = 0; i < words.size(); ++i)
            std::cout << words[i].str() << ',' << format_rational(sv.probs[i]) << '\n';
        std::cout << "# partition_formula=" << format_rational(pf.formula)
                  << " denominator_lcm=" << pf.lcm_value << '\n';
    } else {
        json rows = json::array();
        for (std::size_t i = 0; i < words.size(); ++i)
            rows.push_back({{"word", words[i].str()}, {"prob", format_rational(sv.probs[i])}});
        json out = {{"n", R.n()}, {"L", R.L()}, {"stationary", rows},
                    {"partition_function", partition_json(pf)}};
        std::cout << out.dump(2) << '\n';
    }
    Rational sum = 0;
    for (const auto& p : sv.probs) sum += p;
    return sum == 1 ? kExitOk : kExitVerification;
}

int cmd_spectrum(const RateSource& src, std::int64_t cap) {
    RateSystem R = src.resolve();
    SpectrumReport rep = spectrum_verify(R, cap);
    json eigs = json::array();
    for (const auto& [value, mult] : rep.claimed.entries)
        eigs.push_back({{"eigenvalue", format_rational(value)}, {"multiplicity", mult}});
    json out = {{"eigenvalues", eigs},
                {"verified", rep.matches},
                {"claimed_degree", rep.claimed_degree},
                {"dimension", rep.matrix_dimension},
                {"recursion_checked", rep.recursion_checked},
                {"recursion_verified", rep.recursion_matches},
                {"charpoly", rep.charpoly.str()}};
    std::cout << out.dump(2) << '\n';
    return rep.matches ? kExitOk : kExitVerification;
}

int cmd_correlate(const RateSource& src, const std::string& model, int i, int j,
                  const std::string& letters) {
    int a = 1, b = 1;
    if (!letters.empty()) {
        auto comma = letters.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--letters expects 'a,b'");
        a = std::stoi(letters.substr(0, comma));
        b = std::stoi(letters.substr(comma + 1));
    }
    if (model == "skin-deep") {
        Rational x = parse_rational(src.x);
        Rational closed = two_point(src.n, x, i, j, a == b);
        // Enumeration at the smallest length that contains both sites.
        RateSystem R = skin_deep_rates({x, src.n, j});
        CorrelationQuery q{{{i, a}, {j, b}}};
        Rational enumerated = correlation(q, R);
        json out = {{"model", "skin-deep"}, {"n", src.n}, {"x", src.x},
                    {"i", i}, {"j", j}, {"letters", {a, b}},
                    {"closed_form", format_rational(closed)},
                    {"enumeration", format_rational(enumerated)},
                    {"match", closed == enumerated},
                    {"truncated", format_rational(truncated_two_point(src.n, x, j - i))}};
        std::cout << out.dump(2) << '\n';
        return closed == enumerated ? kExitOk : kExitVerification;
    }
    RateSystem R = src.resolve();
    CorrelationQuery q{{{i, a}, {j, b}}};
    Rational value = correlation(q, R);
    json out = {{"n", R.n()}, {"L", R.L()}, {"i", i}, {"j", j}, {"letters", {a, b}},
                {"value", format_rational(value)}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_simulate(const RateSource& src, double total_time, double burn_in,
                 std::uint64_t seed, int trajectories) {
    RateSystem R = src.resolve();
    EmpiricalMeasure em = simulate_measure(R, seed, total_time, burn_in, trajectories);
    StationaryVector sv = stationary_vector(R);
    std::vector<double> exact(sv.probs.size());
    for (std::size_t i = 0; i < exact.size(); ++i) exact[i] = to_double(sv.probs[i]);
    auto empirical = em.probabilities();
    double tv = total_variation(empirical, exact);

    auto words = all_words(R.n(), R.L());
    json rows = json::array();
    for (std::size_t i = 0; i < words.size(); ++i)
        rows.push_back({{"word", words[i].str()},
                        {"empirical", format_double(empirical[i])},
                        {"exact", format_rational(sv.probs[i])}});
    json out = {{"n", R.n()}, {"L", R.L()}, {"seed", seed},
                {"total_time", format_double(total_time)},
                {"burn_in", format_double(burn_in)},
                {"trajectories", trajectories},
                {"measure", rows},
                {"total_variation", format_double(tv)}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_verify(const VerifyOptions& opt) {
    auto results = run_verification(opt);
    int fails = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.check << " n=" << r.n
                  << " L=" << r.L;
        if (r.point >= 0) std::cout << " point=" << r.point;
        std::cout << '\n';
        if (!r.pass) ++fails;
    }
    std::cout << (fails == 0 ? "OK " : "FAILED ") << results.size() - fails << '/'
              << results.size() << " checks passed\n";
    return fails == 0 ? kExitOk : kExitVerification;
}

int cmd_export(const RateSource& src, const std::string& which, const std::string& format) {
    RateSystem R = src.resolve();
    SparseRationalMatrix M;
    if (which == "M") M = transition_matrix(R);
    else if (which == "kirchhoff") M = kirchhoff(transition_matrix(R));
    else if (which == "delta") M = delta_matrix(R);
    else throw std::invalid_argument("unknown matrix '" + which + "' (M|kirchhoff|delta)");
    if (format == "csv") {
        export_matrix_csv(M, R.n(), R.L(), R.L(), std::cout);
    } else {
        std::cout << export_matrix_dense_json(M, R.n(), R.L()).dump(2) << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"de Bruijn process analyzer: exact stationary law, spectrum, "
                 "correlations, and stochastic simulation"};
    app.require_subcommand(1);

    std::string format = "json";

    auto* stationary = app.add_subcommand("stationary", "closed-form stationary distribution");
    RateSource stat_src;
    stat_src.add_options(stationary);
    stationary->add_option("--format", format, "json|csv");

    auto* spectrum = app.add_subcommand("spectrum", "exact eigenvalues of the Kirchhoff matrix");
    RateSource spec_src;
    spec_src.add_options(spectrum);
    std::int64_t cap = 256;
    spectrum->add_option("--cap", cap, "dense oracle size cap");

    auto* correlate = app.add_subcommand("correlate", "two-point correlation functions");
    RateSource corr_src;
    corr_src.add_options(correlate);
    std::string model, letters;
    int site_i = 1, site_j = 2;
    correlate->add_option("--model", model, "skin-deep for the closed form");
    correlate->add_option("--i", site_i, "first site");
    correlate->add_option("--j", site_j, "second site");
    correlate->add_option("--letters", letters, "letter pair 'a,b'");

    auto* simulate = app.add_subcommand("simulate", "Gillespie simulation with TV against the exact law");
    RateSource sim_src;
    sim_src.add_options(simulate);
    double total_time = 1e4, burn_in = 0;
    std::uint64_t seed = 1;
    int trajectories = 1;
    simulate->add_option("--time", total_time, "simulated time horizon");
    simulate->add_option("--burn-in", burn_in, "discarded initial time");
    simulate->add_option("--seed", seed, "rng seed");
    simulate->add_option("--trajectories", trajectories, "independent trajectories");

    auto* verify = app.add_subcommand("verify", "run the exact oracle suite on a grid");
    VerifyOptions vopt;
    verify->add_option("--max-n", vopt.max_n, "largest alphabet size");
    verify->add_option("--max-L", vopt.max_L, "largest word length");
    verify->add_option("--points", vopt.points, "random rate points per (n,L)");
    verify->add_option("--seed", vopt.seed, "rng seed for rate points");
    verify->add_option("--cap", vopt.dense_cap, "dense oracle size cap");

    auto* exportm = app.add_subcommand("export-matrix", "export M, kirchhoff, or delta");
    RateSource exp_src;
    exp_src.add_options(exportm);
    std::string which = "M", exp_format = "csv";
    exportm->add_option("--matrix", which, "M|kirchhoff|delta");
    exportm->add_option("--format", exp_format, "csv|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (stationary->parsed()) return cmd_stationary(stat_src, format);
        if (spectrum->parsed()) return cmd_spectrum(spec_src, cap);
        if (correlate->parsed()) return cmd_correlate(corr_src, model, site_i, site_j, letters);
        if (simulate->parsed())
            return cmd_simulate(sim_src, total_time, burn_in, seed, trajectories);
        if (verify->parsed()) return cmd_verify(vopt);
        if (exportm->parsed()) return cmd_export(exp_src, which, exp_format);
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
