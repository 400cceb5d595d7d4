// Command-line surface for the spanning-tree toolkit: exact and asymptotic
// moments, the p_d(n) table and figure data, short-cycle constants, the
// saddle-point numbers, Monte Carlo batches, and the distribution test.
//
// Exit codes: 0 success, 2 contract violation (parity/range/flags),
// 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spantree/exact.hpp"
#include "spantree/moments.hpp"
#include "spantree/montecarlo.hpp"
#include "spantree/pairing.hpp"
#include "spantree/real.hpp"
#include "spantree/rng.hpp"
#include "spantree/saddle.hpp"
#include "spantree/treecount.hpp"
#include "spantree/version.hpp"

using nlohmann::ordered_json;
using namespace spantree;

namespace {

constexpr int kExitContract = 2;
constexpr int kExitVerification = 3;

std::string fmt(double v, const char* spec = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string rat_str(const BigRat& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

ordered_json base_meta(std::uint64_t seed) {
    ordered_json meta;
    meta["version"] = kVersion;
    meta["generator"] = kGeneratorId;
    meta["seed"] = seed;
    meta["precision_bits"] = Real::default_precision();
    return meta;
}

bool parity_ok(int d, long n) { return (static_cast<long>(d) * n) % 2 == 0; }

// ---------------------------------------------------------------- expectation

int cmd_expectation(int d, long n, bool asymptotic, int digits) {
    if (asymptotic) {
        const LogValue v = expected_trees_asymptotic(d, n);
        std::cout << "E[tree count] (asymptotic, simple-graph model), d=" << d << " n=" << n << "\n";
        std::cout << "  log_e = " << v.log_e.str(digits) << "\n";
        std::cout << "  value ~ " << fmt(v.mantissa10(), "%.6f") << "e" << v.exponent10() << "\n";
    } else {
        const BigRat ey = expected_trees_exact(d, n);
        std::cout << "E[tree count] (exact, pairing model), d=" << d << " n=" << n << "\n";
        std::cout << "  exact   = " << rat_str(ey) << "\n";
        std::cout << "  decimal = " << Real(ey).str(digits) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------- table

std::string table_csv(long n, const std::vector<int>& ds) {
    std::ostringstream os;
    os << "d,n,p\n";
    for (int d : ds) {
        os << d << ',' << n << ',';
        if (!parity_ok(d, n))
            os << "n/a (parity)";
        else
            os << fmt(ratio_p(d, n).to_double(), "%.6f");
        os << "\n";
    }
    return os.str();
}

int cmd_table(long n, const std::vector<int>& ds, const std::string& out) {
    std::cout << "p_d(n) = (E[Y^2]/E[Y]^2) / exp(sum_j lambda_j zeta_j^2) at n = " << n << "\n";
    std::cout << "  d        p_d(" << n << ")\n";
    for (int d : ds) {
        char row[64];
        if (parity_ok(d, n))
            std::snprintf(row, sizeof row, "  %-6d   %.4f", d, ratio_p(d, n).to_double());
        else
            std::snprintf(row, sizeof row, "  %-6d   n/a (parity)", d);
        std::cout << row << "\n";
    }
    if (!out.empty()) {
        write_file(out, table_csv(n, ds));
        ordered_json meta = base_meta(0);
        meta["command"] = "table";
        meta["n"] = n;
        meta["d_list"] = ds;
        write_file(out + ".meta.json", meta.dump(2) + "\n");
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

// --------------------------------------------------------------------- figure

std::string figure_csv(long n_max, const std::vector<int>& ds) {
    std::ostringstream os;
    os << "d,n,p\n";
    for (int d : ds) {
        for (long n = 4; n <= n_max; ++n) {
            if (!parity_ok(d, n)) continue;
            os << d << ',' << n << ',' << fmt(ratio_p(d, n).to_double(), "%.10f") << "\n";
        }
    }
    return os.str();
}

std::string figure_svg(const std::string& csv) {
    // minimal polyline rendering; the CSV is the quantitative artifact
    struct Pt {
        int d;
        long n;
        double p;
    };
    std::vector<Pt> pts;
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);  // header
    double pmin = 1e9, pmax = -1e9;
    long nmin = 1 << 30, nmax = 0;
    while (std::getline(is, line)) {
        Pt pt{};
        if (std::sscanf(line.c_str(), "%d,%ld,%lf", &pt.d, &pt.n, &pt.p) == 3) {
            pts.push_back(pt);
            pmin = std::min(pmin, pt.p);
            pmax = std::max(pmax, pt.p);
            nmin = std::min(nmin, pt.n);
            nmax = std::max(nmax, pt.n);
        }
    }
    const double W = 640, H = 420, L = 60, B = 40;
    auto sx = [&](double n) { return L + (n - nmin) / std::max<double>(1, nmax - nmin) * (W - L - 20); };
    auto sy = [&](double p) { return H - B - (p - pmin) / std::max(1e-12, pmax - pmin) * (H - B - 20); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - 20 << "\" y2=\"" << H - B
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"20\" x2=\"" << L << "\" y2=\"" << H - B
       << "\" stroke=\"black\"/>\n";
    const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};
    int ci = 0;
    int cur_d = -1;
    std::ostringstream poly;
    auto flush = [&]() {
        if (cur_d >= 0)
            os << "<polyline fill=\"none\" stroke=\"" << colors[ci++ % 6] << "\" points=\""
               << poly.str() << "\"/>\n";
        poly.str("");
    };
    for (const auto& pt : pts) {
        if (pt.d != cur_d) {
            flush();
            cur_d = pt.d;
        }
        poly << sx(static_cast<double>(pt.n)) << ',' << sy(pt.p) << ' ';
    }
    flush();
    os << "</svg>\n";
    return os.str();
}

int cmd_figure(long n_max, const std::vector<int>& ds, const std::string& out,
               const std::string& svg) {
    const std::string csv = figure_csv(n_max, ds);
    if (out.empty() || out == "-") {
        std::cout << csv;
    } else {
        write_file(out, csv);
        ordered_json meta = base_meta(0);
        meta["command"] = "figure";
        meta["n_max"] = n_max;
        meta["d_list"] = ds;
        write_file(out + ".meta.json", meta.dump(2) + "\n");
        std::cout << "wrote " << out << "\n";
    }
    if (!svg.empty()) {
        write_file(svg, figure_svg(csv));
        std::cout << "wrote " << svg << "\n";
    }
    return 0;
}

// --------------------------------------------------------------------- lambda

int cmd_lambda(int d, int j_max, const std::string& out) {
    std::ostringstream csv;
    csv << "j,lambda,zeta,lambda_prime_closed,lambda_prime_recurrence,lambda_prime_enumerate,"
           "all_equal\n";
    std::cout << "short-cycle constants, d = " << d << "\n";
    std::cout << "  j    lambda        zeta            lambda'        three-way\n";
    bool all_ok = true;
    for (int j = 1; j <= j_max; ++j) {
        const auto c = cycle_constants(d, j);
        const BigRat closed = lambda_prime_closed(d, j);
        const BigRat rec = lambda_prime_recurrence(d, j);
        const bool enum_feasible = j <= 16;
        const BigRat en = enum_feasible ? lambda_prime_enumerate(d, j) : closed;
        const bool eq = (closed == rec) && (closed == en) && (c.lambda_prime == closed);
        all_ok = all_ok && eq;
        char row[160];
        std::snprintf(row, sizeof row, "  %-4d %-13s %-15s %-14s %s", j, rat_str(c.lambda).c_str(),
                      rat_str(c.zeta).c_str(), rat_str(closed).c_str(),
                      eq ? (enum_feasible ? "equal" : "equal (enum skipped)") : "MISMATCH");
        std::cout << row << "\n";
        csv << j << ',' << rat_str(c.lambda) << ',' << rat_str(c.zeta) << ',' << rat_str(closed)
            << ',' << rat_str(rec) << ',' << (enum_feasible ? rat_str(en) : "skipped") << ','
            << (eq ? 1 : 0) << "\n";
    }
    if (!out.empty()) {
        write_file(out, csv.str());
        std::cout << "wrote " << out << "\n";
    }
    if (!all_ok) {
        std::cerr << "lambda' methods disagree\n";
        return kExitVerification;
    }
    return 0;
}

// --------------------------------------------------------------------- saddle

int cmd_saddle(int digits) {
    const Real beta_star = stationary_beta(0.3);
    const auto grad = phi_gradient_norms(Real(1) / Real(3), Real(0), Real(1e-12));
    const auto h = hessian_at_stationary();
    std::cout << "saddle-point apparatus (d = 3)\n";
    std::cout << "  beta*                = " << beta_star.str(digits) << "\n";
    std::cout << "  r(beta*)             = " << saddle_radius(beta_star).str(digits) << "\n";
    std::cout << "  phi(x*)              = " << exponent_phi_real(Real(1) / Real(3)).str(digits)
              << "\n";
    std::cout << "  psi(x*)              = " << prefactor_psi(Real(1) / Real(3)).str(digits) << "\n";
    std::cout << "  |grad phi(x*)|       = " << hypot(grad[0], grad[1]).str(3) << "\n";
    std::cout << "  H[0][0], H[1][1]     = " << h.bb.str(digits) << ", " << h.tt.str(digits) << "\n";
    std::cout << "  |H[0][1]|            = " << h.mixed_abs.str(3) << "\n";
    std::cout << "  2 pi psi det^{-1/2}  = " << gaussian_peak_constant().str(digits) << "\n";
    return 0;
}

// ----------------------------------------------------------------------- dist

int cmd_dist(long n, long graph_samples, long w_samples, std::uint64_t seed, int workers,
             const std::string& out) {
    const DistTest t = empirical_distribution_test(3, n, graph_samples, w_samples, seed, workers);
    ordered_json j;
    j["meta"] = base_meta(seed);
    j["meta"]["command"] = "dist";
    j["d"] = 3;
    j["n"] = n;
    j["graph_samples"] = graph_samples;
    j["w_samples"] = w_samples;
    j["workers"] = workers;
    j["ks"] = t.ks;
    j["attempts"] = t.attempts;
    j["simple_rate"] = t.simple_rate;
    j["graph_deciles"] = t.graph_deciles;
    j["w_deciles"] = t.w_deciles;
    const std::string text = j.dump(2) + "\n";
    if (out.empty() || out == "-")
        std::cout << text;
    else {
        write_file(out, text);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

// --------------------------------------------------------------------- sample

int cmd_sample(int d, long n, long samples, int m, std::uint64_t seed, int workers,
               const std::string& out) {
    const SampleBatch batch =
        sample_batch(d, static_cast<int>(n), samples, m, seed, workers);
    if (out.empty() || out == "-") {
        std::cout << batch.to_csv();
    } else {
        write_file(out, batch.to_csv());
        ordered_json meta = base_meta(seed);
        meta["command"] = "sample";
        meta["d"] = d;
        meta["n"] = n;
        meta["m"] = m;
        meta["samples"] = samples;
        meta["workers"] = workers;
        write_file(out + ".meta.json", meta.dump(2) + "\n");
        std::cout << "wrote " << out << " (" << samples << " records)\n";
    }
    return 0;
}

// --------------------------------------------------------------------- verify

int verify_pair(int d, int n) {
    BigInt sum_tau = 0, sum_tau_sq = 0;
    long count = 0;
    enumerate_pairings(d, n, [&](const Pairing& p) {
        const BigInt tau = spanning_tree_count(project(p));
        sum_tau += tau;
        sum_tau_sq += tau * tau;
        ++count;
    });
    const BigRat ey = make_rat(sum_tau, count);
    const BigRat ey2 = make_rat(sum_tau_sq, count);
    int failures = 0;
    const BigRat fey = expected_trees_exact(d, n);
    const BigRat fey2 = second_moment_exact(d, n);
    if (ey == fey)
        std::cout << "[PASS] E[Y](" << d << "," << n << ") = " << rat_str(ey) << " over " << count
                  << " pairings\n";
    else {
        std::cout << "[FAIL] E[Y](" << d << "," << n << "): formula " << rat_str(fey)
                  << " != enumeration " << rat_str(ey) << "\n";
        ++failures;
    }
    if (ey2 == fey2)
        std::cout << "[PASS] E[Y^2](" << d << "," << n << ") = " << rat_str(ey2) << "\n";
    else {
        std::cout << "[FAIL] E[Y^2](" << d << "," << n << "): formula " << rat_str(fey2)
                  << " != enumeration " << rat_str(ey2) << "\n";
        ++failures;
    }
    return failures;
}

int cmd_verify(const std::string& suite) {
    int failures = verify_pair(3, 4) + verify_pair(4, 3);
    if (suite == "slow") failures += verify_pair(3, 6);
    if (failures > 0) {
        std::cerr << failures << " verification failure(s)\n";
        return kExitVerification;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and Monte Carlo analysis of spanning-tree counts in random regular graphs"};
    app.set_config("--config", "", "optional key=value configuration file; flags win on conflict");

    long precision = 256;
    if (const char* env = std::getenv("SPANTREE_PRECISION")) precision = std::atol(env);
    app.add_option("--precision", precision, "working precision in bits (>= 64)")
        ->check(CLI::Range(64L, 65536L));

    int digits = 20;
    app.add_option("--digits", digits, "significant digits for printed decimals");

    // expectation
    auto* exp_cmd = app.add_subcommand("expectation", "expected number of spanning trees");
    int exp_d = 3;
    long exp_n = 10;
    bool exp_exact = false, exp_asym = false;
    exp_cmd->add_option("--d", exp_d, "degree")->required();
    exp_cmd->add_option("--n", exp_n, "vertices")->required();
    exp_cmd->add_flag("--exact", exp_exact, "exact pairing-model value");
    exp_cmd->add_flag("--asymptotic", exp_asym, "asymptotic simple-graph value");

    // table
    auto* table_cmd = app.add_subcommand("table", "p_d(n) for a list of degrees");
    long table_n = 100;
    std::vector<int> table_ds{3, 4, 5, 6, 100};
    std::string table_out;
    table_cmd->add_option("--n", table_n, "vertices");
    table_cmd->add_option("--d-list", table_ds, "degrees");
    table_cmd->add_option("--out", table_out, "CSV output path");

    // figure
    auto* fig_cmd = app.add_subcommand("figure", "p_d(n) curves as CSV (optionally SVG)");
    long fig_nmax = 50;
    std::vector<int> fig_ds{3, 4, 5, 6, 100};
    std::string fig_out, fig_svg;
    fig_cmd->add_option("--n-max", fig_nmax, "largest n");
    fig_cmd->add_option("--d-list", fig_ds, "degrees");
    fig_cmd->add_option("--out", fig_out, "CSV output path ('-' for stdout)");
    fig_cmd->add_option("--svg", fig_svg, "SVG output path");

    // lambda
    auto* lam_cmd = app.add_subcommand("lambda", "short-cycle constants, lambda' three ways");
    int lam_d = 3, lam_jmax = 10;
    std::string lam_out;
    lam_cmd->add_option("--d", lam_d, "degree");
    lam_cmd->add_option("--j-max", lam_jmax, "largest cycle length");
    lam_cmd->add_option("--out", lam_out, "CSV output path");

    // saddle
    auto* sad_cmd = app.add_subcommand("saddle", "d=3 saddle-point numbers");

    // dist
    auto* dist_cmd = app.add_subcommand("dist", "distribution test vs the simulated limit");
    long dist_n = 200, dist_gs = 2000, dist_ws = 2000;
    std::uint64_t dist_seed = 1;
    int dist_workers = 1;
    std::string dist_out;
    dist_cmd->add_option("--n", dist_n, "vertices (even)");
    dist_cmd->add_option("--graph-samples", dist_gs, "simple-graph samples");
    dist_cmd->add_option("--w-samples", dist_ws, "simulated W samples");
    dist_cmd->add_option("--seed", dist_seed, "seed");
    dist_cmd->add_option("--workers", dist_workers, "worker threads");
    dist_cmd->add_option("--out", dist_out, "JSON output path ('-' for stdout)");

    // sample
    auto* samp_cmd = app.add_subcommand("sample", "pairing-model sample batch as CSV");
    int samp_d = 3, samp_m = 2, samp_workers = 1;
    long samp_n = 100, samp_count = 1000;
    std::uint64_t samp_seed = 1;
    std::string samp_out;
    samp_cmd->add_option("--d", samp_d, "degree");
    samp_cmd->add_option("--n", samp_n, "vertices");
    samp_cmd->add_option("--samples", samp_count, "number of records");
    samp_cmd->add_option("--m", samp_m, "cycle counts per record");
    samp_cmd->add_option("--seed", samp_seed, "seed");
    samp_cmd->add_option("--workers", samp_workers, "worker threads");
    samp_cmd->add_option("--out", samp_out, "CSV output path ('-' for stdout)");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "exhaustive enumeration oracles");
    std::string ver_suite = "small";
    ver_cmd->add_option("--suite", ver_suite, "small (default) or slow (adds (3,6))")
        ->check(CLI::IsMember({"small", "slow"}));

    app.require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        Real::set_default_precision(precision);
        if (*exp_cmd) {
            if (exp_exact == exp_asym)
                throw std::invalid_argument("pass exactly one of --exact / --asymptotic");
            return cmd_expectation(exp_d, exp_n, exp_asym, digits);
        }
        if (*table_cmd) return cmd_table(table_n, table_ds, table_out);
        if (*fig_cmd) return cmd_figure(fig_nmax, fig_ds, fig_out, fig_svg);
        if (*lam_cmd) return cmd_lambda(lam_d, lam_jmax, lam_out);
        if (*sad_cmd) return cmd_saddle(digits);
        if (*dist_cmd) return cmd_dist(dist_n, dist_gs, dist_ws, dist_seed, dist_workers, dist_out);
        if (*samp_cmd)
            return cmd_sample(samp_d, samp_n, samp_count, samp_m, samp_seed, samp_workers, samp_out);
        if (*ver_cmd) return cmd_verify(ver_suite);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContract;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContract;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
