// gencover -- covering-radius toolbox for q-ary block codes:
// exact t-th-order covering radii, minimal covering-code search,
// rate-bound curves, random-code experiments, Janson-type certificates,
// and the two-round football-pool game built on all of it.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencover/bounds.hpp"
#include "gencover/pool.hpp"
#include "gencover/probmodel.hpp"
#include "gencover/radius.hpp"
#include "gencover/search.hpp"

using nlohmann::json;
using namespace gencover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
    std::uint64_t seed = 0;
    int threads = 0;
    bool as_json = false;
    bool as_csv = false;
    std::string out_path;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + g.out_path);
    out << text;
}

json words_json(const std::vector<Word>& words) {
    json arr = json::array();
    for (const Word& w : words) arr.push_back(w.str());
    return arr;
}

int cmd_radius(const GlobalOpts& g, const std::string& code_path, int t) {
    Code code = Code::read_file(code_path);
    RadiusReport report = t_covering_radius(code, t, g.threads);
    json j{{"schema", 1},
           {"n", code.n()},
           {"q", code.q()},
           {"t", t},
           {"m", code.size()},
           {"radius", report.radius},
           {"deep_hole", words_json(report.deep_hole.rows())},
           {"scanned", report.scanned}};
    emit(g, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_search(const GlobalOpts& g, int n, int t, int r, int q, double budget) {
    SearchBudget sb;
    if (budget > 0) sb.max_nodes = budget;
    SearchResult res = min_code_size(n, t, r, q, sb);
    json j{{"schema", 1},
           {"n", n},
           {"q", q},
           {"t", t},
           {"r", r},
           {"m_min", res.m_min},
           {"k", res.k},
           {"witness", words_json(res.witness.words())},
           {"nodes", res.nodes},
           {"source", "exhaustive-search"}};
    emit(g, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_bounds_curve(const GlobalOpts& g, int q, int points) {
    std::vector<BoundPoint> rows = rate_curves(q, points);
    if (g.as_json) {
        json arr = json::array();
        for (const BoundPoint& p : rows) {
            json row{{"rho", p.rho}, {"lower", p.lower}, {"kappa2", p.kappa2}};
            if (p.upper_trivial) row["upper_trivial"] = *p.upper_trivial;
            if (p.upper_better) row["upper_better"] = *p.upper_better;
            arr.push_back(row);
        }
        emit(g, arr.dump(2) + "\n");
    } else {
        std::ostringstream csv;
        write_rate_curves_csv(csv, rows);
        emit(g, csv.str());
    }
    return kExitOk;
}

int cmd_bounds_check(const GlobalOpts& g, std::vector<int> qs) {
    (void)g;
    bool ok = true;
    auto report = [&ok](const std::string& name, bool pass, const std::string& detail) {
        std::cout << (pass ? "ok   " : "FAIL ") << name << "  " << detail << "\n";
        ok = ok && pass;
    };

    for (int q : qs) {
        double limit = 1.0 - 1.0 / (static_cast<double>(q) * q);
        double max_residual = 0.0;
        double min_gap = 1.0;
        for (int i = 1; i <= 1000; ++i) {
            double rho = limit * i / 1001.0;
            max_residual = std::max(max_residual, entropy_identity_residual(rho, q));
            min_gap = std::min(min_gap, entropy_gap(rho, q));
        }
        std::ostringstream d1;
        d1 << "q=" << q << " max residual " << max_residual;
        report("entropy-identity", max_residual < 1e-10, d1.str());
        double end0 = std::abs(entropy_gap(0.0, q));
        double end1 = std::abs(entropy_gap(limit, q));
        std::ostringstream d2;
        d2 << "q=" << q << " min interior gap " << min_gap << " endpoints " << end0 << " " << end1;
        report("entropy-gap-positivity", min_gap > 0.0 && end0 < 1e-12 && end1 < 1e-12, d2.str());
    }

    for (int q : qs) {
        if (q > 3) continue;  // exact volumes get slow and prove nothing new
        bool all = true;
        for (int t = 1; t <= 2; ++t) {
            double limit = 1.0 - std::pow(static_cast<double>(q), -t);
            for (int n = 5; n <= 30; ++n)
                for (int i = 0; i < 20; ++i)
                    all = all && ball_entropy_check(t, n, q, limit * i / 19.0);
        }
        std::ostringstream d;
        d << "q=" << q << " t=1,2 n=5..30 20-point grid";
        report("ball-entropy-bound", all, d.str());
    }
    return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_alpha(const GlobalOpts& g, bool exact, int n, int q, double rho, std::uint64_t m,
              std::uint64_t trials) {
    if (exact) {
        ExactFraction frac = alpha_exact(n, rho, m, q);
        json j{{"schema", 1},
               {"n", n},
               {"q", q},
               {"rho", rho},
               {"m", m},
               {"numerator", frac.numerator.str()},
               {"denominator", frac.denominator.str()},
               {"value", frac.value()}};
        emit(g, j.dump(2) + "\n");
    } else {
        AlphaEstimate est = sample_alpha(n, rho, m, q, trials, g.seed, g.threads);
        json j{{"schema", 1},
               {"n", est.n},
               {"q", est.q},
               {"rho", est.rho},
               {"m", est.m},
               {"trials", est.trials},
               {"hits", est.hits},
               {"estimate", est.estimate},
               {"ci95", est.ci95}};
        emit(g, j.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_janson(const GlobalOpts& g, const std::string& v1, const std::string& v2, int q, int r,
               double p, bool with_histogram) {
    Word row1 = Word::parse(v1, q);
    Word row2 = Word::parse(v2, q);
    MatrixWord target({row1, row2});
    JansonCertificate cert = janson_certificate(target, r, p, g.threads);
    json j{{"schema", 1},
           {"target", words_json(target.rows())},
           {"r", cert.r},
           {"p", cert.p},
           {"family_size", cert.family_size},
           {"bound", cert.bound},
           {"empty_family", cert.empty_family}};
    if (with_histogram) {
        json hist = json::object();
        for (auto [w, count] : cert.w_histogram) hist[std::to_string(w)] = count;
        j["w_histogram"] = hist;
    }
    emit(g, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_pool_solve(const GlobalOpts& g, int n, int q, int r, double budget) {
    SearchBudget sb;
    if (budget > 0) sb.max_nodes = budget;
    try {
        SearchResult res = min_code_size(n, 2, r, q, sb);
        if (!is_covering(res.witness, 2, r, g.threads).covering)
            throw std::logic_error("search produced a non-covering ticket set");
        if (!g.out_path.empty()) {
            res.witness.write_file(g.out_path);
            std::cout << "wrote " << res.m_min << " tickets to " << g.out_path << "\n";
        } else {
            std::ostringstream buf;
            res.witness.write(buf);
            std::cout << buf.str();
        }
        return kExitOk;
    } catch (const budget_error& e) {
        std::uint64_t lower = sphere_lower_bound(n, 2, r, q);
        Code greedy = greedy_cover(n, 2, r, q, g.seed);
        json j{{"schema", 1},
               {"n", n},
               {"q", q},
               {"r", r},
               {"error", "budget exceeded"},
               {"detail", e.what()},
               {"lower_bound", lower},
               {"greedy_size", greedy.size()}};
        std::cerr << j.dump(2) << "\n";
        return kExitBudget;
    }
}

int cmd_pool_verify(const GlobalOpts& g, const std::string& tickets_path, const std::string& match,
                    const std::string& rematch, int r) {
    Code tickets = Code::read_file(tickets_path);
    PoolInstance instance{tickets, Word::parse(match, tickets.q()), Word::parse(rematch, tickets.q()),
                          r};
    PoolResult res = pool_verify(instance);
    json j{{"schema", 1}, {"win", res.win}, {"no_tickets", res.no_tickets}};
    if (res.witness)
        j["witness"] = json::array({res.witness->first.str(), res.witness->second.str()});
    emit(g, j.dump(2) + "\n");
    return res.win ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covering-radius toolbox for q-ary block codes"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for all randomized operations");
    app.add_option("--threads", g.threads, "worker threads (0 = library default)");
    app.add_flag("--json", g.as_json, "JSON output where a choice exists");
    app.add_flag("--csv", g.as_csv, "CSV output where a choice exists");
    app.add_option("--out", g.out_path, "write output to this file instead of stdout");

    // radius
    auto* radius_cmd = app.add_subcommand("radius", "covering radius of a code file");
    std::string code_path;
    int radius_t = 1;
    radius_cmd->add_option("--code", code_path, "code file")->required();
    radius_cmd->add_option("--t", radius_t, "metric order t");

    // search
    auto* search_cmd = app.add_subcommand("search", "exact minimal covering-code size");
    int s_n = 0, s_t = 2, s_r = 0, s_q = 2;
    double s_budget = 0;
    search_cmd->add_option("--n", s_n, "code length")->required();
    search_cmd->add_option("--t", s_t, "metric order t");
    search_cmd->add_option("--r", s_r, "covering radius")->required();
    search_cmd->add_option("--q", s_q, "alphabet size");
    search_cmd->add_option("--budget", s_budget, "node budget override");

    // bounds curve / bounds check
    auto* bounds_cmd = app.add_subcommand("bounds", "rate bounds and analytic identity suites");
    bounds_cmd->require_subcommand(1);
    auto* curve_cmd = bounds_cmd->add_subcommand("curve", "rate-curve table");
    int b_q = 2, b_points = 101;
    curve_cmd->add_option("--q", b_q, "alphabet size");
    curve_cmd->add_option("--points", b_points, "grid points");
    auto* check_cmd = bounds_cmd->add_subcommand("check", "run the identity and bound suites");
    std::vector<int> check_qs;
    check_cmd->add_option("--q", check_qs, "alphabet sizes (default 2 3 4 5)");

    // alpha
    auto* alpha_cmd = app.add_subcommand("alpha", "fraction of covering codes");
    bool a_exact = false, a_sample = false;
    int a_n = 0, a_q = 2;
    double a_rho = 0;
    std::uint64_t a_m = 0, a_trials = 10000;
    alpha_cmd->add_flag("--exact", a_exact, "exact enumeration");
    alpha_cmd->add_flag("--sample", a_sample, "Monte Carlo estimate");
    alpha_cmd->add_option("--n", a_n, "code length")->required();
    alpha_cmd->add_option("--q", a_q, "alphabet size");
    alpha_cmd->add_option("--rho", a_rho, "normalized radius")->required();
    alpha_cmd->add_option("--m", a_m, "code size")->required();
    alpha_cmd->add_option("--trials", a_trials, "Monte Carlo trials");

    // janson
    auto* janson_cmd = app.add_subcommand("janson", "certified bound on the uncovered probability");
    std::string j_v1, j_v2;
    int j_q = 2, j_r = 0;
    double j_p = 0.5;
    bool j_hist = false;
    janson_cmd->add_option("--v1", j_v1, "first target row")->required();
    janson_cmd->add_option("--v2", j_v2, "second target row")->required();
    janson_cmd->add_option("--q", j_q, "alphabet size");
    janson_cmd->add_option("--r", j_r, "radius")->required();
    janson_cmd->add_option("--p", j_p, "inclusion probability")->required();
    janson_cmd->add_flag("--histogram", j_hist, "include the w histogram");

    // pool solve / pool verify
    auto* pool_cmd = app.add_subcommand("pool", "two-round football-pool game");
    pool_cmd->require_subcommand(1);
    auto* solve_cmd = pool_cmd->add_subcommand("solve", "minimal ticket set");
    int p_n = 0, p_q = 2, p_r = 0;
    double p_budget = 0;
    solve_cmd->add_option("--n", p_n, "games per round")->required();
    solve_cmd->add_option("--q", p_q, "outcomes per game");
    solve_cmd->add_option("--r", p_r, "games allowed wrong")->required();
    solve_cmd->add_option("--budget", p_budget, "node budget override");
    auto* verify_cmd = pool_cmd->add_subcommand("verify", "check a ticket set against outcomes");
    std::string v_tickets, v_match, v_rematch;
    int v_r = 0;
    verify_cmd->add_option("--tickets", v_tickets, "ticket code file")->required();
    verify_cmd->add_option("--match", v_match, "match-round outcomes")->required();
    verify_cmd->add_option("--rematch", v_rematch, "rematch-round outcomes")->required();
    verify_cmd->add_option("--r", v_r, "games allowed wrong")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints help itself for -h; anything else is a usage error
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (radius_cmd->parsed()) return cmd_radius(g, code_path, radius_t);
        if (search_cmd->parsed()) return cmd_search(g, s_n, s_t, s_r, s_q, s_budget);
        if (bounds_cmd->parsed()) {
            if (curve_cmd->parsed()) return cmd_bounds_curve(g, b_q, b_points);
            if (check_cmd->parsed()) {
                if (check_qs.empty()) check_qs = {2, 3, 4, 5};
                return cmd_bounds_check(g, check_qs);
            }
        }
        if (alpha_cmd->parsed()) {
            if (a_exact == a_sample) {
                std::cerr << "alpha: pass exactly one of --exact / --sample\n";
                return kExitUsage;
            }
            return cmd_alpha(g, a_exact, a_n, a_q, a_rho, a_m, a_trials);
        }
        if (janson_cmd->parsed()) return cmd_janson(g, j_v1, j_v2, j_q, j_r, j_p, j_hist);
        if (pool_cmd->parsed()) {
            if (solve_cmd->parsed()) return cmd_pool_solve(g, p_n, p_q, p_r, p_budget);
            if (verify_cmd->parsed())
                return cmd_pool_verify(g, v_tickets, v_match, v_rematch, v_r);
        }
        std::cerr << "no command\n";
        return kExitUsage;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
