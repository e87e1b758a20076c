#include "kbal/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "kbal/bethe.hpp"
#include "kbal/errors.hpp"
#include "kbal/qdiff.hpp"
#include "kbal/quot.hpp"
#include "kbal/series.hpp"

namespace kbal {

namespace {

struct Session {
    int r = 0;
    int n = 0;
    int dmax = 0;
    int trunc = 0;
    std::string point;
    std::string dvec;
    bool zero_supported = false;
    bool json = false;
    bool force_expansion = false;
    std::uint64_t seed = 0;
    int jobs = 0;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(flag + " expects comma-separated integers, got '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError(flag + " must not be empty");
    return out;
}

GridFilter make_filter(const Session& s) {
    GridFilter f;
    if (!s.point.empty()) {
        Subset p = parse_int_list(s.point, "--point");
        for (int& x : p) --x;
        f.point = p;
    }
    if (!s.dvec.empty()) f.dvec = parse_int_list(s.dvec, "--dvec");
    return f;
}

int resolve_session_jobs(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("KBALANCE_JOBS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        throw UsageError("KBALANCE_JOBS must be a positive integer");
    }
    return 0;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Json grid_params(const Session& s, const GridFilter& f) {
    Json p{{"r", s.r}, {"n", s.n}, {"dmax", s.dmax}};
    if (f.point) p["point"] = subset_label(*f.point);
    if (f.dvec) p["dvec"] = vector_label(*f.dvec);
    return p;
}

std::string grid_id(const GrassFixedPoint& g, const std::vector<int>& dv) {
    return "I=" + subset_label(g.subset) + " d=" + vector_label(dv);
}

Report run_enumerate(const Session& s) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.command = "enumerate";
    rep.params = Json{{"r", s.r}, {"n", s.n}, {"d", s.dmax}, {"zero_supported", s.zero_supported}};
    if (s.dmax < 0) throw UsageError("--d must be nonnegative");
    const auto points = enumerate_fixed_points(s.r, s.n, s.dmax, s.zero_supported);
    const int expected_dim = s.n * s.dmax + s.r * (s.n - s.r);
    for (const auto& p : points) {
        std::vector<int> delta = p.delta;
        for (int& x : delta) ++x;
        WeightCharacter w = tangent_weights(p);
        rep.data.push_back(Json{{"delta", delta}, {"a", p.a}, {"b", p.b}, {"degree", p.degree()},
                                {"supported_at_zero", p.supported_at_zero()}, {"dimension", w.dimension()},
                                {"tangent", to_json(w)}});
        rep.cases.push_back(flag_case("dim delta=" + subset_label(p.delta) + " a=" + vector_label(p.a) + " b=" + vector_label(p.b),
                                      w.dimension() == expected_dim && w.is_nonnegative()));
    }
    if (s.zero_supported) {
        // C(n, r) * C(d + r - 1, r - 1)
        mpz_class expected, stars;
        mpz_bin_uiui(expected.get_mpz_t(), s.n, s.r);
        mpz_bin_uiui(stars.get_mpz_t(), s.dmax + s.r - 1, s.r - 1);
        expected *= stars;
        rep.cases.push_back(flag_case("count", mpz_class(static_cast<long>(points.size())) == expected,
                                      Json{{"count", points.size()}, {"expected", expected.get_str()}}));
    } else {
        rep.cases.push_back(flag_case("count", true, Json{{"count", points.size()}}));
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

Report run_icoeff(const Session& s, const EqualityOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    GridFilter f = make_filter(s);
    Report rep;
    rep.command = "icoeff";
    rep.params = grid_params(s, f);
    for (auto& [g, dv] : coefficient_grid(s.r, s.n, s.dmax, f)) {
        FactoredRational c = i_coefficient_direct(g, dv);
        rep.data.push_back(Json{{"point", subset_label(g.subset)}, {"dvec", dv}, {"coefficient", to_json(c)},
                                {"expanded", to_json(c.expand())}});
        bool shaped = true;
        try {
            balance(c);
        } catch (const DomainError&) {
            shaped = false;
        }
        rep.cases.push_back(flag_case("balanceable " + grid_id(g, dv), shaped));
    }
    if (!f.dvec) {
        for (const auto& g : grass_fixed_points(s.r, s.n)) {
            if (f.point && g.subset != *f.point) continue;
            for (int d = 0; d <= s.dmax; ++d)
                rep.cases.push_back(compare_sum_case("geometric I=" + subset_label(g.subset) + " d=" + std::to_string(d),
                                                     i_coefficient_total(g, d), j_coefficient_geometric(g, d), opts));
        }
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

Report run_vertex(const Session& s, const EqualityOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    GridFilter f = make_filter(s);
    Report rep;
    rep.command = "vertex";
    rep.params = grid_params(s, f);
    rep.notes = Json{{"normalization", "divided by (-q^(1/2) hbar^(-1/2))^(n d)"}};
    for (auto& [g, dv] : coefficient_grid(s.r, s.n, s.dmax, f)) {
        FactoredRational v = vertex_coefficient_product(g, dv, true);
        QuasimapFixedPoint qp{g.n, g.r, g.subset, dv};
        rep.data.push_back(Json{{"point", subset_label(g.subset)}, {"dvec", dv}, {"coefficient", to_json(v)},
                                {"expanded", to_json(v.expand())}});
        rep.cases.push_back(compare_case("localization " + grid_id(g, dv), v, vertex_coefficient_localization(qp, true), opts));
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

Report run_balance(const Session& s, const EqualityOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    GridFilter f = make_filter(s);
    Report rep;
    rep.command = "balance";
    rep.params = grid_params(s, f);
    rep.notes = Json{{"specialization", "y -> -hbar/q"}};
    const Substitution to_vertex = vertex_specialization();
    for (auto& [g, dv] : coefficient_grid(s.r, s.n, s.dmax, f)) {
        FactoredRational b = balance(i_coefficient_direct(g, dv));
        FactoredRational v = b.substitute(to_vertex);
        rep.data.push_back(Json{{"point", subset_label(g.subset)}, {"dvec", dv}, {"balanced", to_json(b)}, {"specialized", to_json(v)}});
        rep.cases.push_back(compare_case("vertex " + grid_id(g, dv), v, vertex_coefficient_product(g, dv, true), opts));
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

Json manifest_json() {
    return Json{
        {"schema", kReportSchema},
        {"command", "manifest"},
        {"conventions",
         Json{{"exponents", "doubled integers; half powers allowed only where a square root is named"},
              {"indices", "1-based in all output"},
              {"enumeration_order", "subsets lexicographic, then degree vectors lexicographic descending"},
              {"commutation", "Q^a S^b = q^(-a*b) S^b Q^a, S = q^(Q d/dQ)"},
              {"shift_action", "(c S^b Q^a f)[d] = c q^(b*d) f[d-a]"},
              {"vertex_normalization", "divide by (-q^(1/2) hbar^(-1/2))^(n d)"},
              {"vertex_specialization", "y -> -hbar/q"},
              {"compatibility_series", "prod_i (y q a_i)_d / (q a_i)_d paired with prod (1 - y a_i S)"},
              {"right_operator",
               "prod_{j!=i}(1 + y lambda q P_j/P_i S_j/S_i) prod_a (1 + y P_i S_i/t_a) Q_i prod_{j!=i}(1 - lambda q P_i/P_j S_i/S_j)"},
              {"bethe", Json{{"k", "hbar"}, {"s", 1}}},
              {"degree_zero", "residuals reduced modulo prod_a (1 - P/t_a)"},
              {"equality", "exact expansion; the seeded modular evaluation only short-circuits inequality"}}},
        {"exit_codes", Json{{"pass", kExitPass}, {"failure", kExitFail}, {"usage", kExitUsage}}}};
}

// The ranges of the full suite.
Report run_all(const EqualityOptions& opts, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.command = "verify-all";
    const std::vector<std::pair<int, int>> shapes{{1, 2}, {1, 3}, {2, 3}, {2, 4}};
    for (auto [r, n] : shapes) {
        const int dmax = (r == 1 && n == 2) ? 5 : 3;
        const std::string tag = "(" + std::to_string(r) + "," + std::to_string(n) + ") ";
        rep.append(verify_main_theorem(r, n, dmax, opts, jobs), "main " + tag);
        rep.append(verify_cross_paths(r, n, dmax, opts, jobs), "cross " + tag);
        rep.append(verify_degenerations(r, n, dmax, opts, jobs), "degen " + tag);
    }
    for (int n : {2, 3}) rep.append(verify_compatibility(n, 5, opts), "ops n=" + std::to_string(n) + " ");
    rep.append(verify_abelian_identities(2, 3, 3, opts, jobs), "appendix (2,3) ");
    for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}})
        rep.append(bethe_correspondence(r, n, opts), "bethe (" + std::to_string(r) + "," + std::to_string(n) + ") ");
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

void emit(const Report& rep, const Session& s, std::ostream& out) {
    if (s.json) {
        out << rep.to_json().dump(2) << "\n";
        return;
    }
    for (const auto& d : rep.data) out << d.dump() << "\n";
    out << rep.to_text();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Session s;
    CLI::App app{"Exact verification of balanced K-theoretic series and q-difference operators", "kbalance"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", s.json, "JSON output instead of a text table");
        sub->add_option("--seed", s.seed, "Seed of the modular evaluation fast path");
        sub->add_option("--jobs", s.jobs, "Worker threads (default: KBALANCE_JOBS or hardware)")->check(CLI::NonNegativeNumber);
        sub->add_flag("--force-expansion", s.force_expansion, "Skip the modular fast path");
    };
    auto shape = [&](CLI::App* sub) {
        sub->add_option("--r", s.r, "Rank")->required()->check(CLI::PositiveNumber);
        sub->add_option("--n", s.n, "Number of torus weights")->required()->check(CLI::PositiveNumber);
    };
    auto grid = [&](CLI::App* sub) {
        shape(sub);
        sub->add_option("--dmax,--d", s.dmax, "Largest total degree")->check(CLI::NonNegativeNumber);
        sub->add_option("--point", s.point, "Fixed point as 1-based indices, e.g. 1,3");
        sub->add_option("--dvec", s.dvec, "Single degree vector, e.g. 2,0");
    };

    auto* enumerate = app.add_subcommand("enumerate", "Quot-scheme fixed points with tangent weights");
    shape(enumerate);
    enumerate->add_option("--d", s.dmax, "Degree")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--zero-supported", s.zero_supported, "Only points supported at zero");
    auto* icoeff = app.add_subcommand("icoeff", "Localized I-function coefficients");
    auto* vertex = app.add_subcommand("vertex", "Normalized vertex-function coefficients");
    auto* bal = app.add_subcommand("balance", "Balanced I coefficients and their vertex specialization");
    auto* vmain = app.add_subcommand("verify-main", "Balanced I coefficients equal vertex coefficients");
    for (auto* sub : {icoeff, vertex, bal, vmain}) grid(sub);
    auto* cross = app.add_subcommand("verify-cross", "Independent computations of I and vertex coefficients agree");
    auto* degen = app.add_subcommand("verify-degenerations", "hbar -> 0 and y -> 0 limits");
    for (auto* sub : {cross, degen}) {
        shape(sub);
        sub->add_option("--dmax,--d", s.dmax, "Largest total degree")->required()->check(CLI::NonNegativeNumber);
    }
    auto* ops = app.add_subcommand("verify-ops", "Projective-space operator and balanced compatibility");
    ops->add_option("--n", s.n, "Number of torus weights")->required()->check(CLI::PositiveNumber);
    ops->add_option("--trunc", s.trunc, "Truncation degree")->required()->check(CLI::NonNegativeNumber);
    auto* appb = app.add_subcommand("verify-appendix-b", "Abelian balanced operators annihilate the balanced series");
    shape(appb);
    appb->add_option("--trunc", s.trunc, "Truncation degree")->required()->check(CLI::NonNegativeNumber);
    auto* bethe = app.add_subcommand("verify-bethe", "Specialized operators give the Bethe equations");
    shape(bethe);
    auto* all = app.add_subcommand("verify-all", "Full suite");
    auto* manifest = app.add_subcommand("manifest", "Adopted conventions");
    for (auto* sub : {enumerate, icoeff, vertex, bal, vmain, cross, degen, ops, appb, bethe, all}) common(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "kbalance: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (manifest->parsed()) {
            out << manifest_json().dump(2) << "\n";
            return kExitPass;
        }
        EqualityOptions opts;
        opts.seed = s.seed;
        opts.force_expansion = s.force_expansion;
        const int jobs = resolve_session_jobs(s.jobs);
        Report rep;
        if (enumerate->parsed()) rep = run_enumerate(s);
        else if (icoeff->parsed()) rep = run_icoeff(s, opts);
        else if (vertex->parsed()) rep = run_vertex(s, opts);
        else if (bal->parsed()) rep = run_balance(s, opts);
        else if (vmain->parsed()) rep = verify_main_theorem(s.r, s.n, s.dmax, opts, jobs, make_filter(s));
        else if (cross->parsed()) rep = verify_cross_paths(s.r, s.n, s.dmax, opts, jobs);
        else if (degen->parsed()) rep = verify_degenerations(s.r, s.n, s.dmax, opts, jobs);
        else if (ops->parsed()) rep = verify_compatibility(s.n, s.trunc, opts);
        else if (appb->parsed()) rep = verify_abelian_identities(s.r, s.n, s.trunc, opts, jobs);
        else if (bethe->parsed()) rep = bethe_correspondence(s.r, s.n, opts);
        else rep = run_all(opts, jobs);
        emit(rep, s, out);
        return rep.all_pass() ? kExitPass : kExitFail;
    } catch (const UsageError& e) {
        err << "kbalance: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "kbalance: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace kbal
