#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mudom/json_io.hpp"
#include "mudom/selftest.hpp"

using namespace mudom;

namespace {

// exit codes: 0 Inside, 1 Outside, 2 Boundary/Undetermined, >= 10 errors
constexpr int kExitInside = 0;
constexpr int kExitOutside = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitUsage = 10;
constexpr int kExitNumeric = 11;
constexpr int kExitBudget = 12;

struct Options {
    std::vector<int> blocks;
    std::string point_text;
    std::string matrix_text;
    double tol = 1e-6;
    int grid = 64;
    int resolution = 16;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string out;
    int k = 1;
    int count = 1;
    double norm_cap = 0.95;
    std::string mode = "section";
    std::string direction_text;
    std::string basepoint_text;
    double window = 2.0;
    long long budget = 100000;
    std::string csv_out;
};

void emit(const json& report, const std::string& out) {
    if (out.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream os(out);
        if (!os) throw std::invalid_argument("cannot open output file: " + out);
        os << report.dump(2) << "\n";
    }
}

int status_exit(Membership m) {
    switch (m) {
        case Membership::Inside: return kExitInside;
        case Membership::Outside: return kExitOutside;
        default: return kExitUndetermined;
    }
}

CPoint parse_point(const std::string& text) {
    return json_to_point(json::parse(text));
}

CMatrix parse_matrix(const std::string& text) {
    return json_to_matrix(json::parse(text));
}

OracleSettings settings_from(const Options& o) {
    OracleSettings s;
    s.resolution = o.resolution;
    s.torus_grid = o.grid;
    return s;
}

json echo_inputs(const Options& o) {
    json j;
    if (!o.blocks.empty()) j["blocks"] = o.blocks;
    j["tol"] = o.tol;
    j["grid"] = o.grid;
    j["resolution"] = o.resolution;
    j["seed"] = o.seed;
    j["threads"] = o.threads;
    return j;
}

int cmd_table(const Options& o) {
    auto t = build_table(o.blocks);
    emit(report_envelope("table", echo_inputs(o), table_to_json(t)), o.out);
    return 0;
}

int cmd_member(const Options& o, bool closure) {
    auto h = make_handle(o.blocks, settings_from(o));
    CPoint x = parse_point(o.point_text);
    auto r = closure ? member_closure(h, x) : member(h, x);
    emit(report_envelope(closure ? "closure" : "member", echo_inputs(o),
                         membership_to_json(r)),
         o.out);
    return status_exit(r.status);
}

int cmd_mink(const Options& o) {
    auto h = make_handle(o.blocks, settings_from(o));
    CPoint x = parse_point(o.point_text);
    auto g = minkowski(h, x, o.tol);
    emit(report_envelope("mink", echo_inputs(o),
                         json{{"value", g.value}, {"widened", g.widened}}),
         o.out);
    return 0;
}

int cmd_mu(const Options& o) {
    auto t = build_table(o.blocks);
    CMatrix A = parse_matrix(o.matrix_text);
    double lower = mu_lower_torus(t, A, o.grid);
    double upper = operator_norm(A);
    auto iv = mu_bisection(t, A, o.tol, o.resolution);
    json res;
    res["lower_torus"] = lower;
    res["upper_norm"] = upper;
    res["certified"] = mu_interval_to_json(iv);
    emit(report_envelope("mu", echo_inputs(o), res), o.out);
    return 0;
}

int cmd_pi(const Options& o) {
    auto t = build_table(o.blocks);
    CMatrix A = parse_matrix(o.matrix_text);
    emit(report_envelope("pi", echo_inputs(o), point_to_json(pi_map(t, A))),
         o.out);
    return 0;
}

int cmd_embed(const Options& o) {
    auto h = make_handle(o.blocks, settings_from(o));
    CPoint x = parse_point(o.point_text);
    auto e = embed_symmetrized(h, x);
    emit(report_envelope("embed", echo_inputs(o), embedding_to_json(e)), o.out);
    return 0;
}

int cmd_sample(const Options& o) {
    auto h = make_handle(o.blocks, settings_from(o));
    json pts = json::array();
    for (int i = 0; i < o.count; ++i)
        pts.push_back(point_to_json(
            sample_member(h, o.seed + (std::uint64_t)i, o.norm_cap)));
    emit(report_envelope("sample", echo_inputs(o), pts), o.out);
    return 0;
}

int cmd_separate(const Options& o) {
    auto h = make_handle(o.blocks, settings_from(o));
    CPoint x0 = parse_point(o.point_text);
    auto F = separating_hyperplane(h, x0);
    auto rep = verify_separator(h, F, o.count, o.seed);
    json res;
    res["functional"] = functional_to_json(F);
    res["value_at_x0"] = complex_to_json(F(x0));
    res["verification"] = {{"samples", rep.samples},
                           {"min_modulus", rep.min_modulus},
                           {"pass", rep.pass}};
    emit(report_envelope("separate", echo_inputs(o), res), o.out);
    return rep.pass ? 0 : kExitUndetermined;
}

int cmd_penta(const Options& o, bool mink) {
    CPoint p = parse_point(o.point_text);
    if (p.size() != 3)
        throw std::invalid_argument("penta points are [a, s, p]");
    PentaPoint pt{p[0], p[1], p[2]};
    if (mink) {
        auto g = penta_minkowski(pt, o.k, o.tol);
        emit(report_envelope("penta", echo_inputs(o),
                             json{{"minkowski", g.value}, {"k", o.k}}),
             o.out);
        return 0;
    }
    auto r = member_penta(pt);
    emit(report_envelope("penta", echo_inputs(o), membership_to_json(r)), o.out);
    return status_exit(r.status);
}

int cmd_probe(const Options& o) {
    auto h = make_handle(o.blocks, settings_from(o));
    json res;
    if (o.mode == "starlike") {
        auto w = starlike_witness_search(h, o.budget, o.seed);
        res["found"] = w.has_value();
        if (w) {
            res["x"] = point_to_json(w->x);
            res["t"] = w->t;
        }
    } else if (o.mode == "section") {
        CPoint base = o.basepoint_text.empty()
                          ? CPoint((size_t)h.table.N, Complex{0, 0})
                          : parse_point(o.basepoint_text);
        CPoint dir;
        if (o.direction_text.empty()) {
            dir.assign((size_t)h.table.N, Complex{0, 0});
            dir[0] = Complex{1, 0};
        } else {
            dir = parse_point(o.direction_text);
        }
        Window win{-o.window, o.window, -o.window, o.window};
        int raster_res = o.resolution > 4 ? o.resolution : 64;
        auto map = line_section_scan(h, base, dir, win, raster_res);
        res = section_to_json(map);
        if (!o.csv_out.empty()) {
            std::ofstream os(o.csv_out);
            if (!os)
                throw std::invalid_argument("cannot open CSV file: " + o.csv_out);
            write_section_csv(map, os);
        }
    } else if (o.mode == "separator") {
        CPoint x0 = parse_point(o.point_text);
        auto F = separating_hyperplane(h, x0);
        auto rep = verify_separator(h, F, o.count, o.seed);
        res = {{"min_modulus", rep.min_modulus},
               {"samples", rep.samples},
               {"pass", rep.pass}};
    } else if (o.mode == "psh") {
        auto A = sample_matrix(h.table.n, o.seed, 0.7);
        auto B = sample_matrix(h.table.n, o.seed + 1, 1.0);
        auto rep = psh_circle_test(h.table, A, B, 0.1, 64, o.grid, o.tol);
        res["status"] = rep.status == PshStatus::Pass   ? "Pass"
                        : rep.status == PshStatus::Skip ? "Skip"
                                                        : "Fail";
        res["deficit"] = rep.deficit;
    } else {
        throw std::invalid_argument("probe mode must be one of "
                                    "starlike|section|separator|psh");
    }
    emit(report_envelope("probe", echo_inputs(o), res), o.out);
    return 0;
}

int cmd_selftest(const Options& o) {
    auto sum = run_selftest(o.seed);
    json suites = json::array();
    for (const auto& s : sum.suites) {
        suites.push_back(
            {{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}});
        std::cerr << s.name << ": " << s.passed << " passed, " << s.failed
                  << " failed\n";
    }
    emit(report_envelope("selftest", echo_inputs(o),
                         json{{"ok", sum.ok}, {"suites", suites}}),
         o.out);
    return sum.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mu-synthesis domain computations"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c, bool needs_blocks) {
        auto* b = c->add_option("--blocks", o.blocks,
                                "block sizes r1,...,rs")
                      ->delimiter(',');
        if (needs_blocks) b->required();
        c->add_option("--tol", o.tol, "tolerance");
        c->add_option("--grid", o.grid, "torus grid per angle");
        c->add_option("--resolution", o.resolution, "grid certification base");
        c->add_option("--seed", o.seed, "root RNG seed");
        c->add_option("--threads", o.threads, "worker threads");
        c->add_option("--out", o.out, "write the JSON report here");
    };

    auto* table = app.add_subcommand("table", "ordered exponent table");
    add_common(table, true);

    auto* member_c = app.add_subcommand("member", "membership oracle");
    add_common(member_c, true);
    member_c->add_option("--point", o.point_text, "point JSON [[re,im],...]")
        ->required();

    auto* closure_c = app.add_subcommand("closure", "closure membership");
    add_common(closure_c, true);
    closure_c->add_option("--point", o.point_text, "point JSON")->required();

    auto* mink = app.add_subcommand("mink", "quasibalanced Minkowski functional");
    add_common(mink, true);
    mink->add_option("--point", o.point_text, "point JSON")->required();

    auto* mu = app.add_subcommand("mu", "structured singular value bounds");
    add_common(mu, true);
    mu->add_option("--matrix", o.matrix_text, "matrix JSON rows of [re,im]")
        ->required();

    auto* pi = app.add_subcommand("pi", "minor-sum map");
    add_common(pi, true);
    pi->add_option("--matrix", o.matrix_text, "matrix JSON")->required();

    auto* embed = app.add_subcommand("embed", "embedding into G_M");
    add_common(embed, true);
    embed->add_option("--point", o.point_text, "point JSON")->required();

    auto* sample = app.add_subcommand("sample", "random members via pi");
    add_common(sample, true);
    sample->add_option("--count", o.count, "number of samples");
    sample->add_option("--norm-cap", o.norm_cap, "operator norm cap");

    auto* separate = app.add_subcommand("separate", "separating hyperplane");
    add_common(separate, true);
    separate->add_option("--point", o.point_text, "exterior point JSON")
        ->required();
    separate->add_option("--count", o.count, "verification sample count");

    auto* penta = app.add_subcommand("penta", "pentablock oracle");
    add_common(penta, false);
    penta->add_option("--point", o.point_text, "[a, s, p] JSON")->required();
    bool penta_mink = false;
    penta->add_flag("--mink", penta_mink, "compute the (k,1,2) gauge instead");
    penta->add_option("-k", o.k, "gauge weight k >= 1");

    auto* probe = app.add_subcommand("probe", "geometric probes");
    add_common(probe, true);
    probe->add_option("--mode", o.mode, "starlike|section|separator|psh");
    probe->add_option("--point", o.point_text, "exterior point (separator)");
    probe->add_option("--basepoint", o.basepoint_text, "line basepoint JSON");
    probe->add_option("--direction", o.direction_text, "line direction JSON");
    probe->add_option("--window", o.window, "half-width of the lambda window");
    probe->add_option("--budget", o.budget, "membership-call budget");
    probe->add_option("--count", o.count, "verification sample count");
    probe->add_option("--csv", o.csv_out, "write the raster CSV here");

    auto* selftest = app.add_subcommand("selftest", "invariant suites");
    add_common(selftest, false);

    sample->ignore_case();
    o.count = 1;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*table) return cmd_table(o);
        if (*member_c) return cmd_member(o, false);
        if (*closure_c) return cmd_member(o, true);
        if (*mink) return cmd_mink(o);
        if (*mu) return cmd_mu(o);
        if (*pi) return cmd_pi(o);
        if (*embed) return cmd_embed(o);
        if (*sample) return cmd_sample(o);
        if (*separate) return cmd_separate(o);
        if (*penta) return cmd_penta(o, penta_mink);
        if (*probe) return cmd_probe(o);
        if (*selftest) return cmd_selftest(o);
    } catch (const budget_error& e) {
        std::cerr << json{{"error", "budget"}, {"message", e.what()}}.dump()
                  << "\n";
        return kExitBudget;
    } catch (const numeric_error& e) {
        std::cerr << json{{"error", "numeric"}, {"message", e.what()}}.dump()
                  << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump()
                  << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
