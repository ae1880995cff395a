#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"

#include "affgr/bruhat.hpp"
#include "affgr/classical.hpp"
#include "affgr/loci.hpp"
#include "affgr/oracle.hpp"
#include "affgr/patterns.hpp"
#include "affgr/reflections.hpp"
#include "affgr/serialize.hpp"
#include "affgr/tangent.hpp"
#include "affgr/verify.hpp"

namespace affgr::cli {

namespace {

std::vector<int> parse_csv(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw param_error("empty entry in list: " + csv);
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw param_error("empty list");
    return out;
}

// l-csv is canonical; tuples are accepted and validated.  When n = d the two
// encodings have the same size; lengths are recognized by their sum d (a valid
// I-tuple of d >= 2 entries always sums past d).
Point parse_point(const Context& ctx, const std::string& csv) {
    std::vector<int> v = parse_csv(csv);
    const int size = static_cast<int>(v.size());
    const int sum = std::accumulate(v.begin(), v.end(), 0);
    if (size == ctx.n && (ctx.n != ctx.d || sum == ctx.d)) return Point(ctx, std::move(v));
    if (size == ctx.d) return point_from_tuple(ctx, v);
    return Point(ctx, std::move(v));  // report the length-vector diagnostics
}

struct Output {
    bool json_mode = false;
    std::string out_file;
    std::ostream* out = nullptr;

    void emit(const json& doc, const std::string& human) const {
        std::string text = json_mode ? doc.dump(2) : human;
        *out << text << '\n';
        if (!out_file.empty()) {
            std::ofstream f(out_file);
            f << text << '\n';
        }
    }
};

json make_doc(const Context& ctx, json query, json result) {
    return json{{"schema_version", 1},
                {"context", to_json(ctx)},
                {"query", std::move(query)},
                {"result", std::move(result)}};
}

std::string human_point(const Point& p) {
    Representations r = representations(p);
    std::ostringstream os;
    os << "lengths " << to_string(ITuple(p.lengths())) << '\n';
    os << "tuple   " << to_string(r.i_tuple) << '\n';
    os << "c       " << to_string(r.c_vector) << '\n';
    os << "L       " << to_string(r.l_vector) << '\n';
    os << "heads   " << to_string(r.heads);
    return os.str();
}

std::set<PatternKind> parse_kinds(const std::string& csv) {
    if (csv.empty())
        return {PatternKind::Imaginary, PatternKind::RealFirst, PatternKind::RealSecond,
                PatternKind::ExcFirst, PatternKind::ExcSecond};
    std::set<PatternKind> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "imaginary") out.insert(PatternKind::Imaginary);
        else if (item == "real-first") out.insert(PatternKind::RealFirst);
        else if (item == "real-second") out.insert(PatternKind::RealSecond);
        else if (item == "exc-first") out.insert(PatternKind::ExcFirst);
        else if (item == "exc-second") out.insert(PatternKind::ExcSecond);
        else throw param_error("unknown pattern kind: " + item);
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics of affine Schubert varieties in type A"};
    app.require_subcommand(1);

    struct Common {
        int n = 0, s = 1;
        std::string x, w, l, tuple, kinds, suite, cache;
        bool diagram = false, annotated = false, json_mode = false;
        std::string out_file;
        int n_max = 4, s_max = 1, jobs = 0, kappa_c = -1;
        long sample = 0;
    } o;

    auto add_common = [&](CLI::App* sub, bool needs_ctx = true) {
        if (needs_ctx) {
            sub->add_option("--n", o.n, "matrix size n (>= 2)")->required();
            sub->add_option("--s", o.s, "level s (>= 1)");
        }
        sub->add_flag("--json", o.json_mode, "emit the documented JSON schema");
        sub->add_option("--out", o.out_file, "also write the report to FILE");
    };

    CLI::App* c_point = app.add_subcommand("point", "inspect a point of I^u");
    add_common(c_point);
    c_point->add_option("--l", o.l, "length vector, comma separated");
    c_point->add_option("--tuple", o.tuple, "I-tuple, comma separated");
    c_point->add_flag("--diagram", o.diagram, "render the string diagram");
    c_point->add_flag("--annotated", o.annotated, "annotate diagram rows with h_i, l_i");

    CLI::App* c_leq = app.add_subcommand("leq", "Bruhat-Chevalley comparison x <= w");
    CLI::App* c_dim = app.add_subcommand("dim", "dim X(w)");
    CLI::App* c_codim = app.add_subcommand("codim", "codim of X(x) in X(w)");
    CLI::App* c_curves = app.add_subcommand("curves", "the curve set E(X(w), x)");
    CLI::App* c_tangent = app.add_subcommand("tangent", "tangent-space report at x in X(w)");
    CLI::App* c_patterns = app.add_subcommand("patterns", "patterns of L(w) with certificates");
    CLI::App* c_locus = app.add_subcommand("locus", "singular locus of X(w)");
    CLI::App* c_classify = app.add_subcommand("classify", "classify x in X(w)");
    for (CLI::App* sub : {c_leq, c_codim, c_curves, c_tangent, c_classify}) {
        add_common(sub);
        sub->add_option("--x", o.x, "point x (l-csv, or an I-tuple)")->required();
        sub->add_option("--w", o.w, "point w (l-csv, or an I-tuple)")->required();
    }
    for (CLI::App* sub : {c_dim, c_patterns, c_locus}) {
        add_common(sub);
        sub->add_option("--w", o.w, "point w (l-csv, or an I-tuple)")->required();
    }
    c_patterns->add_option("--kinds", o.kinds,
                           "comma list: imaginary,real-first,real-second,exc-first,exc-second");

    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", o.suite, "one of: " + [] {
                            std::string s;
                            for (const auto& n : verify::suite_names()) {
                                if (!s.empty()) s += ", ";
                                s += n;
                            }
                            return s;
                        }())
        ->required();
    c_verify->add_option("--n-max", o.n_max, "largest n to sweep (from 2)");
    c_verify->add_option("--s-max", o.s_max, "largest s to sweep (from 1)");
    c_verify->add_option("--jobs", o.jobs, "parallel workers (default: hardware)");
    c_verify->add_option("--cache", o.cache, "cache directory for interval indexes");
    c_verify->add_option("--sample", o.sample, "cap on sampled pairs (tangent-matrix)");
    c_verify->add_flag("--json", o.json_mode, "emit the documented JSON schema");
    c_verify->add_option("--out", o.out_file, "also write the report to FILE");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    Output output{o.json_mode, o.out_file, &out};
    try {
        if (c_point->parsed()) {
            Context ctx = make_context(o.n, o.s);
            Point p = !o.l.empty()      ? Point(ctx, parse_csv(o.l))
                      : !o.tuple.empty() ? point_from_tuple(ctx, parse_csv(o.tuple))
                                         : throw param_error("point requires --l or --tuple");
            Representations r = representations(p);
            json res{{"lengths", p.lengths()}, {"i_tuple", r.i_tuple}, {"c_vector", r.c_vector},
                     {"l_vector", r.l_vector}, {"heads", r.heads}};
            std::string human = human_point(p);
            if (o.diagram) {
                std::string dia = render_string_diagram(p, o.annotated);
                res["diagram"] = dia;
                human += "\n" + dia;
            }
            output.emit(make_doc(ctx, json{{"op", "point"}}, res), human);
            return 0;
        }
        if (c_leq->parsed() || c_dim->parsed() || c_codim->parsed() || c_curves->parsed() ||
            c_tangent->parsed() || c_classify->parsed() || c_patterns->parsed() ||
            c_locus->parsed()) {
            Context ctx = make_context(o.n, o.s);
            Point w = parse_point(ctx, o.w);
            if (c_dim->parsed()) {
                int dim = dim_schubert(w);
                output.emit(make_doc(ctx, json{{"op", "dim"}, {"w", o.w}}, json{{"dim", dim}}),
                            std::to_string(dim));
                return 0;
            }
            if (c_patterns->parsed()) {
                json arr = json::array();
                std::ostringstream human;
                for (const Pattern& p : find_patterns(w, parse_kinds(o.kinds))) {
                    json entry{{"pattern", to_json(p)}};
                    json certs = json::array();
                    const int npts = static_cast<int>(apply_pattern(p).size());
                    for (int which = 0; which < npts; ++which) {
                        try {
                            certs.push_back(to_json(pattern_certificate(p, which)));
                        } catch (const precondition_error&) {
                            certs.push_back(json{{"kind", "unavailable"}});
                        }
                    }
                    entry["certificates"] = certs;
                    arr.push_back(entry);
                    human << to_string(p.kind) << " at (";
                    for (size_t t = 0; t < p.indices.size(); ++t)
                        human << (t ? "," : "") << p.indices[t];
                    human << ")\n";
                }
                output.emit(make_doc(ctx, json{{"op", "patterns"}, {"w", o.w}},
                                     json{{"patterns", arr}}),
                            arr.empty() ? "no patterns" : human.str());
                return 0;
            }
            if (c_locus->parsed()) {
                json res;
                std::string human;
                if (auto c = one_string_critical_index(w)) {
                    OneStringLocus locus = singular_locus_one_string(w);
                    res["class"] = "one-string";
                    res["critical_index"] = *c;
                    if (locus.phi_point) {
                        res["phi"] = to_json(*locus.phi_point);
                        res["codim"] = locus.codim;
                        human = "one-string, c=" + std::to_string(*c) + ": Sing X(w) = X(" +
                                to_string(*locus.phi_point) + "), codim " +
                                std::to_string(locus.codim);
                    } else {
                        res["phi"] = nullptr;
                        human = "one-string, c=" + std::to_string(*c) + ": smooth";
                    }
                } else if (is_p_stable(w)) {
                    res["class"] = "p-stable";
                    json mp = json::array();
                    std::vector<Point> pts = singular_locus_p_stable(w);
                    for (const Point& p : pts) mp.push_back(to_json(p));
                    res["maximal_points"] = mp;
                    human = "stable: " + std::to_string(pts.size()) + " maximal singular point(s)";
                } else {
                    res["class"] = "general";
                    json cp = json::array();
                    std::set<Point> seen;
                    for (const Pattern& p : find_patterns(w))
                        for (const Point& wp : apply_pattern(p)) seen.insert(wp);
                    for (const Point& wp : seen) cp.push_back(to_json(wp));
                    res["certified_singular_points"] = cp;
                    human = "general: " + std::to_string(seen.size()) +
                            " pattern-certified singular point(s); locus not asserted complete";
                }
                output.emit(make_doc(ctx, json{{"op", "locus"}, {"w", o.w}}, res), human);
                return 0;
            }
            Point x = parse_point(ctx, o.x);
            if (c_leq->parsed()) {
                bool v = leq(x, w);
                output.emit(make_doc(ctx, json{{"op", "leq"}, {"x", o.x}, {"w", o.w}},
                                     json{{"leq", v}}),
                            v ? "true" : "false");
                return 0;
            }
            if (c_codim->parsed()) {
                int v = codim(x, w);
                output.emit(make_doc(ctx, json{{"op", "codim"}, {"x", o.x}, {"w", o.w}},
                                     json{{"codim", v}}),
                            std::to_string(v));
                return 0;
            }
            if (c_curves->parsed()) {
                auto cs = curve_set(x, w);
                std::ostringstream human;
                human << cs.size() << " curve(s)";
                for (const Reflection& r : cs) human << "\n  " << to_string(r);
                output.emit(make_doc(ctx, json{{"op", "curves"}, {"x", o.x}, {"w", o.w}},
                                     json{{"count", cs.size()}, {"reflections", to_json(cs)}}),
                            human.str());
                return 0;
            }
            if (c_tangent->parsed()) {
                TangentReport rep = (w == point_top(ctx)) ? tangent_dim_top(x)
                                    : one_string_critical_index(w)
                                        ? tangent_dim_one_string(x, w)
                                        : tangent_bounds_general(x, w);
                std::ostringstream human;
                if (rep.exact)
                    human << "total " << rep.total << " (real " << rep.real_dim << ", imaginary "
                          << rep.total - rep.real_dim << "), exact";
                else
                    human << "bounds [" << rep.lower << ", " << rep.upper << "] (upper: real "
                          << rep.real_dim << " + imaginary " << rep.upper - rep.real_dim << ")";
                output.emit(make_doc(ctx, json{{"op", "tangent"}, {"x", o.x}, {"w", o.w}},
                                     to_json(rep)),
                            human.str());
                return 0;
            }
            // classify
            Classification cls = classify_point(x, w);
            std::ostringstream human;
            human << to_string(cls.status) << " (" << to_string(cls.method) << ")";
            for (const auto& wit : cls.witnesses) human << "\n  witness: " << to_string(wit.kind);
            output.emit(make_doc(ctx, json{{"op", "classify"}, {"x", o.x}, {"w", o.w}},
                                 to_json(cls)),
                        human.str());
            return 0;
        }
        // verify
        verify::Options vopts;
        vopts.jobs = o.jobs;
        vopts.cache_dir = o.cache;
        vopts.sample_pairs = o.sample;
        verify::SuiteReport rep =
            verify::run_suite(o.suite, verify::context_range(o.n_max, o.s_max), vopts);
        json contexts = json::array();
        for (const Context& c : rep.contexts) contexts.push_back(json{{"n", c.n}, {"s", c.s}});
        json res{{"suite", rep.suite},
                 {"contexts", contexts},
                 {"checks", rep.checks},
                 {"failures", rep.failures},
                 {"failures_total", rep.failures_total},
                 {"extra", rep.extra}};
        std::ostringstream human;
        human << rep.suite << ": " << rep.checks << " checks, " << rep.failures_total
              << " failure(s), " << rep.wall_ms << " ms";
        for (const auto& f : rep.failures) human << "\n  " << f;
        json doc{{"schema_version", 1}, {"query", json{{"op", "verify"}, {"suite", o.suite}}},
                 {"result", res}};
        output.emit(doc, human.str());
        return rep.ok() ? 0 : 1;
    } catch (const error& e) {
        err << e.what() << '\n';
        return 2;
    }
}

}  // namespace affgr::cli
