#include "affgr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "affgr/bruhat.hpp"
#include "affgr/loci.hpp"
#include "affgr/oracle.hpp"
#include "affgr/patterns.hpp"
#include "affgr/reflections.hpp"
#include "affgr/serialize.hpp"
#include "affgr/tangent.hpp"

namespace affgr::verify {

namespace {

struct ChunkResult {
    long checks = 0;
    std::vector<std::string> failures;
};

// Deterministic fan-out: chunk results are merged in index order.
ChunkResult parallel_over(std::size_t count, int jobs,
                          const std::function<ChunkResult(std::size_t, std::size_t)>& body) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
    jobs = std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(count, 1));
    std::vector<std::future<ChunkResult>> futs;
    std::size_t chunk = (count + static_cast<std::size_t>(jobs) - 1) / static_cast<std::size_t>(jobs);
    for (std::size_t begin = 0; begin < count; begin += chunk) {
        std::size_t end = std::min(count, begin + chunk);
        futs.push_back(std::async(std::launch::async, body, begin, end));
    }
    ChunkResult total;
    for (auto& f : futs) {
        ChunkResult r = f.get();
        total.checks += r.checks;
        total.failures.insert(total.failures.end(), r.failures.begin(), r.failures.end());
    }
    return total;
}

std::string ctx_tag(const Context& ctx) {
    return "ctx(" + std::to_string(ctx.n) + "," + std::to_string(ctx.s) + ")";
}

oracle::PosetOracle load_poset(const Context& ctx, const Options& opts) {
    namespace fs = std::filesystem;
    if (!opts.cache_dir.empty()) {
        fs::path file = fs::path(opts.cache_dir) /
                        ("interval_n" + std::to_string(ctx.n) + "_s" + std::to_string(ctx.s) + ".json");
        if (fs::exists(file)) {
            std::ifstream in(file);
            json j = json::parse(in);
            IntervalIndex idx = interval_from_json(j);
            if (idx.ctx == ctx)
                return oracle::PosetOracle(ctx, std::move(idx.members), std::move(idx.cover_edges));
        }
        oracle::PosetOracle po(ctx, EnumLimits{opts.max_points});
        IntervalIndex idx{ctx, point_top(ctx), po.points(), po.cover_edges()};
        fs::create_directories(opts.cache_dir);
        std::ofstream out(file);
        out << to_json(idx).dump();
        return po;
    }
    return oracle::PosetOracle(ctx, EnumLimits{opts.max_points});
}

using SuiteFn = std::function<ChunkResult(const Context&, const Options&, json&)>;

ChunkResult suite_order_equivalence(const Context& ctx, const Options& opts, json&) {
    oracle::PosetOracle po = load_poset(ctx, opts);
    const auto& pts = po.points();
    std::vector<ITuple> tuples(pts.size());
    for (std::size_t a = 0; a < pts.size(); ++a) tuples[a] = pts[a].i_tuple();
    return parallel_over(pts.size(), opts.jobs, [&](std::size_t lo, std::size_t hi) {
        ChunkResult r;
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = 0; b < pts.size(); ++b) {
                bool direct = leq(tuples[a], tuples[b]);
                bool covers = po.leq_via_covers(static_cast<int>(a), static_cast<int>(b));
                ++r.checks;
                if (direct != covers)
                    r.failures.push_back(ctx_tag(ctx) + " " + to_string(pts[a]) + " vs " +
                                         to_string(pts[b]) + ": componentwise " +
                                         (direct ? "<=" : "!<=") + " but covers say otherwise");
            }
        return r;
    });
}

ChunkResult suite_codim_formula(const Context& ctx, const Options& opts, json&) {
    oracle::PosetOracle po = load_poset(ctx, opts);
    const auto& pts = po.points();
    return parallel_over(pts.size(), opts.jobs, [&](std::size_t lo, std::size_t hi) {
        ChunkResult r;
        for (std::size_t xi = lo; xi < hi; ++xi) {
            const Point& x = pts[xi];
            for (int a = 1; a <= ctx.n; ++a)
                for (int b = a + 1; b <= ctx.n; ++b) {
                    Point y = down_exchange(x, a, b);
                    if (y == x) continue;
                    int formula = down_exchange_codim(x, a, b);
                    int chain = po.longest_chain_codim(po.index_of(y), static_cast<int>(xi));
                    ++r.checks;
                    if (formula != chain)
                        r.failures.push_back(ctx_tag(ctx) + " " + to_string(x) + " exch(" +
                                             std::to_string(a) + "," + std::to_string(b) +
                                             "): formula " + std::to_string(formula) +
                                             " != chain " + std::to_string(chain));
                }
        }
        return r;
    });
}

ChunkResult suite_deodhar(const Context& ctx, const Options& opts, json&) {
    std::vector<Point> pts = oracle::enumerate_iu(ctx, EnumLimits{opts.max_points});
    std::sort(pts.begin(), pts.end());
    return parallel_over(pts.size(), opts.jobs, [&](std::size_t lo, std::size_t hi) {
        ChunkResult r;
        for (std::size_t wi = lo; wi < hi; ++wi) {
            const Point& w = pts[wi];
            int dim = dim_schubert(w);
            for (const Point& x : pts) {
                if (!leq(x, w)) continue;
                ++r.checks;
                int curves = static_cast<int>(curve_set(x, w).size());
                if (curves < dim)
                    r.failures.push_back(ctx_tag(ctx) + " x=" + to_string(x) + " w=" + to_string(w) +
                                         ": " + std::to_string(curves) + " curves < dim " +
                                         std::to_string(dim));
            }
        }
        return r;
    });
}

ChunkResult suite_rationally_smooth(const Context& ctx, const Options& opts, json&) {
    std::vector<Point> pts = oracle::enumerate_iu(ctx, EnumLimits{opts.max_points});
    std::sort(pts.begin(), pts.end());
    return parallel_over(static_cast<std::size_t>(ctx.d), opts.jobs,
                         [&](std::size_t lo, std::size_t hi) {
        ChunkResult r;
        for (std::size_t ci = lo; ci < hi; ++ci) {
            int c = static_cast<int>(ci) + 1;
            Point kc = kappa(ctx, c);
            int expect = c * (ctx.n - 1);
            for (const Point& x : pts) {
                if (!leq(x, kc)) continue;
                ++r.checks;
                int curves = static_cast<int>(curve_set(x, kc).size());
                if (curves != expect)
                    r.failures.push_back(ctx_tag(ctx) + " kappa^" + std::to_string(c) + " x=" +
                                         to_string(x) + ": " + std::to_string(curves) +
                                         " curves != " + std::to_string(expect));
            }
        }
        return r;
    });
}

ChunkResult suite_one_string_locus(const Context& ctx, const Options& opts, json&) {
    oracle::PosetOracle po = load_poset(ctx, opts);
    const auto& pts = po.points();
    return parallel_over(pts.size(), opts.jobs, [&](std::size_t lo, std::size_t hi) {
        ChunkResult r;
        for (std::size_t wi = lo; wi < hi; ++wi) {
            const Point& w = pts[wi];
            auto c = one_string_critical_index(w);
            if (!c) continue;
            int dim = dim_schubert(w);
            std::optional<Point> ph;
            if (*c >= 2) ph = phi(w);
            for (const Point& x : pts) {
                if (!leq(x, w)) continue;
                ++r.checks;
                bool singular = tangent_dim_one_string(x, w).total > dim;
                bool in_locus = ph && leq(x, *ph);
                if (singular != in_locus)
                    r.failures.push_back(ctx_tag(ctx) + " w=" + to_string(w) + " x=" + to_string(x) +
                                         ": tangent says " + (singular ? "singular" : "smooth") +
                                         ", locus says otherwise");
            }
            if (*c > 2) {
                ++r.checks;
                int chain = po.longest_chain_codim(po.index_of(*ph), static_cast<int>(wi));
                if (chain != 2 || codim(*ph, w) != 2)
                    r.failures.push_back(ctx_tag(ctx) + " w=" + to_string(w) +
                                         ": codim(phi, w) != 2 (chain " + std::to_string(chain) + ")");
            }
        }
        return r;
    });
}

ChunkResult suite_p_stable_locus(const Context& ctx, const Options& opts, json&) {
    std::vector<Point> pts = oracle::enumerate_iu(ctx, EnumLimits{opts.max_points});
    std::sort(pts.begin(), pts.end());
    return parallel_over(pts.size(), opts.jobs, [&](std::size_t lo, std::size_t hi) {
        ChunkResult r;
        for (std::size_t wi = lo; wi < hi; ++wi) {
            const Point& w = pts[wi];
            if (!is_p_stable(w)) continue;
            ++r.checks;
            std::vector<Point> algo = singular_locus_p_stable(w);
            std::vector<Point> dom = oracle::dominance_maximal_below(w);
            if (algo != dom)
                r.failures.push_back(ctx_tag(ctx) + " w=" + to_string(w) +
                                     ": pattern points disagree with dominance-maximal set");
        }
        return r;
    });
}

ChunkResult suite_tangent_matrix(const Context& ctx, const Options& opts, json&) {
    std::vector<Point> pts = oracle::enumerate_iu(ctx, EnumLimits{opts.max_points});
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t xi = 0; xi < pts.size(); ++xi)
        for (std::size_t wi = 0; wi < pts.size(); ++wi)
            if (leq(pts[xi], pts[wi])) pairs.emplace_back(static_cast<int>(xi), static_cast<int>(wi));
    if (opts.sample_pairs > 0 && static_cast<long>(pairs.size()) > opts.sample_pairs) {
        std::mt19937 rng(12345);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(static_cast<std::size_t>(opts.sample_pairs));
        std::sort(pairs.begin(), pairs.end());
    }
    return parallel_over(pairs.size(), opts.jobs, [&](std::size_t lo, std::size_t hi) {
        ChunkResult r;
        for (std::size_t k = lo; k < hi; ++k) {
            const Point& x = pts[static_cast<std::size_t>(pairs[k].first)];
            const Point& w = pts[static_cast<std::size_t>(pairs[k].second)];
            ++r.checks;
            long comb = classical_u_tangent_dim(x, w);
            long rank = oracle::matrix_u_tangent_dim(x, w);
            if (comb != rank)
                r.failures.push_back(ctx_tag(ctx) + " x=" + to_string(x) + " w=" + to_string(w) +
                                     ": combinatorial " + std::to_string(comb) + " != rank " +
                                     std::to_string(rank));
        }
        return r;
    });
}

ChunkResult suite_pattern_certificates(const Context& ctx, const Options& opts, json&) {
    std::vector<Point> pts = oracle::enumerate_iu(ctx, EnumLimits{opts.max_points});
    std::sort(pts.begin(), pts.end());
    return parallel_over(pts.size(), opts.jobs, [&](std::size_t lo, std::size_t hi) {
        ChunkResult r;
        for (std::size_t wi = lo; wi < hi; ++wi) {
            const Point& w = pts[wi];
            for (const Pattern& p : find_patterns(w)) {
                std::vector<Point> points = apply_pattern(p);
                for (int which = 0; which < static_cast<int>(points.size()); ++which) {
                    if (p.kind == PatternKind::ExcSecond && which == 1 &&
                        w.l_at(p.indices[0]) >= w.l_at(p.indices[1]) - 1)
                        continue;  // w_{P,2} is conditionally certified only
                    ++r.checks;
                    try {
                        SingularWitness wit = pattern_certificate(p, which);
                        if (!verify_witness(wit, w))
                            r.failures.push_back(ctx_tag(ctx) + " w=" + to_string(w) + " " +
                                                 to_string(p.kind) + ": witness failed re-check");
                    } catch (const error& e) {
                        r.failures.push_back(ctx_tag(ctx) + " w=" + to_string(w) + " " +
                                             to_string(p.kind) + ": " + e.what());
                    }
                }
            }
        }
        return r;
    });
}

ChunkResult suite_unexplained_singular(const Context& ctx, const Options& opts, json& extra) {
    ChunkResult r;
    auto pairs = search_unexplained_singular(ctx, SearchLimits{opts.max_points});
    std::vector<Point> pts = oracle::enumerate_iu(ctx, EnumLimits{opts.max_points});
    r.checks = static_cast<long>(pts.size()) * static_cast<long>(pts.size());
    json listed = json::array();
    for (const auto& [w, x] : pairs)
        listed.push_back(json{{"w", w.lengths()}, {"x", x.lengths()}});
    extra[ctx_tag(ctx)] = json{{"unexplained", listed}};
    return r;
}

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"order-equivalence", suite_order_equivalence},
        {"codim-formula", suite_codim_formula},
        {"deodhar", suite_deodhar},
        {"rationally-smooth", suite_rationally_smooth},
        {"one-string-locus", suite_one_string_locus},
        {"p-stable-locus", suite_p_stable_locus},
        {"tangent-matrix", suite_tangent_matrix},
        {"pattern-certificates", suite_pattern_certificates},
        {"unexplained-singular", suite_unexplained_singular},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<Context> context_range(int n_max, int s_max) {
    std::vector<Context> out;
    for (int n = 2; n <= n_max; ++n)
        for (int s = 1; s <= s_max; ++s) out.push_back(make_context(n, s));
    return out;
}

SuiteReport run_suite(const std::string& name, const std::vector<Context>& ctxs,
                      const Options& opts) {
    const SuiteFn* fn = nullptr;
    for (const auto& [candidate, f] : suite_table())
        if (candidate == name) fn = &f;
    if (!fn) throw param_error("unknown verify suite: " + name);
    SuiteReport rep;
    rep.suite = name;
    rep.contexts = ctxs;
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> failures;
    for (const Context& ctx : ctxs) {
        ChunkResult r = (*fn)(ctx, opts, rep.extra);
        rep.checks += r.checks;
        failures.insert(failures.end(), r.failures.begin(), r.failures.end());
    }
    rep.failures_total = static_cast<long>(failures.size());
    if (failures.size() > 50) failures.resize(50);
    rep.failures = std::move(failures);
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

}  // namespace affgr::verify
