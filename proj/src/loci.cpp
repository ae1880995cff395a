#include "affgr/loci.hpp"

#include <algorithm>

#include "affgr/bruhat.hpp"
#include "affgr/tangent.hpp"

namespace affgr {

const char* to_string(Status s) {
    switch (s) {
        case Status::Smooth: return "SMOOTH";
        case Status::Singular: return "SINGULAR";
        case Status::Unknown: return "UNKNOWN";
    }
    return "?";
}

const char* to_string(Method m) {
    switch (m) {
        case Method::OneStringExact: return "ONE_STRING_EXACT";
        case Method::PStableExact: return "P_STABLE_EXACT";
        case Method::TopExact: return "TOP_EXACT";
        case Method::CertificateOnly: return "CERTIFICATE_ONLY";
    }
    return "?";
}

bool is_p_stable(const Point& w) {
    for (int i = 1; i < w.ctx().n; ++i)
        if (w.len(i) < w.len(i + 1)) return false;
    return true;
}

std::optional<int> one_string_critical_index(const Point& w) {
    const Context& ctx = w.ctx();
    const ITuple wt = w.i_tuple();
    const ITuple et = point_e(ctx).i_tuple();
    int c = 0;
    for (int k = ctx.d; k >= 1; --k)
        if (wt[static_cast<size_t>(k) - 1] != et[static_cast<size_t>(k) - 1]) {
            c = k;
            break;
        }
    for (int k = 1; k < c; ++k)
        if (residue(ctx, wt[static_cast<size_t>(k) - 1]) != residue(ctx, wt[static_cast<size_t>(k)]))
            return std::nullopt;
    return c;
}

bool one_string_leq(const Point& x, const Point& w, int c) {
    require_same_context(x, w);
    auto cc = one_string_critical_index(w);
    if (!cc || *cc != c) throw precondition_error("ambient is not one-string with this index");
    if (c == 0) return x == w;
    const ITuple xt = x.i_tuple();
    const ITuple wt = w.i_tuple();
    if (xt[static_cast<size_t>(c) - 1] < wt[static_cast<size_t>(c) - 1]) return false;
    for (int i = c + 1; i <= x.ctx().d; ++i)
        if (xt[static_cast<size_t>(i) - 1] != wt[static_cast<size_t>(i) - 1]) return false;
    return true;
}

Point phi(const Point& w) {
    const Context& ctx = w.ctx();
    auto cc = one_string_critical_index(w);
    if (!cc) throw precondition_error("phi requires a one-string ambient");
    const int c = *cc;
    if (c < 2)
        throw precondition_error("phi requires critical index >= 2 (X(w) is globally smooth)");
    ITuple wt = w.i_tuple();
    int repl;
    if (w == kappa(ctx, c)) {
        repl = wt[static_cast<size_t>(c) - 1] + 1;
    } else if (c == 2) {
        // imaginary pattern ([w_1], [w_1] + 1): move the head to the next string
        int target = residue(ctx, residue(ctx, wt[0]) + 1);
        repl = w.head(target) - ctx.n;
    } else {
        int wc1 = (c == ctx.d) ? ctx.d * (ctx.n - 1) + c + 1 : wt[static_cast<size_t>(c)];
        repl = wc1 - ctx.n;
    }
    wt[0] = repl;
    std::sort(wt.begin(), wt.end());
    return point_from_tuple(ctx, wt);
}

OneStringLocus singular_locus_one_string(const Point& w) {
    auto cc = one_string_critical_index(w);
    if (!cc) throw precondition_error("ambient is not one-string");
    if (*cc <= 1) return {};
    Point p = phi(w);
    return {p, codim(p, w)};
}

std::vector<PStablePattern> p_stable_patterns(const Point& w) {
    if (!is_p_stable(w)) throw precondition_error("ambient is not stable");
    const int n = w.ctx().n;
    std::vector<PStablePattern> out;
    for (int i = 1; i < n; ++i) {
        if (w.len(i + 1) >= w.len(i)) continue;
        int j = 0;
        for (int cand = 1; cand <= n; ++cand)
            if (w.len(cand) < w.len(i) - 1) {
                j = cand;
                break;
            }
        if (j == 0) continue;  // can only happen for the last descent
        out.push_back({i, j, false});
    }
    for (auto& p : out) {
        p.maximal = true;
        for (const auto& q : out)
            if (q.j == p.j && q.i > p.i) p.maximal = false;
    }
    return out;
}

std::vector<Point> singular_locus_p_stable(const Point& w) {
    std::vector<Point> out;
    for (const auto& p : p_stable_patterns(w)) {
        if (!p.maximal) continue;
        Pattern pat{PatternKind::Imaginary, {p.i, p.j}, w};
        out.push_back(apply_pattern(pat).front());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Certificate witnesses available at (x, w): one per kind that applies.
// include_imaginary enables the S(h,x,w) pair witness, valid only for the
// exact tangent classes.
std::vector<SingularWitness> collect_witnesses(const Point& x, const Point& w,
                                               bool include_imaginary) {
    std::vector<SingularWitness> out;
    int curves = static_cast<int>(curve_set(x, w).size());
    int dim = dim_schubert(w);
    if (curves > dim) {
        SingularWitness wit{WitnessKind::ExcessCurves, x};
        wit.curves = curves;
        wit.dim = dim;
        out.push_back(wit);
    }
    if (auto r = find_large_up(x, w)) {
        SingularWitness wit{WitnessKind::LargeReflection, x};
        wit.reflection = *r;
        out.push_back(wit);
    }
    if (include_imaginary) {
        for (int h = 1; h <= x.ctx().d; ++h) {
            auto s = s_imag_w(h, x, w);
            if (s.size() >= 2) {
                SingularWitness wit{WitnessKind::ImaginaryTangent, x};
                wit.residues = {s[0], s[1]};
                wit.level = h;
                out.push_back(wit);
                break;
            }
        }
    }
    return out;
}

}  // namespace

Classification classify_point(const Point& x, const Point& w) {
    require_same_context(x, w);
    if (!leq(x, w)) throw order_error("classification requires x <= w");
    Classification cls;
    if (auto c = one_string_critical_index(w)) {
        cls.method = (w == point_top(w.ctx())) ? Method::TopExact : Method::OneStringExact;
        if (*c <= 1) {
            cls.status = Status::Smooth;
            return cls;
        }
        cls.phi_point = phi(w);
        bool singular = leq(x, *cls.phi_point);
        cls.status = singular ? Status::Singular : Status::Smooth;
        if (singular) cls.witnesses = collect_witnesses(x, w, true);
        return cls;
    }
    if (is_p_stable(w)) {
        cls.method = Method::PStableExact;
        cls.maximal_points = singular_locus_p_stable(w);
        bool singular = std::any_of(cls.maximal_points.begin(), cls.maximal_points.end(),
                                    [&](const Point& m) { return leq(x, m); });
        cls.status = singular ? Status::Singular : Status::Smooth;
        if (singular) cls.witnesses = collect_witnesses(x, w, false);
        return cls;
    }
    cls.method = Method::CertificateOnly;
    cls.witnesses = collect_witnesses(x, w, false);
    if (!cls.witnesses.empty())
        cls.status = Status::Singular;
    else
        cls.status = (x == w) ? Status::Smooth : Status::Unknown;
    return cls;
}

std::vector<std::pair<Point, Point>> search_unexplained_singular(const Context& ctx,
                                                                 const SearchLimits& limits) {
    std::vector<std::pair<Point, Point>> out;
    std::vector<Point> points = all_points(ctx, EnumLimits{limits.max_points});
    std::sort(points.begin(), points.end());
    for (const Point& w : points) {
        std::vector<Point> pattern_points;
        for (const Pattern& p : find_patterns(w))
            for (const Point& wp : apply_pattern(p)) pattern_points.push_back(wp);
        int dim = dim_schubert(w);
        for (const Point& x : points) {
            if (x == w || !leq(x, w)) continue;
            bool certified = static_cast<int>(curve_set(x, w).size()) > dim ||
                             find_large_up(x, w).has_value();
            if (!certified) continue;
            bool explained = std::any_of(pattern_points.begin(), pattern_points.end(),
                                         [&](const Point& wp) { return leq(x, wp); });
            if (!explained) out.emplace_back(w, x);
        }
    }
    return out;
}

std::vector<Point> search_smooth_candidates(const Context& ctx, const SearchLimits& limits) {
    std::vector<Point> out;
    std::vector<Point> points = all_points(ctx, EnumLimits{limits.max_points});
    std::sort(points.begin(), points.end());
    for (const Point& w : points) {
        if (!find_patterns(w, {PatternKind::Imaginary}).empty()) continue;
        int dim = dim_schubert(w);
        bool candidate = true;
        for (const Point& x : points) {
            if (!leq(x, w)) continue;
            if (static_cast<int>(curve_set(x, w).size()) != dim || find_large_up(x, w)) {
                candidate = false;
                break;
            }
        }
        if (candidate) out.push_back(w);
    }
    return out;
}

}  // namespace affgr
