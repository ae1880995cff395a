#include "affgr/patterns.hpp"

#include <algorithm>

#include "affgr/bruhat.hpp"
#include "affgr/tangent.hpp"

namespace affgr {

const char* to_string(PatternKind k) {
    switch (k) {
        case PatternKind::Imaginary: return "imaginary";
        case PatternKind::RealFirst: return "real-first";
        case PatternKind::RealSecond: return "real-second";
        case PatternKind::ExcFirst: return "exc-first";
        case PatternKind::ExcSecond: return "exc-second";
    }
    return "?";
}

const char* to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::ExcessCurves: return "excess-curves";
        case WitnessKind::LargeReflection: return "large-reflection";
        case WitnessKind::ImaginaryTangent: return "imaginary-tangent";
    }
    return "?";
}

namespace {

bool valid_imaginary(const Point& w, int i, int j) {
    return i >= 1 && i <= w.ctx().n && i < j && j < i + w.ctx().n && w.l_at(i) > w.l_at(j) + 1;
}

bool valid_real_first(const Point& w, int i, int g, int j, int k) {
    const int n = w.ctx().n;
    return 1 <= i && i < g && g < j && j < k && k <= 2 * n && i < n && j < i + n && k < g + n &&
           w.l_at(i) >= w.l_at(j) && w.l_at(j) > w.l_at(g) && w.l_at(g) >= w.l_at(k);
}

bool valid_real_second(const Point& w, int i, int j, int g, int k) {
    const int n = w.ctx().n;
    return 1 <= i && i < j && j < g && g < k && k <= 2 * n && i <= n && g < i + n && k < j + n &&
           w.l_at(j) > w.l_at(i) && w.l_at(i) >= w.l_at(k) && w.l_at(k) > w.l_at(g);
}

bool valid_exc_first(const Point& w, int i, int g, int j, int k) {
    const int n = w.ctx().n;
    return 1 <= i && i < g && g < j && j == i + n && j < k && k <= 2 * n && k < g + n &&
           w.len(residue(w.ctx(), g)) + 1 < w.l_at(i) && w.l_at(g) >= w.l_at(k);
}

bool valid_exc_second(const Point& w, int i, int j, int g, int k) {
    const int n = w.ctx().n;
    return 1 <= i && i <= n && i < j && j < g && g < k && k == i + n &&
           w.l_at(i) < w.l_at(j) && w.l_at(i) > w.l_at(g);
}

}  // namespace

void validate_pattern(const Pattern& p) {
    const Point& w = p.host;
    const auto& ix = p.indices;
    bool ok = false;
    switch (p.kind) {
        case PatternKind::Imaginary:
            ok = ix.size() == 2 && valid_imaginary(w, ix[0], ix[1]);
            break;
        case PatternKind::RealFirst:
            ok = ix.size() == 4 && valid_real_first(w, ix[0], ix[1], ix[2], ix[3]);
            break;
        case PatternKind::RealSecond:
            ok = ix.size() == 4 && valid_real_second(w, ix[0], ix[1], ix[2], ix[3]);
            break;
        case PatternKind::ExcFirst:
            ok = ix.size() == 4 && valid_exc_first(w, ix[0], ix[1], ix[2], ix[3]);
            break;
        case PatternKind::ExcSecond:
            ok = ix.size() == 4 && valid_exc_second(w, ix[0], ix[1], ix[2], ix[3]);
            break;
    }
    if (!ok) throw precondition_error("malformed pattern");
}

std::vector<Pattern> find_patterns(const Point& w) {
    return find_patterns(w, {PatternKind::Imaginary, PatternKind::RealFirst,
                             PatternKind::RealSecond, PatternKind::ExcFirst,
                             PatternKind::ExcSecond});
}

std::vector<Pattern> find_patterns(const Point& w, const std::set<PatternKind>& kinds) {
    const int n = w.ctx().n;
    std::vector<Pattern> out;
    if (kinds.count(PatternKind::Imaginary))
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j < i + n; ++j)
                if (valid_imaginary(w, i, j))
                    out.push_back({PatternKind::Imaginary, {i, j}, w});
    if (kinds.count(PatternKind::RealFirst))
        for (int i = 1; i < n; ++i)
            for (int g = i + 1; g <= 2 * n; ++g)
                for (int j = g + 1; j < i + n; ++j)
                    for (int k = j + 1; k <= 2 * n && k < g + n; ++k)
                        if (valid_real_first(w, i, g, j, k))
                            out.push_back({PatternKind::RealFirst, {i, g, j, k}, w});
    if (kinds.count(PatternKind::RealSecond))
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= 2 * n; ++j)
                for (int g = j + 1; g < i + n; ++g)
                    for (int k = g + 1; k <= 2 * n && k < j + n; ++k)
                        if (valid_real_second(w, i, j, g, k))
                            out.push_back({PatternKind::RealSecond, {i, j, g, k}, w});
    if (kinds.count(PatternKind::ExcFirst))
        for (int i = 1; i <= n; ++i)
            for (int g = i + 1; g < i + n; ++g)
                for (int k = i + n + 1; k <= 2 * n && k < g + n; ++k)
                    if (valid_exc_first(w, i, g, i + n, k))
                        out.push_back({PatternKind::ExcFirst, {i, g, i + n, k}, w});
    if (kinds.count(PatternKind::ExcSecond))
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j < i + n; ++j)
                for (int g = j + 1; g < i + n; ++g)
                    if (valid_exc_second(w, i, j, g, i + n))
                        out.push_back({PatternKind::ExcSecond, {i, j, g, i + n}, w});
    return out;
}

namespace {

// Write the given values at the given L-positions and rebuild the point.
Point place_l_values(const Point& w, const std::vector<int>& positions,
                     const std::vector<int>& values) {
    auto lens = w.lengths();
    for (size_t t = 0; t < positions.size(); ++t) {
        int p = positions[t];
        int pad = p > w.ctx().n ? 1 : 0;
        lens[static_cast<size_t>(residue(w.ctx(), p)) - 1] = values[t] - pad;
    }
    return Point(w.ctx(), std::move(lens));
}

Point imaginary_point(const Point& w, int i, int j) {
    return place_l_values(w, {i, j}, {w.l_at(i) - 1, w.l_at(j) + 1});
}

}  // namespace

std::vector<Point> apply_pattern(const Pattern& p) {
    validate_pattern(p);
    const Point& w = p.host;
    const auto& ix = p.indices;
    std::vector<Point> out;
    switch (p.kind) {
        case PatternKind::Imaginary: {
            out.push_back(imaginary_point(w, ix[0], ix[1]));
            break;
        }
        case PatternKind::RealFirst: {
            const int i = ix[0], g = ix[1], j = ix[2], k = ix[3];
            Point direct = place_l_values(
                w, {i, g, j, k}, {w.l_at(g), w.l_at(k), w.l_at(i), w.l_at(j)});
            Point seq = down_exchange(down_exchange(down_exchange(w, i, g), g, j), g, k);
            if (!(direct == seq))
                throw error("real pattern of the first kind: value placement and "
                            "down-exchange sequence disagree");
            out.push_back(direct);
            break;
        }
        case PatternKind::RealSecond: {
            const int i = ix[0], j = ix[1], g = ix[2], k = ix[3];
            Point direct = place_l_values(
                w, {i, j, g, k}, {w.l_at(g), w.l_at(i), w.l_at(k), w.l_at(j)});
            Point seq = down_exchange(down_exchange(down_exchange(w, j, k), i, j), i, g);
            if (!(direct == seq))
                throw error("real pattern of the second kind: value placement and "
                            "down-exchange sequence disagree");
            out.push_back(direct);
            break;
        }
        case PatternKind::ExcFirst: {
            const int i = ix[0], g = ix[1], j = ix[2], k = ix[3];
            Point wp = down_exchange(w, i, g);
            if (w.l_at(i) > w.l_at(g) + 1) wp = down_exchange(wp, g, j);
            wp = down_exchange(wp, g, k);
            out.push_back(wp);
            break;
        }
        case PatternKind::ExcSecond: {
            const int i = ix[0], j = ix[1], g = ix[2];
            // w_{P,1}: down-exchange i, j then apply the induced imaginary pattern.
            Point w1 = down_exchange(w, i, j);
            int rj = residue(w.ctx(), j), rg = residue(w.ctx(), g);
            int qa = rj, qb = (rj < rg) ? rg : g;
            if (!valid_imaginary(w1, qa, qb))
                throw error("exceptional pattern of the second kind: induced imaginary "
                            "pattern is missing");
            out.push_back(imaginary_point(w1, qa, qb));
            // w_{P,2}: i down j twice, then i down g.
            out.push_back(down_exchange(down_exchange(down_exchange(w, i, j), i, j), i, g));
            break;
        }
    }
    for (const Point& wp : out) {
        if (!(leq(wp, w)) || wp == w)
            throw error("constructed pattern point is not strictly below its host");
    }
    return out;
}

std::optional<Reflection> find_large_up(const Point& x, const Point& host) {
    for (const Reflection& r : reflections_at(x)) {
        if (is_small(x, r)) continue;
        Point y = *reflection_apply(x, r);
        if (leq(x, y) && leq(y, host)) return r;
    }
    return std::nullopt;
}

namespace {

SingularWitness excess_witness(const Point& wp, const Point& host) {
    SingularWitness wit{WitnessKind::ExcessCurves, wp};
    wit.curves = static_cast<int>(curve_set(wp, host).size());
    wit.dim = dim_schubert(host);
    if (wit.curves <= wit.dim)
        throw error("excess-curve certificate failed: " + std::to_string(wit.curves) +
                    " curves vs dim " + std::to_string(wit.dim));
    return wit;
}

SingularWitness large_witness(const Point& wp, const Point& host) {
    auto r = find_large_up(wp, host);
    if (!r) throw error("large-reflection certificate failed: no large up move");
    SingularWitness wit{WitnessKind::LargeReflection, wp};
    wit.reflection = *r;
    return wit;
}

}  // namespace

SingularWitness pattern_certificate(const Pattern& p, int which_point) {
    validate_pattern(p);
    const Point& host = p.host;
    std::vector<Point> points = apply_pattern(p);
    if (which_point < 0 || which_point >= static_cast<int>(points.size()))
        throw param_error("pattern has no point with this index");
    const Point& wp = points[static_cast<size_t>(which_point)];
    const auto& ix = p.indices;
    switch (p.kind) {
        case PatternKind::Imaginary:
        case PatternKind::ExcFirst:
            return large_witness(wp, host);
        case PatternKind::RealFirst: {
            int i = ix[0], k = ix[3];
            return k < i + host.ctx().n ? excess_witness(wp, host) : large_witness(wp, host);
        }
        case PatternKind::RealSecond: {
            int i = ix[0], k = ix[3];
            return k < i + host.ctx().n ? excess_witness(wp, host) : large_witness(wp, host);
        }
        case PatternKind::ExcSecond: {
            if (which_point == 0) return large_witness(wp, host);
            if (host.l_at(ix[0]) >= host.l_at(ix[1]) - 1)
                throw precondition_error(
                    "certificate unavailable: w_{P,2} with L_j = L_i + 1 need not be singular");
            return large_witness(wp, host);
        }
    }
    throw error("unreachable");
}

bool verify_witness(const SingularWitness& w, const Point& host) {
    switch (w.kind) {
        case WitnessKind::ExcessCurves:
            return static_cast<int>(curve_set(w.point, host).size()) == w.curves &&
                   dim_schubert(host) == w.dim && w.curves > w.dim;
        case WitnessKind::LargeReflection: {
            if (!w.reflection) return false;
            auto y = reflection_apply(w.point, *w.reflection);
            if (!y || *y == w.point) return false;
            if (is_small(w.point, *w.reflection)) return false;
            return leq(w.point, *y) && leq(*y, host);
        }
        case WitnessKind::ImaginaryTangent: {
            // two distinct residues in S(h, x, w) span an imaginary tangent line
            if (w.level < 1) return false;
            auto s = s_imag_w(w.level, w.point, host);
            return w.residues.first != w.residues.second &&
                   std::find(s.begin(), s.end(), w.residues.first) != s.end() &&
                   std::find(s.begin(), s.end(), w.residues.second) != s.end();
        }
    }
    return false;
}

}  // namespace affgr
