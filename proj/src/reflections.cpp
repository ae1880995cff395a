#include "affgr/reflections.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "affgr/bruhat.hpp"

namespace affgr {

Reflection::Reflection(const AffineRoot& r) : root_(r) {
    if (r.i < 1 || r.j < 1) throw param_error("reflection residues must be >= 1");
    if (r.i == r.j) throw param_error("reflection requires distinct residues");
    if (root_.i > root_.j) root_ = root_.negated();
}

bool operator<(const Reflection& a, const Reflection& b) {
    if (a.i() != b.i()) return a.i() < b.i();
    if (a.j() != b.j()) return a.j() < b.j();
    return a.h() < b.h();
}

std::string to_string(const Reflection& r) {
    return "(" + std::to_string(r.i()) + " " + std::to_string(r.j()) + ")+" +
           std::to_string(r.h()) + "d";
}

namespace {

void check_residues(const Point& x, const Reflection& r) {
    if (r.j() > x.ctx().n)
        throw param_error("reflection residue " + std::to_string(r.j()) + " exceeds n");
}

}  // namespace

std::optional<Point> reflection_apply(const Point& x, const Reflection& r) {
    check_residues(x, r);
    const int d = x.ctx().d;
    int li = x.len(r.j()) - r.h();
    int lj = x.len(r.i()) + r.h();
    if (li < 0 || li > d || lj < 0 || lj > d) return std::nullopt;
    auto lens = x.lengths();
    lens[static_cast<size_t>(r.i()) - 1] = li;
    lens[static_cast<size_t>(r.j()) - 1] = lj;
    return Point(x.ctx(), std::move(lens));
}

bool is_small(const Point& x, const Reflection& r) {
    auto y = reflection_apply(x, r);
    if (!y || *y == x)
        throw precondition_error("smallness requires the reflection to move the point");
    return std::abs((r.i() - r.j()) + r.h() * x.ctx().n) < x.ctx().n;
}

std::vector<Reflection> reflections_at(const Point& x) {
    const int d = x.ctx().d;
    std::vector<Reflection> out;
    for (int i = 1; i <= x.ctx().n; ++i) {
        for (int j = i + 1; j <= x.ctx().n; ++j) {
            int li = x.len(i), lj = x.len(j);
            int lo = std::max(lj - d, -li);
            int hi = std::min(lj, d - li);
            for (int h = lo; h <= hi; ++h) {
                if (lj - h == li) continue;  // fixed point
                out.emplace_back(i, j, h);
            }
        }
    }
    return out;
}

std::optional<ITuple> permutation_apply(const Point& x, const Reflection& r) {
    check_residues(x, r);
    const Context& ctx = x.ctx();
    const int n = ctx.n;
    // Entries of |x| that can land in [1, d*n]: the finite part plus a tail
    // window of (|h|+1) shifts.
    int buffer = (std::abs(r.h()) + 1) * n;
    std::vector<int> domain = x.i_tuple();
    for (int v = ctx.dim_v + 1; v <= ctx.dim_v + buffer; ++v) domain.push_back(v);
    // Orient the finite part as (i j) with i > j before applying the action.
    AffineRoot a = r.root();
    if (a.i < a.j) a = a.negated();
    std::vector<int> image;
    for (int q : domain) {
        int rq = residue(ctx, q);
        int mapped = q;
        if (rq == a.i) {
            int k = (q - a.i) / n;
            mapped = a.j + (k - a.h) * n;
        } else if (rq == a.j) {
            int k = (q - a.j) / n;
            mapped = a.i + (k + a.h) * n;
        }
        if (mapped < 1) return std::nullopt;  // leaves the index range: undefined
        if (mapped <= ctx.dim_v) image.push_back(mapped);
    }
    std::sort(image.begin(), image.end());
    if (static_cast<int>(image.size()) != ctx.d) return std::nullopt;
    for (size_t k = 0; k + 1 < image.size(); ++k)
        if (image[k] == image[k + 1]) return std::nullopt;
    for (int v : image) {
        int up = v + n;
        if (up <= ctx.dim_v && !std::binary_search(image.begin(), image.end(), up))
            return std::nullopt;
    }
    return image;
}

namespace {

// Canonical L-positions (i, j) with i < j < i+n and L_i > L_j for the
// down-exchange of residues a < b; absent when the exchange is the identity.
struct ExchangeRep {
    int i, j;
};

std::pair<int, int> exchange_residues(const Point& x, int a, int b) {
    const Context& ctx = x.ctx();
    if (a < 1 || a > 2 * ctx.n || b < 1 || b > 2 * ctx.n)
        throw param_error("exchange index outside [1, 2n]");
    int ra = residue(ctx, a), rb = residue(ctx, b);
    if (ra == rb) throw param_error("exchange requires indices with distinct residues");
    if (ra > rb) std::swap(ra, rb);
    return {ra, rb};
}

std::optional<ExchangeRep> down_rep(const Point& x, int a, int b) {
    auto [ra, rb] = exchange_residues(x, a, b);
    if (x.len(ra) > x.len(rb)) return ExchangeRep{ra, rb};
    if (x.len(rb) > x.len(ra) + 1) return ExchangeRep{rb, ra + x.ctx().n};
    return std::nullopt;
}

Point swap_l_positions(const Point& x, int i, int j) {
    auto lens = x.lengths();
    const int n = x.ctx().n;
    int vi = x.l_at(i), vj = x.l_at(j);
    auto set_at = [&](int p, int v) {
        lens[static_cast<size_t>(residue(x.ctx(), p)) - 1] = v - (p > n ? 1 : 0);
    };
    set_at(i, vj);
    set_at(j, vi);
    return Point(x.ctx(), std::move(lens));
}

}  // namespace

Point down_exchange(const Point& x, int a, int b) {
    auto rep = down_rep(x, a, b);
    if (!rep) return x;
    return swap_l_positions(x, rep->i, rep->j);
}

std::optional<Reflection> down_exchange_reflection(const Point& x, int a, int b) {
    auto rep = down_rep(x, a, b);
    if (!rep) return std::nullopt;
    auto [ra, rb] = exchange_residues(x, a, b);
    return Reflection(ra, rb, rep->j > x.ctx().n ? 1 : 0);
}

std::optional<Point> up_exchange(const Point& x, int a, int b) {
    auto [ra, rb] = exchange_residues(x, a, b);
    if (x.len(ra) < x.len(rb)) return swap_l_positions(x, ra, rb);
    if (x.len(rb) > 0) return swap_l_positions(x, rb, ra + x.ctx().n);
    return std::nullopt;
}

std::optional<Reflection> up_exchange_reflection(const Point& x, int a, int b) {
    auto [ra, rb] = exchange_residues(x, a, b);
    if (x.len(ra) < x.len(rb)) return Reflection(ra, rb, 0);
    if (x.len(rb) > 0) return Reflection(ra, rb, 1);
    return std::nullopt;
}

int down_exchange_codim(const Point& x, int a, int b) {
    auto rep = down_rep(x, a, b);
    if (!rep) throw precondition_error("down-exchange is the identity here");
    int g_geq = 0, g_gt = 0;
    int li = x.l_at(rep->i), lj = x.l_at(rep->j);
    for (int k = rep->i + 1; k < rep->j; ++k) {
        int lk = x.l_at(k);
        if (li >= lk && lk >= lj) ++g_geq;
        if (li > lk && lk > lj) ++g_gt;
    }
    return 1 + g_geq + g_gt;
}

std::vector<Reflection> corresponding_reflections(const Point& x, int a, int b) {
    auto rep = down_rep(x, a, b);
    if (!rep) throw precondition_error("down-exchange is the identity here");
    Point y = swap_l_positions(x, rep->i, rep->j);
    std::set<Reflection> out;
    out.insert(*down_exchange_reflection(x, a, b));
    int li = x.l_at(rep->i), lj = x.l_at(rep->j);
    for (int k = rep->i + 1; k < rep->j; ++k) {
        int lk = x.l_at(k);
        if (!(li >= lk && lk >= lj)) continue;
        if (li > lk) {
            auto s = up_exchange_reflection(y, rep->j, k);
            if (!s) throw error("corresponding up-exchange unexpectedly undefined");
            out.insert(*s);
        }
        if (lk > lj) {
            auto s = up_exchange_reflection(y, k, rep->i);
            if (!s) throw error("corresponding up-exchange unexpectedly undefined");
            out.insert(*s);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Reflection> curve_set(const Point& x, const Point& w) {
    require_same_context(x, w);
    if (!leq(x, w)) throw order_error("curve set requires x <= w");
    std::vector<Reflection> out;
    for (const Reflection& r : reflections_at(x)) {
        auto y = reflection_apply(x, r);
        if (leq(*y, w)) out.push_back(r);
    }
    return out;
}

Reflection small_companion(const Point& x, const Reflection& r) {
    auto y = reflection_apply(x, r);
    if (!y || *y == x)
        throw precondition_error("small companion requires the reflection to move the point");
    if (is_small(x, r)) return r;
    std::optional<Reflection> s = leq(x, *y) ? up_exchange_reflection(x, r.i(), r.j())
                                             : down_exchange_reflection(x, r.i(), r.j());
    if (!s) throw error("small companion unexpectedly undefined");
    return *s;
}

}  // namespace affgr
