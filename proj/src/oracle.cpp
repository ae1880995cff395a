#include "affgr/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "affgr/loci.hpp"

namespace affgr::oracle {

std::vector<Point> enumerate_iu(const Context& ctx, const EnumLimits& limits) {
    std::vector<Point> out;
    // depth-first composition generation, lexicographic
    std::vector<int> cur(static_cast<size_t>(ctx.n));
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (out.size() > limits.max_points)
            throw error("enumeration exceeds the configured point bound");
        if (pos + 1 == ctx.n) {
            cur[static_cast<size_t>(pos)] = rest;
            out.emplace_back(ctx, cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, ctx.d);
    return out;
}

PosetOracle::PosetOracle(const Context& ctx, const EnumLimits& limits)
    : ctx_(ctx), points_(enumerate_iu(ctx, limits)) {
    std::sort(points_.begin(), points_.end());
    const int m = static_cast<int>(points_.size());
    words_ = (m + 63) / 64;
    below_.assign(static_cast<size_t>(m) * words_, 0);
    std::vector<ITuple> tuples(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) tuples[static_cast<size_t>(a)] = points_[static_cast<size_t>(a)].i_tuple();
    std::vector<std::uint64_t> above(static_cast<size_t>(m) * words_, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            if (leq(tuples[static_cast<size_t>(a)], tuples[static_cast<size_t>(b)])) {
                below_[static_cast<size_t>(b) * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
                above[static_cast<size_t>(a) * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
            }
        }
    for (int b = 0; b < m; ++b)
        for (int a = 0; a < m; ++a) {
            if (a == b || !less(a, b)) continue;
            bool between = false;
            for (int wd = 0; wd < words_ && !between; ++wd)
                if (below_[static_cast<size_t>(b) * words_ + wd] &
                    above[static_cast<size_t>(a) * words_ + wd])
                    between = true;
            if (!between) covers_.emplace_back(a, b);
        }
    std::sort(covers_.begin(), covers_.end());
    finish();
}

PosetOracle::PosetOracle(const Context& ctx, std::vector<Point> members,
                         std::vector<std::pair<int, int>> covers)
    : ctx_(ctx), points_(std::move(members)), covers_(std::move(covers)) {
    const int m = static_cast<int>(points_.size());
    words_ = (m + 63) / 64;
    below_.assign(static_cast<size_t>(m) * words_, 0);
    std::vector<ITuple> tuples(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) tuples[static_cast<size_t>(a)] = points_[static_cast<size_t>(a)].i_tuple();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && leq(tuples[static_cast<size_t>(a)], tuples[static_cast<size_t>(b)]))
                below_[static_cast<size_t>(b) * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
    finish();
}

void PosetOracle::finish() {
    const int m = static_cast<int>(points_.size());
    // upward cover-reachability, processed from the top of a linear extension
    reach_.assign(static_cast<size_t>(m) * words_, 0);
    std::vector<std::vector<int>> up(static_cast<size_t>(m));
    for (auto [a, b] : covers_) up[static_cast<size_t>(a)].push_back(b);
    // linear extension: sort indices by tuple-entry sum, descending = bottom first;
    // process top-down so successors are complete
    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::vector<long> key(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) {
        long sum = 0;
        for (int v : points_[static_cast<size_t>(a)].i_tuple()) sum += v;
        key[static_cast<size_t>(a)] = sum;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return key[static_cast<size_t>(a)] < key[static_cast<size_t>(b)];
    });  // ascending sum = top first
    for (int a : order) {
        reach_[static_cast<size_t>(a) * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
        for (int b : up[static_cast<size_t>(a)])
            for (int wd = 0; wd < words_; ++wd)
                reach_[static_cast<size_t>(a) * words_ + wd] |=
                    reach_[static_cast<size_t>(b) * words_ + wd];
    }
    // longest chain from e, processed bottom-up over the strict relation
    depth_.assign(static_cast<size_t>(m), 0);
    std::vector<int> rev(order.rbegin(), order.rend());  // descending sum = bottom first
    for (int b : rev) {
        int best = 0;
        for (int wd = 0; wd < words_; ++wd) {
            std::uint64_t bits = below_[static_cast<size_t>(b) * words_ + wd];
            while (bits) {
                int a = wd * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                best = std::max(best, depth_[static_cast<size_t>(a)] + 1);
            }
        }
        depth_[static_cast<size_t>(b)] = best;
    }
}

int PosetOracle::index_of(const Point& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || !(*it == p)) throw error("point not present in the poset oracle");
    return static_cast<int>(it - points_.begin());
}

bool PosetOracle::less(int a, int b) const {
    return below_[static_cast<size_t>(b) * words_ + a / 64] >> (a % 64) & 1;
}

bool PosetOracle::leq_via_covers(int a, int b) const {
    return reach_[static_cast<size_t>(a) * words_ + b / 64] >> (b % 64) & 1;
}

int PosetOracle::longest_chain_codim(int x, int w) const {
    if (!(x == w || less(x, w))) throw order_error("chain codim requires x <= w");
    if (x == w) return 0;
    // longest path from x to w through the strict relation
    const int m = static_cast<int>(points_.size());
    std::vector<int> best(static_cast<size_t>(m), -1);
    best[static_cast<size_t>(x)] = 0;
    // process by increasing depth
    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return depth_[static_cast<size_t>(a)] < depth_[static_cast<size_t>(b)]; });
    for (int b : order) {
        if (b != x && !(less(x, b) && (b == w || less(b, w)))) continue;
        for (int wd = 0; wd < words_; ++wd) {
            std::uint64_t bits = below_[static_cast<size_t>(b) * words_ + wd];
            while (bits) {
                int a = wd * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                if (best[static_cast<size_t>(a)] >= 0)
                    best[static_cast<size_t>(b)] = std::max(best[static_cast<size_t>(b)],
                                                            best[static_cast<size_t>(a)] + 1);
            }
        }
    }
    return best[static_cast<size_t>(w)];
}

int longest_chain_dim(const Point& w) {
    PosetOracle po(w.ctx());
    return po.depth(po.index_of(w));
}

int longest_chain_codim(const Point& x, const Point& w) {
    require_same_context(x, w);
    PosetOracle po(x.ctx());
    return po.longest_chain_codim(po.index_of(x), po.index_of(w));
}

bool leq_via_covers(const Point& x, const Point& w) {
    require_same_context(x, w);
    PosetOracle po(x.ctx());
    return po.leq_via_covers(po.index_of(x), po.index_of(w));
}

int rank_fraction_free(ExactMatrix m) {
    int rank = 0;
    long long prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        const long long pv = m.at(rank, col);
        for (int r = rank + 1; r < m.rows; ++r) {
            const long long f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c) {
                __int128 v = static_cast<__int128>(m.at(r, c)) * pv -
                             static_cast<__int128>(f) * m.at(rank, c);
                v /= prev;
                if (v > INT64_MAX || v < INT64_MIN)
                    throw error("fraction-free elimination overflow");
                m.at(r, c) = static_cast<long long>(v);
            }
        }
        prev = pv;
        ++rank;
    }
    return rank;
}

long matrix_u_tangent_dim(const Point& x, const Point& w) {
    require_same_context(x, w);
    if (!leq(x, w)) throw order_error("tangent dimension requires x <= w");
    const Context& ctx = x.ctx();
    const ITuple xt = x.i_tuple();
    const ITuple wt = w.i_tuple();
    auto in_x = [&](int v) { return std::binary_search(xt.begin(), xt.end(), v); };

    // admissible matrix units E_pq spanning T_x(Y(w))
    std::map<std::pair<int, int>, int> var;
    for (int q : xt)
        for (int p = 1; p <= ctx.dim_v; ++p) {
            if (in_x(p)) continue;
            ITuple moved = xt;
            for (int& v : moved)
                if (v == q) v = p;
            std::sort(moved.begin(), moved.end());
            if (leq(moved, wt)) var.emplace(std::pair{p, q}, static_cast<int>(var.size()));
        }

    // shift-equivariance: tau.xi = xi.tau on every basis vector of x
    std::vector<std::array<int, 2>> eqs;  // pairs of var indices (-1 = absent), lhs - rhs = 0
    for (int q : xt)
        for (int p = 1; p <= ctx.dim_v; ++p) {
            if (in_x(p)) continue;
            int lhs = -1, rhs = -1;
            if (p - ctx.n >= 1 && !in_x(p - ctx.n)) {
                auto it = var.find({p - ctx.n, q});
                if (it != var.end()) lhs = it->second;
            }
            if (q + ctx.n <= ctx.dim_v) {
                auto it = var.find({p, q + ctx.n});
                if (it != var.end()) rhs = it->second;
            }
            if (lhs >= 0 || rhs >= 0) eqs.push_back({lhs, rhs});
        }

    ExactMatrix m(static_cast<int>(eqs.size()), static_cast<int>(var.size()));
    for (int r = 0; r < m.rows; ++r) {
        if (eqs[static_cast<size_t>(r)][0] >= 0) m.at(r, eqs[static_cast<size_t>(r)][0]) += 1;
        if (eqs[static_cast<size_t>(r)][1] >= 0) m.at(r, eqs[static_cast<size_t>(r)][1]) -= 1;
    }
    return static_cast<long>(var.size()) - rank_fraction_free(std::move(m));
}

bool dominance_leq(const Point& x, const Point& w) {
    require_same_context(x, w);
    if (!is_p_stable(x) || !is_p_stable(w))
        throw precondition_error("dominance order applies to stable points only");
    int sx = 0, sw = 0;
    for (int k = 1; k <= x.ctx().n; ++k) {
        sx += x.len(k);
        sw += w.len(k);
        if (sx > sw) return false;
    }
    return true;
}

std::vector<Point> dominance_maximal_below(const Point& w) {
    if (!is_p_stable(w)) throw precondition_error("ambient is not stable");
    const Context& ctx = w.ctx();
    // partitions of d into at most n parts
    std::vector<Point> candidates;
    std::vector<int> part(static_cast<size_t>(ctx.n), 0);
    auto rec = [&](auto&& self, int pos, int rest, int cap) -> void {
        if (pos + 1 == ctx.n) {
            if (rest > cap) return;
            part[static_cast<size_t>(pos)] = rest;
            Point p(ctx, part);
            if (!(p == w) && dominance_leq(p, w)) candidates.push_back(p);
            return;
        }
        for (int v = std::min(rest, cap); v >= (rest + ctx.n - pos - 1) / (ctx.n - pos); --v) {
            part[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rest - v, v);
        }
    };
    rec(rec, 0, ctx.d, ctx.d);
    std::vector<Point> out;
    for (const Point& p : candidates) {
        bool maximal = true;
        for (const Point& q : candidates)
            if (!(q == p) && dominance_leq(p, q)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace affgr::oracle
