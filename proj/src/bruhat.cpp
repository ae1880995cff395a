#include "affgr/bruhat.hpp"

#include <algorithm>
#include <cstdint>

#include "affgr/reflections.hpp"

namespace affgr {

bool leq(const ITuple& x, const ITuple& w) {
    if (x.size() != w.size()) throw order_error("tuples of different length are incomparable");
    for (size_t k = 0; k < x.size(); ++k)
        if (x[k] < w[k]) return false;
    return true;
}

bool leq(const Point& x, const Point& w) {
    require_same_context(x, w);
    return leq(x.i_tuple(), w.i_tuple());
}

namespace {

std::uint64_t composition_count(int d, int n) {
    // C(d + n - 1, n - 1), clamped well past any usable bound
    const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 80;
    unsigned __int128 r = 1;
    for (int k = 1; k <= n - 1; ++k) {
        r = r * static_cast<unsigned>(d + k) / static_cast<unsigned>(k);
        if (r > cap) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace

std::vector<Point> all_points(const Context& ctx, const EnumLimits& limits) {
    if (composition_count(ctx.d, ctx.n) > limits.max_points)
        throw error("context has more than " + std::to_string(limits.max_points) +
                    " points; raise the enumeration bound to proceed");
    std::vector<Point> out;
    std::vector<int> lens(static_cast<size_t>(ctx.n), 0);
    // lexicographic order over length vectors
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == ctx.n - 1) {
            lens[static_cast<size_t>(pos)] = rest;
            out.emplace_back(ctx, lens);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            lens[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, ctx.d);
    return out;
}

IntervalIndex interval_below(const Point& w, const EnumLimits& limits) {
    const Context& ctx = w.ctx();
    IntervalIndex idx{ctx, w, {}, {}};
    ITuple wt = w.i_tuple();
    for (Point& p : all_points(ctx, limits))
        if (leq(p.i_tuple(), wt)) idx.members.push_back(std::move(p));
    std::sort(idx.members.begin(), idx.members.end());

    const int m = static_cast<int>(idx.members.size());
    std::vector<ITuple> tuples(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) tuples[static_cast<size_t>(a)] = idx.members[static_cast<size_t>(a)].i_tuple();

    // strict relation, as bitsets: below[b] holds a iff a < b, above[a] holds b iff a < b
    const int words = (m + 63) / 64;
    std::vector<std::uint64_t> below(static_cast<size_t>(m) * static_cast<size_t>(words), 0);
    std::vector<std::uint64_t> above(static_cast<size_t>(m) * static_cast<size_t>(words), 0);
    auto set_bit = [&](std::vector<std::uint64_t>& bs, int row, int col) {
        bs[static_cast<size_t>(row) * static_cast<size_t>(words) + static_cast<size_t>(col / 64)] |=
            std::uint64_t{1} << (col % 64);
    };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            if (leq(tuples[static_cast<size_t>(a)], tuples[static_cast<size_t>(b)])) {
                set_bit(below, b, a);
                set_bit(above, a, b);
            }
        }
    // transitive reduction: a is covered by b iff nothing sits strictly between
    for (int b = 0; b < m; ++b) {
        const std::uint64_t* row_b = &below[static_cast<size_t>(b) * static_cast<size_t>(words)];
        for (int a = 0; a < m; ++a) {
            if (a == b) continue;
            if (!(row_b[a / 64] >> (a % 64) & 1)) continue;
            const std::uint64_t* row_a = &above[static_cast<size_t>(a) * static_cast<size_t>(words)];
            bool between = false;
            for (int wd = 0; wd < words; ++wd)
                if (row_b[wd] & row_a[wd]) {
                    between = true;
                    break;
                }
            if (!between) idx.cover_edges.emplace_back(a, b);
        }
    }
    std::sort(idx.cover_edges.begin(), idx.cover_edges.end());
    return idx;
}

int dim_schubert(const Point& w) {
    return static_cast<int>(curve_set(w, w).size());
}

int codim(const Point& x, const Point& w) {
    require_same_context(x, w);
    if (!leq(x, w)) throw order_error("codim requires x <= w");
    return dim_schubert(w) - dim_schubert(x);
}

}  // namespace affgr
