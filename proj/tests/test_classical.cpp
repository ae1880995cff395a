#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "affgr/bruhat.hpp"
#include "affgr/classical.hpp"
#include "affgr/oracle.hpp"

using namespace affgr;

namespace {

// all d-subsets of [1, d*n] as sorted tuples
std::vector<ITuple> all_ituples(const Context& ctx) {
    std::vector<ITuple> out;
    ITuple cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == ctx.d) {
            out.push_back(cur);
            return;
        }
        int needed = ctx.d - static_cast<int>(cur.size());
        for (int v = next; v + needed - 1 <= ctx.dim_v; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// longest chain from the minimal tuple (d(n-1)+1, ..., dn) up to w in (I, leq)
int chain_dim_in_I(const Context& ctx, const ITuple& w) {
    auto tuples = all_ituples(ctx);
    std::vector<ITuple> below;
    for (const ITuple& t : tuples)
        if (leq(t, w)) below.push_back(t);
    // entry sums strictly decrease upward
    std::sort(below.begin(), below.end(), [](const ITuple& a, const ITuple& b) {
        return std::accumulate(a.begin(), a.end(), 0) > std::accumulate(b.begin(), b.end(), 0);
    });
    std::vector<int> depth(below.size(), 0);
    int best = 0;
    for (size_t b = 0; b < below.size(); ++b) {
        for (size_t a = 0; a < b; ++a)
            if (!(below[a] == below[b]) && leq(below[a], below[b]))
                depth[b] = std::max(depth[b], depth[a] + 1);
        best = std::max(best, depth[b]);
    }
    return best;
}

}  // namespace

TEST_CASE("meyer diagrams and classical dimension") {
    Context c41 = make_context(4, 1);
    CHECK(meyer_diagram(c41, {1, 5, 9, 13}).rows == std::vector<int>{12, 9, 6, 3});
    CHECK(classical_dim(c41, {1, 5, 9, 13}) == 30);
    CHECK(meyer_diagram(c41, {13, 14, 15, 16}).rows == std::vector<int>{0, 0, 0, 0});
    CHECK(classical_dim(c41, {13, 14, 15, 16}) == 0);
    CHECK(meyer_diagram(c41, {5, 9, 13, 14}).rows == std::vector<int>{8, 5, 2, 2});
    CHECK_THROWS_AS(meyer_diagram(c41, {1, 1, 9, 13}), point_error);
}

TEST_CASE("classical dimension equals longest chains in I") {
    Context c31 = make_context(3, 1);
    for (const ITuple& w : all_ituples(c31)) CHECK(classical_dim(c31, w) == chain_dim_in_I(c31, w));
    Context c41 = make_context(4, 1);
    CHECK(chain_dim_in_I(c41, {1, 5, 9, 13}) == 30);
}

TEST_CASE("hooks") {
    Context c41 = make_context(4, 1);
    auto hs = hooks(c41, {1, 5, 9, 13});
    REQUIRE(hs.size() == 3);
    CHECK(hs[0] == Hook{1, 1});
    CHECK(hs[1] == Hook{2, 1});
    CHECK(hs[2] == Hook{3, 1});

    // rectangle: no descent pair
    CHECK(hooks(c41, {9, 10, 11, 12}).empty());

    ITuple hp = hook_point(c41, {1, 5, 9, 13}, Hook{1, 1});
    CHECK(hp == ITuple{5, 6, 9, 13});
    CHECK(meyer_diagram(c41, hp).rows == std::vector<int>{8, 8, 6, 3});
}

TEST_CASE("classical tangent dimension and smoothness") {
    Context c41 = make_context(4, 1);
    ITuple e = {13, 14, 15, 16}, w = {1, 5, 9, 13};
    CHECK(classical_tangent_dim(c41, e, w) == 48);
    CHECK_FALSE(classical_smooth(c41, e, w));
    CHECK(classical_tangent_dim(c41, w, w) == 30);
    CHECK(classical_smooth(c41, w, w));
    CHECK_FALSE(classical_smooth(c41, hook_point(c41, w, Hook{1, 1}), w));
    CHECK_THROWS_AS(classical_tangent_dim(c41, w, e), order_error);
}

TEST_CASE("every hook point is singular") {
    Context c41 = make_context(4, 1);
    for (const ITuple& w : all_ituples(c41))
        for (const Hook& h : hooks(c41, w)) {
            ITuple hp = hook_point(c41, w, h);
            CHECK(leq(hp, w));
            CHECK_FALSE(classical_smooth(c41, hp, w));
        }
}

TEST_CASE("diagram rows render through the shared box renderer") {
    Context c41 = make_context(4, 1);
    CHECK(render_box_rows(meyer_diagram(c41, {13, 14, 15, 16}).rows) == "\n\n\n");
    CHECK(render_box_rows({2, 1}) == "[][]\n[]");
}

TEST_CASE("full Grassmannian boundary") {
    Context c41 = make_context(4, 1);
    ITuple full_top = {1, 2, 3, 4};
    for (const ITuple& x : {ITuple{13, 14, 15, 16}, ITuple{1, 5, 9, 13}, ITuple{2, 3, 11, 16}})
        CHECK(classical_tangent_dim(c41, x, full_top) == c41.d * (c41.dim_v - c41.d));
}
