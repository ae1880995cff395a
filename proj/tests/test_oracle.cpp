#include "doctest.h"

#include "affgr/bruhat.hpp"
#include "affgr/loci.hpp"
#include "affgr/oracle.hpp"
#include "affgr/tangent.hpp"

using namespace affgr;
using oracle::PosetOracle;

TEST_CASE("enumeration counts") {
    CHECK(oracle::enumerate_iu(make_context(4, 1)).size() == 35);
    CHECK(oracle::enumerate_iu(make_context(2, 1)).size() == 3);
    CHECK(oracle::enumerate_iu(make_context(4, 2)).size() == 165);
    EnumLimits tight{10};
    CHECK_THROWS_AS(oracle::enumerate_iu(make_context(4, 2), tight), error);
}

TEST_CASE("longest chains") {
    Context c41 = make_context(4, 1);
    CHECK(oracle::longest_chain_dim(point_top(c41)) == 12);
    CHECK(oracle::longest_chain_codim(Point(c41, {3, 1, 0, 0}), point_top(c41)) == 2);
    CHECK(oracle::longest_chain_codim(point_e(c41), point_e(c41)) == 0);
}

TEST_CASE("cover reachability equals the componentwise order") {
    Context c31 = make_context(3, 1);
    PosetOracle po(c31);
    for (const Point& x : po.points())
        for (const Point& w : po.points())
            CHECK(po.leq_via_covers(po.index_of(x), po.index_of(w)) == leq(x, w));
}

TEST_CASE("fraction-free rank") {
    oracle::ExactMatrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.at(i, i) = 1;
    CHECK(oracle::rank_fraction_free(id3) == 3);

    oracle::ExactMatrix sing(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sing.at(i, j) = i + j;  // rank 2
    CHECK(oracle::rank_fraction_free(sing) == 2);

    oracle::ExactMatrix zero(2, 5);
    CHECK(oracle::rank_fraction_free(zero) == 0);

    oracle::ExactMatrix wide(2, 3);
    wide.at(0, 0) = 2;
    wide.at(0, 1) = 4;
    wide.at(0, 2) = 6;
    wide.at(1, 0) = 1;
    wide.at(1, 1) = 2;
    wide.at(1, 2) = 4;
    CHECK(oracle::rank_fraction_free(wide) == 2);
}

TEST_CASE("matrix tangent dimensions") {
    Context c41 = make_context(4, 1);
    Point e = point_e(c41), top = point_top(c41);
    CHECK(oracle::matrix_u_tangent_dim(e, top) == 16);
    CHECK(oracle::matrix_u_tangent_dim(top, top) == 12);
    CHECK(oracle::matrix_u_tangent_dim(e, kappa(c41, 2)) == 8);
}

TEST_CASE("dominance order") {
    Context c42 = make_context(4, 2);
    auto m1 = oracle::dominance_maximal_below(Point(c42, {4, 2, 1, 1}));
    REQUIRE(m1.size() == 1);
    CHECK(m1[0].lengths() == std::vector<int>{3, 3, 1, 1});

    auto m2 = oracle::dominance_maximal_below(Point(c42, {4, 3, 1, 0}));
    REQUIRE(m2.size() == 1);
    CHECK(m2[0].lengths() == std::vector<int>{4, 2, 2, 0});

    CHECK(oracle::dominance_maximal_below(point_e(c42)).empty());
    CHECK_THROWS_AS(oracle::dominance_maximal_below(Point(c42, {1, 3, 3, 1})),
                    precondition_error);
}

TEST_CASE("dominance equals the componentwise order on stable points") {
    for (auto [n, s] : {std::pair{4, 2}, {5, 1}}) {
        Context ctx = make_context(n, s);
        auto pts = oracle::enumerate_iu(ctx);
        for (const Point& x : pts) {
            if (!is_p_stable(x)) continue;
            for (const Point& w : pts) {
                if (!is_p_stable(w)) continue;
                CHECK(oracle::dominance_leq(x, w) == leq(x, w));
            }
        }
    }
}
