#include "doctest.h"

#include <set>

#include "affgr/bruhat.hpp"
#include "affgr/loci.hpp"
#include "affgr/oracle.hpp"
#include "affgr/patterns.hpp"

using namespace affgr;

namespace {

int count_up_moves(const Point& x, const Point& host) {
    int count = 0;
    for (const Reflection& r : reflections_at(x)) {
        Point y = reflection_apply(x, r).value();
        if (leq(x, y) && leq(y, host)) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("find_patterns") {
    Context c41 = make_context(4, 1);
    auto imag = find_patterns(point_top(c41), {PatternKind::Imaginary});
    REQUIRE(imag.size() == 3);
    CHECK(imag[0].indices == std::vector<int>{1, 2});
    CHECK(imag[1].indices == std::vector<int>{1, 3});
    CHECK(imag[2].indices == std::vector<int>{1, 4});

    Context c42 = make_context(4, 2);
    auto rf = find_patterns(Point(c42, {3, 1, 3, 1}), {PatternKind::RealFirst});
    bool found = false;
    for (const Pattern& p : rf) found |= p.indices == std::vector<int>{1, 2, 3, 4};
    CHECK(found);

    auto ef = find_patterns(Point(c41, {0, 4, 0, 0}), {PatternKind::ExcFirst});
    found = false;
    for (const Pattern& p : ef) found |= p.indices == std::vector<int>{2, 5, 6, 7};
    CHECK(found);
}

TEST_CASE("apply imaginary pattern") {
    Context c41 = make_context(4, 1);
    Pattern p{PatternKind::Imaginary, {1, 2}, point_top(c41)};
    auto pts = apply_pattern(p);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].lengths() == std::vector<int>{3, 1, 0, 0});
    CHECK(pts[0].i_tuple() == ITuple{5, 9, 13, 14});
}

TEST_CASE("apply real pattern of the first kind") {
    Context c42 = make_context(4, 2);
    Pattern p{PatternKind::RealFirst, {1, 2, 3, 4}, Point(c42, {3, 1, 3, 1})};
    auto pts = apply_pattern(p);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].lengths() == std::vector<int>{1, 1, 3, 3});
    CHECK(oracle::longest_chain_codim(pts[0], p.host) == 3);
}

TEST_CASE("apply exceptional pattern of the first kind (worked example)") {
    Context c41 = make_context(4, 1);
    Point w(c41, {0, 4, 0, 0});
    CHECK(w.l_vector() == std::vector<int>{0, 4, 0, 0, 1, 5, 1, 1});
    Pattern p{PatternKind::ExcFirst, {2, 5, 6, 7}, w};
    auto pts = apply_pattern(p);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].l_vector() == std::vector<int>{0, 3, 1, 0, 1, 4, 2, 1});
    CHECK(count_up_moves(pts[0], w) == 4);
    CHECK(codim(pts[0], w) == 3);
    CHECK(oracle::longest_chain_codim(pts[0], w) == 3);
}

TEST_CASE("real pattern of the second kind: four up-moves against codimension three") {
    Context c41 = make_context(4, 1);
    Point w(c41, {1, 2, 0, 1});
    Pattern p{PatternKind::RealSecond, {1, 2, 3, 4}, w};
    auto pts = apply_pattern(p);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].lengths() == std::vector<int>{0, 1, 1, 2});
    CHECK(codim(pts[0], w) == 3);
    CHECK(count_up_moves(pts[0], w) == 4);
    SingularWitness wit = pattern_certificate(p);
    CHECK(wit.kind == WitnessKind::ExcessCurves);
    CHECK(verify_witness(wit, w));
}

TEST_CASE("exceptional pattern of the second kind") {
    Context c41 = make_context(4, 1);
    // L_i < L_j - 1 fails: only w_{P,1} is certified
    Point w1(c41, {1, 2, 0, 1});
    Pattern p1{PatternKind::ExcSecond, {1, 2, 3, 5}, w1};
    auto pts1 = apply_pattern(p1);
    REQUIRE(pts1.size() == 2);
    CHECK(pts1[0] == point_e(c41));
    CHECK(pts1[1].lengths() == std::vector<int>{0, 2, 1, 1});
    CHECK(verify_witness(pattern_certificate(p1, 0), w1));
    CHECK_THROWS_WITH_AS(pattern_certificate(p1, 1), doctest::Contains("unavailable"),
                         precondition_error);

    // L_i < L_j - 1 holds: both points are certified
    Point w2(c41, {1, 3, 0, 0});
    Pattern p2{PatternKind::ExcSecond, {1, 2, 3, 5}, w2};
    auto pts2 = apply_pattern(p2);
    REQUIRE(pts2.size() == 2);
    CHECK(pts2[0].lengths() == std::vector<int>{2, 1, 1, 0});
    CHECK(pts2[1].lengths() == std::vector<int>{0, 2, 2, 0});
    CHECK(verify_witness(pattern_certificate(p2, 0), w2));
    CHECK(verify_witness(pattern_certificate(p2, 1), w2));
}

TEST_CASE("certificates for the pinned examples") {
    Context c41 = make_context(4, 1);
    Pattern imag{PatternKind::Imaginary, {1, 2}, point_top(c41)};
    SingularWitness wit = pattern_certificate(imag);
    CHECK(wit.kind == WitnessKind::LargeReflection);
    CHECK(verify_witness(wit, point_top(c41)));

    Context c42 = make_context(4, 2);
    Pattern rf{PatternKind::RealFirst, {1, 2, 3, 4}, Point(c42, {3, 1, 3, 1})};
    SingularWitness wit2 = pattern_certificate(rf);
    CHECK(wit2.kind == WitnessKind::ExcessCurves);
    CHECK(wit2.curves > wit2.dim);
    CHECK(verify_witness(wit2, rf.host));
}

TEST_CASE("malformed patterns are rejected") {
    Context c41 = make_context(4, 1);
    CHECK_THROWS_AS(apply_pattern(Pattern{PatternKind::Imaginary, {1, 2}, point_e(c41)}),
                    precondition_error);
    CHECK_THROWS_AS(apply_pattern(Pattern{PatternKind::RealFirst, {1, 2, 3}, point_top(c41)}),
                    precondition_error);
}

TEST_CASE("pattern points stay strictly below their host, with valid certificates") {
    for (auto [n, s] : {std::pair{4, 1}, {3, 2}, {4, 2}}) {
        Context ctx = make_context(n, s);
        for (const Point& w : oracle::enumerate_iu(ctx))
            for (const Pattern& p : find_patterns(w)) {
                auto pts = apply_pattern(p);
                for (const Point& wp : pts) {
                    CHECK(leq(wp, w));
                    CHECK_FALSE(wp == w);
                }
                for (int which = 0; which < static_cast<int>(pts.size()); ++which) {
                    if (p.kind == PatternKind::ExcSecond && which == 1 &&
                        w.l_at(p.indices[0]) >= w.l_at(p.indices[1]) - 1)
                        continue;
                    CHECK(verify_witness(pattern_certificate(p, which), w));
                }
            }
    }
}

TEST_CASE("imaginary dedup is sound at (4,2)") {
    Context ctx = make_context(4, 2);
    for (const Point& w : oracle::enumerate_iu(ctx)) {
        std::set<Point> canonical;
        for (const Pattern& p : find_patterns(w, {PatternKind::Imaginary}))
            canonical.insert(apply_pattern(p).front());
        // full index range: i <= n, i < j <= 2n, L_i > L_j + 1
        std::set<Point> full;
        for (int i = 1; i <= ctx.n; ++i)
            for (int j = i + 1; j <= 2 * ctx.n; ++j) {
                if (w.l_at(i) <= w.l_at(j) + 1) continue;
                auto lens = w.lengths();
                lens[static_cast<size_t>(i) - 1] -= 1;
                int rj = residue(ctx, j);
                lens[static_cast<size_t>(rj) - 1] += 1;
                full.insert(Point(ctx, lens));
            }
        CHECK(canonical == full);
    }
}

TEST_CASE("one-string hosts: pattern points lie below phi") {
    for (auto [n, s] : {std::pair{4, 1}, {5, 1}}) {
        Context ctx = make_context(n, s);
        for (const Point& w : oracle::enumerate_iu(ctx)) {
            auto c = one_string_critical_index(w);
            if (!c) continue;
            auto patterns = find_patterns(w);
            if (*c <= 1) {
                CHECK(patterns.empty());
                continue;
            }
            Point ph = phi(w);
            for (const Pattern& p : patterns)
                for (const Point& wp : apply_pattern(p)) CHECK(leq(wp, ph));
        }
    }
}
