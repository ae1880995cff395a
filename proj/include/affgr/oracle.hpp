#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "affgr/bruhat.hpp"
#include "affgr/core.hpp"

namespace affgr::oracle {

/// All points of the context (independent composition enumeration).
std::vector<Point> enumerate_iu(const Context& ctx, const EnumLimits& limits = {});

/// The fully materialized poset of a context: relation, covers, chain depths
/// and cover-reachability, all derived from componentwise comparison alone.
class PosetOracle {
public:
    explicit PosetOracle(const Context& ctx, const EnumLimits& limits = {});
    PosetOracle(const Context& ctx, std::vector<Point> members,
                std::vector<std::pair<int, int>> covers);

    const Context& ctx() const { return ctx_; }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<std::pair<int, int>>& cover_edges() const { return covers_; }

    int index_of(const Point& p) const;
    bool less(int a, int b) const;  // strict componentwise order
    bool leq_via_covers(int a, int b) const;
    /// Longest chain length from the minimal point e.
    int depth(int a) const { return depth_[static_cast<size_t>(a)]; }
    int longest_chain_codim(int x, int w) const;

private:
    void finish();

    Context ctx_;
    std::vector<Point> points_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<int> depth_;
    int words_ = 0;
    std::vector<std::uint64_t> below_;  // strict relation bitsets
    std::vector<std::uint64_t> reach_;  // reflexive cover-reachability (upward)
};

/// One-shot conveniences (each builds the poset of the point's context).
int longest_chain_dim(const Point& w);
int longest_chain_codim(const Point& x, const Point& w);
bool leq_via_covers(const Point& x, const Point& w);

/// Exact integer matrix with fraction-free (Bareiss) rank.
struct ExactMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    ExactMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

int rank_fraction_free(ExactMatrix m);

/// dim T_x(Y(w))^u by exact rank: span of the admissible matrix units E_pq,
/// cut by the shift-equivariance equations.
long matrix_u_tangent_dim(const Point& x, const Point& w);

/// Dominance (partial-sum) order on stable points.
bool dominance_leq(const Point& x, const Point& w);

/// Maximal elements, under dominance, of the stable points strictly below w.
std::vector<Point> dominance_maximal_below(const Point& w);

}  // namespace affgr::oracle
