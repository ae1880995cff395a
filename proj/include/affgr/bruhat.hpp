#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "affgr/core.hpp"

namespace affgr {

/// Bruhat-Chevalley order: x <= w iff x_i >= w_i for every tuple position.
bool leq(const Point& x, const Point& w);
/// Same order on raw I-tuples of equal length (transposed points may leave I^u).
bool leq(const ITuple& x, const ITuple& w);

struct EnumLimits {
    std::size_t max_points = 1'000'000;
};

/// Enumerate every point of the context, in lexicographic length-vector order.
std::vector<Point> all_points(const Context& ctx, const EnumLimits& limits = {});

/// The materialized order ideal below `top`: members plus its Hasse diagram.
struct IntervalIndex {
    Context ctx;
    Point top;
    std::vector<Point> members;                     // sorted by length vector
    std::vector<std::pair<int, int>> cover_edges;   // (lower index, upper index)
};

IntervalIndex interval_below(const Point& w, const EnumLimits& limits = {});

/// dim X(w) = number of reflections s with s.w defined, != w, and s.w <= w.
int dim_schubert(const Point& w);

/// Maximal chain length from x to w; equals dim X(w) - dim X(x).
int codim(const Point& x, const Point& w);

}  // namespace affgr
