#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace affgr {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Bad scalar parameters (n, s, c, residue indices).
struct param_error : error { using error::error; };
/// Malformed I-tuples or length vectors.
struct point_error : error { using error::error; };
/// Mixing values from different (n, s) contexts.
struct context_error : error { using error::error; };
/// Order queries on incomparable points.
struct order_error : error { using error::error; };
/// Violated operation preconditions.
struct precondition_error : error { using error::error; };

/// Ambient parameters: the Grassmannian G(d, V) with d = s*n, dim V = d*n.
struct Context {
    int n = 0;
    int s = 0;
    int d = 0;
    int dim_v = 0;

    friend bool operator==(const Context&, const Context&) = default;
};

Context make_context(int n, int s);

/// A general torus-fixed point of G(d, V): d strictly increasing entries in [1, d*n].
using ITuple = std::vector<int>;

/// The unique value in [1, n] congruent to k mod n (multiples of n map to n).
int residue(const Context& ctx, int k);

/// A u-fixed point (u = 1 + t), canonically its string-length vector l_1..l_n.
///
/// Everything else (I-tuple, c-vector, L-vector, heads) is a derived view.
/// Immutable; carries its Context and rejects cross-context use downstream.
class Point {
public:
    Point(Context ctx, std::vector<int> lengths);

    const Context& ctx() const { return ctx_; }
    const std::vector<int>& lengths() const { return lens_; }

    /// l_i, 1-based residue index.
    int len(int i) const { return lens_[static_cast<size_t>(i) - 1]; }
    /// Head of string i: h_i = i + (d - l_i)*n; exceeds d*n exactly when l_i = 0.
    int head(int i) const { return i + (ctx_.d - len(i)) * ctx_.n; }
    /// L(x)_p for p in [1, 2n]: (l_1..l_n, l_1+1..l_n+1).
    int l_at(int p) const;

    std::vector<int> l_vector() const;
    std::vector<int> c_vector() const;
    std::vector<int> head_vector() const;
    ITuple i_tuple() const;

    friend bool operator==(const Point&, const Point&) = default;

private:
    Context ctx_;
    std::vector<int> lens_;
};

/// Total order (context params, then lengths lexicographically); used for
/// deterministic sorted collections.
bool operator<(const Point& a, const Point& b);

void require_same_context(const Point& a, const Point& b);

/// Parse a d-tuple as a point of I^u.  Rejects non-increasing tuples,
/// out-of-range entries and tuples that are not closed under +n (not u-fixed),
/// each with its own diagnostic.
Point point_from_tuple(const Context& ctx, const ITuple& tuple);

/// The minimal point e (l = (s,...,s); entries d(n-1)+1 .. d*n).
Point point_e(const Context& ctx);
/// The top point w^s (l = (d,0,...,0); entries 1, n+1, ..., (d-1)n+1).
Point point_top(const Context& ctx);
/// kappa^c, the maximal one-string point with critical index c (0 <= c <= d).
/// kappa(0) = e and kappa(d) = top.
Point kappa(const Context& ctx, int c);

struct Representations {
    ITuple i_tuple;
    std::vector<int> c_vector;
    std::vector<int> l_vector;
    std::vector<int> heads;
};

Representations representations(const Point& p);

/// Row i holds l_i boxes.  Annotated mode appends h_i and l_i per row.
std::string render_string_diagram(const Point& p, bool annotated = false);

/// Shared box-row renderer (also used for Meyer diagrams).
std::string render_box_rows(const std::vector<int>& rows);

std::string to_string(const Point& p);
std::string to_string(const ITuple& t);

}  // namespace affgr
