#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "affgr/core.hpp"
#include "affgr/patterns.hpp"

namespace affgr {

/// X(w) is arc-group stable iff l_1 >= l_2 >= ... >= l_n.
bool is_p_stable(const Point& w);

/// Critical index c when w consists of one string: w_k = e_k for k > c and
/// w_1..w_c lie in a single string.  c = 0 for e; absent otherwise.
std::optional<int> one_string_critical_index(const Point& w);

/// For one-string w: x <= w iff x_c >= w_c and x_i = w_i for i > c.
bool one_string_leq(const Point& x, const Point& w, int c);

/// The generator of the singular locus of a one-string X(w), c >= 2.
Point phi(const Point& w);

struct OneStringLocus {
    std::optional<Point> phi_point;  // absent for c <= 1 (globally smooth)
    int codim = 0;
};

OneStringLocus singular_locus_one_string(const Point& w);

/// Descent pairs (i_r, j_r) of a stable w: l_{i_r+1} < l_{i_r} and j_r minimal
/// with l_{j_r} < l_{i_r} - 1; the final descent is dropped when no j exists.
struct PStablePattern {
    int i = 0;
    int j = 0;
    bool maximal = false;
};

std::vector<PStablePattern> p_stable_patterns(const Point& w);

/// The maximal singular points w_{P_r} (r maximal) of a stable X(w).
std::vector<Point> singular_locus_p_stable(const Point& w);

enum class Status { Smooth, Singular, Unknown };
enum class Method { OneStringExact, PStableExact, TopExact, CertificateOnly };

const char* to_string(Status s);
const char* to_string(Method m);

struct Classification {
    Status status = Status::Unknown;
    Method method = Method::CertificateOnly;
    std::vector<SingularWitness> witnesses;
    std::optional<Point> phi_point;     // one-string ambients
    std::vector<Point> maximal_points;  // stable ambients
};

/// Route by ambient class: exact loci for one-string and stable w, otherwise
/// certificates only (excess curves / large reflection), with UNKNOWN as the
/// honest fallback.
Classification classify_point(const Point& x, const Point& w);

struct SearchLimits {
    std::size_t max_points = 1'000'000;
};

/// Certified-singular pairs (w, x) where x lies below no pattern point of w.
std::vector<std::pair<Point, Point>> search_unexplained_singular(const Context& ctx,
                                                                 const SearchLimits& limits = {});

/// Ambients with no imaginary pattern, exact curve counts everywhere and no
/// large up move anywhere: smoothness candidates (reported, never asserted).
std::vector<Point> search_smooth_candidates(const Context& ctx, const SearchLimits& limits = {});

}  // namespace affgr
