#pragma once

#include <map>
#include <vector>

#include "affgr/core.hpp"
#include "affgr/reflections.hpp"

namespace affgr {

/// Per-weight breakdown of a tangent space: the real part plus one entry per
/// imaginary level -h*delta.  For EXACT reports total = real + sum of levels;
/// a BOUNDS report carries the curve-count lower bound, and its real/imaginary
/// fields decompose the upper bound (total = upper).
struct TangentReport {
    Point point;
    Point ambient;
    int real_dim = 0;
    std::map<int, int> imaginary_dims;  // level h >= 1 -> dimension (zeros omitted)
    int total = 0;
    bool exact = true;
    int lower = 0;  // meaningful when !exact
    int upper = 0;
};

/// The four defined-at conditions for the real tangent xi of root (i j) + h*delta:
/// l_j > 0; t + h >= 0 for h_j = j + t*n; i + (t+h)n < h_i; i + (t+h+l_j)n >= h_i.
bool real_tangent_defined(const Point& x, const AffineRoot& root);

/// Membership of the defined xi in T_x(Y(w)): every supported matrix unit with
/// target index <= d*n must pass the transposed-tuple comparison r x <= w.
bool real_tangent_in_classical(const Point& x, const Point& w, const AffineRoot& root);

/// S(h, x) = {i : h <= l_i <= d - h}, the residues whose xi_{i,h} is defined.
std::vector<int> s_imag(int h, const Point& x);

/// S(h, x, w): the members of S(h, x) whose h transposition tests against w pass.
std::vector<int> s_imag_w(int h, const Point& x, const Point& w);

/// T_x(X(w^s)): real part = curve count, each imaginary level cut by one trace
/// relation (dimension max(|S(h,x)| - 1, 0)).
TangentReport tangent_dim_top(const Point& x);

/// T_x(X(w)) for one-string w: real part = curve count against w, imaginary
/// levels max(|S(h,x,w)| - 1, 0).
TangentReport tangent_dim_one_string(const Point& x, const Point& w);

/// dim T_x(Y(w))^u: defined real roots passing the classical test, plus the
/// full |S(h,x,w)| per level (no trace cut inside Y(w)).
int classical_u_tangent_dim(const Point& x, const Point& w);

/// General w (neither top nor one-string): lower bound from curves, upper from
/// the containment in T_x(X(w^s)) and T_x(Y(w)).
TangentReport tangent_bounds_general(const Point& x, const Point& w);

/// All directed real roots defined at x (enumeration helper).
std::vector<AffineRoot> defined_real_roots(const Point& x);

}  // namespace affgr
