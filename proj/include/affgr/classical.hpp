#pragma once

#include <vector>

#include "affgr/core.hpp"

namespace affgr {

/// Conjugate Meyer diagram of a classical Schubert variety Y(w) in G(d, V):
/// row i holds d(n-1) + i - w_i boxes.  Rows are weakly decreasing.
struct MeyerDiagram {
    std::vector<int> rows;
};

MeyerDiagram meyer_diagram(const Context& ctx, const ITuple& w);

/// dim Y(w) = total box count of the diagram.
int classical_dim(const Context& ctx, const ITuple& w);

/// A hook: rows i..i+k with |R_i| > |R_{i+1}| = ... = |R_{i+k}| > |R_{i+k+1}|
/// (k > 0; the row past the diagram counts as empty).
struct Hook {
    int i = 0;
    int k = 0;
    friend bool operator==(const Hook&, const Hook&) = default;
};

std::vector<Hook> hooks(const Context& ctx, const ITuple& w);

/// The singular point of the hook: replace w_i with w_{i+k} + 1 and re-sort.
ITuple hook_point(const Context& ctx, const ITuple& w, const Hook& hook);

/// dim T_x(Y(w)) = #{(p, q) : q in x, p not in x, r_pq x <= w}.
int classical_tangent_dim(const Context& ctx, const ITuple& x, const ITuple& w);

/// Smooth iff the reflection count equals dim Y(w).
bool classical_smooth(const Context& ctx, const ITuple& x, const ITuple& w);

/// Validate and normalize an I-tuple (strictly increasing, in [1, d*n]).
void check_ituple(const Context& ctx, const ITuple& w);

/// Replace entry q of x by p and re-sort (the transposed point r_pq x).
ITuple transpose_entry(const ITuple& x, int q, int p);

}  // namespace affgr
