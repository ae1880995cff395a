#include "affgr/tangent.hpp"

#include <algorithm>

#include "affgr/bruhat.hpp"
#include "affgr/classical.hpp"
#include "affgr/loci.hpp"

namespace affgr {

bool real_tangent_defined(const Point& x, const AffineRoot& root) {
    const Context& ctx = x.ctx();
    if (root.i < 1 || root.i > ctx.n || root.j < 1 || root.j > ctx.n || root.i == root.j)
        throw param_error("real root residues must be distinct and in [1, n]");
    const int i = root.i, j = root.j, h = root.h;
    if (x.len(j) <= 0) return false;
    const int t = ctx.d - x.len(j);  // h_j = j + t*n
    if (t + h < 0) return false;
    if (i + (t + h) * ctx.n >= x.head(i)) return false;
    if (i + (t + h + x.len(j)) * ctx.n < x.head(i)) return false;
    return true;
}

bool real_tangent_in_classical(const Point& x, const Point& w, const AffineRoot& root) {
    require_same_context(x, w);
    if (!real_tangent_defined(x, root))
        throw precondition_error("real tangent is not defined at this point");
    if (!leq(x, w)) throw order_error("classical membership requires x <= w");
    const Context& ctx = x.ctx();
    const ITuple xt = x.i_tuple();
    const ITuple wt = w.i_tuple();
    const int t = ctx.d - x.len(root.j);
    for (int k = t; k <= ctx.d - 1; ++k) {
        int q = root.j + k * ctx.n;           // support entry of x in string j
        int p = root.i + (k + root.h) * ctx.n;  // its image index
        if (p >= x.head(root.i)) continue;      // lands inside x: no matrix unit
        if (p > ctx.dim_v) continue;            // truncated: no condition
        if (!leq(transpose_entry(xt, q, p), wt)) return false;
    }
    return true;
}

std::vector<int> s_imag(int h, const Point& x) {
    if (h < 1) throw param_error("imaginary level must be >= 1");
    std::vector<int> out;
    for (int i = 1; i <= x.ctx().n; ++i)
        if (h <= x.len(i) && x.len(i) <= x.ctx().d - h) out.push_back(i);
    return out;
}

std::vector<int> s_imag_w(int h, const Point& x, const Point& w) {
    require_same_context(x, w);
    if (!leq(x, w)) throw order_error("S(h, x, w) requires x <= w");
    const Context& ctx = x.ctx();
    const ITuple xt = x.i_tuple();
    const ITuple wt = w.i_tuple();
    std::vector<int> out;
    for (int i : s_imag(h, x)) {
        bool ok = true;
        for (int j = 0; j < h && ok; ++j) {
            int q = x.head(i) + j * ctx.n;
            int p = x.head(i) + (j - h) * ctx.n;
            ok = leq(transpose_entry(xt, q, p), wt);
        }
        if (ok) out.push_back(i);
    }
    return out;
}

std::vector<AffineRoot> defined_real_roots(const Point& x) {
    const Context& ctx = x.ctx();
    std::vector<AffineRoot> out;
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = 1; j <= ctx.n; ++j) {
            if (i == j) continue;
            for (int h = -ctx.d; h <= ctx.d; ++h) {
                AffineRoot root(i, j, h);
                if (real_tangent_defined(x, root)) out.push_back(root);
            }
        }
    return out;
}

namespace {

TangentReport make_exact(Point x, Point w, int real, std::map<int, int> imag) {
    TangentReport rep{std::move(x), std::move(w), real, std::move(imag), 0, true, 0, 0};
    rep.total = rep.real_dim;
    for (const auto& [h, dim] : rep.imaginary_dims) rep.total += dim;
    rep.lower = rep.upper = rep.total;
    return rep;
}

}  // namespace

TangentReport tangent_dim_top(const Point& x) {
    const Point top = point_top(x.ctx());
    int real = static_cast<int>(curve_set(x, top).size());
    std::map<int, int> imag;
    for (int h = 1; h <= x.ctx().d; ++h) {
        int sz = static_cast<int>(s_imag(h, x).size());
        if (sz > 1) imag[h] = sz - 1;
    }
    return make_exact(x, top, real, std::move(imag));
}

TangentReport tangent_dim_one_string(const Point& x, const Point& w) {
    require_same_context(x, w);
    if (!one_string_critical_index(w))
        throw precondition_error("ambient point does not consist of one string");
    if (!leq(x, w)) throw order_error("tangent report requires x <= w");
    int real = static_cast<int>(curve_set(x, w).size());
    std::map<int, int> imag;
    for (int h = 1; h <= x.ctx().d; ++h) {
        int sz = static_cast<int>(s_imag_w(h, x, w).size());
        if (sz > 1) imag[h] = sz - 1;
    }
    return make_exact(x, w, real, std::move(imag));
}

int classical_u_tangent_dim(const Point& x, const Point& w) {
    require_same_context(x, w);
    if (!leq(x, w)) throw order_error("tangent dimension requires x <= w");
    int real = 0;
    for (const AffineRoot& root : defined_real_roots(x))
        if (real_tangent_in_classical(x, w, root)) ++real;
    int imag = 0;
    for (int h = 1; h <= x.ctx().d; ++h) imag += static_cast<int>(s_imag_w(h, x, w).size());
    return real + imag;
}

TangentReport tangent_bounds_general(const Point& x, const Point& w) {
    require_same_context(x, w);
    if (one_string_critical_index(w))
        throw precondition_error(
            "ambient point consists of one string; use the exact one-string report");
    if (!leq(x, w)) throw order_error("tangent report requires x <= w");
    if (x == w) return make_exact(x, w, dim_schubert(w), {});

    int lower = static_cast<int>(curve_set(x, w).size());
    int real_upper = 0;
    for (const AffineRoot& root : defined_real_roots(x))
        if (real_tangent_in_classical(x, w, root)) ++real_upper;
    std::map<int, int> imag;
    for (int h = 1; h <= x.ctx().d; ++h) {
        int sz = static_cast<int>(s_imag_w(h, x, w).size());
        if (sz > 1) imag[h] = sz - 1;
    }
    TangentReport rep{x, w, real_upper, std::move(imag), 0, false, lower, 0};
    rep.total = rep.real_dim;
    for (const auto& [h, dim] : rep.imaginary_dims) rep.total += dim;
    rep.upper = rep.total;
    return rep;
}

}  // namespace affgr
