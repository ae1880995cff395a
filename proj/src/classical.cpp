#include "affgr/classical.hpp"

#include <algorithm>

#include "affgr/bruhat.hpp"

namespace affgr {

void check_ituple(const Context& ctx, const ITuple& w) {
    if (static_cast<int>(w.size()) != ctx.d)
        throw point_error("I-tuple must have d = " + std::to_string(ctx.d) + " entries");
    for (size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] >= w[k + 1]) throw point_error("I-tuple entries must be strictly increasing");
    if (w.front() < 1 || w.back() > ctx.dim_v)
        throw point_error("I-tuple entries must lie in [1, d*n]");
}

MeyerDiagram meyer_diagram(const Context& ctx, const ITuple& w) {
    check_ituple(ctx, w);
    MeyerDiagram dia;
    dia.rows.resize(w.size());
    for (int i = 1; i <= ctx.d; ++i)
        dia.rows[static_cast<size_t>(i) - 1] = ctx.d * (ctx.n - 1) + i - w[static_cast<size_t>(i) - 1];
    for (size_t i = 0; i + 1 < dia.rows.size(); ++i)
        if (dia.rows[i] < dia.rows[i + 1]) throw point_error("Meyer diagram rows must decrease");
    return dia;
}

int classical_dim(const Context& ctx, const ITuple& w) {
    int total = 0;
    for (int r : meyer_diagram(ctx, w).rows) total += r;
    return total;
}

std::vector<Hook> hooks(const Context& ctx, const ITuple& w) {
    auto rows = meyer_diagram(ctx, w).rows;
    rows.push_back(0);  // empty row past the diagram
    auto row = [&](int i) { return rows[static_cast<size_t>(i) - 1]; };
    std::vector<Hook> out;
    for (int i = 1; i <= ctx.d - 1; ++i) {
        if (row(i) <= row(i + 1)) continue;
        int k = 1;  // plateau i+1 .. i+k
        while (i + k + 1 <= ctx.d && row(i + k + 1) == row(i + 1)) ++k;
        if (row(i + 1) > row(i + k + 1)) out.push_back(Hook{i, k});
    }
    return out;
}

ITuple hook_point(const Context& ctx, const ITuple& w, const Hook& hook) {
    if (hook.i < 1 || hook.k < 1 || hook.i + hook.k > ctx.d)
        throw param_error("hook indices outside the diagram");
    ITuple out = w;
    out[static_cast<size_t>(hook.i) - 1] = w[static_cast<size_t>(hook.i + hook.k) - 1] + 1;
    std::sort(out.begin(), out.end());
    check_ituple(ctx, out);
    return out;
}

ITuple transpose_entry(const ITuple& x, int q, int p) {
    ITuple out = x;
    for (int& v : out)
        if (v == q) {
            v = p;
            break;
        }
    std::sort(out.begin(), out.end());
    return out;
}

int classical_tangent_dim(const Context& ctx, const ITuple& x, const ITuple& w) {
    check_ituple(ctx, x);
    check_ituple(ctx, w);
    if (!leq(x, w)) throw order_error("classical tangent requires x <= w");
    int count = 0;
    for (int q : x) {
        for (int p = 1; p <= ctx.dim_v; ++p) {
            if (std::binary_search(x.begin(), x.end(), p)) continue;
            if (leq(transpose_entry(x, q, p), w)) ++count;
        }
    }
    return count;
}

bool classical_smooth(const Context& ctx, const ITuple& x, const ITuple& w) {
    return classical_tangent_dim(ctx, x, w) == classical_dim(ctx, w);
}

}  // namespace affgr
