#include "affgr/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace affgr {

Context make_context(int n, int s) {
    if (n < 2) throw param_error("context requires n >= 2, got n = " + std::to_string(n));
    if (s < 1) throw param_error("context requires s >= 1, got s = " + std::to_string(s));
    Context ctx;
    ctx.n = n;
    ctx.s = s;
    ctx.d = s * n;
    ctx.dim_v = ctx.d * n;
    return ctx;
}

int residue(const Context& ctx, int k) {
    int r = k % ctx.n;
    if (r <= 0) r += ctx.n;
    return r;
}

Point::Point(Context ctx, std::vector<int> lengths) : ctx_(ctx), lens_(std::move(lengths)) {
    if (static_cast<int>(lens_.size()) != ctx_.n)
        throw point_error("length vector must have n = " + std::to_string(ctx_.n) + " entries");
    int sum = 0;
    for (int l : lens_) {
        if (l < 0 || l > ctx_.d)
            throw point_error("string length " + std::to_string(l) + " outside [0, d]");
        sum += l;
    }
    if (sum != ctx_.d)
        throw point_error("string lengths sum to " + std::to_string(sum) +
                          ", expected d = " + std::to_string(ctx_.d));
}

int Point::l_at(int p) const {
    if (p <= ctx_.n) return len(p);
    return len(p - ctx_.n) + 1;
}

std::vector<int> Point::l_vector() const {
    std::vector<int> out(static_cast<size_t>(2 * ctx_.n));
    for (int p = 1; p <= 2 * ctx_.n; ++p) out[static_cast<size_t>(p) - 1] = l_at(p);
    return out;
}

std::vector<int> Point::c_vector() const {
    std::vector<int> out(static_cast<size_t>(ctx_.n));
    for (int i = 1; i <= ctx_.n; ++i) out[static_cast<size_t>(i) - 1] = ctx_.d - len(i);
    return out;
}

std::vector<int> Point::head_vector() const {
    std::vector<int> out(static_cast<size_t>(ctx_.n));
    for (int i = 1; i <= ctx_.n; ++i) out[static_cast<size_t>(i) - 1] = head(i);
    return out;
}

ITuple Point::i_tuple() const {
    ITuple out;
    out.reserve(static_cast<size_t>(ctx_.d));
    for (int i = 1; i <= ctx_.n; ++i)
        for (int k = ctx_.d - len(i); k <= ctx_.d - 1; ++k) out.push_back(i + k * ctx_.n);
    std::sort(out.begin(), out.end());
    return out;
}

bool operator<(const Point& a, const Point& b) {
    if (a.ctx().n != b.ctx().n) return a.ctx().n < b.ctx().n;
    if (a.ctx().s != b.ctx().s) return a.ctx().s < b.ctx().s;
    return a.lengths() < b.lengths();
}

void require_same_context(const Point& a, const Point& b) {
    if (!(a.ctx() == b.ctx()))
        throw context_error("points belong to different contexts: (n,s) = (" +
                            std::to_string(a.ctx().n) + "," + std::to_string(a.ctx().s) +
                            ") vs (" + std::to_string(b.ctx().n) + "," +
                            std::to_string(b.ctx().s) + ")");
}

Point point_from_tuple(const Context& ctx, const ITuple& tuple) {
    if (static_cast<int>(tuple.size()) != ctx.d)
        throw point_error("tuple must have d = " + std::to_string(ctx.d) + " entries, got " +
                          std::to_string(tuple.size()));
    for (size_t k = 0; k + 1 < tuple.size(); ++k)
        if (tuple[k] >= tuple[k + 1])
            throw point_error("tuple entries must be strictly increasing");
    for (int v : tuple)
        if (v < 1 || v > ctx.dim_v)
            throw point_error("tuple entry " + std::to_string(v) + " outside [1, d*n] = [1, " +
                              std::to_string(ctx.dim_v) + "]");
    // u-fixedness: every entry's +n shift stays inside |x| (or beyond d*n).
    for (int v : tuple) {
        int up = v + ctx.n;
        if (up > ctx.dim_v) continue;
        if (!std::binary_search(tuple.begin(), tuple.end(), up))
            throw point_error("tuple is not u-fixed: entry " + std::to_string(v) + " requires " +
                              std::to_string(up) + " as well");
    }
    std::vector<int> lens(static_cast<size_t>(ctx.n), 0);
    for (int v : tuple) ++lens[static_cast<size_t>(residue(ctx, v)) - 1];
    return Point(ctx, std::move(lens));
}

Point point_e(const Context& ctx) {
    return Point(ctx, std::vector<int>(static_cast<size_t>(ctx.n), ctx.s));
}

Point point_top(const Context& ctx) {
    std::vector<int> lens(static_cast<size_t>(ctx.n), 0);
    lens[0] = ctx.d;
    return Point(ctx, std::move(lens));
}

Point kappa(const Context& ctx, int c) {
    if (c < 0 || c > ctx.d)
        throw param_error("kappa index c = " + std::to_string(c) + " outside [0, d]");
    ITuple tuple(static_cast<size_t>(ctx.d));
    for (int i = 1; i <= ctx.d; ++i) {
        int v = (i <= c) ? (ctx.d - c) * (ctx.n - 1) + (i - 1) * ctx.n + 1
                         : ctx.d * (ctx.n - 1) + i;
        tuple[static_cast<size_t>(i) - 1] = v;
    }
    return point_from_tuple(ctx, tuple);
}

Representations representations(const Point& p) {
    Representations r;
    r.i_tuple = p.i_tuple();
    r.c_vector = p.c_vector();
    r.l_vector = p.l_vector();
    r.heads = p.head_vector();
    return r;
}

std::string render_box_rows(const std::vector<int>& rows) {
    std::string out;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) out += '\n';
        for (int b = 0; b < rows[i]; ++b) out += "[]";
    }
    return out;
}

std::string render_string_diagram(const Point& p, bool annotated) {
    if (!annotated) return render_box_rows(p.lengths());
    std::string out;
    for (int i = 1; i <= p.ctx().n; ++i) {
        if (i > 1) out += '\n';
        std::string row;
        for (int b = 0; b < p.len(i); ++b) row += "[]";
        if (!row.empty()) row += "  ";
        row += "h=" + std::to_string(p.head(i)) + " l=" + std::to_string(p.len(i));
        out += row;
    }
    return out;
}

std::string to_string(const ITuple& t) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ',';
        os << t[i];
    }
    os << ')';
    return os.str();
}

std::string to_string(const Point& p) {
    std::ostringstream os;
    os << "l=";
    os << to_string(p.lengths());
    return os.str();
}

}  // namespace affgr
