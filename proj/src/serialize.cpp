#include "affgr/serialize.hpp"

namespace affgr {

json to_json(const Context& ctx) {
    return json{{"n", ctx.n}, {"s", ctx.s}, {"d", ctx.d}, {"dim_v", ctx.dim_v}};
}

json to_json(const Point& p) {
    return json{{"n", p.ctx().n}, {"s", p.ctx().s}, {"lengths", p.lengths()}};
}

Point point_from_json(const json& j) {
    Context ctx = make_context(j.at("n").get<int>(), j.at("s").get<int>());
    return Point(ctx, j.at("lengths").get<std::vector<int>>());
}

json to_json(const Reflection& r) {
    return json{{"i", r.i()}, {"j", r.j()}, {"h", r.h()}};
}

json to_json(const std::vector<Reflection>& rs) {
    json arr = json::array();
    for (const Reflection& r : rs) arr.push_back(to_json(r));
    return arr;
}

json to_json(const IntervalIndex& idx) {
    json members = json::array();
    for (const Point& p : idx.members) members.push_back(p.lengths());
    json edges = json::array();
    for (auto [a, b] : idx.cover_edges) edges.push_back(json::array({a, b}));
    return json{{"n", idx.ctx.n},
                {"s", idx.ctx.s},
                {"top", idx.top.lengths()},
                {"members", members},
                {"cover_edges", edges}};
}

IntervalIndex interval_from_json(const json& j) {
    Context ctx = make_context(j.at("n").get<int>(), j.at("s").get<int>());
    IntervalIndex idx{ctx, Point(ctx, j.at("top").get<std::vector<int>>()), {}, {}};
    for (const auto& m : j.at("members")) idx.members.emplace_back(ctx, m.get<std::vector<int>>());
    for (const auto& e : j.at("cover_edges"))
        idx.cover_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return idx;
}

json to_json(const TangentReport& rep) {
    json imag = json::object();
    for (const auto& [h, dim] : rep.imaginary_dims) imag[std::to_string(h)] = dim;
    json out{{"point", to_json(rep.point)},
             {"ambient", to_json(rep.ambient)},
             {"real_dim", rep.real_dim},
             {"imaginary_dims", imag},
             {"total", rep.total}};
    if (rep.exact)
        out["exactness"] = "EXACT";
    else
        out["exactness"] = json{{"lower", rep.lower}, {"upper", rep.upper}};
    return out;
}

json to_json(const Pattern& p) {
    json out{{"kind", to_string(p.kind)}, {"indices", p.indices}, {"host", to_json(p.host)}};
    json points = json::array();
    for (const Point& wp : apply_pattern(p)) {
        points.push_back(json{{"lengths", wp.lengths()}, {"l_vector", wp.l_vector()}});
    }
    out["points"] = points;
    return out;
}

json to_json(const SingularWitness& w) {
    json out{{"kind", to_string(w.kind)}, {"point", to_json(w.point)}};
    switch (w.kind) {
        case WitnessKind::ExcessCurves:
            out["curves"] = w.curves;
            out["dim"] = w.dim;
            break;
        case WitnessKind::LargeReflection:
            out["reflection"] = to_json(*w.reflection);
            break;
        case WitnessKind::ImaginaryTangent:
            out["residues"] = json::array({w.residues.first, w.residues.second});
            out["level"] = w.level;
            break;
    }
    return out;
}

json to_json(const Classification& c) {
    json out{{"status", to_string(c.status)}, {"method", to_string(c.method)}};
    json wits = json::array();
    for (const auto& w : c.witnesses) wits.push_back(to_json(w));
    out["witnesses"] = wits;
    if (c.phi_point) out["phi_point"] = to_json(*c.phi_point);
    if (!c.maximal_points.empty()) {
        json mp = json::array();
        for (const Point& p : c.maximal_points) mp.push_back(to_json(p));
        out["maximal_points"] = mp;
    }
    return out;
}

}  // namespace affgr
