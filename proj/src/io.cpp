#include "cdr/io.hpp"

namespace cdr {

json to_json(const Graph &g) {
    json j;
    j["vertices"] = json::array();
    for (const auto &v : g.vertices) j["vertices"].push_back({{"genus", v.genus}, {"degree", v.degree}});
    j["edges"] = json::array();
    for (const auto &e : g.edges) j["edges"].push_back({e[0], e[1]});
    j["legs"] = g.legs;
    return j;
}

json to_json(const Subgroup &h) {
    json rows = json::array();
    for (const auto &r : h.rows()) rows.push_back(r);
    return rows;
}

json to_json(const MonodromyGraph &mg) {
    return {{"graph", to_json(mg.graph)},
            {"delta", mg.delta()},
            {"q", mg.ambient.rank / 2},
            {"Ktilde", to_json(mg.ktilde)},
            {"phi", mg.phi}};
}

json to_json(const DivisorClass &c) { return {{"delta", c.delta}, {"class", c.coords}}; }

json to_json(const FanCone &c) {
    return {{"key", c.key},
            {"monodromy_graph", to_json(c.mg)},
            {"prefactor", to_string(c.prefactor)},
            {"right_kernel_order", c.t_order},
            {"polynomial", c.poly.to_string()}};
}

json to_json(const GluingReport &r) {
    json j{{"ok", r.ok}, {"restriction_checks", r.restriction_checks}, {"prefactor_checks", r.prefactor_checks}};
    if (!r.ok) j["counterexample"] = {{"cone", r.cone}, {"edge", r.edge}, {"detail", r.counterexample}};
    return j;
}

json to_json(const PiecewisePolynomial &pp) {
    json cones = json::array();
    for (const auto &c : pp.cones) cones.push_back(to_json(c));
    return {{"genus", pp.genus}, {"delta", pp.delta}, {"q", pp.q},       {"core", to_json(pp.k)},
            {"legs", pp.legs},   {"trunc", pp.trunc}, {"fan", cones}};
}

json to_json(const CorrelatedDRClass &c) {
    json parts = json::array();
    for (const auto &p : c.parts) {
        json cones = json::array();
        for (const auto &cc : p.cones)
            cones.push_back({{"key", cc.key}, {"aut", cc.aut}, {"class", cc.cls.to_string()}});
        parts.push_back({{"core", to_json(p.fan.k)}, {"fan", to_json(p.fan)}, {"gluing", to_json(p.gluing)}, {"classes", cones}});
    }
    return {{"genus", c.genus}, {"delta", c.delta},
            {"q", c.q},         {"a", c.a},
            {"trunc", c.trunc}, {"prefactor", c.prefactor.to_string()},
            {"parts", parts}};
}

json to_json(const InvariantRow &r) {
    return {{"g", r.g},
            {"d", r.d},
            {"delta", r.delta},
            {"a", r.a},
            {"N", to_string(r.N)},
            {"N0", to_string(r.N0)},
            {"source", r.source}};
}

json divisor_json(const SubdividedGraph &s, const Divisor &d) {
    json j = json::object();
    for (int v = 0; v < s.nv(); ++v) {
        if (d[v] == 0) continue;
        if (s.is_original(v)) {
            j[std::to_string(v)] = d[v];
        } else {
            auto [e, k] = s.interior_position(v);
            j[std::to_string(e) + ":" + std::to_string(k)] = d[v];
        }
    }
    return j;
}

json envelope(const std::string &command, json parameters, json result) {
    return {{"schema_version", schema_version},
            {"command", command},
            {"parameters", std::move(parameters)},
            {"result", std::move(result)}};
}

}  // namespace cdr
