#include "sep/serialize.hpp"

namespace sep {

nlohmann::json to_json(const GammaReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["dim"] = report.dim;
    j["f"] = to_decimal(report.f);
    j["h"] = to_decimal(report.h);
    j["gamma"] = to_decimal(report.gamma);
    j["method"] = report.method;
    if (report.order_seed) j["order_seed"] = *report.order_seed;
    return j;
}

ClassifyReport classify_graph(const Graph& g) {
    ClassifyReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.gamma2 = classify_gamma2_zero(g);
    r.simple = g.edge_count() > 0 && is_simple_polytope(g);
    PolytopeEdgeTester tester(g);
    int ids = 2 * g.edge_count();
    for (int x = 0; x < ids; ++x)
        for (int y = x + 1; y < ids; ++y)
            if (x / 2 != y / 2 && tester.is_edge(from_id(x), from_id(y))) ++r.polytope_edges;
    return r;
}

nlohmann::json to_json(const ClassifyReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["gamma2_zero"] = report.gamma2.zero;
    j["witness"] = report.gamma2.witness;
    j["simple"] = report.simple;
    j["polytope_edges"] = report.polytope_edges;
    return j;
}

nlohmann::json to_json(const ContractionStep& step) {
    nlohmann::json j;
    j["step"] = step.index;
    j["kept"] = step.kept;
    j["removed"] = step.removed;
    j["link_check"] = step.link_check;
    j["flag_check"] = step.flag_check;
    j["sphere_check"] = step.sphere_check;
    j["gamma_step_check"] = step.gamma_step_check;
    j["f"] = to_decimal(step.f);
    j["gamma"] = to_decimal(step.gamma);
    return j;
}

nlohmann::json to_json(const LutzNevoReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["initial_f"] = to_decimal(report.initial_f);
    j["initial_gamma"] = to_decimal(report.initial_gamma);
    j["steps"] = nlohmann::json::array();
    for (const auto& s : report.steps) j["steps"].push_back(to_json(s));
    j["waypoints_check"] = report.waypoints_check;
    j["final_crosspolytope"] = report.final_crosspolytope;
    return j;
}

} // namespace sep
