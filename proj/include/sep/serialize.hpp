#ifndef SEP_SERIALIZE_HPP
#define SEP_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "sep/complex.hpp"
#include "sep/gamma.hpp"

namespace sep {

// Big integers serialize as decimal strings; lossless for every consumer.
nlohmann::json to_json(const GammaReport& report);

struct ClassifyReport {
    int n = 0;
    int m = 0;
    Gamma2Classification gamma2;
    bool simple = false;
    long long polytope_edges = 0; // edges of the polytope itself
};

ClassifyReport classify_graph(const Graph& g);
nlohmann::json to_json(const ClassifyReport& report);

nlohmann::json to_json(const ContractionStep& step);
nlohmann::json to_json(const LutzNevoReport& report);

} // namespace sep

#endif
