#pragma once

#include <json.hpp>

#include "dyncol/classc.hpp"
#include "dyncol/colorcheck.hpp"
#include "dyncol/gadgets.hpp"
#include "dyncol/graph.hpp"
#include "dyncol/oracle.hpp"

// JSON views of library results. Key order is fixed, so equal inputs give
// byte-identical dumps.
namespace dyncol::report {

using Json = nlohmann::ordered_json;

Json graph_summary(const Graph& g);
Json membership(const MembershipVerdict& verdict);
Json decision(const DecideVerdict& verdict);
Json violations(const ViolationReport& report);
Json step(const ReductionStep& step);
Json reduction(const ReductionResult& result);
Json equivalence(const EquivalenceReport& report);
Json coloring(const VertexColoring& coloring);

}  // namespace dyncol::report
