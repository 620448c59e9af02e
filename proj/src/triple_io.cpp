#include "horn/triple_io.hpp"

namespace horn {

using nlohmann::json;

json triple_to_json(const HornTriple& t, Variant v) {
  return json{{"n", t.n},
              {"r", t.r()},
              {"I", t.I.elements()},
              {"J", t.J.elements()},
              {"K", t.K.elements()},
              {"variant", std::string(to_string(v))}};
}

HornTriple triple_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const auto set = [&](const char* key) {
    return IndexSet(j.at(key).get<std::vector<int>>(), n);
  };
  HornTriple t(n, set("I"), set("J"), set("K"));
  if (j.contains("r") && j.at("r").get<int>() != t.r())
    throw std::invalid_argument("triple_from_json: r does not match index sets");
  return t;
}

Variant variant_of_json(const json& j) {
  return variant_from_string(j.at("variant").get<std::string>());
}

json chain_to_json(const ReductionChain& chain, Variant v) {
  json steps = json::array();
  for (const auto& step : chain.steps) {
    steps.push_back(json{{"witness", {{"u", step.witness.u}, {"v", step.witness.v}, {"w", step.witness.w}}},
                         {"triple", triple_to_json(step.result, v)}});
  }
  return json{{"start", triple_to_json(chain.start, v)},
              {"steps", std::move(steps)},
              {"end", triple_to_json(chain.end(), v)},
              {"irreducible_end", true}};
}

json slack_report_to_json(const SlackReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back(json{{"n", row.triple.n},
                        {"r", row.triple.r()},
                        {"triple", triple_to_json(row.triple, Variant::classic)},
                        {"min_slack", row.min_slack},
                        {"min_scaled_slack", row.min_scaled_slack},
                        {"argmin_seed", row.argmin_seed},
                        {"beyond_theorem_range", row.beyond_theorem_range}});
  }
  return json{{"n", report.n},
              {"samples", report.samples},
              {"seed", report.seed},
              {"slack_tol", report.slack_tol},
              {"trace_tol", report.trace_tol},
              {"min_scaled_slack", report.min_scaled_slack},
              {"max_scaled_trace_error", report.max_scaled_trace_error},
              {"ok", report.ok()},
              {"rows", std::move(rows)}};
}

}  // namespace horn
