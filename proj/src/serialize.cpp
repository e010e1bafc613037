#include "linres/serialize.hpp"

namespace linres {

using nlohmann::ordered_json;

ordered_json generators_to_json(const MonomialIdeal& ideal) {
  ordered_json out = ordered_json::array();
  for (const Monomial& g : ideal.generators()) out.push_back(format_monomial(g));
  return out;
}

namespace {

ordered_json witness_to_json(const MonomialIdeal& ideal, const CriterionVerdict& verdict) {
  if (verdict.disconnected_pair) {
    return ordered_json{
        {"type", "disconnected_pair"},
        {"pair", {format_monomial(ideal.generator(verdict.disconnected_pair->at(0))),
                  format_monomial(ideal.generator(verdict.disconnected_pair->at(1)))}}};
  }
  if (verdict.bad_configuration) {
    const BadConfigWitness& w = *verdict.bad_configuration;
    ordered_json shadow = ordered_json::array();
    for (const Monomial& m : w.shadow) shadow.push_back(format_monomial(m));
    return ordered_json{{"type", "bad_configuration"},
                        {"inducer", format_monomial(w.inducer)},
                        {"shadow", shadow},
                        {"hits",
                         {{"x", format_monomial(w.hit_x)},
                          {"y", format_monomial(w.hit_y)},
                          {"z", format_monomial(w.hit_z)}}}};
  }
  return nullptr;
}

}  // namespace

ordered_json criterion_to_json(const MonomialIdeal& ideal, const CriterionVerdict& verdict) {
  return ordered_json{{"generators", generators_to_json(ideal)},
                      {"num_vars", ideal.num_vars()},
                      {"degree", ideal.degree()},
                      {"linearly_presented", verdict.linearly_presented},
                      {"linear_resolution", verdict.linear_resolution},
                      {"witness", witness_to_json(ideal, verdict)}};
}

ordered_json betti_to_json(const BettiTable& table) {
  ordered_json entries = ordered_json::array();
  for (const auto& [key, rank] : table.entries)
    entries.push_back(
        ordered_json{{"i", key.first}, {"multidegree", key.second}, {"rank", rank}});
  ordered_json graded = ordered_json::array();
  for (const auto& [ij, rank] : table.graded())
    graded.push_back(ordered_json{{"i", ij.first}, {"j", ij.second}, {"rank", rank}});
  return ordered_json{{"subject", table.subject == Subject::ideal ? "I" : "S/I"},
                      {"characteristic", table.characteristic},
                      {"entries", entries},
                      {"graded", graded},
                      {"regularity", table.regularity()},
                      {"projective_dimension", table.projective_dimension()}};
}

ordered_json tree_order_to_json(const TreeOrder& order) {
  ordered_json sequence = ordered_json::array();
  for (const Monomial& m : order.ordered_generators()) sequence.push_back(format_monomial(m));
  ordered_json levels = ordered_json::array();
  for (const auto& level : order.levels) {
    ordered_json one = ordered_json::array();
    for (int i : level) one.push_back(format_monomial(order.ideal->generator(i)));
    levels.push_back(one);
  }
  return ordered_json{
      {"order", sequence}, {"base_level", order.base_level}, {"levels", levels}};
}

ordered_json sweep_to_json(const SweepReport& report, bool include_timing) {
  ordered_json mode;
  if (report.mode.exhaustive) {
    mode = ordered_json{{"mode", "exhaustive"}};
  } else {
    mode = ordered_json{
        {"mode", "sample"}, {"samples", report.mode.samples}, {"seed", report.mode.seed}};
  }
  ordered_json mismatches = ordered_json::array();
  for (const MismatchEntry& e : report.mismatches)
    mismatches.push_back(ordered_json{{"ideal", e.ideal}, {"failed_checks", e.failed_checks}});
  ordered_json out{{"degree", report.degree},
                   {"enumeration", mode},
                   {"population", report.population},
                   {"characteristics", report.characteristics},
                   {"powers_up_to", report.powers_up_to},
                   {"counts",
                    {{"linearly_presented", report.counts.linearly_presented},
                     {"linear_resolution", report.counts.linear_resolution},
                     {"linear_quotients_found", report.counts.linear_quotients_found},
                     {"bad_configurations_found", report.counts.bad_configurations_found}}},
                   {"mismatch_count", static_cast<std::int64_t>(report.mismatches.size())},
                   {"mismatches", mismatches}};
  if (include_timing) out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

ordered_json reisner_to_json(const ReisnerReport& report) {
  ordered_json facets = ordered_json::array();
  for (const auto& f : report.facets) facets.push_back(f);
  ordered_json results = ordered_json::array();
  for (const auto& entry : report.results)
    results.push_back(ordered_json{{"characteristic", entry.characteristic},
                                   {"regularity", entry.regularity},
                                   {"linear_resolution", entry.linear_resolution}});
  return ordered_json{{"num_vars", report.ideal.num_vars()},
                      {"facets", facets},
                      {"generators", generators_to_json(report.ideal)},
                      {"results", results}};
}

}  // namespace linres
