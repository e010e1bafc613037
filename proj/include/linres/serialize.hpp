// JSON views of the library types. All output uses ordered_json so field
// order is stable and reports are byte-reproducible.
#pragma once

#include <json.hpp>

#include "linres/betti.hpp"
#include "linres/criterion.hpp"
#include "linres/harness.hpp"
#include "linres/quotients.hpp"

namespace linres {

nlohmann::ordered_json generators_to_json(const MonomialIdeal& ideal);
nlohmann::ordered_json criterion_to_json(const MonomialIdeal& ideal,
                                         const CriterionVerdict& verdict);
nlohmann::ordered_json betti_to_json(const BettiTable& table);
nlohmann::ordered_json tree_order_to_json(const TreeOrder& order);
nlohmann::ordered_json sweep_to_json(const SweepReport& report, bool include_timing = false);
nlohmann::ordered_json reisner_to_json(const ReisnerReport& report);

}  // namespace linres
