#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ordalg/order/domain_report.hpp"
#include "ordalg/order/poset.hpp"

namespace ordalg::order {

/// {"elements": [labels], "leq": [[bool, ...], ...]}. Validates the order.
FinPoset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const FinPoset& p);

/// Fixed keys for the seven flags; meet_continuous is null when not applicable.
nlohmann::json report_to_json(const FinPoset& p, const DomainReport& r);

/// Labels longer than this are cut and end in "...".
inline constexpr std::size_t kDotLabelWidth = 40;

std::string truncate_label(std::string_view label);

/// Hasse diagram as a DOT digraph, one node per element and one edge per cover.
std::string to_dot(const FinPoset& p, std::string_view graph_name = "P");

}  // namespace ordalg::order
