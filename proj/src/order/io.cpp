#include "ordalg/order/io.hpp"

#include <sstream>

namespace ordalg::order {

using nlohmann::json;

FinPoset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("leq")) {
    throw PosetError(PosetErrc::Malformed, "poset JSON needs \"elements\" and \"leq\"");
  }
  std::vector<std::string> labels;
  for (const auto& e : j.at("elements")) {
    labels.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  }
  std::vector<std::vector<bool>> leq;
  for (const auto& row : j.at("leq")) {
    if (!row.is_array()) throw PosetError(PosetErrc::Malformed, "leq rows must be arrays");
    std::vector<bool> r;
    for (const auto& cell : row) {
      if (cell.is_boolean()) {
        r.push_back(cell.get<bool>());
      } else if (cell.is_number_integer()) {
        r.push_back(cell.get<int>() != 0);
      } else {
        throw PosetError(PosetErrc::Malformed, "leq entries must be booleans");
      }
    }
    leq.push_back(std::move(r));
  }
  return FinPoset::validate(std::move(labels), leq);
}

json poset_to_json(const FinPoset& p) {
  json leq = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < p.size(); ++j) row.push_back(p.leq(i, j));
    leq.push_back(std::move(row));
  }
  return {{"elements", p.labels()}, {"leq", std::move(leq)}};
}

json report_to_json(const FinPoset& p, const DomainReport& r) {
  json out;
  for (Property prop : kAllProperties) {
    auto f = r.flag(prop);
    out[to_string(prop)] = f ? json(*f) : json(nullptr);
  }
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    json jw{{"property", to_string(w.property)}, {"detail", w.detail}};
    if (w.element) jw["element"] = p.label(*w.element);
    if (w.other) jw["other"] = p.label(*w.other);
    json sets = json::array();
    for (const auto& s : w.sets) {
      json labels = json::array();
      for (std::size_t e : s) labels.push_back(p.label(e));
      sets.push_back(std::move(labels));
    }
    jw["sets"] = std::move(sets);
    witnesses.push_back(std::move(jw));
  }
  out["witnesses"] = std::move(witnesses);
  out["way_below_path"] = to_string(r.path);
  out["meet_semilattice"] = r.meet_semilattice;
  out["fin_size_bound"] = r.fin_size_bound;
  out["bounded"] = r.fin_bounded;
  out["generic_chain_search"] = r.generic_chain_search;
  out["size"] = p.size();
  return out;
}

std::string truncate_label(std::string_view label) {
  if (label.size() <= kDotLabelWidth) return std::string(label);
  return std::string(label.substr(0, kDotLabelWidth - 3)) + "...";
}

namespace {

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_dot(const FinPoset& p, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << "  n" << i << " [label=\"" << dot_escape(truncate_label(p.label(i))) << "\"];\n";
  }
  for (const auto& [lo, hi] : hasse(p)) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ordalg::order
