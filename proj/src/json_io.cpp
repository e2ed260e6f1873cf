#include "gloves/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace gloves {

namespace {

// Rejects documents whose shape drifts from the published schema: every key
// must be known, every required key present.
void expect_keys(const Json& object, const char* where,
                 std::initializer_list<const char*> allowed,
                 std::initializer_list<const char*> required) {
  if (!object.is_object()) {
    throw DomainError(std::string(where) + " must be a JSON object");
  }
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) {
      throw DomainError("unknown field '" + item.key() + "' in " + where);
    }
  }
  for (const char* key : required) {
    if (!object.contains(key)) {
      throw DomainError(std::string(where) + " is missing '" + key + "'");
    }
  }
}

Json label_to_json(const BasisLabel& label) {
  Json out = Json::array();
  for (const FactorLabel& factor : label) {
    Json entry;
    if (factor.two_j == 1) {
      entry["ms"] = factor.two_m;
    } else {
      entry["l"] = factor.two_j / 2;
      entry["m"] = factor.two_m / 2;
    }
    out.push_back(entry);
  }
  return out;
}

BasisLabel label_from_json(const Json& document) {
  if (!document.is_array()) {
    throw DomainError("label must be a JSON array");
  }
  BasisLabel label;
  for (const Json& entry : document) {
    if (entry.contains("ms")) {
      expect_keys(entry, "spin label entry", {"ms"}, {"ms"});
      label.push_back(FactorLabel{1, entry["ms"].get<int>()});
    } else {
      expect_keys(entry, "orbital label entry", {"l", "m"}, {"l", "m"});
      label.push_back(
          FactorLabel{2 * entry["l"].get<int>(), 2 * entry["m"].get<int>()});
    }
  }
  return label;
}

Json angles_to_json(const EulerAngles& angles) {
  return Json::array({round_sig12(angles.alpha), round_sig12(angles.beta),
                      round_sig12(angles.gamma)});
}

}  // namespace

double round_sig12(double value) {
  return std::strtod(format_g12(value).c_str(), nullptr);
}

std::string format_g12(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

Json to_json(const SpaceSpec& space) {
  Json factors = Json::array();
  for (const FactorSpec& factor : space.factors) {
    if (factor.kind == FactorKind::Orbital) {
      factors.push_back({{"kind", "orbital"}, {"l_max", factor.l_max}});
    } else {
      factors.push_back({{"kind", "spin_half"}});
    }
  }
  return Json{{"factors", factors}, {"exchange_groups", space.exchange_groups}};
}

SpaceSpec space_from_json(const Json& document) {
  expect_keys(document, "space", {"factors", "exchange_groups"}, {"factors"});
  std::vector<FactorSpec> factors;
  for (const Json& entry : document["factors"]) {
    const std::string kind = entry.at("kind").get<std::string>();
    if (kind == "orbital") {
      expect_keys(entry, "orbital factor", {"kind", "l_max"},
                  {"kind", "l_max"});
      factors.push_back(FactorSpec::orbital(entry["l_max"].get<int>()));
    } else if (kind == "spin_half") {
      expect_keys(entry, "spin factor", {"kind"}, {"kind"});
      factors.push_back(FactorSpec::spin_half());
    } else {
      throw DomainError("unknown factor kind '" + kind + "'");
    }
  }
  std::vector<std::vector<int>> groups;
  if (document.contains("exchange_groups")) {
    groups = document["exchange_groups"].get<std::vector<std::vector<int>>>();
  }
  return SpaceSpec(std::move(factors), std::move(groups));
}

Json to_json(const StateVector& state) {
  Json terms = Json::array();
  for (const auto& [label, amplitude] : state.terms()) {
    terms.push_back({{"label", label_to_json(label)},
                     {"re", round_sig12(amplitude.real())},
                     {"im", round_sig12(amplitude.imag())}});
  }
  return Json{{"space", to_json(state.space())}, {"terms", terms}};
}

StateVector state_from_json(const Json& document) {
  expect_keys(document, "state", {"space", "terms"}, {"space", "terms"});
  StateVector state(space_from_json(document["space"]));
  for (const Json& term : document["terms"]) {
    expect_keys(term, "term", {"label", "re", "im"}, {"label", "re", "im"});
    state.accumulate(label_from_json(term["label"]),
                     cplx(term["re"].get<double>(), term["im"].get<double>()));
  }
  return state;
}

Json to_json(const LinearOperator& op) {
  Json entries = Json::array();
  for (const auto& [key, value] : op.entries()) {
    entries.push_back({{"row_label", label_to_json(key.first)},
                       {"col_label", label_to_json(key.second)},
                       {"re", round_sig12(value.real())},
                       {"im", round_sig12(value.imag())}});
  }
  return Json{{"space", to_json(op.space())}, {"entries", entries}};
}

LinearOperator operator_from_json(const Json& document) {
  expect_keys(document, "operator", {"space", "entries"},
              {"space", "entries"});
  LinearOperator op(space_from_json(document["space"]));
  for (const Json& entry : document["entries"]) {
    expect_keys(entry, "operator entry",
                {"row_label", "col_label", "re", "im"},
                {"row_label", "col_label", "re", "im"});
    op.accumulate(label_from_json(entry["row_label"]),
                  label_from_json(entry["col_label"]),
                  cplx(entry["re"].get<double>(), entry["im"].get<double>()));
  }
  return op;
}

Json blocks_document(const SpaceSpec& space) {
  const Decomposition dec = decompose(space);
  const ExistenceReport existence = glove_existence(space);
  Json blocks = Json::array();
  for (const IrrepBlock& block : dec.blocks) {
    blocks.push_back({{"L_times_2", block.two_L},
                      {"parity", block.parity},
                      {"copy", block.copy_index}});
  }
  return Json{{"space", to_json(space)},
              {"blocks", blocks},
              {"flags",
               {{"perfect_subspace_glove", existence.perfect_subspace_glove},
                {"perfect_invariant_state_glove",
                 existence.perfect_invariant_state_glove}}}};
}

Json to_json(const VerifyCheck& check) {
  return Json{{"name", check.name},
              {"value", round_sig12(check.value)},
              {"threshold", round_sig12(check.threshold)},
              {"larger_is_better", check.larger_is_better},
              {"pass", check.pass}};
}

Json verify_document(const std::string& entry_id,
                     const std::vector<VerifyCheck>& checks) {
  Json items = Json::array();
  bool all_pass = true;
  for (const VerifyCheck& check : checks) {
    items.push_back(to_json(check));
    all_pass = all_pass && check.pass;
  }
  return Json{
      {"entry_id", entry_id}, {"checks", items}, {"all_pass", all_pass}};
}

Json to_json(const TwirlReport& report) {
  return Json{
      {"entry_id", report.entry_id},
      {"trace_distance_before", round_sig12(report.trace_distance_before)},
      {"trace_distance_after", round_sig12(report.trace_distance_after)},
      {"helstrom_after", round_sig12(report.helstrom_after)},
      {"communication_qubits", round_sig12(report.communication_qubits)},
      {"monte_carlo_samples", report.monte_carlo_samples},
      {"monte_carlo_max_error", round_sig12(report.monte_carlo_max_error)}};
}

Json to_json(const SearchResult& result) {
  return Json{{"space", to_json(result.space)},
              {"best_state", to_json(result.best_state)},
              {"score", round_sig12(result.score)},
              {"upper_bound", round_sig12(result.upper_bound)},
              {"iterations", result.iterations},
              {"restarts", result.restarts},
              {"attained_bound", result.attained_bound}};
}

Json to_json(const SimReport& report) {
  Json config{{"random_rotation", report.config.random_rotation},
              {"fixed_rotation", nullptr},
              {"bob_opposite_chirality", report.config.bob_opposite_chirality}};
  if (report.config.fixed_rotation) {
    config["fixed_rotation"] = angles_to_json(*report.config.fixed_rotation);
  }
  return Json{{"entry_id", report.entry_id},
              {"config", config},
              {"trials", report.trials},
              {"successes", report.successes},
              {"frequency", round_sig12(report.frequency)},
              {"stderr", round_sig12(report.standard_error)},
              {"seed", report.seed}};
}

Json to_json(const ResourceReport& report) {
  return Json{{"entry_id", report.entry_id},
              {"particle_count", report.particle_count},
              {"factor_kinds", report.factor_kinds},
              {"qubits", round_sig12(report.qubits)},
              {"lmax", report.lmax},
              {"perfect", report.perfect}};
}

Json catalog_document() {
  Json out = Json::array();
  for (const CatalogEntry& entry : catalog()) {
    Json plus = Json::array();
    Json minus = Json::array();
    for (const StateVector& state : entry.pair.plus_basis) {
      plus.push_back(to_json(state));
    }
    for (const StateVector& state : entry.pair.minus_basis) {
      minus.push_back(to_json(state));
    }
    out.push_back({{"entry",
                    {{"id", entry.id},
                     {"perfect", entry.perfect},
                     {"notes", entry.notes}}},
                   {"plus", plus},
                   {"minus", minus}});
  }
  return out;
}

std::string sim_reports_csv(const std::vector<SimReport>& reports) {
  std::string out = "entry,config,trials,successes,frequency,stderr,seed\n";
  for (const SimReport& report : reports) {
    out += report.entry_id + "," + report.config.to_string() + "," +
           std::to_string(report.trials) + "," +
           std::to_string(report.successes) + "," +
           format_g12(report.frequency) + "," +
           format_g12(report.standard_error) + "," +
           std::to_string(report.seed) + "\n";
  }
  return out;
}

}  // namespace gloves
