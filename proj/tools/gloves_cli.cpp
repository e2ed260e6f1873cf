#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gloves/json_io.hpp"

using namespace gloves;

namespace {

// Command-line misuse distinct from domain errors: exit 2, not 1.
struct UsageError {
  std::string message;
};

enum class Format { Json, Csv, Table };

Format resolve_format(const std::string& flag) {
  if (flag == "json") return Format::Json;
  if (flag == "csv") return Format::Csv;
  if (flag == "table") return Format::Table;
  // unset: table for humans, json for pipes
  return isatty(fileno(stdout)) ? Format::Table : Format::Json;
}

bool color_enabled() {
  return isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
}

std::string status_word(bool pass) {
  if (!color_enabled()) return pass ? "PASS" : "FAIL";
  return pass ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

std::string half_string(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string label_string(const BasisLabel& label) {
  std::string out;
  for (const FactorLabel& factor : label) {
    if (!out.empty()) out += " ";
    if (factor.two_j == 1) {
      out += factor.two_m == 1 ? "up" : "down";
    } else {
      out += "Y(" + std::to_string(factor.two_j / 2) + "," +
             std::to_string(factor.two_m / 2) + ")";
    }
  }
  return out;
}

std::string pad(const std::string& text, std::size_t width) {
  std::string out = text;
  while (out.size() < width) out += ' ';
  return out;
}

// "orb1,orb1,spin" with "orbN*K" declaring K exchangeable copies.
SpaceSpec parse_space(const std::string& text) {
  std::vector<FactorSpec> factors;
  std::vector<std::vector<int>> groups;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (token.empty()) {
      throw UsageError{"empty token in --space '" + text + "'"};
    }

    std::string head = token;
    int count = 1;
    const std::size_t star = token.find('*');
    if (star != std::string::npos) {
      head = token.substr(0, star);
      try {
        count = std::stoi(token.substr(star + 1));
      } catch (...) {
        throw UsageError{"bad multiplicity in --space token '" + token + "'"};
      }
      if (count < 1) {
        throw UsageError{"bad multiplicity in --space token '" + token + "'"};
      }
    }

    if (head == "spin") {
      for (int i = 0; i < count; ++i) factors.push_back(FactorSpec::spin_half());
    } else if (head.rfind("orb", 0) == 0) {
      int l_max = 0;
      try {
        l_max = std::stoi(head.substr(3));
      } catch (...) {
        throw UsageError{"bad --space token '" + token +
                         "' (expected orbN, spin, or orbN*K)"};
      }
      std::vector<int> group;
      for (int i = 0; i < count; ++i) {
        group.push_back(static_cast<int>(factors.size()));
        factors.push_back(FactorSpec::orbital(l_max));
      }
      if (count > 1) groups.push_back(group);
    } else {
      throw UsageError{"bad --space token '" + token +
                       "' (expected orbN, spin, or orbN*K)"};
    }
  }
  return SpaceSpec(std::move(factors), std::move(groups));
}

EulerAngles parse_angles(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    try {
      std::size_t used = 0;
      values.push_back(std::stod(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (...) {
      throw UsageError{"--fixed-rotation expects three numbers A,B,C"};
    }
  }
  if (values.size() != 3) {
    throw UsageError{"--fixed-rotation expects three numbers A,B,C"};
  }
  return EulerAngles{values[0], values[1], values[2]};
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + out_path + "'");
  file << text;
  return 0;
}

std::string json_text(const Json& document) { return document.dump(2) + "\n"; }

std::string kind_word(GloveKind kind) {
  return kind == GloveKind::StatePair ? "states" : "subspaces";
}

// --- table renderers ---------------------------------------------------

std::string catalog_table() {
  std::string out = pad("id", 26) + pad("kind", 11) + pad("particles", 11) +
                    pad("rank", 6) + pad("perfect", 9) + "notes\n";
  for (const CatalogEntry& entry : catalog()) {
    out += pad(entry.id, 26) + pad(kind_word(entry.pair.kind), 11) +
           pad(std::to_string(entry.particle_count), 11) +
           pad(std::to_string(entry.pair.rank()), 6) +
           pad(entry.perfect ? "yes" : "no", 9) + entry.notes + "\n";
  }
  return out;
}

std::string verify_table(const std::string& entry_id,
                         const std::vector<VerifyCheck>& checks) {
  std::string out = "entry " + entry_id + "\n";
  out += "  " + pad("check", 26) + pad("value", 20) + pad("threshold", 14) +
         "status\n";
  bool all_pass = true;
  for (const VerifyCheck& check : checks) {
    out += "  " + pad(check.name, 26) + pad(format_g12(check.value), 20) +
           pad((check.larger_is_better ? ">= " : "<= ") +
                   format_g12(check.threshold),
               14) +
           status_word(check.pass) + "\n";
    all_pass = all_pass && check.pass;
  }
  out += all_pass ? "  all checks pass\n" : "  CHECKS FAILED\n";
  return out;
}

std::string decompose_table(const SpaceSpec& space) {
  const Decomposition dec = decompose(space);
  const ExistenceReport existence = glove_existence(space);
  std::string out = "space " + space.to_string() + "  (dimension " +
                    std::to_string(space.dimension()) + ")\n";
  out += "  " + pad("L", 6) + pad("parity", 8) + "copy\n";
  for (const IrrepBlock& block : dec.blocks) {
    out += "  " + pad(half_string(block.two_L), 6) +
           pad(block.parity > 0 ? "+1" : "-1", 8) +
           std::to_string(block.copy_index) + "\n";
  }
  out += std::string("  perfect_subspace_glove: ") +
         (existence.perfect_subspace_glove ? "yes" : "no") + "\n";
  out += std::string("  perfect_invariant_state_glove: ") +
         (existence.perfect_invariant_state_glove ? "yes" : "no") + "\n";
  return out;
}

std::string twirl_table(const TwirlReport& report) {
  std::string out;
  out += pad("entry", 24) + report.entry_id + "\n";
  out += pad("trace_distance_before", 24) +
         format_g12(report.trace_distance_before) + "\n";
  out += pad("trace_distance_after", 24) +
         format_g12(report.trace_distance_after) + "\n";
  out += pad("helstrom_after", 24) + format_g12(report.helstrom_after) + "\n";
  out += pad("communication_qubits", 24) +
         format_g12(report.communication_qubits) + "\n";
  if (report.monte_carlo_samples > 0) {
    out += pad("monte_carlo_samples", 24) +
           std::to_string(report.monte_carlo_samples) + "\n";
    out += pad("monte_carlo_max_error", 24) +
           format_g12(report.monte_carlo_max_error) + "\n";
  }
  return out;
}

std::string simulate_table(const SimReport& report) {
  std::string out;
  out += pad("entry", 12) + report.entry_id + "\n";
  out += pad("config", 12) + report.config.to_string() + "\n";
  out += pad("trials", 12) + std::to_string(report.trials) + "\n";
  out += pad("successes", 12) + std::to_string(report.successes) + "\n";
  out += pad("frequency", 12) + format_g12(report.frequency) + "\n";
  out += pad("stderr", 12) + format_g12(report.standard_error) + "\n";
  out += pad("seed", 12) + std::to_string(report.seed) + "\n";
  return out;
}

std::string search_table(const SearchResult& result) {
  std::string out;
  out += pad("space", 16) + result.space.to_string() + "\n";
  out += pad("score", 16) + format_g12(result.score) + "\n";
  out += pad("upper_bound", 16) + format_g12(result.upper_bound) + "\n";
  out += pad("attained_bound", 16) +
         (result.attained_bound ? "yes" : "no") + "\n";
  out += pad("iterations", 16) + std::to_string(result.iterations) + "\n";
  out += pad("restarts", 16) + std::to_string(result.restarts) + "\n";
  out += "best state\n";
  out += "  " + pad("label", 28) + pad("re", 20) + "im\n";
  for (const auto& [label, amplitude] : result.best_state.terms()) {
    out += "  " + pad(label_string(label), 28) +
           pad(format_g12(amplitude.real()), 20) +
           format_g12(amplitude.imag()) + "\n";
  }
  return out;
}

std::string report_table(const ResourceReport& report) {
  std::string out;
  out += pad("entry", 16) + report.entry_id + "\n";
  out += pad("particles", 16) + std::to_string(report.particle_count) + "\n";
  std::string kinds;
  for (const std::string& kind : report.factor_kinds) {
    if (!kinds.empty()) kinds += ",";
    kinds += kind;
  }
  out += pad("factors", 16) + kinds + "\n";
  out += pad("qubits", 16) + format_g12(report.qubits) + "\n";
  std::string lmax;
  for (int l : report.lmax) {
    if (!lmax.empty()) lmax += ",";
    lmax += std::to_string(l);
  }
  out += pad("lmax", 16) + lmax + "\n";
  out += pad("perfect", 16) + (report.perfect ? "yes" : "no") + "\n";
  return out;
}

void reject_csv(Format format, const char* subcommand) {
  if (format == Format::Csv) {
    throw UsageError{std::string("csv output is only available for "
                                 "simulate (got subcommand '") +
                     subcommand + "')"};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quantum gloves: construction, classification, rotation averaging, "
      "and chirality-exchange simulation"};
  app.require_subcommand(1);

  std::string format_flag;
  std::string out_path;
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format_flag, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", out_path, "write the document to a file");
  };

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "list the built-in glove pairs");
  add_output(catalog_cmd);

  std::string entry_id;
  bool verify_all = false;
  double tolerance = kCompareTol;
  std::uint64_t seed = 0;
  int samples = 100;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the invariant checks on an entry");
  CLI::Option* verify_entry_opt =
      verify_cmd->add_option("--entry", entry_id, "catalog entry id");
  verify_cmd->add_flag("--all", verify_all, "verify every catalog entry")
      ->excludes(verify_entry_opt);
  verify_cmd->add_option("--tolerance", tolerance,
                         "comparison tolerance override");
  verify_cmd->add_option("--seed", seed, "random rotation seed");
  verify_cmd->add_option("--samples", samples, "random rotation count");
  add_output(verify_cmd);

  std::string space_text;
  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "irreducible block table of a space (orbN,spin,orbN*K)");
  decompose_cmd->add_option("--space", space_text, "space mini-language")
      ->required();
  add_output(decompose_cmd);

  int mc_samples = 0;
  CLI::App* twirl_cmd = app.add_subcommand(
      "twirl", "rotation-average distinguishability and cost of an entry");
  twirl_cmd->add_option("--entry", entry_id, "catalog entry id")->required();
  twirl_cmd->add_option("--samples", mc_samples,
                        "Monte Carlo cross-check sample count");
  twirl_cmd->add_option("--seed", seed, "Monte Carlo seed");
  add_output(twirl_cmd);

  int trials = 10000;
  bool random_rotation = false;
  bool bob_opposite = false;
  bool helstrom = false;
  std::string fixed_rotation_text;
  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "Monte Carlo chirality exchange between Alice and Bob");
  simulate_cmd->add_option("--entry", entry_id, "catalog entry id")
      ->required();
  simulate_cmd->add_option("--trials", trials, "number of exchanges");
  simulate_cmd->add_option("--seed", seed, "trial seed");
  CLI::Option* random_opt = simulate_cmd->add_flag(
      "--random-rotation", random_rotation, "fresh Haar rotation per trial");
  simulate_cmd
      ->add_option("--fixed-rotation", fixed_rotation_text,
                   "one rotation A,B,C (z-y-z Euler angles)")
      ->excludes(random_opt);
  simulate_cmd->add_flag("--bob-opposite", bob_opposite,
                         "Bob's frame has the opposite chirality");
  simulate_cmd->add_flag(
      "--helstrom", helstrom,
      "optimal measurement on the rotation-averaged hands instead of the "
      "glove basis");
  add_output(simulate_cmd);

  int restarts = 8;
  int max_iters = 30000;
  CLI::App* search_cmd = app.add_subcommand(
      "search", "best approximate glove pair a space supports");
  search_cmd->add_option("--space", space_text, "space mini-language")
      ->required();
  search_cmd->add_option("--restarts", restarts, "optimizer restarts");
  search_cmd->add_option("--max-iters", max_iters,
                         "iterations per restart");
  search_cmd->add_option("--seed", seed, "restart seed");
  add_output(search_cmd);

  CLI::App* report_cmd = app.add_subcommand(
      "report", "resource accounting for one catalog entry");
  report_cmd->add_option("--entry", entry_id, "catalog entry id")->required();
  add_output(report_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  try {
    const Format format = resolve_format(format_flag);

    if (*catalog_cmd) {
      reject_csv(format, "catalog");
      return emit(format == Format::Json ? json_text(catalog_document())
                                         : catalog_table(),
                  out_path);
    }

    if (*verify_cmd) {
      reject_csv(format, "verify");
      if (!verify_all && entry_id.empty()) {
        throw UsageError{"verify needs --entry ID or --all"};
      }
      std::vector<CatalogEntry> entries;
      if (verify_all) {
        entries = catalog();
      } else {
        entries.push_back(find_entry(entry_id));
      }
      bool all_pass = true;
      Json documents = Json::array();
      std::string table;
      for (const CatalogEntry& entry : entries) {
        const std::vector<VerifyCheck> checks =
            verify_entry(entry, seed, samples, tolerance);
        for (const VerifyCheck& check : checks) {
          all_pass = all_pass && check.pass;
        }
        documents.push_back(verify_document(entry.id, checks));
        table += verify_table(entry.id, checks);
      }
      const Json payload = verify_all ? documents : documents[0];
      emit(format == Format::Json ? json_text(payload) : table, out_path);
      return all_pass ? 0 : 1;
    }

    if (*decompose_cmd) {
      reject_csv(format, "decompose");
      const SpaceSpec space = parse_space(space_text);
      return emit(format == Format::Json ? json_text(blocks_document(space))
                                         : decompose_table(space),
                  out_path);
    }

    if (*twirl_cmd) {
      reject_csv(format, "twirl");
      const TwirlReport report =
          twirl_report(find_entry(entry_id), mc_samples, seed);
      return emit(format == Format::Json ? json_text(to_json(report))
                                         : twirl_table(report),
                  out_path);
    }

    if (*simulate_cmd) {
      ChannelConfig config;
      config.random_rotation = random_rotation;
      config.bob_opposite_chirality = bob_opposite;
      if (!fixed_rotation_text.empty()) {
        config.fixed_rotation = parse_angles(fixed_rotation_text);
      }
      const SimReport report = simulate_exchange(
          find_entry(entry_id), config, trials, seed,
          helstrom ? MeasurementMode::Helstrom : MeasurementMode::GloveBasis);
      std::string text;
      if (format == Format::Json) {
        text = json_text(to_json(report));
      } else if (format == Format::Csv) {
        text = sim_reports_csv({report});
      } else {
        text = simulate_table(report);
      }
      return emit(text, out_path);
    }

    if (*search_cmd) {
      reject_csv(format, "search");
      SearchOptions options;
      options.restarts = restarts;
      options.max_iters = max_iters;
      options.seed = seed;
      const SearchResult result =
          optimize_approx_gloves(parse_space(space_text), options);
      return emit(format == Format::Json ? json_text(to_json(result))
                                         : search_table(result),
                  out_path);
    }

    if (*report_cmd) {
      reject_csv(format, "report");
      const ResourceReport report = resource_report(find_entry(entry_id));
      return emit(format == Format::Json ? json_text(to_json(report))
                                         : report_table(report),
                  out_path);
    }
  } catch (const UsageError& usage) {
    std::fprintf(stderr, "gloves: %s\n", usage.message.c_str());
    return 2;
  } catch (const std::exception& error) {
    std::fprintf(stderr, "gloves: %s\n", error.what());
    return 1;
  }

  return 2;
}
