#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sosggm/boundary_law.hpp"
#include "sosggm/ggm.hpp"
#include "sosggm/phase_sweep.hpp"

namespace sosggm {

/// Reproducibility record attached to every output file: JSON outputs embed
/// it, CSV outputs get a sidecar <out>.manifest.json. Identical manifests
/// imply identical outputs, timestamp aside.
struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json tolerances = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  std::string artifact_version;
  std::string timestamp;

  static RunManifest create(const std::string& command,
                            const Tolerances& tol);
  nlohmann::json to_json() const;
};

nlohmann::json tolerances_to_json(const Tolerances& tol);

nlohmann::json law_record_to_json(const LawRecord& rec);
LawRecord law_record_from_json(const nlohmann::json& j);

nlohmann::json law_list_to_json(const std::vector<LawRecord>& laws,
                                const RunManifest& manifest);
/// Accepts the object form written by the CLI and a bare record array.
std::vector<LawRecord> law_list_from_json(const nlohmann::json& j);

nlohmann::json marginal_table_to_json(const MarginalTable& table,
                                      const RunManifest& manifest);

/// Floating values in CSV output carry 9 significant digits.
std::string format_g9(double x);

std::string sweep_csv(const std::vector<PhaseRecord>& rows);
std::string tauc_csv(const std::vector<std::pair<int, double>>& rows);
std::string samples_csv(const SampleRun& run, int num_edges);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sosggm
