#include "sosggm/io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sosggm/version.hpp"

namespace sosggm {

namespace {

std::string utc_now_iso8601() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunManifest RunManifest::create(const std::string& command,
                                const Tolerances& tol) {
  RunManifest m;
  m.command = command;
  m.tolerances = tolerances_to_json(tol);
  m.artifact_version = kVersion;
  m.timestamp = utc_now_iso8601();
  return m;
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j{{"command", command},
                   {"parameters", parameters},
                   {"tolerances", tolerances},
                   {"artifact_version", artifact_version},
                   {"timestamp", timestamp}};
  if (seed) j["seed"] = *seed;
  return j;
}

nlohmann::json tolerances_to_json(const Tolerances& tol) {
  return {{"root_residual", tol.root_residual},
          {"asym_residual", tol.asym_residual},
          {"recursion", tol.recursion},
          {"fixed_point", tol.fixed_point},
          {"norm_identity", tol.norm_identity},
          {"tauc_crosscheck", tol.tauc_crosscheck}};
}

nlohmann::json law_record_to_json(const LawRecord& rec) {
  return {{"k", rec.k},
          {"theta", rec.theta},
          {"tau", rec.tau},
          {"a", rec.a},
          {"b", rec.b},
          {"family", to_string(rec.family)},
          {"multiplicity", rec.multiplicity},
          {"valid", rec.valid},
          {"residuals",
           {{"recursion", rec.residuals.recursion},
            {"fixed_point", rec.residuals.fixed_point},
            {"norm_identity", rec.residuals.norm_identity}}}};
}

LawRecord law_record_from_json(const nlohmann::json& j) {
  LawRecord rec;
  rec.k = j.at("k").get<int>();
  rec.theta = j.at("theta").get<double>();
  rec.tau = j.at("tau").get<double>();
  rec.a = j.at("a").get<double>();
  rec.b = j.at("b").get<double>();
  rec.family = law_family_from_string(j.at("family").get<std::string>());
  rec.multiplicity = j.at("multiplicity").get<int>();
  rec.valid = j.at("valid").get<bool>();
  const auto& res = j.at("residuals");
  rec.residuals.recursion = res.at("recursion").get<double>();
  rec.residuals.fixed_point = res.at("fixed_point").get<double>();
  rec.residuals.norm_identity = res.at("norm_identity").get<double>();
  return rec;
}

nlohmann::json law_list_to_json(const std::vector<LawRecord>& laws,
                                const RunManifest& manifest) {
  nlohmann::json arr = nlohmann::json::array();
  for (const LawRecord& rec : laws) arr.push_back(law_record_to_json(rec));
  return {{"manifest", manifest.to_json()}, {"laws", arr}};
}

std::vector<LawRecord> law_list_from_json(const nlohmann::json& j) {
  const nlohmann::json& arr = j.is_array() ? j : j.at("laws");
  if (!arr.is_array()) {
    throw std::invalid_argument("law list must be an array");
  }
  std::vector<LawRecord> laws;
  for (const auto& item : arr) laws.push_back(law_record_from_json(item));
  return laws;
}

nlohmann::json marginal_table_to_json(const MarginalTable& table,
                                      const RunManifest& manifest) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [p, c] : table.edges) {
    edges.push_back(nlohmann::json::array({p, c}));
  }
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    entries.push_back(
        {{"zeta", table.assignment_at(i)}, {"p", table.probs[i]}});
  }
  return {{"manifest", manifest.to_json()},
          {"edges", edges},
          {"truncation", table.truncation},
          {"tail_bound", table.tail_bound},
          {"normalizer", table.normalizer},
          {"entries", entries}};
}

std::string format_g9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

std::string sweep_csv(const std::vector<PhaseRecord>& rows) {
  std::ostringstream out;
  out << "k,theta,tau,n_sym_distinct,n_asym_pairs,n_valid,tau_c,regime,"
         "paper_discrepancy\n";
  for (const PhaseRecord& r : rows) {
    out << r.k << ',' << format_g9(r.theta) << ',' << format_g9(r.tau) << ','
        << r.n_symmetric_distinct << ',' << r.n_asymmetric_pairs << ','
        << r.n_valid_laws << ',' << format_g9(r.tau_c) << ','
        << to_string(r.regime) << ',' << (r.paper_discrepancy ? "true" : "false")
        << '\n';
  }
  return out.str();
}

std::string tauc_csv(const std::vector<std::pair<int, double>>& rows) {
  std::ostringstream out;
  out << "k,tau_c\n";
  for (const auto& [k, tau_c] : rows) {
    out << k << ',' << format_g9(tau_c) << '\n';
  }
  return out.str();
}

std::string samples_csv(const SampleRun& run, int num_edges) {
  std::ostringstream out;
  for (int e = 0; e < num_edges; ++e) {
    out << (e ? "," : "") << 'e' << e;
  }
  out << '\n';
  for (const GradientAssignment& zeta : run.samples) {
    for (int e = 0; e < num_edges; ++e) {
      out << (e ? "," : "") << zeta[e];
    }
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

}  // namespace sosggm
