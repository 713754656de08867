#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "spinnet/ga.hpp"
#include "spinnet/graph.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/metrology.hpp"
#include "spinnet/mlp.hpp"

namespace spinnet {

inline constexpr const char* kToolName = "spinnet";
inline constexpr const char* kToolVersion = "0.1.0";

// %.12g: stable round-trip precision without trailing-zero churn, shared by
// every CSV so re-runs stay byte-identical.
std::string format_double(double value);

// Comment-prefixed provenance lines, a header row, then data rows. Meta and
// rows are emitted in insertion order.
class CsvWriter {
public:
    void set_meta(const std::string& key, const std::string& value);
    void set_header(std::vector<std::string> columns);
    void add_row(const std::vector<double>& values);
    void add_row_raw(std::vector<std::string> cells);

    std::string to_string() const;
    void write(const std::string& path) const;

private:
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

nlohmann::json params_to_json(const SpinSystemParams& p);
nlohmann::json ga_config_to_json(const GaConfig& c);
nlohmann::json ga_run_to_json(const GaRunRecord& r);
void write_ga_run_file(const GaRunRecord& r, const std::string& path);

// Aggregate CSV `N,first_hit_generation,best_dn,best_qfi` at <base>.csv plus
// one <base>.run<i>.json per record.
void export_records(const std::vector<GaRunRecord>& records, const std::string& base_path);

nlohmann::json fit_to_json(const ScalingFit& f);

nlohmann::json model_to_json(const MlpModel& m);
MlpModel model_from_json(const nlohmann::json& j);
MlpModel read_model_file(const std::string& path);
void write_model_file(const MlpModel& m, const std::string& path);

// Two-column series CSV. The reader skips `#` lines and the header row.
void write_series_csv(const std::string& path, const std::string& x_name,
                      const std::string& y_name, const DataSeries& series,
                      const std::vector<std::pair<std::string, std::string>>& meta);
DataSeries read_series_csv(const std::string& path);

void write_json_file(const nlohmann::json& j, const std::string& path);
nlohmann::json read_json_file(const std::string& path);

}  // namespace spinnet
