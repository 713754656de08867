#include "spinnet/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "spinnet/errors.hpp"

namespace spinnet {

namespace {

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out.good()) throw IoError("write failed: " + path);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path);
    return buf.str();
}

std::vector<double> json_to_vector(const nlohmann::json& j) {
    return j.get<std::vector<double>>();
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void CsvWriter::set_meta(const std::string& key, const std::string& value) {
    meta_.emplace_back(key, value);
}

void CsvWriter::set_header(std::vector<std::string> columns) {
    header_ = std::move(columns);
}

void CsvWriter::add_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_double(v));
    add_row_raw(std::move(cells));
}

void CsvWriter::add_row_raw(std::vector<std::string> cells) {
    if (!header_.empty() && cells.size() != header_.size())
        throw std::invalid_argument("csv row width does not match header");
    rows_.push_back(std::move(cells));
}

std::string CsvWriter::to_string() const {
    std::ostringstream out;
    for (const auto& [key, value] : meta_) out << "# " << key << "=" << value << "\n";
    for (std::size_t i = 0; i < header_.size(); ++i)
        out << (i ? "," : "") << header_[i];
    if (!header_.empty()) out << "\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
    return out.str();
}

void CsvWriter::write(const std::string& path) const { write_text(path, to_string()); }

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json needs {\"n\": ..., \"edges\": [...]}");
    EdgeList edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json edge must be a [u, v] pair");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return Graph(j.at("n").get<int>(), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    return graph_from_json(read_json_file(path));
}

void write_graph_file(const Graph& g, const std::string& path) {
    write_json_file(graph_to_json(g), path);
}

nlohmann::json params_to_json(const SpinSystemParams& p) {
    return {{"coupling", p.coupling},       {"field", p.field},
            {"temperature", p.temperature}, {"scaling", to_string(p.scaling)},
            {"dn_levels", p.dn_levels},     {"max_spins", p.max_spins}};
}

nlohmann::json ga_config_to_json(const GaConfig& c) {
    return {{"n", c.n},
            {"population", c.population},
            {"generations", c.generations},
            {"mutation_prob", c.mutation_prob},
            {"crossover_extra_edge_prob", c.crossover_extra_edge_prob},
            {"crossover", to_string(c.crossover)},
            {"physics", params_to_json(c.physics)},
            {"seed", c.seed}};
}

nlohmann::json ga_run_to_json(const GaRunRecord& r) {
    nlohmann::json generations = nlohmann::json::array();
    for (const GenerationRecord& g : r.generations) {
        generations.push_back({{"generation", g.generation},
                               {"best", graph_to_json(g.best)},
                               {"best_fitness", g.best_fitness},
                               {"mean_fitness", g.mean_fitness}});
    }
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"config", ga_config_to_json(r.config)},
            {"generations", generations},
            {"summary",
             {{"best", graph_to_json(r.best)},
              {"best_dn", r.best_dn},
              {"best_qfi", r.best_qfi},
              {"first_hit_generation", r.first_hit_generation}}}};
}

void write_ga_run_file(const GaRunRecord& r, const std::string& path) {
    write_json_file(ga_run_to_json(r), path);
}

void export_records(const std::vector<GaRunRecord>& records, const std::string& base_path) {
    CsvWriter csv;
    csv.set_meta("tool", kToolName);
    csv.set_meta("version", kToolVersion);
    csv.set_meta("runs", std::to_string(records.size()));
    std::string seeds;
    for (const GaRunRecord& r : records)
        seeds += (seeds.empty() ? "" : ";") + std::to_string(r.config.seed);
    csv.set_meta("seeds", seeds);
    if (!records.empty()) {
        const GaConfig& c = records.front().config;
        csv.set_meta("j", format_double(c.physics.coupling));
        csv.set_meta("h", format_double(c.physics.field));
        csv.set_meta("t", format_double(c.physics.temperature));
        csv.set_meta("scaling", to_string(c.physics.scaling));
        csv.set_meta("dn_levels", std::to_string(c.physics.dn_levels));
        csv.set_meta("population", std::to_string(c.population));
        csv.set_meta("generations", std::to_string(c.generations));
        csv.set_meta("mutation_prob", format_double(c.mutation_prob));
        csv.set_meta("crossover", to_string(c.crossover));
    }
    csv.set_header({"N", "first_hit_generation", "best_dn", "best_qfi"});
    for (const GaRunRecord& r : records)
        csv.add_row({static_cast<double>(r.config.n),
                     static_cast<double>(r.first_hit_generation), r.best_dn, r.best_qfi});
    csv.write(base_path + ".csv");

    for (std::size_t i = 0; i < records.size(); ++i)
        write_ga_run_file(records[i], base_path + ".run" + std::to_string(i) + ".json");
}

nlohmann::json fit_to_json(const ScalingFit& f) {
    return {{"kind", to_string(f.kind)},
            {"parity", to_string(f.parity)},
            {"degree", f.degree},
            {"coefficients", f.coefficients},
            {"exponent", f.exponent},
            {"residual", f.residual},
            {"n_points", f.n_points},
            {"x_min", f.x_min},
            {"x_max", f.x_max}};
}

nlohmann::json model_to_json(const MlpModel& m) {
    nlohmann::json weights = nlohmann::json::array();
    nlohmann::json biases = nlohmann::json::array();
    for (std::size_t l = 0; l < m.weights.size(); ++l) {
        std::vector<double> flat;
        flat.reserve(static_cast<std::size_t>(m.weights[l].size()));
        for (Eigen::Index r = 0; r < m.weights[l].rows(); ++r)
            for (Eigen::Index c = 0; c < m.weights[l].cols(); ++c)
                flat.push_back(m.weights[l](r, c));
        weights.push_back(flat);
        biases.push_back(std::vector<double>(m.biases[l].data(),
                                             m.biases[l].data() + m.biases[l].size()));
    }
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"layer_sizes", kLayerSizes},
            {"weights", weights},
            {"biases", biases},
            {"parity", to_string(m.parity)},
            {"target", to_string(m.target)},
            {"x_min", m.x_min},
            {"x_max", m.x_max},
            {"y_mean", m.y_mean},
            {"y_std", m.y_std},
            {"seed", m.seed}};
}

MlpModel model_from_json(const nlohmann::json& j) {
    const auto sizes = j.at("layer_sizes").get<std::vector<int>>();
    if (sizes.size() != kLayerSizes.size() ||
        !std::equal(sizes.begin(), sizes.end(), kLayerSizes.begin()))
        throw std::invalid_argument("model json: unsupported layer sizes");

    MlpModel m;
    m.parity = parity_from_string(j.at("parity").get<std::string>());
    m.target = target_from_string(j.at("target").get<std::string>());
    m.x_min = j.at("x_min").get<double>();
    m.x_max = j.at("x_max").get<double>();
    m.y_mean = j.at("y_mean").get<double>();
    m.y_std = j.at("y_std").get<double>();
    m.seed = j.at("seed").get<std::uint64_t>();

    const nlohmann::json& weights = j.at("weights");
    const nlohmann::json& biases = j.at("biases");
    if (weights.size() != 3 || biases.size() != 3)
        throw std::invalid_argument("model json: expected 3 layers");
    for (int l = 0; l < 3; ++l) {
        const int rows = kLayerSizes[l + 1];
        const int cols = kLayerSizes[l];
        const std::vector<double> flat = json_to_vector(weights.at(l));
        if (flat.size() != static_cast<std::size_t>(rows) * cols)
            throw std::invalid_argument("model json: weight size mismatch");
        Eigen::MatrixXd w(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) w(r, c) = flat[static_cast<std::size_t>(r) * cols + c];
        m.weights.push_back(std::move(w));

        const std::vector<double> b = json_to_vector(biases.at(l));
        if (b.size() != static_cast<std::size_t>(rows))
            throw std::invalid_argument("model json: bias size mismatch");
        m.biases.push_back(Eigen::Map<const Eigen::VectorXd>(b.data(), rows));
    }
    return m;
}

MlpModel read_model_file(const std::string& path) {
    return model_from_json(read_json_file(path));
}

void write_model_file(const MlpModel& m, const std::string& path) {
    write_json_file(model_to_json(m), path);
}

void write_series_csv(const std::string& path, const std::string& x_name,
                      const std::string& y_name, const DataSeries& series,
                      const std::vector<std::pair<std::string, std::string>>& meta) {
    CsvWriter csv;
    csv.set_meta("tool", kToolName);
    csv.set_meta("version", kToolVersion);
    for (const auto& [key, value] : meta) csv.set_meta(key, value);
    csv.set_header({x_name, y_name});
    for (const auto& [x, y] : series) csv.add_row({x, y});
    csv.write(path);
}

DataSeries read_series_csv(const std::string& path) {
    std::istringstream in(read_text(path));
    DataSeries series;
    std::string line;
    bool header_seen = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;  // first non-comment line is the column header
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": expected two comma-separated columns");
        try {
            series.emplace_back(std::stod(line.substr(0, comma)),
                                std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": non-numeric value");
        }
    }
    return series;
}

void write_json_file(const nlohmann::json& j, const std::string& path) {
    write_text(path, j.dump(2) + "\n");
}

nlohmann::json read_json_file(const std::string& path) {
    try {
        return nlohmann::json::parse(read_text(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace spinnet
