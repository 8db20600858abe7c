#include "axivort/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "axivort/field.hpp"
#include "json.hpp"

namespace axivort {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_row(const std::vector<double>& values) {
    std::string row;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) row += ',';
        row += format_g17(values[i]);
    }
    row += '\n';
    return row;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_field_csv(const VorticityField& field, const std::string& csv_path,
                    const std::string& sidecar_json_path) {
    std::string csv = "r,z,q,area\n";
    for (const auto& e : field.elements) csv += csv_row({e.pos.r, e.pos.z, e.q, e.area});
    write_text_file(csv_path, csv);

    nlohmann::ordered_json sidecar;
    sidecar["d"] = field.d;
    sidecar["delta"] = field.delta;
    sidecar["sigma"] = field.sigma();
    write_text_file(sidecar_json_path, sidecar.dump(2) + "\n");
}

VorticityField load_field_csv(const std::string& csv_path, const std::string& sidecar_json_path) {
    const auto sidecar = nlohmann::json::parse(read_text_file(sidecar_json_path));
    VorticityField field;
    field.d = sidecar.at("d").get<int>();
    field.delta = sidecar.at("delta").get<double>();

    std::istringstream in(read_text_file(csv_path));
    std::string line;
    if (!std::getline(in, line) || line != "r,z,q,area")
        throw std::runtime_error("field CSV: bad header in " + csv_path);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        VortexElement e;
        char comma;
        std::istringstream row(line);
        row >> e.pos.r >> comma >> e.pos.z >> comma >> e.q >> comma >> e.area;
        if (!row) throw std::runtime_error("field CSV: bad row: " + line);
        field.elements.push_back(e);
    }
    return field;
}

}  // namespace axivort
