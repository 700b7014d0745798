#include "qmst/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qmst {

std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void sort_records(std::vector<FrontRecord>& records) {
    std::sort(records.begin(), records.end(), [](const FrontRecord& a, const FrontRecord& b) {
        if (a.objectives != b.objectives) return a.objectives < b.objectives;
        return a.tree < b.tree;
    });
    records.erase(std::unique(records.begin(), records.end(),
                              [](const FrontRecord& a, const FrontRecord& b) {
                                  return a.objectives == b.objectives && a.tree == b.tree;
                              }),
                  records.end());
}

void write_front_csv(std::ostream& os, const std::vector<FrontRecord>& records) {
    os << "f1,f2,genotype_bits\n";
    for (const FrontRecord& r : records) {
        os << format_fixed6(r.objectives.f1) << ',' << format_fixed6(r.objectives.f2) << ','
           << to_bitstring(r.tree) << '\n';
    }
}

std::vector<FrontRecord> read_front_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "f1,f2,genotype_bits") {
        throw std::runtime_error("front csv: missing header");
    }
    std::vector<FrontRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string f1, f2, bits;
        if (!std::getline(ss, f1, ',') || !std::getline(ss, f2, ',') || !std::getline(ss, bits)) {
            throw std::runtime_error("front csv: malformed row '" + line + "'");
        }
        FrontRecord r;
        r.objectives.f1 = std::stod(f1);
        r.objectives.f2 = std::stod(f2);
        r.tree = from_bitstring(bits);
        out.push_back(std::move(r));
    }
    return out;
}

void write_front_json(std::ostream& os, const std::vector<FrontRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const FrontRecord& r : records) {
        arr.push_back({{"f1", r.objectives.f1}, {"f2", r.objectives.f2}, {"genotype", to_bitstring(r.tree)}});
    }
    os << arr.dump(2) << '\n';
}

Front to_front(const std::vector<FrontRecord>& records) {
    std::vector<ObjectivePair> points;
    points.reserve(records.size());
    for (const FrontRecord& r : records) points.push_back(r.objectives);
    return Front::nondominated(std::move(points));
}

}  // namespace qmst
