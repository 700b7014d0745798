#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qmst/metrics.hpp"
#include "qmst/tree.hpp"

namespace qmst {

struct FrontRecord {
    ObjectivePair objectives;
    TreeGenotype tree;
};

// Six-decimal fixed formatting, the reporting precision used across outputs.
std::string format_fixed6(double v);

// Canonical order for emitted fronts: by objectives, then bit string.
void sort_records(std::vector<FrontRecord>& records);

// CSV schema: header `f1,f2,genotype_bits`, six-decimal objectives.
void write_front_csv(std::ostream& os, const std::vector<FrontRecord>& records);
std::vector<FrontRecord> read_front_csv(std::istream& is);  // throws std::runtime_error

// JSON schema: array of {"f1": ..., "f2": ..., "genotype": "0101..."}.
void write_front_json(std::ostream& os, const std::vector<FrontRecord>& records);

Front to_front(const std::vector<FrontRecord>& records);

}  // namespace qmst
