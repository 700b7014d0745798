#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmst/uncertainty.hpp"

namespace qmst {

struct EdgeSpec {
    int id = 0;  // canonical index: position in Instance::edges()
    int a = 0;   // endpoints, 0-based, a < b
    int b = 0;
    RoughFuzzyWeight weight;
};

struct QuadSpec {
    int e1 = 0;  // canonical edge ids, e1 < e2
    int e2 = 0;
    RoughFuzzyWeight weight;
};

// Connected undirected graph with rough fuzzy linear weights on every edge
// and rough fuzzy quadratic weights on selected edge pairs. Pairs without an
// entry carry zero quadratic cost. Immutable once constructed and freely
// shareable across threads.
class Instance {
public:
    // Validates all structural invariants; throws std::invalid_argument.
    Instance(int vertex_count, std::vector<EdgeSpec> edges, std::vector<QuadSpec> quads);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<EdgeSpec>& edges() const { return edges_; }
    const std::vector<QuadSpec>& quads() const { return quads_; }

    // nullptr when the pair carries no quadratic cost.
    const RoughFuzzyWeight* quad_weight(int ei, int ej) const;

private:
    int vertex_count_ = 0;
    std::vector<EdgeSpec> edges_;
    std::vector<QuadSpec> quads_;           // sorted by (e1, e2)
    std::vector<std::int32_t> quad_index_;  // edge_count^2 cells, -1 = absent
};

// Raised by parse_instance; line numbers are 1-based, 0 for whole-file errors.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

// Raised for requests that cannot be satisfied, e.g. an impossible
// vertex/edge combination.
class InfeasibleRequest : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Instance parse_instance(std::string_view text);

// Canonical text form. parse(serialize(i)) is structurally equal to i, and
// serialize(parse(t)) is byte-identical for canonical t.
std::string serialize_instance(const Instance& inst);

// The built-in 9-vertex, 18-edge, 35-pair benchmark (the `paper` instance of
// the CLI).
const Instance& paper_instance();

// Connected random instance: a random spanning tree completed with random
// extra edges; every unordered edge pair receives a quadratic weight.
// Identical (vertices, edges, seed) always produce the identical instance.
Instance generate_random(int vertices, int edges, std::uint64_t seed);

}  // namespace qmst
