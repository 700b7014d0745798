#include "qmst/instance.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <utility>

#include "qmst/disjoint_set.hpp"
#include "qmst/rng.hpp"

namespace qmst {

Instance::Instance(int vertex_count, std::vector<EdgeSpec> edges, std::vector<QuadSpec> quads)
    : vertex_count_(vertex_count), edges_(std::move(edges)), quads_(std::move(quads)) {
    if (vertex_count_ < 2) {
        throw std::invalid_argument("instance: need at least 2 vertices");
    }
    if (static_cast<int>(edges_.size()) < vertex_count_ - 1) {
        throw std::invalid_argument("instance: fewer edges than vertices - 1");
    }

    std::set<std::pair<int, int>> seen_edges;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        EdgeSpec& e = edges_[i];
        e.id = static_cast<int>(i);
        if (e.a > e.b) std::swap(e.a, e.b);
        if (e.a < 0 || e.b >= vertex_count_) {
            throw std::invalid_argument("instance: edge endpoint out of range");
        }
        if (e.a == e.b) {
            throw std::invalid_argument("instance: self-loop");
        }
        if (!seen_edges.insert({e.a, e.b}).second) {
            throw std::invalid_argument("instance: duplicate edge");
        }
        if (!e.weight.valid()) {
            throw std::invalid_argument("instance: invalid edge weight");
        }
    }

    DisjointSet dsu(vertex_count_);
    for (const EdgeSpec& e : edges_) dsu.unite(e.a, e.b);
    if (dsu.components() != 1) {
        throw std::invalid_argument("instance: graph is not connected");
    }

    const int m = edge_count();
    std::set<std::pair<int, int>> seen_quads;
    for (QuadSpec& q : quads_) {
        if (q.e1 > q.e2) std::swap(q.e1, q.e2);
        if (q.e1 < 0 || q.e2 >= m) {
            throw std::invalid_argument("instance: quad edge id out of range");
        }
        if (q.e1 == q.e2) {
            throw std::invalid_argument("instance: quad pair of identical edges");
        }
        if (!seen_quads.insert({q.e1, q.e2}).second) {
            throw std::invalid_argument("instance: duplicate quad pair");
        }
        if (!q.weight.valid()) {
            throw std::invalid_argument("instance: invalid quad weight");
        }
    }
    std::sort(quads_.begin(), quads_.end(), [](const QuadSpec& x, const QuadSpec& y) {
        return std::pair(x.e1, x.e2) < std::pair(y.e1, y.e2);
    });

    quad_index_.assign(static_cast<std::size_t>(m) * m, -1);
    for (std::size_t i = 0; i < quads_.size(); ++i) {
        const QuadSpec& q = quads_[i];
        quad_index_[static_cast<std::size_t>(q.e1) * m + q.e2] = static_cast<std::int32_t>(i);
        quad_index_[static_cast<std::size_t>(q.e2) * m + q.e1] = static_cast<std::int32_t>(i);
    }
}

const RoughFuzzyWeight* Instance::quad_weight(int ei, int ej) const {
    const std::int32_t at = quad_index_[static_cast<std::size_t>(ei) * edge_count() + ej];
    return at < 0 ? nullptr : &quads_[at].weight;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // Next non-blank, non-comment line; false at end of input.
    bool next(std::string& out) {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            const std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string_view::npos || line[first] == '#') continue;
            out.assign(line);
            return true;
        }
        return false;
    }
};

double parse_double(const std::string& tok, int line) {
    double v = 0.0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line, "bad number '" + tok + "'");
    }
    return v;
}

long parse_int(const std::string& tok, int line) {
    long v = 0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line, "bad integer '" + tok + "'");
    }
    return v;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

RoughFuzzyWeight parse_weight(const std::vector<std::string>& toks, std::size_t at, int line) {
    RoughFuzzyWeight w;
    w.base.lo = parse_double(toks[at + 0], line);
    w.base.mode = parse_double(toks[at + 1], line);
    w.base.hi = parse_double(toks[at + 2], line);
    w.a1 = parse_double(toks[at + 3], line);
    w.a2 = parse_double(toks[at + 4], line);
    w.a3 = parse_double(toks[at + 5], line);
    w.a4 = parse_double(toks[at + 6], line);
    if (!w.base.valid()) {
        throw ParseError(line, "fuzzy core must satisfy lo <= mode <= hi");
    }
    if (!(w.a3 <= w.a1 && w.a1 <= w.a2 && w.a2 <= w.a4)) {
        throw ParseError(line, "offsets must satisfy a3 <= a1 <= a2 <= a4");
    }
    return w;
}

void append_number(std::string& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
}

void append_weight(std::string& out, const RoughFuzzyWeight& w) {
    for (double v : {w.base.lo, w.base.mode, w.base.hi, w.a1, w.a2, w.a3, w.a4}) {
        out.push_back(' ');
        append_number(out, v);
    }
}

}  // namespace

Instance parse_instance(std::string_view text) {
    LineReader reader{text};
    std::string line;

    auto expect_line = [&](const char* what) {
        if (!reader.next(line)) {
            throw ParseError(reader.line_no, std::string("unexpected end of input, expected ") + what);
        }
        return tokens_of(line);
    };

    auto toks = expect_line("'qmst 1'");
    if (toks.size() != 2 || toks[0] != "qmst" || toks[1] != "1") {
        throw ParseError(reader.line_no, "expected header 'qmst 1'");
    }

    toks = expect_line("'vertices <n>'");
    if (toks.size() != 2 || toks[0] != "vertices") {
        throw ParseError(reader.line_no, "expected 'vertices <n>'");
    }
    const long n = parse_int(toks[1], reader.line_no);
    if (n < 2) throw ParseError(reader.line_no, "vertex count must be at least 2");

    toks = expect_line("'edges <m>'");
    if (toks.size() != 2 || toks[0] != "edges") {
        throw ParseError(reader.line_no, "expected 'edges <m>'");
    }
    const long m = parse_int(toks[1], reader.line_no);
    if (m < 1) throw ParseError(reader.line_no, "edge count must be positive");

    std::vector<EdgeSpec> edges;
    edges.reserve(m);
    std::set<std::pair<int, int>> seen_edges;
    for (long i = 0; i < m; ++i) {
        toks = expect_line("an edge line");
        if (toks.size() != 10 || toks[0] != "edge") {
            throw ParseError(reader.line_no, "expected 'edge <u> <v> <9 numbers>'");
        }
        EdgeSpec e;
        const long u = parse_int(toks[1], reader.line_no);
        const long v = parse_int(toks[2], reader.line_no);
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ParseError(reader.line_no, "vertex id out of range");
        }
        if (u == v) throw ParseError(reader.line_no, "self-loop");
        e.a = static_cast<int>(std::min(u, v)) - 1;
        e.b = static_cast<int>(std::max(u, v)) - 1;
        if (!seen_edges.insert({e.a, e.b}).second) {
            throw ParseError(reader.line_no, "duplicate edge");
        }
        e.weight = parse_weight(toks, 3, reader.line_no);
        edges.push_back(e);
    }

    toks = expect_line("'quads <k>'");
    if (toks.size() != 2 || toks[0] != "quads") {
        throw ParseError(reader.line_no, "expected 'quads <k>'");
    }
    const long k = parse_int(toks[1], reader.line_no);
    if (k < 0) throw ParseError(reader.line_no, "quad count must be nonnegative");

    std::vector<QuadSpec> quads;
    quads.reserve(k);
    std::set<std::pair<int, int>> seen_quads;
    for (long i = 0; i < k; ++i) {
        toks = expect_line("a quad line");
        if (toks.size() != 10 || toks[0] != "quad") {
            throw ParseError(reader.line_no, "expected 'quad <i> <j> <9 numbers>'");
        }
        QuadSpec q;
        const long ei = parse_int(toks[1], reader.line_no);
        const long ej = parse_int(toks[2], reader.line_no);
        if (ei < 0 || ei >= m || ej < 0 || ej >= m) {
            throw ParseError(reader.line_no, "edge id out of range");
        }
        if (ei == ej) throw ParseError(reader.line_no, "quad pair of identical edges");
        q.e1 = static_cast<int>(std::min(ei, ej));
        q.e2 = static_cast<int>(std::max(ei, ej));
        if (!seen_quads.insert({q.e1, q.e2}).second) {
            throw ParseError(reader.line_no, "duplicate quad pair");
        }
        q.weight = parse_weight(toks, 3, reader.line_no);
        quads.push_back(q);
    }

    if (reader.next(line)) {
        throw ParseError(reader.line_no, "trailing content after quad section");
    }

    try {
        return Instance(static_cast<int>(n), std::move(edges), std::move(quads));
    } catch (const std::invalid_argument& err) {
        throw ParseError(0, err.what());
    }
}

std::string serialize_instance(const Instance& inst) {
    std::string out;
    out += "qmst 1\n";
    out += "vertices " + std::to_string(inst.vertex_count()) + "\n";
    out += "edges " + std::to_string(inst.edge_count()) + "\n";
    for (const EdgeSpec& e : inst.edges()) {
        out += "edge " + std::to_string(e.a + 1) + " " + std::to_string(e.b + 1);
        append_weight(out, e.weight);
        out.push_back('\n');
    }
    out += "quads " + std::to_string(inst.quads().size()) + "\n";
    for (const QuadSpec& q : inst.quads()) {
        out += "quad " + std::to_string(q.e1) + " " + std::to_string(q.e2);
        append_weight(out, q.weight);
        out.push_back('\n');
    }
    return out;
}

namespace {

struct EdgeRow {
    int a, b;
    double lo, mode, hi, a1, a2, a3, a4;
};

struct QuadRow {
    int e1, e2;
    double lo, mode, hi, a1, a2, a3, a4;
};

// Edge ids: 0 e12, 1 e15, 2 e16, 3 e23, 4 e26, 5 e34, 6 e36, 7 e45, 8 e46,
// 9 e56, 10 e17, 11 e18, 12 e27, 13 e39, 14 e58, 15 e79, 16 e48, 17 e49.
constexpr EdgeRow kBenchmarkEdges[] = {
    {1, 2, 9.0, 11.5, 12.7, 0.0, 2.0, -1.0, 3.0},
    {1, 5, 11.0, 13.0, 15.0, 0.0, 1.0, -1.0, 2.0},
    {1, 6, 9.2, 10.5, 12.4, 0.0, 1.5, -0.7, 1.9},
    {2, 3, 10.6, 14.1, 17.2, 0.0, 2.0, -2.0, 3.0},
    {2, 6, 8.3, 10.0, 12.4, 0.0, 1.0, -2.0, 2.0},
    {3, 4, 9.8, 11.7, 14.0, 0.0, 2.0, -2.0, 2.5},
    {3, 6, 11.0, 14.0, 15.0, 0.0, 1.5, -0.5, 2.0},
    {4, 5, 12.0, 14.7, 17.1, 0.0, 1.0, -0.5, 1.8},
    {4, 6, 10.0, 12.0, 14.0, 0.0, 2.5, -1.5, 2.7},
    {5, 6, 9.4, 11.6, 12.8, 0.0, 0.5, -0.7, 0.9},
    {1, 7, 11.5, 12.9, 13.8, 0.0, 0.9, -1.2, 1.8},
    {1, 8, 8.9, 10.2, 12.0, 0.0, 0.5, -0.6, 0.95},
    {2, 7, 10.0, 12.0, 13.5, 0.0, 1.0, -1.1, 1.5},
    {3, 9, 9.8, 11.2, 12.4, 0.0, 0.4, -0.5, 0.8},
    {5, 8, 11.9, 12.8, 14.5, 0.0, 1.2, -1.2, 1.4},
    {7, 9, 11.5, 12.0, 13.5, 0.0, 1.1, -0.9, 1.3},
    {4, 8, 9.0, 10.2, 12.9, 0.0, 0.6, -0.4, 0.67},
    {4, 9, 10.2, 11.6, 12.4, 0.0, 0.78, -0.8, 0.8},
};

constexpr QuadRow kBenchmarkQuads[] = {
    {0, 1, 9.0, 11.0, 13.0, 0.0, 0.7, -0.2, 1.0},     // e12-e15
    {0, 2, 8.5, 10.2, 11.5, 0.0, 1.2, -0.5, 1.4},     // e12-e16
    {1, 2, 9.5, 10.7, 11.6, 0.0, 0.4, -0.2, 0.8},     // e15-e16
    {1, 9, 9.8, 10.8, 11.5, 0.0, 1.0, -0.8, 1.2},     // e15-e56
    {4, 6, 10.2, 12.2, 13.4, 0.0, 1.2, -0.3, 1.5},    // e26-e36
    {3, 4, 10.4, 11.7, 12.9, 0.0, 0.9, -0.5, 1.6},    // e23-e26
    {0, 4, 8.6, 9.2, 9.8, 0.0, 1.2, -0.2, 1.5},       // e12-e26
    {4, 8, 8.1, 9.8, 10.9, 0.0, 0.9, -0.3, 1.2},      // e26-e46
    {3, 5, 10.8, 12.9, 14.2, 0.0, 2.0, -0.9, 2.6},    // e23-e34
    {3, 8, 11.0, 13.0, 14.0, 0.0, 2.1, -0.2, 2.4},    // e23-e46
    {3, 9, 10.7, 11.7, 12.6, 0.0, 1.0, -1.2, 1.5},    // e23-e56
    {5, 9, 8.0, 10.0, 12.0, 0.0, 1.0, -1.0, 2.0},     // e34-e56
    {2, 5, 7.8, 11.0, 12.0, 0.0, 0.9, -1.0, 1.9},     // e16-e34
    {5, 8, 9.0, 11.0, 13.0, 0.0, 1.0, -1.0, 2.0},     // e34-e46
    {15, 16, 9.8, 11.2, 12.4, 0.0, 1.5, -1.2, 1.9},   // e48-e79
    {6, 7, 12.0, 14.0, 15.0, 0.0, 2.0, -1.0, 3.0},    // e45-e36
    {7, 8, 11.6, 12.7, 13.8, 0.0, 0.7, -0.5, 0.9},    // e45-e46
    {2, 9, 9.5, 10.5, 11.8, 0.0, 1.4, -0.1, 1.5},     // e16-e56
    {6, 9, 10.0, 12.5, 14.0, 0.0, 0.9, -0.7, 1.2},    // e56-e36
    {0, 9, 9.0, 11.0, 13.0, 0.0, 0.7, -0.5, 1.0},     // e12-e56
    {1, 14, 10.9, 11.5, 12.1, 0.0, 0.5, -0.5, 0.9},   // e15-e58
    {8, 16, 10.8, 12.2, 13.5, 0.0, 0.9, -0.4, 1.2},   // e46-e48
    {1, 17, 11.2, 12.0, 13.9, 0.0, 0.7, -0.3, 0.8},   // e15-e49
    // e17-e48: printed with a lower approximation wider than the upper one
    // (offsets 1.2 vs 1.1); the upper right end is lifted to 1.2 to restore
    // the nesting required of every rough interval.
    {10, 16, 10.0, 11.5, 12.5, 0.0, 1.2, -1.1, 1.2},
    {10, 11, 8.0, 10.0, 12.0, 0.0, 0.7, -0.6, 0.8},   // e17-e18
    {11, 15, 8.9, 10.0, 11.2, 0.0, 1.5, -1.3, 1.7},   // e18-e79
    {12, 13, 11.2, 12.3, 13.4, 0.0, 1.2, -1.2, 1.4},  // e27-e39
    {12, 14, 10.0, 12.2, 14.0, 0.0, 1.6, -1.5, 1.7},  // e27-e58
    {13, 14, 9.0, 11.0, 13.0, 0.0, 1.0, -1.0, 1.2},   // e39-e58
    {9, 12, 12.1, 12.6, 12.9, 0.0, 0.2, -0.8, 1.0},   // e27-e56
    {8, 12, 10.0, 11.0, 12.0, 0.0, 2.0, -1.0, 3.0},   // e27-e46
    {4, 13, 11.0, 12.6, 13.5, 0.0, 1.2, -2.0, 2.4},   // e26-e39
    {8, 14, 12.0, 13.6, 14.5, 0.0, 1.8, -1.3, 2.9},   // e46-e58
    {9, 17, 8.9, 10.9, 12.5, 0.0, 1.0, -1.4, 1.9},    // e49-e56
    {7, 9, 10.8, 11.8, 12.9, 0.0, 0.5, -0.4, 0.6},    // e45-e56
};

Instance build_benchmark() {
    std::vector<EdgeSpec> edges;
    for (const EdgeRow& r : kBenchmarkEdges) {
        EdgeSpec e;
        e.a = r.a - 1;
        e.b = r.b - 1;
        e.weight = RoughFuzzyWeight{{r.lo, r.mode, r.hi}, r.a1, r.a2, r.a3, r.a4};
        edges.push_back(e);
    }
    std::vector<QuadSpec> quads;
    for (const QuadRow& r : kBenchmarkQuads) {
        quads.push_back(QuadSpec{r.e1, r.e2, RoughFuzzyWeight{{r.lo, r.mode, r.hi}, r.a1, r.a2, r.a3, r.a4}});
    }
    return Instance(9, std::move(edges), std::move(quads));
}

}  // namespace

const Instance& paper_instance() {
    static const Instance inst = build_benchmark();
    return inst;
}

Instance generate_random(int vertices, int edges, std::uint64_t seed) {
    if (vertices < 2) {
        throw InfeasibleRequest("generate_random: need at least 2 vertices");
    }
    const long max_edges = static_cast<long>(vertices) * (vertices - 1) / 2;
    if (edges < vertices - 1 || edges > max_edges) {
        throw InfeasibleRequest("generate_random: edge count " + std::to_string(edges) +
                                " outside [" + std::to_string(vertices - 1) + ", " +
                                std::to_string(max_edges) + "]");
    }

    Rng rng(seed);
    auto draw_weight = [&rng]() {
        RoughFuzzyWeight w;
        w.base.lo = 8.0 + 4.0 * rand_unit(rng);
        w.base.mode = w.base.lo + 0.5 + 2.5 * rand_unit(rng);
        w.base.hi = w.base.mode + 0.5 + 2.5 * rand_unit(rng);
        w.a1 = 0.0;
        w.a2 = 0.2 + 2.3 * rand_unit(rng);
        w.a3 = -(0.2 + 1.8 * rand_unit(rng));
        w.a4 = w.a2 + 0.1 + 0.9 * rand_unit(rng);
        return w;
    };

    // Random spanning tree first: attach each vertex, in shuffled order, to a
    // uniformly chosen earlier one.
    std::vector<int> order(vertices);
    std::iota(order.begin(), order.end(), 0);
    shuffle_inplace(order, rng);

    std::set<std::pair<int, int>> used;
    std::vector<EdgeSpec> es;
    es.reserve(edges);
    for (int i = 1; i < vertices; ++i) {
        int a = order[i];
        int b = order[rand_below(rng, i)];
        if (a > b) std::swap(a, b);
        used.insert({a, b});
        EdgeSpec e;
        e.a = a;
        e.b = b;
        e.weight = draw_weight();
        es.push_back(e);
    }

    std::vector<std::pair<int, int>> rest;
    for (int a = 0; a < vertices; ++a) {
        for (int b = a + 1; b < vertices; ++b) {
            if (!used.count({a, b})) rest.push_back({a, b});
        }
    }
    shuffle_inplace(rest, rng);
    for (int i = 0; i < edges - (vertices - 1); ++i) {
        EdgeSpec e;
        e.a = rest[i].first;
        e.b = rest[i].second;
        e.weight = draw_weight();
        es.push_back(e);
    }

    std::vector<QuadSpec> qs;
    qs.reserve(static_cast<std::size_t>(edges) * (edges - 1) / 2);
    for (int i = 0; i < edges; ++i) {
        for (int j = i + 1; j < edges; ++j) {
            qs.push_back(QuadSpec{i, j, draw_weight()});
        }
    }

    return Instance(vertices, std::move(es), std::move(qs));
}

}  // namespace qmst
