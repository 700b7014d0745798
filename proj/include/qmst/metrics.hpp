#pragma once

#include <cstddef>
#include <vector>

#include "qmst/tree.hpp"

namespace qmst {

// Set of mutually nondominated objective points, sorted by f1 (hence strictly
// decreasing in f2). Construction filters dominated points and duplicates.
class Front {
public:
    Front() = default;

    static Front nondominated(std::vector<ObjectivePair> points);

    const std::vector<ObjectivePair>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    friend bool operator==(const Front&, const Front&) = default;

private:
    std::vector<ObjectivePair> points_;
};

// Nondominated filter of the union of all fronts, duplicates removed.
Front build_reference_front(const std::vector<Front>& fronts);

// Affine rescale sending ref's per-objective min and max to 0 and 1. Points
// outside the reference box keep their out-of-range coordinates; an objective
// with zero reference range maps to 0.
Front normalize(const Front& front, const Front& ref);

// Area dominated by the front within the unit box against reference point
// (1, 1); expects a normalized front. Points not dominating (1, 1) add 0.
double hypervolume(const Front& front);

// The remaining indicators expect both arguments already normalized by the
// same reference. The point-set forms apply the plain formulas to arbitrary
// sets; the Front forms delegate to them.
double gd(const std::vector<ObjectivePair>& front, const std::vector<ObjectivePair>& ref);
double igd(const std::vector<ObjectivePair>& front, const std::vector<ObjectivePair>& ref);
double epsilon_additive(const std::vector<ObjectivePair>& front,
                        const std::vector<ObjectivePair>& ref);
double gd(const Front& front, const Front& ref);
double igd(const Front& front, const Front& ref);
double spread(const Front& front, const Front& ref);
double epsilon_additive(const Front& front, const Front& ref);

struct IndicatorValues {
    double hv = 0.0;
    double sp = 0.0;
    double gd = 0.0;
    double igd = 0.0;
    double eps = 0.0;
};

// Normalizes run and reference by the reference extremes and evaluates all
// five indicators.
IndicatorValues compute_indicators(const Front& run, const Front& reference);

struct RunStats {
    double mean = 0.0;
    double sd = 0.0;
    double median = 0.0;
    double iqr = 0.0;
};

// Arithmetic mean, population standard deviation, midpoint median, and
// interquartile range with linear-interpolation quartiles.
RunStats summarize_runs(std::vector<double> values);

}  // namespace qmst
