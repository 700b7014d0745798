#pragma once

#include <vector>

namespace qmst {

// Triangular fuzzy number: tent-shaped membership over the support [lo, hi]
// with peak at mode. lo == mode == hi encodes a crisp value.
struct TriangularFuzzy {
    double lo = 0.0;
    double mode = 0.0;
    double hi = 0.0;

    bool valid() const { return lo <= mode && mode <= hi; }
    bool crisp() const { return lo == hi; }

    friend bool operator==(const TriangularFuzzy&, const TriangularFuzzy&) = default;
};

// Rough variable in interval form: a lower approximation [lo1, lo2] nested
// inside an upper approximation [up1, up2].
struct RoughInterval {
    double lo1 = 0.0;
    double lo2 = 0.0;
    double up1 = 0.0;
    double up2 = 0.0;

    bool valid() const { return up1 <= lo1 && lo1 <= lo2 && lo2 <= up2; }
};

// A cost whose realizations are rough intervals sharing one fuzzy core:
// [core+a1, core+a2][core+a3, core+a4].
struct RoughFuzzyWeight {
    TriangularFuzzy base;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;

    bool valid() const { return base.valid() && a3 <= a1 && a1 <= a2 && a2 <= a4; }
    RoughInterval realization(double core) const {
        return RoughInterval{core + a1, core + a2, core + a3, core + a4};
    }

    friend bool operator==(const RoughFuzzyWeight&, const RoughFuzzyWeight&) = default;
};

// Per-objective trust (alpha) and credibility (beta) levels, all in [0, 1].
struct ConfidenceLevels {
    double alpha1 = 0.9;
    double alpha2 = 0.9;
    double beta1 = 0.4;
    double beta2 = 0.4;

    bool valid() const;
};

// Weight sum over a selection. `lower` is the fuzzy left end of the summed
// outer interval and `width` its length. All four interval ends of a weight
// shift the same fuzzy core, so the width is a plain number: it is the sum of
// the per-weight offset spans (a4 - a3), never a fuzzy quantity.
struct AggregatedChance {
    TriangularFuzzy lower;
    double width = 0.0;

    bool valid() const { return lower.valid() && width >= 0.0; }
};

struct PosNec {
    double possibility = 0.0;
    double necessity = 0.0;
};

struct TwoSided {
    double leq = 0.0;
    double geq = 0.0;
};

// Membership grade of x.
double tfv_membership(const TriangularFuzzy& tf, double x);

// Possibility and necessity of the event {tf <= x}.
PosNec possibility_necessity_leq(const TriangularFuzzy& tf, double x);

// Credibility of {tf <= x} and {tf >= x}. For non-degenerate tf this equals
// the mean of possibility and necessity; degenerate legs collapse to steps.
TwoSided credibility(const TriangularFuzzy& tf, double x);

// Smallest x with Cr{tf <= x} >= beta.
double cr_quantile_leq(const TriangularFuzzy& tf, double beta);

// Trust of {ri <= x} and {ri >= x}: the mean of the lower- and
// upper-approximation uniform measures.
TwoSided trust(const RoughInterval& ri, double x);

// Smallest x with Tr{ri <= x} >= alpha. Requires up1 < up2.
double tr_quantile_leq(const RoughInterval& ri, double alpha);

struct WeightedTerm {
    TriangularFuzzy value;
    double coeff = 1.0;
    double shift = 0.0;
};

// Component-wise sum of coeff * value + shift over all terms. Coefficients
// must be nonnegative or the component order would flip.
TriangularFuzzy tfv_affine_sum(const std::vector<WeightedTerm>& terms);

// Crisp minimal objective bound of the two-level chance constraint at trust
// level alpha and credibility level beta. The *_lower form is the
// beta <= 0.5 reduction, *_upper the beta >= 0.5 one; they agree at 0.5.
double chance_reduce_lower(const AggregatedChance& agg, double alpha, double beta);
double chance_reduce_upper(const AggregatedChance& agg, double alpha, double beta);
double chance_reduce(const AggregatedChance& agg, double alpha, double beta);

// Bisection inversion of the same constraint, accurate to well below 1e-9.
// Works through possibility/necessity only, so it shares no code path with
// the closed-form branches above.
double chance_reduce_bisect_oracle(const AggregatedChance& agg, double alpha, double beta);

}  // namespace qmst
