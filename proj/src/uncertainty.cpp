#include "qmst/uncertainty.hpp"

#include <cmath>
#include <stdexcept>

namespace qmst {

bool ConfidenceLevels::valid() const {
    auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
    return in01(alpha1) && in01(alpha2) && in01(beta1) && in01(beta2);
}

double tfv_membership(const TriangularFuzzy& tf, double x) {
    if (x < tf.lo || x > tf.hi) return 0.0;
    if (x <= tf.mode) {
        return tf.lo == tf.mode ? 1.0 : (x - tf.lo) / (tf.mode - tf.lo);
    }
    return tf.mode == tf.hi ? 1.0 : (tf.hi - x) / (tf.hi - tf.mode);
}

PosNec possibility_necessity_leq(const TriangularFuzzy& tf, double x) {
    PosNec r;
    // sup of membership over (-inf, x]
    if (x < tf.lo) {
        r.possibility = 0.0;
    } else if (x >= tf.mode) {
        r.possibility = 1.0;
    } else {
        r.possibility = (x - tf.lo) / (tf.mode - tf.lo);
    }
    // 1 - sup of membership over (x, +inf); the sup stays 1 while x < mode.
    if (x < tf.mode) {
        r.necessity = 0.0;
    } else if (x >= tf.hi) {
        r.necessity = 1.0;
    } else {
        r.necessity = (x - tf.mode) / (tf.hi - tf.mode);
    }
    return r;
}

TwoSided credibility(const TriangularFuzzy& tf, double x) {
    TwoSided r;
    if (x < tf.lo) {
        r.leq = 0.0;
    } else if (x >= tf.hi) {
        r.leq = 1.0;
    } else if (x < tf.mode) {
        r.leq = (x - tf.lo) / (2.0 * (tf.mode - tf.lo));
    } else {
        r.leq = (x + tf.hi - 2.0 * tf.mode) / (2.0 * (tf.hi - tf.mode));
    }
    if (x <= tf.lo) {
        r.geq = 1.0;
    } else if (x > tf.hi) {
        r.geq = 0.0;
    } else if (x <= tf.mode) {
        r.geq = (2.0 * tf.mode - tf.lo - x) / (2.0 * (tf.mode - tf.lo));
    } else {
        r.geq = (tf.hi - x) / (2.0 * (tf.hi - tf.mode));
    }
    return r;
}

double cr_quantile_leq(const TriangularFuzzy& tf, double beta) {
    if (beta <= 0.5) {
        return (1.0 - 2.0 * beta) * tf.lo + 2.0 * beta * tf.mode;
    }
    return (2.0 - 2.0 * beta) * tf.mode + (2.0 * beta - 1.0) * tf.hi;
}

TwoSided trust(const RoughInterval& ri, double x) {
    TwoSided r;
    if (x >= ri.up2) {
        r.leq = 1.0;
    } else if (x <= ri.up1) {
        r.leq = 0.0;
    } else {
        const double outer = (x - ri.up1) / (ri.up2 - ri.up1);
        double inner = 0.0;
        if (x >= ri.lo2) {
            inner = 1.0;
        } else if (x > ri.lo1) {
            inner = (x - ri.lo1) / (ri.lo2 - ri.lo1);
        }
        r.leq = 0.5 * (inner + outer);
    }
    if (x <= ri.up1) {
        r.geq = 1.0;
    } else if (x >= ri.up2) {
        r.geq = 0.0;
    } else {
        const double outer = (ri.up2 - x) / (ri.up2 - ri.up1);
        double inner = 1.0;
        if (x >= ri.lo2) {
            inner = 0.0;
        } else if (x > ri.lo1) {
            inner = (ri.lo2 - x) / (ri.lo2 - ri.lo1);
        }
        r.geq = 0.5 * (inner + outer);
    }
    return r;
}

double tr_quantile_leq(const RoughInterval& ri, double alpha) {
    const double m = ri.lo1;
    const double n = ri.lo2;
    const double p = ri.up1;
    const double q = ri.up2;
    const double span = q - p;
    const double trust_at_m = 0.5 * (m - p) / span;
    const double trust_at_n = 0.5 * (1.0 + (n - p) / span);
    if (alpha <= trust_at_m) return p + 2.0 * alpha * span;
    if (alpha >= trust_at_n) return 2.0 * p - q + 2.0 * alpha * span;
    return (m * q + p * n + 2.0 * alpha * (n - m) * span - 2.0 * p * m) / (n + q - (p + m));
}

TriangularFuzzy tfv_affine_sum(const std::vector<WeightedTerm>& terms) {
    TriangularFuzzy sum{0.0, 0.0, 0.0};
    for (const WeightedTerm& t : terms) {
        if (t.coeff < 0.0) {
            throw std::invalid_argument("tfv_affine_sum: negative coefficient");
        }
        sum.lo += t.coeff * t.value.lo + t.shift;
        sum.mode += t.coeff * t.value.mode + t.shift;
        sum.hi += t.coeff * t.value.hi + t.shift;
    }
    return sum;
}

double chance_reduce_lower(const AggregatedChance& agg, double alpha, double beta) {
    const TriangularFuzzy& f = agg.lower;
    return f.lo + 2.0 * alpha * agg.width + 2.0 * beta * (f.mode - f.lo);
}

double chance_reduce_upper(const AggregatedChance& agg, double alpha, double beta) {
    const TriangularFuzzy& f = agg.lower;
    return 2.0 * f.mode - f.hi + 2.0 * alpha * agg.width + 2.0 * beta * (f.hi - f.mode);
}

double chance_reduce(const AggregatedChance& agg, double alpha, double beta) {
    return beta <= 0.5 ? chance_reduce_lower(agg, alpha, beta)
                       : chance_reduce_upper(agg, alpha, beta);
}

double chance_reduce_bisect_oracle(const AggregatedChance& agg, double alpha, double beta) {
    const double offset = 2.0 * alpha * agg.width;
    auto cred_leq = [&](double y) {
        const PosNec pn = possibility_necessity_leq(agg.lower, y);
        return 0.5 * (pn.possibility + pn.necessity);
    };
    // The reduction constrains the fuzzy part to its support, so the search
    // bracket starts at the shifted left support even when beta is 0.
    double low = agg.lower.lo + offset;
    double high = agg.lower.hi + offset;
    if (cred_leq(low - offset) >= beta) return low;
    for (int i = 0; i < 200 && low < high; ++i) {
        const double mid = 0.5 * (low + high);
        if (mid <= low || mid >= high) break;
        if (cred_leq(mid - offset) >= beta) {
            high = mid;
        } else {
            low = mid;
        }
    }
    return high;
}

}  // namespace qmst
