#include "clinsynth/metrics/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace clinsynth::metrics {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-15;
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;

// Series expansion of P(a, x), converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x), converges fast for x >= a + 1 (modified
// Lentz's method).
double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) {
            d = kFpMin;
        }
        c = b + an / c;
        if (std::fabs(c) < kFpMin) {
            c = kFpMin;
        }
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// Continued fraction used by beta_inc (modified Lentz's method).
double beta_cf(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) {
        d = kFpMin;
    }
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double dm = static_cast<double>(m);
        const double m2 = 2.0 * dm;
        double aa = dm * (b - dm) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) {
            d = kFpMin;
        }
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) {
            c = kFpMin;
        }
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + dm) * (qab + dm) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) {
            d = kFpMin;
        }
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) {
            c = kFpMin;
        }
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) {
            break;
        }
    }
    return h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) {
        throw std::invalid_argument("gamma_p: requires a > 0 and x >= 0");
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (x < a + 1.0) {
        return gamma_p_series(a, x);
    }
    return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) {
        throw std::invalid_argument("gamma_q: requires a > 0 and x >= 0");
    }
    if (x == 0.0) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return 1.0 - gamma_p_series(a, x);
    }
    return gamma_q_cf(a, x);
}

double beta_inc(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0) {
        throw std::invalid_argument("beta_inc: requires a > 0 and b > 0");
    }
    if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument("beta_inc: x outside [0,1]");
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (x == 1.0) {
        return 1.0;
    }
    const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                         a * std::log(x) + b * std::log1p(-x);
    const double bt = std::exp(ln_bt);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return bt * beta_cf(a, b, x) / a;
    }
    return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double chi2_sf(double x, int df) {
    if (df < 1) {
        throw std::invalid_argument("chi2_sf: df must be >= 1");
    }
    if (x < 0.0) {
        throw std::invalid_argument("chi2_sf: x must be >= 0");
    }
    return gamma_q(static_cast<double>(df) / 2.0, x / 2.0);
}

double t_two_sided_p(double t, double df) {
    if (df <= 0.0) {
        throw std::invalid_argument("t_two_sided_p: df must be > 0");
    }
    if (std::isinf(t)) {
        return 0.0;
    }
    const double x = df / (df + t * t);
    return beta_inc(df / 2.0, 0.5, x);
}

}  // namespace clinsynth::metrics
