#include "clinsynth/metrics/stat_tests.hpp"

#include "clinsynth/metrics/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace clinsynth::metrics {

namespace {

struct SampleStats {
    double mean = 0.0;
    double var = 0.0;  // unbiased
    std::size_t n = 0;
};

SampleStats summarize(std::span<const double> xs) {
    SampleStats s;
    s.n = xs.size();
    for (const double x : xs) {
        s.mean += x;
    }
    s.mean /= static_cast<double>(s.n);
    for (const double x : xs) {
        const double d = x - s.mean;
        s.var += d * d;
    }
    s.var /= static_cast<double>(s.n - 1);
    return s;
}

}  // namespace

TestResult welch_t_test(std::span<const double> a, std::span<const double> b, bool pooled) {
    if (a.size() < 2 || b.size() < 2) {
        throw std::invalid_argument("welch_t_test: each sample needs at least 2 observations");
    }
    const SampleStats sa = summarize(a);
    const SampleStats sb = summarize(b);
    const double na = static_cast<double>(sa.n);
    const double nb = static_cast<double>(sb.n);

    TestResult r;
    r.kind = TestKind::welch_t;

    if (sa.var == 0.0 && sb.var == 0.0) {
        r.df = na + nb - 2.0;
        if (sa.mean == sb.mean) {
            r.statistic = 0.0;
            r.p_value = 1.0;
        } else {
            r.statistic = sa.mean > sb.mean ? std::numeric_limits<double>::infinity()
                                            : -std::numeric_limits<double>::infinity();
            r.p_value = 0.0;
            r.degenerate = true;
        }
        return r;
    }

    if (pooled) {
        const double sp2 =
            ((na - 1.0) * sa.var + (nb - 1.0) * sb.var) / (na + nb - 2.0);
        const double se = std::sqrt(sp2 * (1.0 / na + 1.0 / nb));
        r.statistic = (sa.mean - sb.mean) / se;
        r.df = na + nb - 2.0;
    } else {
        const double va = sa.var / na;
        const double vb = sb.var / nb;
        const double se2 = va + vb;
        r.statistic = (sa.mean - sb.mean) / std::sqrt(se2);
        r.df = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
    }
    r.p_value = t_two_sided_p(r.statistic, r.df);
    return r;
}

TestResult chi_square_independence(const std::vector<std::vector<double>>& table) {
    const std::size_t rows = table.size();
    if (rows < 2) {
        throw std::invalid_argument("chi_square_independence: need at least 2 rows");
    }
    const std::size_t cols = table[0].size();
    if (cols < 2) {
        throw std::invalid_argument("chi_square_independence: need at least 2 columns");
    }
    for (const auto& row : table) {
        if (row.size() != cols) {
            throw std::invalid_argument("chi_square_independence: ragged table");
        }
        for (const double v : row) {
            if (v < 0.0) {
                throw std::invalid_argument("chi_square_independence: negative count");
            }
        }
    }

    std::vector<double> row_sum(rows, 0.0);
    std::vector<double> col_sum(cols, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            row_sum[i] += table[i][j];
            col_sum[j] += table[i][j];
            total += table[i][j];
        }
    }
    for (const double s : row_sum) {
        if (s == 0.0) {
            throw std::invalid_argument("chi_square_independence: all-zero row");
        }
    }
    for (const double s : col_sum) {
        if (s == 0.0) {
            throw std::invalid_argument("chi_square_independence: all-zero column");
        }
    }

    double stat = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double expected = row_sum[i] * col_sum[j] / total;
            const double d = table[i][j] - expected;
            stat += d * d / expected;
        }
    }

    TestResult r;
    r.kind = TestKind::chi_square;
    r.statistic = stat;
    r.df = static_cast<double>((rows - 1) * (cols - 1));
    r.p_value = chi2_sf(stat, static_cast<int>(r.df));
    return r;
}

}  // namespace clinsynth::metrics
