#include "clinsynth/metrics/classification.hpp"

#include <stdexcept>
#include <unordered_map>

namespace clinsynth::metrics {

const ClassMetrics& ClassificationReport::for_label(const std::string& label) const {
    for (const auto& m : per_class) {
        if (m.label == label) {
            return m;
        }
    }
    throw std::invalid_argument("no metrics for label: " + label);
}

ClassificationReport classification_report(const std::vector<std::string>& y_true,
                                           const std::vector<std::string>& y_pred,
                                           const std::vector<std::string>& classes) {
    if (y_true.empty()) {
        throw std::invalid_argument("classification_report: empty input");
    }
    if (y_true.size() != y_pred.size()) {
        throw std::invalid_argument("classification_report: y_true and y_pred length mismatch");
    }
    if (classes.empty()) {
        throw std::invalid_argument("classification_report: empty class list");
    }

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        index[classes[i]] = i;
    }
    const std::size_t k = classes.size();

    ClassificationReport report;
    report.confusion.assign(k, std::vector<std::size_t>(k + 1, 0));

    std::size_t correct = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const auto ti = index.find(y_true[i]);
        if (ti == index.end()) {
            throw std::invalid_argument("classification_report: true label not in classes: " +
                                        y_true[i]);
        }
        const auto pi = index.find(y_pred[i]);
        const std::size_t col = pi == index.end() ? k : pi->second;
        report.confusion[ti->second][col] += 1;
        if (col == ti->second) {
            ++correct;
        }
    }

    double weighted_sum = 0.0;
    double macro_sum = 0.0;
    std::size_t total_support = 0;
    report.per_class.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t tp = report.confusion[c][c];
        std::size_t support = 0;
        for (std::size_t j = 0; j <= k; ++j) {
            support += report.confusion[c][j];
        }
        std::size_t predicted = 0;
        for (std::size_t r = 0; r < k; ++r) {
            predicted += report.confusion[r][c];
        }
        ClassMetrics m;
        m.label = classes[c];
        m.support = support;
        m.precision = predicted == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(predicted);
        m.recall = support == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(support);
        m.f1 = (m.precision + m.recall) == 0.0
                   ? 0.0
                   : 2.0 * m.precision * m.recall / (m.precision + m.recall);
        weighted_sum += m.f1 * static_cast<double>(support);
        macro_sum += m.f1;
        total_support += support;
        report.per_class.push_back(std::move(m));
    }
    report.weighted_f1 = total_support == 0 ? 0.0 : weighted_sum / static_cast<double>(total_support);
    report.macro_f1 = macro_sum / static_cast<double>(k);
    report.accuracy = static_cast<double>(correct) / static_cast<double>(y_true.size());
    return report;
}

}  // namespace clinsynth::metrics
