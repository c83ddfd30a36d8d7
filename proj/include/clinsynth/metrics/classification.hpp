#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace clinsynth::metrics {

struct ClassMetrics {
    std::string label;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t support = 0;
};

/// Per-class one-vs-rest precision/recall/F1 plus support-weighted F1.
///
/// The confusion matrix is |classes| rows by |classes|+1 columns; the extra
/// column counts predictions outside the class list (e.g. unparseable model
/// output), which count against the true class but are never a hit for any
/// class. Row sums therefore always equal class supports.
struct ClassificationReport {
    std::vector<ClassMetrics> per_class;
    double weighted_f1 = 0.0;
    double macro_f1 = 0.0;
    double accuracy = 0.0;
    std::vector<std::vector<std::size_t>> confusion;

    const ClassMetrics& for_label(const std::string& label) const;
};

/// y_true entries must come from `classes`; y_pred entries outside `classes`
/// are allowed and never match. 0/0 divisions score 0. Throws
/// std::invalid_argument on empty input, length mismatch, or an unknown true
/// label.
ClassificationReport classification_report(const std::vector<std::string>& y_true,
                                           const std::vector<std::string>& y_pred,
                                           const std::vector<std::string>& classes);

}  // namespace clinsynth::metrics
