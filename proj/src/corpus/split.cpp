#include "clinsynth/corpus/split.hpp"

#include "clinsynth/util/hash.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace clinsynth::corpus {

SplitResult split_dataset(const CaseSet& cases, double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw std::invalid_argument("split_dataset: train_fraction must be in (0,1)");
    }
    const std::size_t n = cases.cases.size();
    if (n < 2) {
        throw std::invalid_argument("split_dataset: need at least 2 cases");
    }

    struct Stratum {
        CoarseLabel label;
        std::vector<std::size_t> members;  // indices into cases.cases
        std::size_t train_seats = 0;
        double remainder = 0.0;
    };
    std::vector<Stratum> strata;
    for (const CoarseLabel label : kCoarseLabels) {
        Stratum s;
        s.label = label;
        for (std::size_t i = 0; i < n; ++i) {
            if (cases.cases[i].truth_coarse == label) {
                s.members.push_back(i);
            }
        }
        if (!s.members.empty()) {
            strata.push_back(std::move(s));
        }
    }

    std::size_t target_train =
        static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));
    target_train = std::clamp<std::size_t>(target_train, 1, n - 1);

    std::size_t allocated = 0;
    for (auto& s : strata) {
        const double ideal = train_fraction * static_cast<double>(s.members.size());
        s.train_seats = static_cast<std::size_t>(std::floor(ideal));
        s.remainder = ideal - std::floor(ideal);
        allocated += s.train_seats;
    }

    // Hand out the remaining seats by largest remainder. Singleton strata get
    // priority so a lone member lands in train whenever the quota allows.
    std::mt19937_64 seat_rng(util::derive_subseed(seed, "split:seats"));
    std::vector<std::size_t> order(strata.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::shuffle(order.begin(), order.end(), seat_rng);  // deterministic tiebreak
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const bool sa = strata[a].members.size() < 2;
        const bool sb = strata[b].members.size() < 2;
        if (sa != sb) {
            return sa;
        }
        return strata[a].remainder > strata[b].remainder;
    });
    while (allocated < target_train) {
        bool progressed = false;
        for (const std::size_t i : order) {
            if (allocated >= target_train) {
                break;
            }
            if (strata[i].train_seats < strata[i].members.size()) {
                strata[i].train_seats += 1;
                ++allocated;
                progressed = true;
            }
        }
        if (!progressed) {
            break;
        }
    }
    // Rounding can overshoot only via the clamp; trim from the largest stratum.
    while (allocated > target_train) {
        auto it = std::max_element(strata.begin(), strata.end(), [](const auto& a, const auto& b) {
            return a.train_seats < b.train_seats;
        });
        if (it->train_seats == 0) {
            break;
        }
        it->train_seats -= 1;
        --allocated;
    }

    SplitResult result;
    std::vector<bool> in_train(n, false);
    for (auto& s : strata) {
        if (s.members.size() < 2) {
            result.warnings.push_back(
                std::string("stratum '") + std::string(to_string(s.label)) +
                "' has a single member; it cannot appear in both splits (assigned to " +
                (s.train_seats > 0 ? "train" : "test") + ")");
        }
        std::mt19937_64 rng(
            util::derive_subseed(seed, std::string("split:") + std::string(to_string(s.label))));
        std::vector<std::size_t> shuffled = s.members;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (std::size_t k = 0; k < s.train_seats; ++k) {
            in_train[shuffled[k]] = true;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        (in_train[i] ? result.train : result.test).cases.push_back(cases.cases[i]);
    }
    return result;
}

}  // namespace clinsynth::corpus
