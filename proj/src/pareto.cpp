#include "plwd/pareto.hpp"

#include <algorithm>

#include "plwd/detail/front_sweep.hpp"
#include "plwd/error.hpp"
#include "plwd/weights.hpp"

namespace plwd {

bool dominates(const Label& p, const Label& q) {
    return p.length >= q.length && p.sum <= q.sum;
}

LabelSet pareto_filter(std::span<const Label> labels) {
    LabelSet front(labels.begin(), labels.end());
    detail::keep_minimal(
        front, detail::LengthPreference::Longer, [](const Label& l) { return l.length; },
        [](const Label& l) { return l.sum; });
    return front;
}

LabelSet definitional_front(std::span<const Label> labels, const Dominance& dominance) {
    LabelSet unique;
    for (const Label& x : labels) {
        if (std::find(unique.begin(), unique.end(), x) == unique.end()) {
            unique.push_back(x);
        }
    }
    LabelSet front;
    for (const Label& x : unique) {
        const bool dominated = std::any_of(unique.begin(), unique.end(),
                                           [&](const Label& y) { return !(y == x) && dominance(y, x); });
        if (!dominated) {
            front.push_back(x);
        }
    }
    return front;
}

bool is_antichain(std::span<const Label> labels, const Dominance& dominance) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (i == j) {
                continue;
            }
            if (labels[i] == labels[j] || dominance(labels[i], labels[j])) {
                return false;
            }
        }
    }
    return true;
}

Label extend(double phi, const Label& label) {
    return {label.sum + phi, label.length + 1};
}

double label_distance(const Label& label, const WeightSequence& w) {
    if (label.length == 0) {
        return 0.0;
    }
    return w.at(label.length) * label.sum;
}

DistanceLength combine_distances(DistanceLength a, DistanceLength b, const WeightSequence& w) {
    if (a.length == 0 || b.length == 0) {
        throw Error(ErrorCode::InvalidParams, "combine_distances needs two non-empty paths");
    }
    const std::size_t length = a.length + b.length;
    const double distance = w.at(length) * (a.distance / w.at(a.length) + b.distance / w.at(b.length));
    return {distance, length};
}

}  // namespace plwd
