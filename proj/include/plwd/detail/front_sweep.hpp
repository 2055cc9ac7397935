#pragma once

#include <algorithm>
#include <limits>
#include <vector>

namespace plwd::detail {

enum class LengthPreference { Longer, Shorter };

/// Keeps the minimal elements of `items` under the order
///   a <= b  iff  length(a) is preferred-or-equal to length(b) and score(a) <= score(b).
/// Items equal in both keys collapse to one. O(m log m). The survivors are
/// left sorted by preferred length first.
template <class T, class LengthOf, class ScoreOf>
void keep_minimal(std::vector<T>& items, LengthPreference pref, LengthOf length_of, ScoreOf score_of) {
    std::stable_sort(items.begin(), items.end(), [&](const T& a, const T& b) {
        const auto la = length_of(a);
        const auto lb = length_of(b);
        if (la != lb) {
            return pref == LengthPreference::Longer ? la > lb : la < lb;
        }
        return score_of(a) < score_of(b);
    });
    double best = std::numeric_limits<double>::infinity();
    std::size_t kept = 0;
    for (std::size_t i = 0; i < items.size();) {
        const auto length = length_of(items[i]);
        const double group_min = score_of(items[i]);
        if (group_min < best) {
            items[kept++] = items[i];
            best = group_min;
        }
        while (i < items.size() && length_of(items[i]) == length) {
            ++i;
        }
    }
    items.resize(kept);
}

}  // namespace plwd::detail
