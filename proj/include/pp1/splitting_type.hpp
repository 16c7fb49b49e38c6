#ifndef PP1_SPLITTING_TYPE_HPP
#define PP1_SPLITTING_TYPE_HPP

#include <algorithm>
#include <functional>
#include <vector>

namespace pp1 {

/// Multiset of line-bundle twists, kept sorted descending.
struct SplittingType {
    std::vector<int> twists;

    bool operator==(const SplittingType&) const = default;
    long long degree_sum() const {
        long long s = 0;
        for (int t : twists) s += t;
        return s;
    }
};

inline SplittingType make_type(std::vector<int> tw) {
    std::sort(tw.begin(), tw.end(), std::greater<int>());
    return SplittingType{std::move(tw)};
}

}  // namespace pp1

#endif
