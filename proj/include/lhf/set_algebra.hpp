#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <vector>

namespace lhf {

// Set primitives over sorted, duplicate-free vectors. All binary operations
// are single linear merge walks; lookup is a binary search.

template <typename T, typename Less = std::less<T>>
bool is_strictly_sorted(const std::vector<T> &v, Less less = Less()) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!less(v[i - 1], v[i]))
            return false;
    return true;
}

template <typename T, typename Less = std::less<T>>
std::vector<T> merge_union(const std::vector<T> &a, const std::vector<T> &b, Less less = Less()) {
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), less);
    return out;
}

template <typename T, typename Less = std::less<T>>
std::vector<T> merge_intersection(const std::vector<T> &a, const std::vector<T> &b, Less less = Less()) {
    std::vector<T> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), less);
    return out;
}

template <typename T, typename Less = std::less<T>>
std::vector<T> merge_difference(const std::vector<T> &a, const std::vector<T> &b, Less less = Less()) {
    std::vector<T> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), less);
    return out;
}

/// True iff every element of sub is in super.
template <typename T, typename Less = std::less<T>>
bool sorted_includes(const std::vector<T> &super, const std::vector<T> &sub, Less less = Less()) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end(), less);
}

template <typename T, typename Less = std::less<T>>
bool sorted_contains(const std::vector<T> &v, const T &x, Less less = Less()) {
    auto it = std::lower_bound(v.begin(), v.end(), x, less);
    return it != v.end() && !less(x, *it);
}

/// Copy of v with x inserted (no-op copy if already present).
template <typename T, typename Less = std::less<T>>
std::vector<T> sorted_insert_copy(const std::vector<T> &v, const T &x, Less less = Less()) {
    std::vector<T> out;
    out.reserve(v.size() + 1);
    auto it = std::lower_bound(v.begin(), v.end(), x, less);
    out.insert(out.end(), v.begin(), it);
    if (it == v.end() || less(x, *it))
        out.push_back(x);
    out.insert(out.end(), it, v.end());
    return out;
}

/// Copy of v with x removed (no-op copy if absent).
template <typename T, typename Less = std::less<T>>
std::vector<T> sorted_remove_copy(const std::vector<T> &v, const T &x, Less less = Less()) {
    std::vector<T> out;
    out.reserve(v.size());
    auto it = std::lower_bound(v.begin(), v.end(), x, less);
    out.insert(out.end(), v.begin(), it);
    if (it != v.end() && !less(x, *it))
        ++it;
    out.insert(out.end(), it, v.end());
    return out;
}

} // namespace lhf
