// Shared test helpers. The naive sweep is the tests' own ground truth:
// a full powerset scan that is independent of both the library's pruned
// DFS and its closed forms.
#pragma once

#include <schreier/schreier.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace test_support {

using schreier::FamilyParams;
using schreier::FiniteSet;
using schreier::Int;

// Every subset of {1..n} that contains n and satisfies the family
// predicate, in lexicographic order. Feasible for n up to ~20.
inline std::vector<std::vector<std::int64_t>> naive_members(const FamilyParams& params,
                                                            int n) {
    std::vector<std::vector<std::int64_t>> out;
    const std::uint32_t limit = 1u << (n - 1);
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        std::vector<std::int64_t> elems;
        for (int b = 0; b < n - 1; ++b) {
            if (mask & (1u << b)) elems.push_back(b + 1);
        }
        elems.push_back(n);
        const auto card = static_cast<std::int64_t>(elems.size());
        const std::int64_t smallest = elems.front();
        const std::int64_t second = elems.size() >= 2 ? elems[1] : elems.front();
        if (smallest < params.p() * card) continue;
        if (params.has_q() && second < *params.q() * card) continue;
        out.push_back(std::move(elems));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t naive_count(const FamilyParams& params, int n) {
    return static_cast<std::int64_t>(naive_members(params, n).size());
}

inline std::vector<Int> to_ints(const std::vector<long>& values) {
    return std::vector<Int>(values.begin(), values.end());
}

} // namespace test_support
