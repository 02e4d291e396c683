#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "schreier/finite_set.hpp"
#include "schreier/numeric.hpp"

namespace schreier {

/// How a table's values were produced.
enum class Method {
    enumeration,          // brute-force oracle
    closed_form,          // explicit summation formula
    recurrence_coupled,   // recurrence driven by the order-q companion sequence
    recurrence_uncoupled, // self-contained linear recurrence
};

std::string_view method_name(Method m); // "enumeration", "closed-form", ...
Method method_from_name(std::string_view name); // throws std::invalid_argument

/// Term values indexed by the required maximum element n = first_index,
/// first_index+1, ... Values are exact.
struct SequenceTable {
    FamilyParams params;
    std::int64_t first_index = 1;
    std::vector<Int> values;
    Method method = Method::enumeration;

    std::int64_t last_index() const {
        return first_index + static_cast<std::int64_t>(values.size()) - 1;
    }
    const Int& at(std::int64_t n) const; // absolute index; throws std::out_of_range

    friend bool operator==(const SequenceTable& a, const SequenceTable& b) = default;
};

inline const Int& SequenceTable::at(std::int64_t n) const {
    if (n < first_index || n > last_index()) {
        throw std::out_of_range("SequenceTable::at: index outside the table");
    }
    return values[static_cast<std::size_t>(n - first_index)];
}

} // namespace schreier
