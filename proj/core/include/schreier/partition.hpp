#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schreier/enumerate.hpp"
#include "schreier/finite_set.hpp"
#include "schreier/numeric.hpp"

namespace schreier {

/// One part of a partition together with the bijection that accounts for
/// its cardinality. `expected` is the cardinality forced by the
/// bijection's other side, `actual` the number of family members
/// classified into the part.
struct PartitionPart {
    std::string part;                     // "A", "B", "C_0", ...
    std::string map;                      // the bijection checked for this part
    Int expected = 0;
    Int actual = 0;
    bool injective = false;
    bool onto = false;                    // image set equals the other side exactly
    std::optional<FiniteSet> counterexample;

    bool pass() const { return injective && onto && expected == actual; }
};

struct PartitionReport {
    std::int64_t target_index = 0;        // maximum element of the partitioned family
    Int family_size = 0;
    bool exact_partition = false;         // every member lands in exactly one part
    std::vector<PartitionPart> parts;
    std::optional<FiniteSet> counterexample; // first set breaking the partition itself

    bool all_pass() const;
};

/// Materializes the family with maximum n+p+1, splits it by whether n+p
/// is present, and checks the two cardinality bijections:
///   raise_max:    members with max n+p   -> part without n+p
///                 (replace the maximum with n+p+1)
///   shift_append: members with max n     -> part with n+p
///                 (add p to every element, then append n+p+1)
/// Each map is checked by explicit image-set equality and injectivity.
PartitionReport verify_partition_order_p(std::int64_t p, std::int64_t n,
                                         std::int64_t ceiling = kDefaultOracleCeiling);

/// Same check for the two-parameter family (p < q) with maximum n+2q+1,
/// split into three classes by the presence of n+2q and whether the set
/// minus its maximum, shifted down by q, is itself a member:
///   raise_max:    members with max n+2q -> part A (n+2q absent)
///   shift_append: members with max n+q  -> part B (shift by q works)
///   trim_shift_down: part C splits by min = p*|S| + i, 0 <= i <= q-p-1,
///                 and each class maps onto the order-q family with max n
///                 (drop max and min, subtract 2q from the rest).
/// Throws std::domain_error for p >= q.
PartitionReport verify_partition_order_pq(std::int64_t p, std::int64_t q, std::int64_t n,
                                          std::int64_t ceiling = kDefaultOracleCeiling);

} // namespace schreier
