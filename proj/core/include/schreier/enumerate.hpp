#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "schreier/finite_set.hpp"
#include "schreier/numeric.hpp"
#include "schreier/sequence_table.hpp"

namespace schreier {

/// Enumeration work is proportional to the number of member sets, which
/// grows geometrically in n; the ceiling bounds worst-case work.
inline constexpr std::int64_t kDefaultOracleCeiling = 40;

class OracleRangeError : public std::runtime_error {
public:
    OracleRangeError(std::int64_t n, std::int64_t ceiling);
    std::int64_t n() const { return n_; }
    std::int64_t ceiling() const { return ceiling_; }

private:
    std::int64_t n_;
    std::int64_t ceiling_;
};

/// All member sets of the family with maximum element exactly n, in
/// lexicographic order on the increasing element lists, no duplicates.
/// Throws OracleRangeError for n above the ceiling.
std::vector<FiniteSet> enumerate_with_max(const FamilyParams& params, std::int64_t n,
                                          std::int64_t ceiling = kDefaultOracleCeiling);

/// Number of member sets with maximum exactly n. Independent of the
/// closed forms and recurrences: a pruned DFS that counts leaves, used
/// as the ground truth they are checked against.
Int oracle_count(const FamilyParams& params, std::int64_t n,
                 std::int64_t ceiling = kDefaultOracleCeiling);

/// Table of oracle counts for n = 1..max_n (method = enumeration).
SequenceTable enumeration_table(const FamilyParams& params, std::int64_t max_n,
                                std::int64_t ceiling = kDefaultOracleCeiling);

} // namespace schreier
