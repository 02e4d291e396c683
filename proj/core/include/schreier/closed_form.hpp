#pragma once

#include <cstdint>

#include "schreier/numeric.hpp"
#include "schreier/sequence_table.hpp"

namespace schreier {

/// Binomial coefficient with the usual conventions: 0 when j > m, 1 when
/// j = 0. Inputs must be non-negative.
Int binomial(std::int64_t m, std::int64_t j);

/// Number of member sets of the single-parameter family (min >= p*|S|)
/// with maximum exactly m, by direct summation:
///   0 for m < p, 1 for m = p, and for m >= p+1
///   sum_{k=1}^{m-1} sum_{j=0}^{floor(k/p)-2} C(m-k-1, j) + 1
/// where k runs over candidate minima and an inner sum with a negative
/// upper bound is empty.
Int count_order_p(std::int64_t p, std::int64_t m);

/// Number of member sets of the two-parameter family (min >= p*|S| and
/// min2 >= q*|S|, p < q) with maximum exactly n:
///   0 for n <= q-1, 1 for q <= n <= 2q-1, and for n >= 2q
///   1 + (n-2p) + sum_{k=3}^{floor((n+2)/(q+1))} sum_{i=qk}^{n+2-k} (i-pk)*C(n-i-1, k-3)
/// where k is the cardinality and i the second-smallest element.
/// Throws std::domain_error for p >= q (the formula's hypothesis).
Int count_order_pq(std::int64_t p, std::int64_t q, std::int64_t n);

/// Table of closed-form counts for n = 1..max_n (method = closed-form).
/// Shares one binomial cache across all terms.
SequenceTable closed_form_table(const FamilyParams& params, std::int64_t max_n);

} // namespace schreier
