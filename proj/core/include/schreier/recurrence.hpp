#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "schreier/numeric.hpp"
#include "schreier/sequence_table.hpp"

namespace schreier {

/// Constant-coefficient linear recurrence
///   a(m) = c1*a(m-1) + c2*a(m-2) + ... + cd*a(m-d).
/// Coefficients are exact rationals; the trailing coefficient must be
/// nonzero (a trailing zero would reduce the order).
class LinearRecurrence {
public:
    explicit LinearRecurrence(std::vector<Rat> coefficients);

    std::size_t order() const { return coefficients_.size(); }
    const std::vector<Rat>& coefficients() const { return coefficients_; }

    /// Optional seed terms; when set, exactly `order` of them.
    const std::optional<std::vector<Int>>& seeds() const { return seeds_; }
    void set_seeds(std::vector<Int> seeds);

    friend bool operator==(const LinearRecurrence& a, const LinearRecurrence& b) = default;

private:
    std::vector<Rat> coefficients_;
    std::optional<std::vector<Int>> seeds_;
};

/// a(m) = a(m-1) + a(m-p-1): the recurrence satisfied by the
/// single-parameter counting sequence. Order p+1.
LinearRecurrence order_p_recurrence(std::int64_t p);

/// The self-contained recurrence satisfied by the shifted two-parameter
/// sequence a_n (see shifted_pq_values):
///   a(m) = 2a(m-1) - a(m-2) + 2a(m-q-1) - 2a(m-q-2) - a(m-2q-2).
/// Order 2q+2 for every p < q. Requires q >= 2.
LinearRecurrence uncoupled_pq_recurrence(std::int64_t q);

/// Appends `count` further terms to the prefix and returns just the new
/// terms. Throws std::invalid_argument("insufficient prefix") when the
/// prefix is shorter than the order, std::domain_error("non-integral
/// term") if a produced term is not an integer.
std::vector<Int> step_linear(const LinearRecurrence& rec, std::span<const Int> prefix,
                             std::int64_t count);

/// Checks the recurrence at every index m >= first_index + order of the
/// table. Returns std::nullopt when it holds everywhere, otherwise the
/// smallest violating absolute index. Throws std::invalid_argument
/// ("table too short") when the table has no checkable index.
std::optional<std::int64_t> check_recurrence(const LinearRecurrence& rec,
                                             const SequenceTable& table);

/// Single-parameter counting sequence for m = 1..max_n: seeds m <= p+1
/// from the closed form, then a(m) = a(m-1) + a(m-p-1).
SequenceTable seq_order_p(std::int64_t p, std::int64_t max_n);

/// Two-parameter counting sequence for m = 1..max_n via the coupled
/// recurrence |M(m)| = |M(m-1)| + |M(m-q-1)| + (q-p)*g(m-2q-1), where g
/// is the order-q single-parameter sequence (produced by seq_order_p).
/// Seeds m <= 2q+1 from the closed form. Requires p < q.
SequenceTable seq_order_pq_coupled(std::int64_t p, std::int64_t q, std::int64_t max_n);

/// Two-parameter counting sequence for m = 1..max_n via the uncoupled
/// depth-(2q+2) recurrence, seeds m <= 3q+2 from the closed form.
/// Requires p < q.
SequenceTable seq_order_pq_uncoupled(std::int64_t p, std::int64_t q, std::int64_t max_n);

/// The shifted view a_n = |M(n+q)| of a two-parameter table starting at
/// index 1: drops the first q values. This is the indexing under which
/// the coupled and uncoupled recurrences are stated.
std::vector<Int> shifted_pq_values(const SequenceTable& table);

} // namespace schreier
