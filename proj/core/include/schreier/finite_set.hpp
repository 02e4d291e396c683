#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schreier {

/// A nonempty finite set of positive integers, kept as a strictly
/// increasing element list. The second-smallest element of a singleton
/// is the element itself.
class FiniteSet {
public:
    using element_type = std::int64_t;

    /// Validates: nonempty, strictly increasing, all elements >= 1.
    /// Throws std::invalid_argument otherwise.
    explicit FiniteSet(std::vector<element_type> elements);

    element_type min() const { return elements_.front(); }
    element_type max() const { return elements_.back(); }
    element_type min2() const {
        return elements_.size() >= 2 ? elements_[1] : elements_.front();
    }
    std::size_t card() const { return elements_.size(); }
    const std::vector<element_type>& elements() const { return elements_; }

    bool contains(element_type value) const;

    std::string str() const; // "{2, 5, 9}"

    friend bool operator==(const FiniteSet& a, const FiniteSet& b) = default;
    friend std::strong_ordering operator<=>(const FiniteSet& a, const FiniteSet& b) {
        return a.elements_ <=> b.elements_; // lexicographic on the element list
    }

private:
    std::vector<element_type> elements_;
};

/// Second-smallest element, with the singleton convention.
inline FiniteSet::element_type min2(const FiniteSet& s) { return s.min2(); }

/// Selects a set family: min S >= p*|S|, and when q is present
/// additionally min2 S >= q*|S|.
class FamilyParams {
public:
    explicit FamilyParams(std::int64_t p);
    FamilyParams(std::int64_t p, std::int64_t q);
    FamilyParams(std::int64_t p, std::optional<std::int64_t> q);

    std::int64_t p() const { return p_; }
    const std::optional<std::int64_t>& q() const { return q_; }
    bool has_q() const { return q_.has_value(); }

    std::string str() const; // "p=1" or "p=1 q=2"

    friend bool operator==(const FamilyParams& a, const FamilyParams& b) = default;

private:
    std::int64_t p_;
    std::optional<std::int64_t> q_;
};

/// Membership predicate for the family selected by params. Works for any
/// (p, q) pair; the closed forms and recurrences additionally need p < q.
bool is_member(const FiniteSet& s, const FamilyParams& params);

} // namespace schreier
