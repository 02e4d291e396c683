#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "schreier/numeric.hpp"
#include "schreier/recurrence.hpp"

namespace schreier {

/// Result of a minimal-recurrence search. `minimal` is true when every
/// smaller order was refuted by an inconsistent exact linear system, so
/// the returned order is the smallest that fits the whole prefix.
struct DetectionResult {
    LinearRecurrence recurrence;
    std::int64_t verified_prefix_length = 0;
    bool minimal = false;
};

/// Finds the minimal-order constant-coefficient recurrence that holds at
/// every applicable index of the prefix, searching orders 1, 2, ... by
/// exact linear-system solving over rationals.
///
/// Certifying order d needs a prefix of length >= 2d+4 (the d unknowns
/// plus a margin of equations the fit must generalize over), so the
/// search is capped at floor((len-4)/2) even when max_order is larger.
/// Returns std::nullopt when no searched order fits; throws
/// std::invalid_argument("prefix too short...") when even order 1 cannot
/// be certified. The result's recurrence carries the first `order`
/// prefix values as seeds.
std::optional<DetectionResult> detect_minimal(std::span<const Int> prefix,
                                              std::int64_t max_order);

/// True iff the recurrence holds exactly at every applicable index of
/// the prefix. Throws std::invalid_argument("prefix too short") when no
/// index is applicable.
bool verify_annihilates(const LinearRecurrence& rec, std::span<const Int> prefix);

/// Coefficients of x^d - c1*x^(d-1) - ... - cd, highest degree first.
std::vector<Rat> characteristic_coefficients(const LinearRecurrence& rec);

} // namespace schreier
