#include "schreier/detect.hpp"

#include <algorithm>
#include <stdexcept>

namespace schreier {

namespace {

// Row-reduce the augmented matrix (unknowns columns + rhs) in place.
// Returns false on inconsistency; fills pivot_row_of_col with the pivot
// row of each unknown, or -1 for free columns.
bool echelonize(std::vector<std::vector<Rat>>& aug, std::size_t unknowns,
                std::vector<std::ptrdiff_t>& pivot_row_of_col) {
    pivot_row_of_col.assign(unknowns, -1);
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < unknowns && pivot_row < aug.size(); ++col) {
        std::size_t r = pivot_row;
        while (r < aug.size() && aug[r][col] == 0) ++r;
        if (r == aug.size()) continue; // free column
        std::swap(aug[r], aug[pivot_row]);
        const Rat lead = aug[pivot_row][col];
        for (std::size_t j = col; j <= unknowns; ++j) aug[pivot_row][j] /= lead;
        for (std::size_t other = 0; other < aug.size(); ++other) {
            if (other == pivot_row || aug[other][col] == 0) continue;
            const Rat factor = aug[other][col];
            for (std::size_t j = col; j <= unknowns; ++j) {
                aug[other][j] -= factor * aug[pivot_row][j];
            }
        }
        pivot_row_of_col[col] = static_cast<std::ptrdiff_t>(pivot_row);
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < aug.size(); ++r) {
        if (aug[r][unknowns] != 0) return false; // 0 = nonzero row
    }
    return true;
}

// Solution with every free unknown pinned to the given value (the matrix
// must already be in reduced row-echelon form).
std::vector<Rat> read_solution(const std::vector<std::vector<Rat>>& aug,
                               std::size_t unknowns,
                               const std::vector<std::ptrdiff_t>& pivot_row_of_col,
                               std::size_t free_col_set_to_one) {
    std::vector<Rat> x(unknowns, Rat(0));
    if (free_col_set_to_one < unknowns) x[free_col_set_to_one] = 1;
    for (std::size_t col = 0; col < unknowns; ++col) {
        if (pivot_row_of_col[col] < 0) continue;
        const auto& row = aug[static_cast<std::size_t>(pivot_row_of_col[col])];
        Rat value = row[unknowns];
        for (std::size_t j = col + 1; j < unknowns; ++j) {
            if (x[j] != 0) value -= row[j] * x[j];
        }
        x[col] = value;
    }
    return x;
}

// Fit order d against every applicable index of the prefix. Returns the
// coefficient vector, or nullopt when the system is inconsistent or the
// only solutions have a zero trailing coefficient (not representable as
// an order-d recurrence).
std::optional<std::vector<Rat>> fit_order(std::span<const Int> prefix, std::size_t d) {
    const std::size_t len = prefix.size();
    std::vector<std::vector<Rat>> aug;
    aug.reserve(len - d);
    for (std::size_t m = d; m < len; ++m) {
        std::vector<Rat> row;
        row.reserve(d + 1);
        for (std::size_t i = 1; i <= d; ++i) row.emplace_back(prefix[m - i]);
        row.emplace_back(prefix[m]);
        aug.push_back(std::move(row));
    }
    std::vector<std::ptrdiff_t> pivots;
    if (!echelonize(aug, d, pivots)) return std::nullopt;
    std::vector<Rat> x = read_solution(aug, d, pivots, d /* all free vars zero */);
    if (x.back() == 0) {
        // Steer along a free direction that moves the trailing
        // coefficient; if none does, every solution has it zero and no
        // order-d recurrence exists.
        bool fixed = false;
        for (std::size_t col = 0; col < d && !fixed; ++col) {
            if (pivots[col] >= 0) continue;
            std::vector<Rat> candidate = read_solution(aug, d, pivots, col);
            if (candidate.back() != 0) {
                x = std::move(candidate);
                fixed = true;
            }
        }
        if (!fixed) return std::nullopt;
    }
    return x;
}

} // namespace

std::optional<DetectionResult> detect_minimal(std::span<const Int> prefix,
                                              std::int64_t max_order) {
    if (max_order < 1) throw std::invalid_argument("detect_minimal: max_order must be >= 1");
    const auto len = static_cast<std::int64_t>(prefix.size());
    if (len < 6) {
        throw std::invalid_argument("prefix too short for requested max_order");
    }
    const std::int64_t cap = std::min(max_order, (len - 4) / 2);
    for (std::int64_t d = 1; d <= cap; ++d) {
        auto coeffs = fit_order(prefix, static_cast<std::size_t>(d));
        if (!coeffs) continue;
        LinearRecurrence rec(std::move(*coeffs));
        rec.set_seeds(std::vector<Int>(prefix.begin(), prefix.begin() + d));
        if (!verify_annihilates(rec, prefix)) continue; // cannot happen: all rows were fit
        return DetectionResult{std::move(rec), len, true};
    }
    return std::nullopt;
}

bool verify_annihilates(const LinearRecurrence& rec, std::span<const Int> prefix) {
    const std::size_t d = rec.order();
    if (prefix.size() <= d) throw std::invalid_argument("prefix too short");
    for (std::size_t m = d; m < prefix.size(); ++m) {
        Rat acc = 0;
        for (std::size_t i = 1; i <= d; ++i) {
            acc += rec.coefficients()[i - 1] * Rat(prefix[m - i]);
        }
        if (acc != Rat(prefix[m])) return false;
    }
    return true;
}

std::vector<Rat> characteristic_coefficients(const LinearRecurrence& rec) {
    std::vector<Rat> out;
    out.reserve(rec.order() + 1);
    out.emplace_back(1);
    for (const Rat& c : rec.coefficients()) out.push_back(-c);
    return out;
}

} // namespace schreier
