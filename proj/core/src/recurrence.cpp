#include "schreier/recurrence.hpp"

#include <stdexcept>

#include "schreier/closed_form.hpp"

namespace schreier {

LinearRecurrence::LinearRecurrence(std::vector<Rat> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw std::invalid_argument("LinearRecurrence: order must be >= 1");
    }
    if (coefficients_.back() == 0) {
        throw std::invalid_argument(
            "LinearRecurrence: trailing coefficient must be nonzero");
    }
}

void LinearRecurrence::set_seeds(std::vector<Int> seeds) {
    if (seeds.size() != coefficients_.size()) {
        throw std::invalid_argument("LinearRecurrence: need exactly `order` seeds");
    }
    seeds_ = std::move(seeds);
}

LinearRecurrence order_p_recurrence(std::int64_t p) {
    if (p < 1) throw std::invalid_argument("order_p_recurrence: p must be >= 1");
    std::vector<Rat> coeffs(static_cast<std::size_t>(p) + 1, Rat(0));
    coeffs.front() = 1;
    coeffs.back() = 1;
    return LinearRecurrence(std::move(coeffs));
}

LinearRecurrence uncoupled_pq_recurrence(std::int64_t q) {
    if (q < 2) throw std::invalid_argument("uncoupled_pq_recurrence: q must be >= 2");
    std::vector<Rat> coeffs(static_cast<std::size_t>(2 * q) + 2, Rat(0));
    coeffs[0] = 2;
    coeffs[1] = -1;
    coeffs[static_cast<std::size_t>(q)] = 2;      // lag q+1
    coeffs[static_cast<std::size_t>(q) + 1] = -2; // lag q+2
    coeffs.back() = -1;                           // lag 2q+2
    return LinearRecurrence(std::move(coeffs));
}

namespace {

// a(next) from the `order` values ending at work.back(); exact.
Int apply_once(const LinearRecurrence& rec, const std::vector<Int>& work) {
    const std::size_t d = rec.order();
    const std::size_t len = work.size();
    Rat acc = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        acc += rec.coefficients()[i - 1] * Rat(work[len - i]);
    }
    if (!is_integral(acc)) throw std::domain_error("non-integral term");
    return acc.get_num();
}

} // namespace

std::vector<Int> step_linear(const LinearRecurrence& rec, std::span<const Int> prefix,
                             std::int64_t count) {
    if (prefix.size() < rec.order()) throw std::invalid_argument("insufficient prefix");
    if (count < 1) throw std::invalid_argument("step_linear: count must be >= 1");
    std::vector<Int> work(prefix.begin(), prefix.end());
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t t = 0; t < count; ++t) {
        Int next = apply_once(rec, work);
        work.push_back(next);
        out.push_back(std::move(next));
    }
    return out;
}

std::optional<std::int64_t> check_recurrence(const LinearRecurrence& rec,
                                             const SequenceTable& table) {
    const std::size_t d = rec.order();
    if (table.values.size() <= d) throw std::invalid_argument("table too short");
    for (std::size_t idx = d; idx < table.values.size(); ++idx) {
        Rat acc = 0;
        for (std::size_t i = 1; i <= d; ++i) {
            acc += rec.coefficients()[i - 1] * Rat(table.values[idx - i]);
        }
        if (acc != Rat(table.values[idx])) {
            return table.first_index + static_cast<std::int64_t>(idx);
        }
    }
    return std::nullopt;
}

SequenceTable seq_order_p(std::int64_t p, std::int64_t max_n) {
    if (p < 1) throw std::invalid_argument("seq_order_p: p must be >= 1");
    if (max_n < 1) throw std::invalid_argument("seq_order_p: max_n must be >= 1");
    SequenceTable table{FamilyParams(p), 1, {}, Method::recurrence_uncoupled};
    auto& v = table.values;
    v.reserve(static_cast<std::size_t>(max_n));
    const std::int64_t seeded = std::min(max_n, p + 1);
    for (std::int64_t m = 1; m <= seeded; ++m) {
        v.push_back(count_order_p(p, m));
    }
    for (std::int64_t m = p + 2; m <= max_n; ++m) {
        const auto i = static_cast<std::size_t>(m - 1); // 0-based position of m
        v.push_back(v[i - 1] + v[i - 1 - static_cast<std::size_t>(p)]);
    }
    return table;
}

namespace {

void require_pq(std::int64_t p, std::int64_t q, std::int64_t max_n, const char* who) {
    if (p < 1) throw std::invalid_argument(std::string(who) + ": p must be >= 1");
    if (p >= q) throw std::domain_error(std::string(who) + ": requires p < q");
    if (max_n < 1) throw std::invalid_argument(std::string(who) + ": max_n must be >= 1");
}

// Closed-form seed values for m = 1..seed_count.
std::vector<Int> pq_seeds(std::int64_t p, std::int64_t q, std::int64_t seed_count) {
    return closed_form_table(FamilyParams(p, q), seed_count).values;
}

} // namespace

SequenceTable seq_order_pq_coupled(std::int64_t p, std::int64_t q, std::int64_t max_n) {
    require_pq(p, q, max_n, "seq_order_pq_coupled");
    SequenceTable table{FamilyParams(p, q), 1, {}, Method::recurrence_coupled};
    table.values = pq_seeds(p, q, std::min(max_n, 2 * q + 1));
    if (max_n <= 2 * q + 1) return table;

    const SequenceTable companion = seq_order_p(q, max_n - 2 * q - 1);
    const Int scale = q - p;
    auto& v = table.values;
    v.reserve(static_cast<std::size_t>(max_n));
    for (std::int64_t m = 2 * q + 2; m <= max_n; ++m) {
        const auto i = static_cast<std::size_t>(m - 1);
        v.push_back(v[i - 1] + v[i - 1 - static_cast<std::size_t>(q)] +
                    scale * companion.values[i - 1 - static_cast<std::size_t>(2 * q)]);
    }
    return table;
}

SequenceTable seq_order_pq_uncoupled(std::int64_t p, std::int64_t q, std::int64_t max_n) {
    require_pq(p, q, max_n, "seq_order_pq_uncoupled");
    SequenceTable table{FamilyParams(p, q), 1, {}, Method::recurrence_uncoupled};
    table.values = pq_seeds(p, q, std::min(max_n, 3 * q + 2));
    auto& v = table.values;
    v.reserve(static_cast<std::size_t>(max_n));
    for (std::int64_t m = 3 * q + 3; m <= max_n; ++m) {
        const auto i = static_cast<std::size_t>(m - 1);
        const auto sq = static_cast<std::size_t>(q);
        v.push_back(2 * v[i - 1] - v[i - 2] + 2 * v[i - 1 - sq] - 2 * v[i - 2 - sq] -
                    v[i - 2 - 2 * sq]);
    }
    return table;
}

std::vector<Int> shifted_pq_values(const SequenceTable& table) {
    if (!table.params.has_q()) {
        throw std::invalid_argument("shifted_pq_values: table is not a two-parameter table");
    }
    if (table.first_index != 1) {
        throw std::invalid_argument("shifted_pq_values: table must start at index 1");
    }
    const auto q = static_cast<std::size_t>(*table.params.q());
    if (table.values.size() <= q) return {};
    return std::vector<Int>(table.values.begin() + static_cast<std::ptrdiff_t>(q),
                            table.values.end());
}

} // namespace schreier
