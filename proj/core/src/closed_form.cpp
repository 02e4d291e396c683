#include "schreier/closed_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace schreier {

namespace {

// Pascal rows plus per-row prefix sums, grown on demand. The prefix sums
// make the inner sum of count_order_p a single lookup, which keeps whole
// tables up to a few hundred terms cheap.
class BinomialRows {
public:
    // C(r, j); zero outside 0 <= j <= r.
    const Int& choose(std::int64_t r, std::int64_t j) {
        if (j < 0 || j > r) return zero_;
        ensure(r);
        return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }

    // sum_{t=0}^{min(j, r)} C(r, t); zero for j < 0.
    const Int& prefix(std::int64_t r, std::int64_t j) {
        if (j < 0) return zero_;
        ensure(r);
        const auto& row = prefix_[static_cast<std::size_t>(r)];
        const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(j),
                                                      row.size() - 1);
        return row[idx];
    }

private:
    void ensure(std::int64_t r) {
        for (std::size_t row = rows_.size(); row <= static_cast<std::size_t>(r); ++row) {
            std::vector<Int> values(row + 1);
            values.front() = 1;
            values.back() = 1;
            for (std::size_t j = 1; j < row; ++j) {
                values[j] = rows_[row - 1][j - 1] + rows_[row - 1][j];
            }
            std::vector<Int> sums(row + 1);
            sums[0] = values[0];
            for (std::size_t j = 1; j <= row; ++j) {
                sums[j] = sums[j - 1] + values[j];
            }
            rows_.push_back(std::move(values));
            prefix_.push_back(std::move(sums));
        }
    }

    std::vector<std::vector<Int>> rows_;
    std::vector<std::vector<Int>> prefix_;
    Int zero_ = 0;
};

Int count_order_p_impl(std::int64_t p, std::int64_t m, BinomialRows& rows) {
    if (p < 1 || m < 1) throw std::invalid_argument("count_order_p: p and m must be >= 1");
    if (m < p) return 0;  // even the singleton {m} fails min >= p
    if (m == p) return 1; // exactly the singleton
    Int total = 1;        // the singleton {m}
    for (std::int64_t k = 1; k <= m - 1; ++k) {
        const std::int64_t j_max = k / p - 2;
        if (j_max < 0) continue;
        total += rows.prefix(m - k - 1, j_max);
    }
    return total;
}

Int count_order_pq_impl(std::int64_t p, std::int64_t q, std::int64_t n, BinomialRows& rows) {
    if (p < 1 || q < 1 || n < 1) {
        throw std::invalid_argument("count_order_pq: p, q and n must be >= 1");
    }
    if (p >= q) {
        throw std::domain_error("count_order_pq: requires p < q");
    }
    if (n <= q - 1) return 0;
    if (n <= 2 * q - 1) return 1; // only the singleton {n}
    Int total = 1 + Int(n - 2 * p); // singleton plus the two-element sets
    const std::int64_t k_max = (n + 2) / (q + 1);
    for (std::int64_t k = 3; k <= k_max; ++k) {
        for (std::int64_t i = q * k; i <= n + 2 - k; ++i) {
            total += Int(i - p * k) * rows.choose(n - i - 1, k - 3);
        }
    }
    return total;
}

} // namespace

Int binomial(std::int64_t m, std::int64_t j) {
    if (m < 0 || j < 0) throw std::invalid_argument("binomial: inputs must be non-negative");
    if (j > m) return 0;
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(j));
    return result;
}

Int count_order_p(std::int64_t p, std::int64_t m) {
    BinomialRows rows;
    return count_order_p_impl(p, m, rows);
}

Int count_order_pq(std::int64_t p, std::int64_t q, std::int64_t n) {
    BinomialRows rows;
    return count_order_pq_impl(p, q, n, rows);
}

SequenceTable closed_form_table(const FamilyParams& params, std::int64_t max_n) {
    if (max_n < 1) throw std::invalid_argument("closed_form_table: max_n must be >= 1");
    BinomialRows rows;
    SequenceTable table{params, 1, {}, Method::closed_form};
    table.values.reserve(static_cast<std::size_t>(max_n));
    for (std::int64_t n = 1; n <= max_n; ++n) {
        table.values.push_back(params.has_q()
                                   ? count_order_pq_impl(params.p(), *params.q(), n, rows)
                                   : count_order_p_impl(params.p(), n, rows));
    }
    return table;
}

} // namespace schreier
