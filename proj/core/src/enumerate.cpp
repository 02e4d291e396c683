#include "schreier/enumerate.hpp"

#include <sstream>

namespace schreier {

namespace {

std::string range_message(std::int64_t n, std::int64_t ceiling) {
    std::ostringstream out;
    out << "oracle range exceeded: n=" << n << " is above the ceiling " << ceiling;
    return out.str();
}

bool at_least(std::int64_t value, std::int64_t factor, std::int64_t count) {
    return static_cast<__int128>(value) >=
           static_cast<__int128>(factor) * static_cast<__int128>(count);
}

// Complete sets always receive n as their maximum, so a prefix of size s
// is worth extending only if a final cardinality of s+1 is still feasible:
//   min  >= p*(s+1)                    (min is fixed once the prefix starts)
//   min2 >= q*(s+1)  when |S| >= 2     (min2 is fixed from the second pick;
//                                       before that, min2 <= n bounds it)
bool may_extend(const std::vector<std::int64_t>& chosen, const FamilyParams& params,
                std::int64_t n) {
    const auto next_card = static_cast<std::int64_t>(chosen.size()) + 1;
    if (!at_least(chosen.front(), params.p(), next_card)) return false;
    if (params.has_q()) {
        const std::int64_t q = *params.q();
        if (!at_least(n, q, next_card)) return false;
        if (chosen.size() >= 2 && !at_least(chosen[1], q, next_card)) return false;
    }
    return true;
}

bool satisfies(const std::vector<std::int64_t>& chosen, const FamilyParams& params) {
    const auto card = static_cast<std::int64_t>(chosen.size());
    if (!at_least(chosen.front(), params.p(), card)) return false;
    if (params.has_q()) {
        const std::int64_t second = card >= 2 ? chosen[1] : chosen.front();
        if (!at_least(second, *params.q(), card)) return false;
    }
    return true;
}

// DFS over increasing prefixes. Children are visited in ascending element
// order and a prefix closed off with n is emitted before any longer
// extension, so the emission order is exactly lexicographic.
template <typename Sink>
void extend(std::vector<std::int64_t>& chosen, const FamilyParams& params, std::int64_t n,
            Sink&& sink) {
    const std::int64_t from = chosen.empty() ? 1 : chosen.back() + 1;
    for (std::int64_t e = from; e <= n; ++e) {
        chosen.push_back(e);
        if (e == n) {
            if (satisfies(chosen, params)) sink(chosen);
        } else if (may_extend(chosen, params, n)) {
            extend(chosen, params, n, sink);
        }
        chosen.pop_back();
    }
}

void check_range(std::int64_t n, std::int64_t ceiling) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > ceiling) throw OracleRangeError(n, ceiling);
}

} // namespace

OracleRangeError::OracleRangeError(std::int64_t n, std::int64_t ceiling)
    : std::runtime_error(range_message(n, ceiling)), n_(n), ceiling_(ceiling) {}

std::vector<FiniteSet> enumerate_with_max(const FamilyParams& params, std::int64_t n,
                                          std::int64_t ceiling) {
    check_range(n, ceiling);
    std::vector<FiniteSet> out;
    std::vector<std::int64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(n));
    extend(chosen, params, n,
           [&](const std::vector<std::int64_t>& elems) { out.emplace_back(elems); });
    return out;
}

Int oracle_count(const FamilyParams& params, std::int64_t n, std::int64_t ceiling) {
    check_range(n, ceiling);
    Int total = 0;
    std::vector<std::int64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(n));
    extend(chosen, params, n, [&](const std::vector<std::int64_t>&) { total += 1; });
    return total;
}

SequenceTable enumeration_table(const FamilyParams& params, std::int64_t max_n,
                                std::int64_t ceiling) {
    check_range(max_n, ceiling);
    SequenceTable table{params, 1, {}, Method::enumeration};
    table.values.reserve(static_cast<std::size_t>(max_n));
    for (std::int64_t n = 1; n <= max_n; ++n) {
        table.values.push_back(oracle_count(params, n, ceiling));
    }
    return table;
}

} // namespace schreier
