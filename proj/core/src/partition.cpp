#include "schreier/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace schreier {

namespace {

using Elements = std::vector<std::int64_t>;

Elements raise_max(const Elements& s, std::int64_t new_max) {
    Elements out = s;
    out.back() = new_max;
    return out;
}

Elements shift_append(const Elements& s, std::int64_t shift, std::int64_t new_max) {
    Elements out;
    out.reserve(s.size() + 1);
    for (std::int64_t e : s) out.push_back(e + shift);
    out.push_back(new_max);
    return out;
}

// Drop the maximum and the minimum, subtract `shift` from the rest.
// Returns nullopt when the result would be empty or leave the positive
// integers.
std::optional<Elements> trim_shift_down(const Elements& s, std::int64_t shift) {
    if (s.size() < 3) return std::nullopt;
    Elements out(s.begin() + 1, s.end() - 1);
    for (std::int64_t& e : out) {
        e -= shift;
        if (e < 1) return std::nullopt;
    }
    return out;
}

// Image-set equality plus injectivity, against a lex-sorted target.
void compare_image(PartitionPart& result, std::vector<Elements> image,
                   const std::vector<Elements>& target) {
    std::sort(image.begin(), image.end());
    result.injective =
        std::adjacent_find(image.begin(), image.end()) == image.end();
    result.onto = image == target;
    if (!result.onto) {
        auto [ia, it] = std::mismatch(image.begin(), image.end(), target.begin(),
                                      target.end());
        const Elements* bad = nullptr;
        if (ia != image.end()) bad = &*ia;
        else if (it != target.end()) bad = &*it;
        if (bad && !bad->empty()) result.counterexample = FiniteSet(*bad);
    }
}

std::vector<Elements> raw_members(const FamilyParams& params, std::int64_t n,
                                  std::int64_t ceiling) {
    std::vector<Elements> out;
    for (const FiniteSet& s : enumerate_with_max(params, n, ceiling)) {
        out.push_back(s.elements());
    }
    return out;
}

} // namespace

bool PartitionReport::all_pass() const {
    if (!exact_partition) return false;
    return std::all_of(parts.begin(), parts.end(),
                       [](const PartitionPart& p) { return p.pass(); });
}

PartitionReport verify_partition_order_p(std::int64_t p, std::int64_t n,
                                         std::int64_t ceiling) {
    if (p < 1 || n < 1) {
        throw std::invalid_argument("verify_partition_order_p: p and n must be >= 1");
    }
    const FamilyParams params(p);
    const std::int64_t top = n + p + 1;
    const auto family = raw_members(params, top, ceiling);

    PartitionReport report;
    report.target_index = top;
    report.family_size = static_cast<unsigned long>(family.size());
    report.exact_partition = true; // presence of n+p splits the family by definition

    std::vector<Elements> part_a, part_b;
    for (const Elements& s : family) {
        const bool has_pivot = std::binary_search(s.begin(), s.end(), n + p);
        (has_pivot ? part_b : part_a).push_back(s);
    }

    PartitionPart a{"A", "raise_max", 0, static_cast<unsigned long>(part_a.size()),
                    false, false, std::nullopt};
    {
        std::vector<Elements> image;
        for (const Elements& s : raw_members(params, n + p, ceiling)) {
            image.push_back(raise_max(s, top));
        }
        a.expected = static_cast<unsigned long>(image.size());
        compare_image(a, std::move(image), part_a);
    }

    PartitionPart b{"B", "shift_append", 0, static_cast<unsigned long>(part_b.size()),
                    false, false, std::nullopt};
    {
        std::vector<Elements> image;
        for (const Elements& s : raw_members(params, n, ceiling)) {
            image.push_back(shift_append(s, p, top));
        }
        b.expected = static_cast<unsigned long>(image.size());
        compare_image(b, std::move(image), part_b);
    }

    report.parts.push_back(std::move(a));
    report.parts.push_back(std::move(b));
    return report;
}

PartitionReport verify_partition_order_pq(std::int64_t p, std::int64_t q, std::int64_t n,
                                          std::int64_t ceiling) {
    if (p < 1 || n < 1) {
        throw std::invalid_argument("verify_partition_order_pq: p and n must be >= 1");
    }
    if (p >= q) throw std::domain_error("verify_partition_order_pq: requires p < q");

    const FamilyParams params(p, q);
    const std::int64_t top = n + 2 * q + 1;
    const auto family = raw_members(params, top, ceiling);

    PartitionReport report;
    report.target_index = top;
    report.family_size = static_cast<unsigned long>(family.size());
    report.exact_partition = true;

    std::vector<Elements> part_a, part_b;
    std::vector<std::vector<Elements>> part_c(static_cast<std::size_t>(q - p));

    for (const Elements& s : family) {
        if (!std::binary_search(s.begin(), s.end(), n + 2 * q)) {
            part_a.push_back(s);
            continue;
        }
        // s contains both n+2q and the maximum n+2q+1, so |s| >= 2 and
        // dropping the maximum keeps it nonempty with max n+2q.
        Elements trimmed(s.begin(), s.end() - 1);
        bool shifted_member = trimmed.front() > q;
        if (shifted_member) {
            Elements shifted = trimmed;
            for (std::int64_t& e : shifted) e -= q;
            shifted_member = is_member(FiniteSet(shifted), params);
        }
        const std::int64_t offset = s.front() - p * static_cast<std::int64_t>(s.size());
        const bool min_in_band = offset >= 0 && offset <= q - p - 1;
        if (shifted_member) {
            if (min_in_band) {
                // would belong to both B and a C_i; the classes overlap
                report.exact_partition = false;
                if (!report.counterexample) report.counterexample = FiniteSet(s);
            }
            part_b.push_back(s);
        } else {
            if (!min_in_band) {
                // not in B, yet its minimum matches no C_i
                report.exact_partition = false;
                if (!report.counterexample) report.counterexample = FiniteSet(s);
                continue;
            }
            part_c[static_cast<std::size_t>(offset)].push_back(s);
        }
    }

    PartitionPart a{"A", "raise_max", 0, static_cast<unsigned long>(part_a.size()),
                    false, false, std::nullopt};
    {
        std::vector<Elements> image;
        for (const Elements& s : raw_members(params, n + 2 * q, ceiling)) {
            image.push_back(raise_max(s, top));
        }
        a.expected = static_cast<unsigned long>(image.size());
        compare_image(a, std::move(image), part_a);
    }
    report.parts.push_back(std::move(a));

    PartitionPart b{"B", "shift_append", 0, static_cast<unsigned long>(part_b.size()),
                    false, false, std::nullopt};
    {
        std::vector<Elements> image;
        for (const Elements& s : raw_members(params, n + q, ceiling)) {
            image.push_back(shift_append(s, q, top));
        }
        b.expected = static_cast<unsigned long>(image.size());
        compare_image(b, std::move(image), part_b);
    }
    report.parts.push_back(std::move(b));

    // Each C_i must map onto the order-q family with max n.
    const auto order_q_family = raw_members(FamilyParams(q), n, ceiling);
    for (std::int64_t i = 0; i < q - p; ++i) {
        PartitionPart c{"C_" + std::to_string(i), "trim_shift_down",
                        static_cast<unsigned long>(order_q_family.size()),
                        static_cast<unsigned long>(part_c[static_cast<std::size_t>(i)].size()),
                        false, false, std::nullopt};
        std::vector<Elements> image;
        bool map_defined = true;
        for (const Elements& s : part_c[static_cast<std::size_t>(i)]) {
            auto mapped = trim_shift_down(s, 2 * q);
            if (!mapped) {
                map_defined = false;
                c.counterexample = FiniteSet(s);
                break;
            }
            image.push_back(std::move(*mapped));
        }
        if (map_defined) {
            compare_image(c, std::move(image), order_q_family);
        }
        report.parts.push_back(std::move(c));
    }
    return report;
}

} // namespace schreier
