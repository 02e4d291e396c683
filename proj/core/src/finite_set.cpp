#include "schreier/finite_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schreier {

FiniteSet::FiniteSet(std::vector<element_type> elements)
    : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw std::invalid_argument("FiniteSet: element list must be nonempty");
    }
    element_type prev = 0;
    for (element_type e : elements_) {
        if (e < 1) {
            throw std::invalid_argument("FiniteSet: elements must be positive");
        }
        if (e <= prev) {
            throw std::invalid_argument("FiniteSet: elements must be strictly increasing");
        }
        prev = e;
    }
}

bool FiniteSet::contains(element_type value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::string FiniteSet::str() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i > 0) out << ", ";
        out << elements_[i];
    }
    out << '}';
    return out.str();
}

FamilyParams::FamilyParams(std::int64_t p) : FamilyParams(p, std::optional<std::int64_t>{}) {}

FamilyParams::FamilyParams(std::int64_t p, std::int64_t q)
    : FamilyParams(p, std::optional<std::int64_t>{q}) {}

FamilyParams::FamilyParams(std::int64_t p, std::optional<std::int64_t> q)
    : p_(p), q_(std::move(q)) {
    if (p_ < 1) throw std::invalid_argument("FamilyParams: p must be >= 1");
    if (q_ && *q_ < 1) throw std::invalid_argument("FamilyParams: q must be >= 1");
}

std::string FamilyParams::str() const {
    std::ostringstream out;
    out << "p=" << p_;
    if (q_) out << " q=" << *q_;
    return out.str();
}

namespace {

// value >= factor * card, overflow-safe.
bool at_least(std::int64_t value, std::int64_t factor, std::size_t card) {
    return static_cast<__int128>(value) >=
           static_cast<__int128>(factor) * static_cast<__int128>(card);
}

} // namespace

bool is_member(const FiniteSet& s, const FamilyParams& params) {
    if (!at_least(s.min(), params.p(), s.card())) return false;
    if (params.has_q() && !at_least(s.min2(), *params.q(), s.card())) return false;
    return true;
}

} // namespace schreier
