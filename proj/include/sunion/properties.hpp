#pragma once

#include <optional>

#include "sunion/family.hpp"

namespace sunion {

// Outcome of a decidable predicate; when the property fails, `witness` holds
// the first violating pair in canonical member order.
struct PropertyReport {
    std::string property;
    bool holds = true;
    std::optional<std::pair<SetBits, SetBits>> witness;

    explicit operator bool() const { return holds; }
};

namespace detail {

inline PropertyReport pass(std::string name) { return {std::move(name), true, std::nullopt}; }
inline PropertyReport fail(std::string name, SetBits a, SetBits b) {
    return {std::move(name), false, std::make_pair(a, b)};
}

}  // namespace detail

// every pair (including a member with itself) meets in >= t elements
inline PropertyReport is_t_intersecting(const Family& f, int t) {
    if (t < 0) throw parameter_error("is_t_intersecting needs t >= 0");
    const auto& ms = f.masks();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (std::popcount(ms[i]) < t)
            return detail::fail("t_intersecting", f.member(i), f.member(i));
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (std::popcount(ms[i] & ms[j]) < t)
                return detail::fail("t_intersecting", f.member(i), f.member(j));
    }
    return detail::pass("t_intersecting");
}

// every pair (including a member with itself) has union of size <= s
inline PropertyReport is_s_union(const Family& f, int s) {
    if (s < 0) throw parameter_error("is_s_union needs s >= 0");
    const auto& ms = f.masks();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (std::popcount(ms[i]) > s)
            return detail::fail("s_union", f.member(i), f.member(i));
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (std::popcount(ms[i] | ms[j]) > s)
                return detail::fail("s_union", f.member(i), f.member(j));
    }
    return detail::pass("s_union");
}

inline PropertyReport is_cross_intersecting(const Family& a, const Family& b) {
    if (a.n() != b.n()) throw ground_set_error("cross-intersecting check across ground sets");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if ((a.masks()[i] & b.masks()[j]) == 0)
                return detail::fail("cross_intersecting", a.member(i), b.member(j));
    return detail::pass("cross_intersecting");
}

// closed under taking subsets; witness is (member, missing subset)
inline PropertyReport is_hereditary(const Family& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::uint32_t m = f.masks()[i];
        for (std::uint32_t b = m; b; b &= b - 1) {
            std::uint32_t sub = m & ~(b & (~b + 1));
            if (!f.contains(sub))
                return detail::fail("hereditary", f.member(i), SetBits(f.n(), sub));
        }
    }
    return detail::pass("hereditary");
}

// all u-subsets contained in some member; members smaller than u are illegal
inline Family shadow(const Family& f, int u) {
    if (u < 0) throw parameter_error("shadow needs u >= 0");
    if (f.empty()) return Family(f.n());
    if (u > f.min_member_size())
        throw parameter_error("shadow order exceeds the smallest member size");
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t m : f.masks())
        for (std::uint32_t s : subsets_of(m, u)) seen.insert(s);
    return Family(f.n(), std::vector<std::uint32_t>(seen.begin(), seen.end()));
}

// one row of the layer inequality |F_i| + |F_{s+1-i}| <= C(n,i)
struct KatonaLayerRecord {
    int i;
    std::uint64_t lhs;
    std::uint64_t rhs;
    bool tight;
    // the equality structure: F_i a full layer and F_{s+1-i} empty
    bool full_low;
    bool empty_high;
};

inline std::vector<KatonaLayerRecord> katona_layer_check(const Family& f, int s) {
    PropertyReport pre = is_s_union(f, s);
    if (!pre.holds)
        throw property_error("katona_layer_check requires an s-union family");
    std::vector<KatonaLayerRecord> out;
    for (int i = 0; 2 * i <= s; ++i) {
        int hi = s + 1 - i;
        std::uint64_t low = f.layer_size(i);
        std::uint64_t high = hi <= f.n() ? f.layer_size(hi) : 0;
        std::uint64_t rhs = binom(f.n(), i);
        out.push_back({i, low + high, rhs, low + high == rhs, low == rhs, high == 0});
    }
    return out;
}

// max |A symdiff B| over pairs of members
inline int diameter(const Family& f) {
    if (f.empty()) throw parameter_error("diameter of an empty family is undefined");
    int best = 0;
    const auto& ms = f.masks();
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            best = std::max(best, std::popcount(ms[i] ^ ms[j]));
    return best;
}

}  // namespace sunion
