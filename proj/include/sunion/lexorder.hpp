#pragma once

#include <compare>

#include "sunion/family.hpp"

namespace sunion {

// Lexicographic order on k-sets: F precedes G iff min(F\G) < min(G\F).
inline std::strong_ordering lex_compare(const SetBits& a, const SetBits& b) {
    check_same_ground_set(a, b);
    if (a.bits == b.bits) return std::strong_ordering::equal;
    if (a.size() != b.size())
        throw order_error("lexicographic order is defined on k-sets of equal size");
    std::uint32_t ab = a.bits & ~b.bits;
    std::uint32_t ba = b.bits & ~a.bits;
    return std::countr_zero(ab) <=> std::countr_zero(ba);
}

inline bool lex_less(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    std::uint32_t ab = a & ~b;
    std::uint32_t ba = b & ~a;
    if (ab == 0) return true;   // proper subset sorts first
    if (ba == 0) return false;
    return std::countr_zero(ab) < std::countr_zero(ba);
}

// The m-th k-set of [n] in lexicographic order, rank 0-based; unranking walks
// the elements in increasing order so no sorting of C(n,k) sets is needed.
inline std::uint32_t lex_unrank(int n, int k, std::uint64_t rank) {
    check_ground_set(n);
    if (k < 0 || k > n) throw parameter_error("lex_unrank needs 0 <= k <= n");
    if (rank >= binom(n, k)) throw parameter_error("lex rank out of range");
    std::uint32_t out = 0;
    int next = 1;
    for (int pos = 0; pos < k; ++pos) {
        for (int c = next;; ++c) {
            std::uint64_t block = binom(n - c, k - pos - 1);
            if (rank < block) {
                out |= std::uint32_t{1} << (c - 1);
                next = c + 1;
                break;
            }
            rank -= block;
        }
    }
    return out;
}

// L(n,k,m): the m lexicographically least k-sets.
inline Family lex_initial(int n, int k, std::uint64_t m) {
    check_ground_set(n);
    if (k < 0 || k > n) throw parameter_error("lex_initial needs 0 <= k <= n");
    if (m > binom(n, k)) throw parameter_error("lex_initial needs m <= C(n,k)");
    std::vector<std::uint32_t> ms;
    ms.reserve(static_cast<std::size_t>(m));
    for (std::uint64_t r = 0; r < m; ++r) ms.push_back(lex_unrank(n, k, r));
    return Family(n, std::move(ms));
}

}  // namespace sunion
