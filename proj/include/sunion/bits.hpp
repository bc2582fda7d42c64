#pragma once

// Ground-set elements are 1..n with n <= 32; element e lives at bit e-1.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sunion {

inline constexpr int kMaxGroundSet = 32;

struct ground_set_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct scale_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct order_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct property_error : std::logic_error {
    using std::logic_error::logic_error;
};
struct arithmetic_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::uint32_t universe_mask(int n) {
    return n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1u);
}

inline void check_ground_set(int n) {
    if (n < 1 || n > kMaxGroundSet)
        throw ground_set_error("ground-set size must satisfy 1 <= n <= 32, got " + std::to_string(n));
}

// A subset of [n] as one machine word.
struct SetBits {
    int n = 1;
    std::uint32_t bits = 0;

    SetBits() = default;
    SetBits(int n_, std::uint32_t bits_) : n(n_), bits(bits_) {
        check_ground_set(n);
        if (bits & ~universe_mask(n))
            throw ground_set_error("set has elements outside [n]");
    }

    static SetBits empty(int n) { return SetBits(n, 0); }
    static SetBits full(int n) { return SetBits(n, universe_mask(n)); }
    static SetBits of(int n, std::initializer_list<int> elems) {
        std::uint32_t b = 0;
        for (int e : elems) {
            if (e < 1 || e > n) throw ground_set_error("element outside [n]");
            b |= std::uint32_t{1} << (e - 1);
        }
        return SetBits(n, b);
    }
    // the interval [lo,hi], empty when hi < lo
    static SetBits interval(int n, int lo, int hi) {
        std::uint32_t b = 0;
        for (int e = lo; e <= hi; ++e) {
            if (e < 1 || e > n) throw ground_set_error("interval outside [n]");
            b |= std::uint32_t{1} << (e - 1);
        }
        return SetBits(n, b);
    }

    int size() const { return std::popcount(bits); }
    bool is_empty() const { return bits == 0; }
    bool contains(int e) const { return e >= 1 && e <= n && (bits >> (e - 1)) & 1u; }
    int min_element() const { return bits ? std::countr_zero(bits) + 1 : 0; }

    SetBits with(int e) const {
        if (e < 1 || e > n) throw ground_set_error("element outside [n]");
        return SetBits(n, bits | (std::uint32_t{1} << (e - 1)));
    }
    SetBits without(int e) const {
        if (e < 1 || e > n) throw ground_set_error("element outside [n]");
        return SetBits(n, bits & ~(std::uint32_t{1} << (e - 1)));
    }
    SetBits complement() const { return SetBits(n, ~bits & universe_mask(n)); }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint32_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend bool operator==(const SetBits&, const SetBits&) = default;
};

inline void check_same_ground_set(const SetBits& a, const SetBits& b) {
    if (a.n != b.n)
        throw ground_set_error("sets live on different ground sets (n=" + std::to_string(a.n) +
                               " vs n=" + std::to_string(b.n) + ")");
}

inline int union_size(const SetBits& a, const SetBits& b) {
    check_same_ground_set(a, b);
    return std::popcount(a.bits | b.bits);
}

inline int intersection_size(const SetBits& a, const SetBits& b) {
    check_same_ground_set(a, b);
    return std::popcount(a.bits & b.bits);
}

inline int symmetric_difference_size(const SetBits& a, const SetBits& b) {
    check_same_ground_set(a, b);
    return std::popcount(a.bits ^ b.bits);
}

// canonical member order: (size, numeric bits)
inline std::uint64_t canonical_key(const SetBits& s) {
    return (std::uint64_t{static_cast<std::uint64_t>(s.size())} << 32) | s.bits;
}
inline std::uint64_t canonical_key(std::uint32_t bits) {
    return (std::uint64_t{static_cast<std::uint64_t>(std::popcount(bits))} << 32) | bits;
}
inline bool canonical_less(const SetBits& a, const SetBits& b) {
    return canonical_key(a) < canonical_key(b);
}

namespace detail {

struct BinomTable {
    std::array<std::array<std::uint64_t, kMaxGroundSet + 1>, kMaxGroundSet + 1> c{};
    constexpr BinomTable() {
        for (int n = 0; n <= kMaxGroundSet; ++n) {
            c[static_cast<std::size_t>(n)][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                    c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                    (k <= n - 1 ? c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] : 0);
        }
    }
};
inline constexpr BinomTable kBinom{};

}  // namespace detail

// C(n,k); zero outside the Pascal triangle, so theorem displays evaluate verbatim.
constexpr std::uint64_t binom(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n > kMaxGroundSet) throw arithmetic_error("binomial table capped at n = 32");
    return detail::kBinom.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Gosper's hack: next larger word with the same popcount.
constexpr std::uint32_t next_same_popcount(std::uint32_t v) {
    std::uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & -(~t)) - 1) >> (std::countr_zero(v) + 1));
}

// all k-subsets of [n] in increasing numeric (bits) order
inline std::vector<std::uint32_t> all_ksets(int n, int k) {
    check_ground_set(n);
    if (k < 0 || k > n) return {};
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(binom(n, k)));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::uint32_t v = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = universe_mask(n);
    while (v <= limit) {
        out.push_back(v);
        if (v == 0) break;
        std::uint32_t nx = next_same_popcount(v);
        if (nx <= v) break;  // wrapped
        v = nx;
    }
    return out;
}

// all u-subsets of `mask` in increasing numeric order
inline std::vector<std::uint32_t> subsets_of(std::uint32_t mask, int u) {
    int m = std::popcount(mask);
    if (u < 0 || u > m) return {};
    std::vector<int> pos;
    pos.reserve(static_cast<std::size_t>(m));
    for (std::uint32_t b = mask; b; b &= b - 1) pos.push_back(std::countr_zero(b));
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(binom(m, u)));
    if (u == 0) {
        out.push_back(0);
        return out;
    }
    std::vector<int> idx(static_cast<std::size_t>(u));
    for (int i = 0; i < u; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint32_t s = 0;
        for (int i : idx) s |= std::uint32_t{1} << pos[static_cast<std::size_t>(i)];
        out.push_back(s);
        int i = u - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - u + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < u; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace sunion
