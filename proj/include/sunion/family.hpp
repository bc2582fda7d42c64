#pragma once

#include <algorithm>
#include <span>
#include <unordered_set>

#include "sunion/bits.hpp"

namespace sunion {

// A duplicate-free collection of subsets of a common [n], kept sorted by
// (size, numeric bits).  Layers are contiguous runs, and two families are
// equal exactly when their representations are equal.
class Family {
  public:
    explicit Family(int n) : n_(n) { check_ground_set(n); }

    Family(int n, std::vector<std::uint32_t> masks) : n_(n), masks_(std::move(masks)) {
        check_ground_set(n);
        const std::uint32_t bad = ~universe_mask(n_);
        for (std::uint32_t m : masks_)
            if (m & bad) throw ground_set_error("family member has elements outside [n]");
        normalize();
    }

    static Family of(int n, std::initializer_list<std::initializer_list<int>> sets) {
        std::vector<std::uint32_t> ms;
        ms.reserve(sets.size());
        for (const auto& s : sets) ms.push_back(SetBits::of(n, s).bits);
        return Family(n, std::move(ms));
    }

    static Family from_sets(int n, const std::vector<SetBits>& sets) {
        std::vector<std::uint32_t> ms;
        ms.reserve(sets.size());
        for (const SetBits& s : sets) {
            if (s.n != n) throw ground_set_error("family member has a different ground set");
            ms.push_back(s.bits);
        }
        return Family(n, std::move(ms));
    }

    int n() const { return n_; }
    std::size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }
    const std::vector<std::uint32_t>& masks() const { return masks_; }
    SetBits member(std::size_t i) const { return SetBits(n_, masks_[i]); }

    bool contains(std::uint32_t mask) const {
        auto [lo, hi] = layer_bounds(std::popcount(mask));
        return std::binary_search(masks_.begin() + lo, masks_.begin() + hi, mask);
    }
    bool contains(const SetBits& s) const {
        if (s.n != n_) throw ground_set_error("membership test across ground sets");
        return contains(s.bits);
    }

    // half-open index range of the size-i members
    std::pair<std::ptrdiff_t, std::ptrdiff_t> layer_bounds(int i) const {
        auto lo = std::lower_bound(masks_.begin(), masks_.end(), std::uint64_t{static_cast<std::uint64_t>(i)} << 32,
                                   [](std::uint32_t m, std::uint64_t key) { return canonical_key(m) < key; });
        auto hi = std::lower_bound(lo, masks_.end(), std::uint64_t{static_cast<std::uint64_t>(i) + 1} << 32,
                                   [](std::uint32_t m, std::uint64_t key) { return canonical_key(m) < key; });
        return {lo - masks_.begin(), hi - masks_.begin()};
    }

    std::size_t layer_size(int i) const {
        auto [lo, hi] = layer_bounds(i);
        return static_cast<std::size_t>(hi - lo);
    }

    std::span<const std::uint32_t> layer_masks(int i) const {
        auto [lo, hi] = layer_bounds(i);
        return {masks_.data() + lo, static_cast<std::size_t>(hi - lo)};
    }

    int max_member_size() const { return masks_.empty() ? -1 : std::popcount(masks_.back()); }
    int min_member_size() const { return masks_.empty() ? -1 : std::popcount(masks_.front()); }

    // per-layer size fingerprint, indices 0..n
    std::vector<std::size_t> layer_profile() const {
        std::vector<std::size_t> prof(static_cast<std::size_t>(n_) + 1, 0);
        for (std::uint32_t m : masks_) ++prof[static_cast<std::size_t>(std::popcount(m))];
        return prof;
    }

    friend bool operator==(const Family&, const Family&) = default;

  private:
    void normalize() {
        std::sort(masks_.begin(), masks_.end(),
                  [](std::uint32_t a, std::uint32_t b) { return canonical_key(a) < canonical_key(b); });
        masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
    }

    int n_;
    std::vector<std::uint32_t> masks_;
};

inline Family layer(const Family& f, int i) {
    if (i < 0 || i > f.n()) throw parameter_error("layer index outside [0,n]");
    auto span = f.layer_masks(i);
    return Family(f.n(), std::vector<std::uint32_t>(span.begin(), span.end()));
}

inline Family complement_family(const Family& f) {
    const std::uint32_t full = universe_mask(f.n());
    std::vector<std::uint32_t> out;
    out.reserve(f.size());
    for (std::uint32_t m : f.masks()) out.push_back(~m & full);
    return Family(f.n(), std::move(out));
}

// smallest hereditary (down-closed) family containing f
inline Family down_closure(const Family& f) {
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t m : f.masks()) {
        // enumerate all submasks, including m and 0
        std::uint32_t sub = m;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & m;
        }
    }
    return Family(f.n(), std::vector<std::uint32_t>(seen.begin(), seen.end()));
}

// relabel by a permutation of [n]; perm[e-1] is the image of element e
inline std::uint32_t apply_perm(std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    for (std::uint32_t b = mask; b; b &= b - 1)
        out |= std::uint32_t{1} << (perm[static_cast<std::size_t>(std::countr_zero(b))] - 1);
    return out;
}

inline Family apply_perm(const Family& f, const std::vector<int>& perm) {
    if (perm.size() != static_cast<std::size_t>(f.n()))
        throw parameter_error("permutation length must equal n");
    std::vector<std::uint32_t> out;
    out.reserve(f.size());
    for (std::uint32_t m : f.masks()) out.push_back(apply_perm(m, perm));
    return Family(f.n(), std::move(out));
}

// power set 2^[n] (n small enough to enumerate)
inline Family power_set(int n) {
    check_ground_set(n);
    if (n > 20) throw scale_error("power_set limited to n <= 20");
    std::vector<std::uint32_t> ms(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < ms.size(); ++m) ms[m] = m;
    return Family(n, std::move(ms));
}

}  // namespace sunion
