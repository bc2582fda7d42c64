#pragma once

#include "sunion/lexorder.hpp"
#include "sunion/properties.hpp"

namespace sunion {

struct ShiftIndex {
    int i;
    int j;
};

inline void check_shift_index(const ShiftIndex& ix, int n) {
    if (!(1 <= ix.i && ix.i < ix.j && ix.j <= n))
        throw parameter_error("shift index needs 1 <= i < j <= n");
}

// S_{i,j}: replace j by i in a member unless i is present, j is absent, or the
// shifted set is already in the family.
inline Family shift(const Family& f, ShiftIndex ix) {
    check_shift_index(ix, f.n());
    const std::uint32_t ib = std::uint32_t{1} << (ix.i - 1);
    const std::uint32_t jb = std::uint32_t{1} << (ix.j - 1);
    std::vector<std::uint32_t> out;
    out.reserve(f.size());
    for (std::uint32_t m : f.masks()) {
        if ((m & jb) && !(m & ib)) {
            std::uint32_t moved = (m & ~jb) | ib;
            out.push_back(f.contains(moved) ? m : moved);
        } else {
            out.push_back(m);
        }
    }
    return Family(f.n(), std::move(out));
}

namespace detail {

inline std::vector<ShiftIndex> shift_sweep_order(int n) {
    // (j - i, i) lexicographic; the sweep order is part of the fixpoint contract
    std::vector<ShiftIndex> order;
    for (int gap = 1; gap < n; ++gap)
        for (int i = 1; i + gap <= n; ++i) order.push_back({i, i + gap});
    return order;
}

}  // namespace detail

// repeated application of all S_{i,j} until a full clean pass
inline Family left_shift_fixpoint(Family f) {
    const auto order = detail::shift_sweep_order(f.n());
    bool changed = true;
    while (changed) {
        changed = false;
        for (ShiftIndex ix : order) {
            Family g = shift(f, ix);
            if (!(g == f)) {
                f = std::move(g);
                changed = true;
            }
        }
    }
    return f;
}

// identical S_{i,j} sequence applied to both families in lockstep
inline std::pair<Family, Family> joint_left_shift_fixpoint(Family a, Family b) {
    if (a.n() != b.n()) throw ground_set_error("joint shifting across ground sets");
    const auto order = detail::shift_sweep_order(a.n());
    bool changed = true;
    while (changed) {
        changed = false;
        for (ShiftIndex ix : order) {
            Family a2 = shift(a, ix);
            Family b2 = shift(b, ix);
            if (!(a2 == a) || !(b2 == b)) {
                a = std::move(a2);
                b = std::move(b2);
                changed = true;
            }
        }
    }
    return {std::move(a), std::move(b)};
}

// stability under every S_{i,j}; witness is (member, escaped image)
inline PropertyReport is_left_shifted(const Family& f) {
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
        std::uint32_t m = f.masks()[idx];
        for (std::uint32_t jb0 = m; jb0; jb0 &= jb0 - 1) {
            int j = std::countr_zero(jb0) + 1;
            for (int i = 1; i < j; ++i) {
                std::uint32_t ib = std::uint32_t{1} << (i - 1);
                if (m & ib) continue;
                std::uint32_t moved = (m & ~(std::uint32_t{1} << (j - 1))) | ib;
                if (!f.contains(moved))
                    return detail::fail("left_shifted", f.member(idx), SetBits(f.n(), moved));
            }
        }
    }
    return detail::pass("left_shifted");
}

namespace detail {

inline bool dominated_all_present(const Family& f, const std::vector<int>& b,
                                  std::vector<int>& a, std::size_t pos, std::uint32_t acc) {
    if (pos == b.size()) return f.contains(SetBits(f.n(), acc));
    int lo = pos == 0 ? 1 : a[pos - 1] + 1;
    for (int v = lo; v <= b[pos]; ++v) {
        a[pos] = v;
        if (!dominated_all_present(f, b, a, pos + 1, acc | (std::uint32_t{1} << (v - 1))))
            return false;
    }
    return true;
}

}  // namespace detail

// the literal dominance condition: a_i <= b_i coordinatewise pulls sets in
inline PropertyReport is_dominance_closed(const Family& f) {
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
        std::vector<int> b = f.member(idx).elements();
        std::vector<int> a(b.size());
        if (!detail::dominated_all_present(f, b, a, 0, 0))
            return detail::fail("dominance_closed", f.member(idx), f.member(idx));
    }
    return detail::pass("dominance_closed");
}

}  // namespace sunion
