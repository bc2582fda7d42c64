#pragma once

#include <optional>

#include "sunion/family.hpp"
#include "sunion/lexorder.hpp"

namespace sunion {

enum class FamilyKind {
    K,            // all sets of size <= d, plus a (d+1)-star for odd s
    H,            // K with the top layer cut down around one (d+1)-set D
    Hstar4,       // second extremal family at s = 4
    T5,           // second extremal family at s = 5
    T3,           // second Hilton-Milner family at k = 3
    W_even,       // third-tier extremal family, s = 2d
    W_odd,        // third-tier extremal family, s = 2d+1
    Wstar6,
    Wstarstar6,
    Wstar7,
    Wstarstar7,
    EKR,          // full star of k-sets
    HM,           // Hilton-Milner family
    J,            // J_i(n,k)
    G,            // G_i(n,k)
    Lex,          // lexicographically first m k-sets
    KatonaIntersecting,  // extremal t-intersecting family (dual of K)
};

inline const char* to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::K: return "K";
        case FamilyKind::H: return "H";
        case FamilyKind::Hstar4: return "Hstar4";
        case FamilyKind::T5: return "T5";
        case FamilyKind::T3: return "T3";
        case FamilyKind::W_even: return "W_even";
        case FamilyKind::W_odd: return "W_odd";
        case FamilyKind::Wstar6: return "Wstar6";
        case FamilyKind::Wstarstar6: return "Wstarstar6";
        case FamilyKind::Wstar7: return "Wstar7";
        case FamilyKind::Wstarstar7: return "Wstarstar7";
        case FamilyKind::EKR: return "EKR";
        case FamilyKind::HM: return "HM";
        case FamilyKind::J: return "J";
        case FamilyKind::G: return "G";
        case FamilyKind::Lex: return "Lex";
        case FamilyKind::KatonaIntersecting: return "KatonaIntersecting";
    }
    return "?";
}

// Optional overrides for the anchor sets; defaults are the lexicographically
// least legal choices, which makes golden families byte-reproducible.
struct Anchors {
    std::optional<int> y;              // fixed element (K odd, H odd, EKR)
    std::optional<std::uint32_t> D;    // H
    std::optional<std::uint32_t> D1;   // W_even
    std::optional<std::uint32_t> D2;   // W_even
    std::optional<int> x0;             // J, G
    std::optional<std::uint32_t> E;    // J, G
    std::optional<std::uint32_t> Ji;   // J: the i-element set J \ {x0}

    friend bool operator==(const Anchors&, const Anchors&) = default;
};

struct NamedFamily {
    FamilyKind kind;
    int n = 0;
    int s = -1;  // union bound (K/H/W families)
    int k = -1;  // uniformity (EKR/HM/J/G/Lex)
    int t = -1;  // intersection threshold (KatonaIntersecting)
    int i = -1;  // index for J_i / G_i
    std::uint64_t m = 0;  // member count for Lex
    Anchors anchors;

    static NamedFamily make(FamilyKind kind, int n, int s = -1) {
        NamedFamily f{};
        f.kind = kind;
        f.n = n;
        f.s = s;
        return f;
    }
    static NamedFamily katona(int n, int s) { return make(FamilyKind::K, n, s); }
    static NamedFamily frankl(int n, int s) { return make(FamilyKind::H, n, s); }
    static NamedFamily hstar4(int n) { return make(FamilyKind::Hstar4, n, 4); }
    static NamedFamily t5(int n) { return make(FamilyKind::T5, n, 5); }
    static NamedFamily t3(int n) {
        NamedFamily f = make(FamilyKind::T3, n);
        f.k = 3;
        return f;
    }
    static NamedFamily w(int n, int s) {
        return make(s % 2 == 0 ? FamilyKind::W_even : FamilyKind::W_odd, n, s);
    }
    static NamedFamily wstar6(int n) { return make(FamilyKind::Wstar6, n, 6); }
    static NamedFamily wstarstar6(int n) { return make(FamilyKind::Wstarstar6, n, 6); }
    static NamedFamily wstar7(int n) { return make(FamilyKind::Wstar7, n, 7); }
    static NamedFamily wstarstar7(int n) { return make(FamilyKind::Wstarstar7, n, 7); }
    static NamedFamily ekr(int n, int k) {
        NamedFamily f = make(FamilyKind::EKR, n);
        f.k = k;
        return f;
    }
    static NamedFamily hm(int n, int k) {
        NamedFamily f = make(FamilyKind::HM, n);
        f.k = k;
        return f;
    }
    static NamedFamily j(int n, int k, int i) {
        NamedFamily f = make(FamilyKind::J, n);
        f.k = k;
        f.i = i;
        return f;
    }
    static NamedFamily g(int n, int k, int i) {
        NamedFamily f = make(FamilyKind::G, n);
        f.k = k;
        f.i = i;
        return f;
    }
    static NamedFamily lex(int n, int k, std::uint64_t m) {
        NamedFamily f = make(FamilyKind::Lex, n);
        f.k = k;
        f.m = m;
        return f;
    }
    static NamedFamily katona_intersecting(int n, int t) {
        NamedFamily f = make(FamilyKind::KatonaIntersecting, n);
        f.t = t;
        return f;
    }

    std::string describe() const {
        std::string out = to_string(kind);
        out += "(" + std::to_string(n);
        if (s >= 0 && kind != FamilyKind::T3) out += "," + std::to_string(s);
        if (kind == FamilyKind::T3) out += ",3";
        if (k >= 0 && kind != FamilyKind::T3) out += "," + std::to_string(k);
        if (t >= 0) out += ",t=" + std::to_string(t);
        if (i >= 0) out += ",i=" + std::to_string(i);
        if (kind == FamilyKind::Lex) out += ",m=" + std::to_string(m);
        out += ")";
        return out;
    }

    friend bool operator==(const NamedFamily&, const NamedFamily&) = default;
};

namespace detail {

inline void require(bool ok, const std::string& condition) {
    if (!ok) throw parameter_error("violated side condition: " + condition);
}

inline std::vector<std::uint32_t> sets_up_to(int n, int d) {
    std::vector<std::uint32_t> out;
    for (int i = 0; i <= d; ++i)
        for (std::uint32_t m : all_ksets(n, i)) out.push_back(m);
    return out;
}

inline std::uint64_t katona_sum(int n, int d) {
    std::uint64_t v = 0;
    for (int i = 0; i <= d; ++i) v += binom(n, i);
    return v;
}

}  // namespace detail

inline void validate(const NamedFamily& nf) {
    using detail::require;
    check_ground_set(nf.n);
    const int n = nf.n;
    switch (nf.kind) {
        case FamilyKind::K:
        case FamilyKind::H:
            require(nf.s >= 2, "K/H need s >= 2");
            require(n >= nf.s + 2, "K/H need n >= s + 2");
            break;
        case FamilyKind::W_even:
            require(nf.s >= 4 && nf.s % 2 == 0, "W(n,2d) needs even s >= 4");
            require(n >= nf.s + 2, "W needs n >= s + 2");
            break;
        case FamilyKind::W_odd:
            require(nf.s >= 5 && nf.s % 2 == 1, "W(n,2d+1) needs odd s >= 5");
            require(n >= nf.s + 2, "W needs n >= s + 2");
            break;
        case FamilyKind::Hstar4:
            require(n >= 6, "Hstar4 needs n >= s + 2 = 6");
            break;
        case FamilyKind::T5:
            require(n >= 7, "T5 needs n >= s + 2 = 7");
            break;
        case FamilyKind::Wstar6:
        case FamilyKind::Wstarstar6:
            require(n >= 8, "Wstar6/Wstarstar6 need n >= s + 2 = 8");
            break;
        case FamilyKind::Wstar7:
        case FamilyKind::Wstarstar7:
            require(n >= 9, "Wstar7/Wstarstar7 need n >= s + 2 = 9");
            break;
        case FamilyKind::T3:
            require(n >= 6, "T3 needs n >= 2k = 6");
            break;
        case FamilyKind::EKR:
            require(nf.k >= 1, "EKR needs k >= 1");
            require(n >= 2 * nf.k, "EKR needs n >= 2k");
            break;
        case FamilyKind::HM:
            require(nf.k >= 2, "HM needs k >= 2");
            require(n >= 2 * nf.k, "HM needs n >= 2k");
            break;
        case FamilyKind::J:
            require(nf.k >= 3, "J_i needs k >= 3");
            require(nf.i >= 1 && nf.i <= nf.k - 1, "J_i needs 1 <= i <= k - 1");
            require(n > 2 * nf.k, "J_i needs n > 2k");
            break;
        case FamilyKind::G:
            require(nf.k >= 3, "G_i needs k >= 3");
            require(nf.i >= 2 && nf.i <= nf.k, "G_i needs 2 <= i <= k");
            require(n > 2 * nf.k, "G_i needs n > 2k");
            break;
        case FamilyKind::Lex:
            require(nf.k >= 0 && nf.k <= n, "Lex needs 0 <= k <= n");
            require(nf.m <= binom(n, nf.k), "Lex needs m <= C(n,k)");
            break;
        case FamilyKind::KatonaIntersecting:
            require(nf.t >= 2 && nf.t <= n, "KatonaIntersecting needs 2 <= t <= n");
            break;
    }
}

// Flags parameter choices that extend a definition past its stated range.
inline std::optional<std::string> definition_note(const NamedFamily& nf) {
    if (nf.kind == FamilyKind::W_even && nf.s == 4)
        return "W(n,4): the d >= 3 definition applied verbatim at d = 2";
    return std::nullopt;
}

inline Family build(const NamedFamily& nf);

namespace detail {

inline std::uint32_t anchor_or(const std::optional<std::uint32_t>& a, std::uint32_t dflt) {
    return a ? *a : dflt;
}

inline Family build_k(int n, int s, const Anchors& an) {
    int d = s / 2;
    auto ms = sets_up_to(n, d);
    if (s % 2 == 1) {
        int y = an.y.value_or(1);
        require(y >= 1 && y <= n, "K(n,2d+1) anchor y must lie in [n]");
        std::uint32_t yb = std::uint32_t{1} << (y - 1);
        for (std::uint32_t m : all_ksets(n, d + 1))
            if (m & yb) ms.push_back(m);
    }
    return Family(n, std::move(ms));
}

inline Family build_h(int n, int s, const Anchors& an) {
    int d = s / 2;
    if (s % 2 == 0) {
        std::uint32_t D = anchor_or(an.D, SetBits::interval(n, 1, d + 1).bits);
        require(std::popcount(D) == d + 1, "H(n,2d) needs |D| = d + 1");
        auto ms = sets_up_to(n, d - 1);
        ms.push_back(D);
        for (std::uint32_t m : all_ksets(n, d))
            if (m & D) ms.push_back(m);
        return Family(n, std::move(ms));
    }
    int y = an.y.value_or(1);
    require(y >= 1 && y <= n, "H(n,2d+1) anchor y must lie in [n]");
    std::uint32_t yb = std::uint32_t{1} << (y - 1);
    std::uint32_t D = anchor_or(an.D, SetBits::interval(n, 2, d + 2).bits);
    require(std::popcount(D) == d + 1, "H(n,2d+1) needs |D| = d + 1");
    require((D & yb) == 0, "H(n,2d+1) needs D subseteq [n] \\ {y}");
    auto ms = sets_up_to(n, d);
    ms.push_back(D);
    for (std::uint32_t m : all_ksets(n, d + 1))
        if ((m & yb) && (m & D)) ms.push_back(m);
    return Family(n, std::move(ms));
}

inline Family build_hstar4(int n) {
    auto ms = sets_up_to(n, 1);
    std::uint32_t p = SetBits::interval(n, 1, 2).bits;
    for (std::uint32_t m : all_ksets(n, 2))
        if (m & p) ms.push_back(m);
    for (int i = 3; i <= n; ++i) ms.push_back(p | (std::uint32_t{1} << (i - 1)));
    return Family(n, std::move(ms));
}

inline Family build_t5(int n) {
    auto ms = sets_up_to(n, 2);
    std::uint32_t tri = SetBits::interval(n, 1, 3).bits;
    for (std::uint32_t m : all_ksets(n, 3))
        if (std::popcount(m & tri) >= 2) ms.push_back(m);
    return Family(n, std::move(ms));
}

inline Family build_t3(int n) {
    std::vector<std::uint32_t> ms;
    std::uint32_t tri = SetBits::interval(n, 1, 3).bits;
    for (std::uint32_t m : all_ksets(n, 3))
        if (std::popcount(m & tri) >= 2) ms.push_back(m);
    return Family(n, std::move(ms));
}

inline Family build_w_even(int n, int s, const Anchors& an) {
    int d = s / 2;
    std::uint32_t D1 = anchor_or(an.D1, SetBits::interval(n, 1, d + 1).bits);
    std::uint32_t D2 = anchor_or(an.D2, SetBits::interval(n, 1, d).bits |
                                            (std::uint32_t{1} << (d + 1)));
    require(std::popcount(D1) == d + 1 && std::popcount(D2) == d + 1,
            "W(n,2d) needs |D1| = |D2| = d + 1");
    require(std::popcount(D1 & D2) == d, "W(n,2d) needs |D1 cap D2| = d");
    auto ms = sets_up_to(n, d - 1);
    ms.push_back(D1);
    ms.push_back(D2);
    for (std::uint32_t m : all_ksets(n, d))
        if ((m & D1) && (m & D2)) ms.push_back(m);
    return Family(n, std::move(ms));
}

inline Family build_j(int n, int k, int i, const Anchors& an) {
    int x0 = an.x0.value_or(1);
    require(x0 >= 1 && x0 <= n, "J_i anchor x0 must lie in [n]");
    std::uint32_t x0b = std::uint32_t{1} << (x0 - 1);
    std::uint32_t E = anchor_or(an.E, SetBits::interval(n, 2, k).bits);
    std::uint32_t Ji = anchor_or(an.Ji, SetBits::interval(n, k + 1, k + i).bits);
    require(std::popcount(E) == k - 1, "J_i needs |E| = k - 1");
    require(std::popcount(Ji) == i, "J_i needs |J \\ {x0}| = i");
    require((E & (Ji | x0b)) == 0, "J_i needs J disjoint from E");
    require((Ji & x0b) == 0, "J_i needs x0 in J \\ J_i");
    std::vector<std::uint32_t> ms;
    for (std::uint32_t m : all_ksets(n, k)) {
        if (!(m & x0b)) continue;
        bool ok = true;
        for (std::uint32_t jb = Ji; jb; jb &= jb - 1) {
            std::uint32_t j = jb & (~jb + 1);
            if (!(m & (E | j))) {
                ok = false;
                break;
            }
        }
        if (ok) ms.push_back(m);
    }
    for (std::uint32_t jb = Ji; jb; jb &= jb - 1) ms.push_back(E | (jb & (~jb + 1)));
    return Family(n, std::move(ms));
}

inline Family build_g(int n, int k, int i, const Anchors& an) {
    int x0 = an.x0.value_or(1);
    require(x0 >= 1 && x0 <= n, "G_i anchor x0 must lie in [n]");
    std::uint32_t x0b = std::uint32_t{1} << (x0 - 1);
    std::uint32_t E = anchor_or(an.E, SetBits::interval(n, 2, i + 1).bits);
    require(std::popcount(E) == i, "G_i needs |E| = i");
    require((E & x0b) == 0, "G_i needs E subseteq [n] \\ {x0}");
    std::vector<std::uint32_t> ms;
    for (std::uint32_t m : all_ksets(n, k))
        if ((m & E) == E || ((m & x0b) && (m & E))) ms.push_back(m);
    return Family(n, std::move(ms));
}

inline Family build_w_odd(int n, int s, const Anchors& an) {
    int d = s / 2;
    NamedFamily j2 = NamedFamily::j(n, d + 1, 2);
    j2.anchors = an;
    Family top = build(j2);
    auto ms = sets_up_to(n, d);
    for (std::uint32_t m : top.masks()) ms.push_back(m);
    return Family(n, std::move(ms));
}

inline Family build_wstar6(int n) {
    auto ms = sets_up_to(n, 2);
    std::uint32_t tri = SetBits::interval(n, 1, 3).bits;
    for (std::uint32_t m : all_ksets(n, 3))
        if (m & tri) ms.push_back(m);
    for (std::uint32_t m : all_ksets(n, 4))
        if ((m & tri) == tri) ms.push_back(m);
    return Family(n, std::move(ms));
}

inline Family build_wstarstar6(int n) {
    auto ms = sets_up_to(n, 2);
    std::uint32_t p = SetBits::interval(n, 1, 2).bits;
    for (std::uint32_t m : all_ksets(n, 3))
        if (m & p) ms.push_back(m);
    for (std::uint32_t m : all_ksets(n, 4))
        if ((m & p) == p) ms.push_back(m);
    return Family(n, std::move(ms));
}

inline Family build_wstar7(int n) {
    auto ms = sets_up_to(n, 3);
    std::uint32_t one = 1u;
    std::uint32_t pair = SetBits::interval(n, 2, 3).bits;
    for (std::uint32_t m : all_ksets(n, 4))
        if ((m & pair) == pair || ((m & one) && (m & pair))) ms.push_back(m);
    return Family(n, std::move(ms));
}

inline Family build_wstarstar7(int n) {
    auto ms = sets_up_to(n, 3);
    std::uint32_t one = 1u;
    std::uint32_t tri = SetBits::interval(n, 2, 4).bits;
    for (std::uint32_t m : all_ksets(n, 4))
        if ((m & tri) == tri || ((m & one) && (m & tri))) ms.push_back(m);
    return Family(n, std::move(ms));
}

inline Family build_ekr(int n, int k, const Anchors& an) {
    int y = an.y.value_or(1);
    require(y >= 1 && y <= n, "EKR anchor y must lie in [n]");
    std::uint32_t yb = std::uint32_t{1} << (y - 1);
    std::vector<std::uint32_t> ms;
    for (std::uint32_t m : all_ksets(n, k))
        if (m & yb) ms.push_back(m);
    return Family(n, std::move(ms));
}

inline Family build_hm(int n, int k) {
    std::uint32_t one = 1u;
    std::uint32_t E = SetBits::interval(n, 2, k + 1).bits;
    std::vector<std::uint32_t> ms;
    for (std::uint32_t m : all_ksets(n, k))
        if ((m & one) && (m & E)) ms.push_back(m);
    ms.push_back(E);
    return Family(n, std::move(ms));
}

inline Family build_katona_intersecting(int n, int t) {
    std::vector<std::uint32_t> ms;
    if ((n + t) % 2 == 0) {
        int a = (n + t) / 2;
        for (int kk = a; kk <= n; ++kk)
            for (std::uint32_t m : all_ksets(n, kk)) ms.push_back(m);
    } else {
        int a = (n + t - 1) / 2;
        for (int kk = a + 1; kk <= n; ++kk)
            for (std::uint32_t m : all_ksets(n, kk)) ms.push_back(m);
        std::uint32_t last = std::uint32_t{1} << (n - 1);
        for (std::uint32_t m : all_ksets(n, a))
            if (!(m & last)) ms.push_back(m);  // the a-sets inside [n-1]
    }
    return Family(n, std::move(ms));
}

}  // namespace detail

inline Family build(const NamedFamily& nf) {
    validate(nf);
    switch (nf.kind) {
        case FamilyKind::K: return detail::build_k(nf.n, nf.s, nf.anchors);
        case FamilyKind::H: return detail::build_h(nf.n, nf.s, nf.anchors);
        case FamilyKind::Hstar4: return detail::build_hstar4(nf.n);
        case FamilyKind::T5: return detail::build_t5(nf.n);
        case FamilyKind::T3: return detail::build_t3(nf.n);
        case FamilyKind::W_even: return detail::build_w_even(nf.n, nf.s, nf.anchors);
        case FamilyKind::W_odd: return detail::build_w_odd(nf.n, nf.s, nf.anchors);
        case FamilyKind::Wstar6: return detail::build_wstar6(nf.n);
        case FamilyKind::Wstarstar6: return detail::build_wstarstar6(nf.n);
        case FamilyKind::Wstar7: return detail::build_wstar7(nf.n);
        case FamilyKind::Wstarstar7: return detail::build_wstarstar7(nf.n);
        case FamilyKind::EKR: return detail::build_ekr(nf.n, nf.k, nf.anchors);
        case FamilyKind::HM: return detail::build_hm(nf.n, nf.k);
        case FamilyKind::J: return detail::build_j(nf.n, nf.k, nf.i, nf.anchors);
        case FamilyKind::G: return detail::build_g(nf.n, nf.k, nf.i, nf.anchors);
        case FamilyKind::Lex: return lex_initial(nf.n, nf.k, nf.m);
        case FamilyKind::KatonaIntersecting:
            return detail::build_katona_intersecting(nf.n, nf.t);
    }
    throw parameter_error("unknown family kind");
}

inline Family build_katona_intersecting(int n, int t) {
    return build(NamedFamily::katona_intersecting(n, t));
}

// Exact evaluation of the theorem bound (extremal kinds) or the direct
// counting formula (stability-tier kinds).
inline std::uint64_t closed_form_size(const NamedFamily& nf) {
    validate(nf);
    const int n = nf.n;
    using detail::katona_sum;
    switch (nf.kind) {
        case FamilyKind::K: {
            int d = nf.s / 2;
            return katona_sum(n, d) + (nf.s % 2 == 1 ? binom(n - 1, d) : 0);
        }
        case FamilyKind::H: {
            int d = nf.s / 2;
            if (nf.s % 2 == 0) return katona_sum(n, d) - binom(n - d - 1, d) + 1;
            return katona_sum(n, d) + binom(n - 1, d) - binom(n - d - 2, d) + 1;
        }
        case FamilyKind::Hstar4:
            return katona_sum(n, 2) - binom(n - 3, 2) + 1;
        case FamilyKind::T5:
            return katona_sum(n, 2) + binom(n - 1, 2) - binom(n - 4, 2) + 1;
        case FamilyKind::T3:
            return binom(n - 1, 2) - binom(n - 4, 2) + 1;
        case FamilyKind::W_even: {
            int d = nf.s / 2;
            return katona_sum(n, d) - binom(n - d - 1, d) - binom(n - d - 2, d - 1) + 2;
        }
        case FamilyKind::W_odd: {
            int d = nf.s / 2;
            return katona_sum(n, d) + binom(n - 1, d) - binom(n - d - 2, d) -
                   binom(n - d - 3, d - 1) + 2;
        }
        case FamilyKind::Wstar6:
        case FamilyKind::Wstarstar6:
            return katona_sum(n, 3) - binom(n - 4, 3) - binom(n - 5, 2) + 2;
        case FamilyKind::Wstar7:
        case FamilyKind::Wstarstar7:
            return katona_sum(n, 3) + binom(n - 1, 3) - binom(n - 5, 3) - binom(n - 6, 2) + 2;
        case FamilyKind::EKR:
            return binom(n - 1, nf.k - 1);
        case FamilyKind::HM:
            return binom(n - 1, nf.k - 1) - binom(n - nf.k - 1, nf.k - 1) + 1;
        case FamilyKind::J: {
            const int k = nf.k, i = nf.i;
            // inclusion-exclusion over the sets E u {j} a member may miss
            std::uint64_t v = binom(n - 1, k - 1);
            std::int64_t sign = -1;
            std::uint64_t acc = v;
            for (int r = 1; r <= i; ++r) {
                std::uint64_t term = binom(i, r) * binom(n - k - r, k - 1);
                acc = sign > 0 ? acc + term : acc - term;
                sign = -sign;
            }
            return acc + static_cast<std::uint64_t>(i);
        }
        case FamilyKind::G: {
            const int k = nf.k, i = nf.i;
            return binom(n - i, k - i) + binom(n - 1, k - 1) - binom(n - 1 - i, k - 1) -
                   binom(n - i - 1, k - i - 1);
        }
        case FamilyKind::Lex:
            return nf.m;
        case FamilyKind::KatonaIntersecting: {
            const int t = nf.t;
            if ((n + t) % 2 == 0) {
                int a = (n + t) / 2;
                std::uint64_t v = 0;
                for (int kk = a; kk <= n; ++kk) v += binom(n, kk);
                return v;
            }
            int a = (n + t - 1) / 2;
            std::uint64_t v = binom(n - 1, a);
            for (int kk = a + 1; kk <= n; ++kk) v += binom(n, kk);
            return v;
        }
    }
    throw parameter_error("unknown family kind");
}

inline std::optional<FamilyKind> kind_from_string(const std::string& s, int s_parity_hint = -1) {
    using FK = FamilyKind;
    if (s == "K") return FK::K;
    if (s == "H") return FK::H;
    if (s == "Hstar4") return FK::Hstar4;
    if (s == "T5") return FK::T5;
    if (s == "T3") return FK::T3;
    if (s == "W") {
        if (s_parity_hint < 0) return std::nullopt;
        return s_parity_hint % 2 == 0 ? FK::W_even : FK::W_odd;
    }
    if (s == "W_even") return FK::W_even;
    if (s == "W_odd") return FK::W_odd;
    if (s == "Wstar6") return FK::Wstar6;
    if (s == "Wstarstar6") return FK::Wstarstar6;
    if (s == "Wstar7") return FK::Wstar7;
    if (s == "Wstarstar7") return FK::Wstarstar7;
    if (s == "EKR") return FK::EKR;
    if (s == "HM") return FK::HM;
    if (s == "J") return FK::J;
    if (s == "G") return FK::G;
    if (s == "Lex") return FK::Lex;
    if (s == "KatonaIntersecting") return FK::KatonaIntersecting;
    return std::nullopt;
}

}  // namespace sunion
