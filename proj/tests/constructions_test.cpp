#include <catch2/catch_amalgamated.hpp>

#include "sunion/constructions.hpp"
#include "sunion/properties.hpp"

using namespace sunion;

namespace {

// Enumeration oracle: count subsets of [n] satisfying the defining predicate,
// written mask-by-mask rather than through the construction code.
template <typename Pred>
std::uint64_t count_subsets(int n, Pred pred) {
    std::uint64_t cnt = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (pred(static_cast<std::uint32_t>(m))) ++cnt;
    return cnt;
}

std::uint64_t oracle_k(int n, int s) {
    int d = s / 2;
    std::uint32_t y = 1u;
    return count_subsets(n, [&](std::uint32_t m) {
        int sz = std::popcount(m);
        if (sz <= d) return true;
        return s % 2 == 1 && sz == d + 1 && (m & y);
    });
}

std::uint64_t oracle_w_even(int n, int s) {
    int d = s / 2;
    std::uint32_t D1 = SetBits::interval(n, 1, d + 1).bits;
    std::uint32_t D2 = SetBits::interval(n, 1, d).bits | (1u << (d + 1));
    return count_subsets(n, [&](std::uint32_t m) {
        int sz = std::popcount(m);
        if (sz <= d - 1) return true;
        if (m == D1 || m == D2) return true;
        return sz == d && (m & D1) && (m & D2);
    });
}

}  // namespace

TEST_CASE("frozen extremal sizes") {
    CHECK(build(NamedFamily::katona(6, 4)).size() == 22);
    CHECK(build(NamedFamily::katona(7, 5)).size() == 44);
    CHECK(build(NamedFamily::frankl(7, 4)).size() == 24);
    CHECK(build(NamedFamily::frankl(7, 5)).size() == 42);
    CHECK(build(NamedFamily::hstar4(7)).size() == 24);  // 4n-4 at n=7
    CHECK(build(NamedFamily::t5(7)).size() == 42);
    CHECK(build(NamedFamily::w(7, 4)).size() == 22);
    CHECK(build(NamedFamily::w(7, 5)).size() == 41);
    CHECK(build(NamedFamily::w(8, 6)).size() == 88);
    CHECK(build(NamedFamily::wstar6(8)).size() == 88);
    CHECK(build(NamedFamily::wstarstar6(8)).size() == 88);
    CHECK(build(NamedFamily::w(9, 7)).size() == 181);
    CHECK(build(NamedFamily::wstar7(9)).size() == 181);
    CHECK(build(NamedFamily::wstarstar7(9)).size() == 181);
    CHECK(build(NamedFamily::ekr(7, 3)).size() == 15);
    CHECK(build(NamedFamily::hm(7, 3)).size() == 13);
    CHECK(build(NamedFamily::t3(7)).size() == 13);
    CHECK(build(NamedFamily::j(7, 3, 2)).size() == 12);
    CHECK(build(NamedFamily::j(9, 4, 2)).size() == 51);
    CHECK(build(NamedFamily::g(9, 4, 2)).size() == 51);
    CHECK(build(NamedFamily::g(9, 4, 3)).size() == 51);
    CHECK(build(NamedFamily::katona_intersecting(6, 2)).size() == 22);
    CHECK(build(NamedFamily::katona_intersecting(7, 3)).size() == 29);
    CHECK(closed_form_size(NamedFamily::j(9, 4, 2)) == 51);
    CHECK(closed_form_size(NamedFamily::w(8, 6)) == 88);
    CHECK(closed_form_size(NamedFamily::katona(6, 4)) == 22);
}

TEST_CASE("enumeration oracle agrees with build") {
    for (int n = 6; n <= 9; ++n)
        for (int s = 2; s <= n - 2; ++s)
            CHECK(build(NamedFamily::katona(n, s)).size() == oracle_k(n, s));
    for (int n = 6; n <= 10; ++n)
        for (int s = 4; s <= n - 2; s += 2)
            CHECK(build(NamedFamily::w(n, s)).size() == oracle_w_even(n, s));
}

TEST_CASE("build matches closed form and passes the defining predicate") {
    // the n <= 12 all-parameters sweep is the first acceptance criterion;
    // this is a fast smoke slice of it
    for (int n = 4; n <= 10; ++n) {
        for (int s = 2; s <= n - 2; ++s) {
            for (FamilyKind kind : {FamilyKind::K, FamilyKind::H}) {
                NamedFamily nf = NamedFamily::make(kind, n, s);
                Family f = build(nf);
                CHECK(f.size() == closed_form_size(nf));
                CHECK(is_s_union(f, s).holds);
            }
            if (s >= 4) {
                NamedFamily nf = NamedFamily::w(n, s);
                Family f = build(nf);
                CHECK(f.size() == closed_form_size(nf));
                CHECK(is_s_union(f, s).holds);
            }
        }
        for (int k = 2; 2 * k <= n; ++k) {
            for (auto nf : {NamedFamily::ekr(n, k), NamedFamily::hm(n, k)}) {
                Family f = build(nf);
                CHECK(f.size() == closed_form_size(nf));
                CHECK(is_t_intersecting(f, 1).holds);
            }
        }
        for (int k = 3; 2 * k < n; ++k) {
            for (int i = 1; i <= k - 1; ++i) {
                Family f = build(NamedFamily::j(n, k, i));
                CHECK(f.size() == closed_form_size(NamedFamily::j(n, k, i)));
                CHECK(is_t_intersecting(f, 1).holds);
            }
            for (int i = 2; i <= k; ++i) {
                Family f = build(NamedFamily::g(n, k, i));
                CHECK(f.size() == closed_form_size(NamedFamily::g(n, k, i)));
                CHECK(is_t_intersecting(f, 1).holds);
            }
        }
        for (int t = 2; t <= n; ++t) {
            Family f = build(NamedFamily::katona_intersecting(n, t));
            CHECK(f.size() == closed_form_size(NamedFamily::katona_intersecting(n, t)));
            CHECK(is_t_intersecting(f, t).holds);
        }
    }
}

TEST_CASE("odd W restricted to its top layer is J_2") {
    for (int n = 7; n <= 10; ++n)
        for (int s = 5; s <= n - 2; s += 2) {
            int d = s / 2;
            Family w = build(NamedFamily::w(n, s));
            CHECK(layer(w, d + 1) == build(NamedFamily::j(n, d + 1, 2)));
        }
}

TEST_CASE("T3 equals G_2(n,3) under default anchors") {
    for (int n = 7; n <= 10; ++n) CHECK(build(NamedFamily::t3(n)) == build(NamedFamily::g(n, 3, 2)));
}

TEST_CASE("anchor overrides and side-condition errors") {
    NamedFamily h = NamedFamily::frankl(8, 6);
    h.anchors.D = SetBits::of(8, {2, 4, 6, 8}).bits;
    CHECK(build(h).size() == closed_form_size(h));

    NamedFamily bad = NamedFamily::frankl(8, 6);
    bad.anchors.D = SetBits::of(8, {1, 2}).bits;  // |D| != d+1
    CHECK_THROWS_WITH(build(bad), Catch::Matchers::ContainsSubstring("|D| = d + 1"));

    NamedFamily badw = NamedFamily::w(8, 6);
    badw.anchors.D1 = SetBits::of(8, {1, 2, 3, 4}).bits;
    badw.anchors.D2 = SetBits::of(8, {5, 6, 7, 8}).bits;  // |D1 cap D2| != d
    CHECK_THROWS_WITH(build(badw), Catch::Matchers::ContainsSubstring("D1 cap D2"));

    NamedFamily bado = NamedFamily::frankl(9, 5);
    bado.anchors.y = 3;
    bado.anchors.D = SetBits::of(9, {3, 4, 5}).bits;  // y inside D
    CHECK_THROWS_AS(build(bado), parameter_error);

    CHECK_THROWS_AS(build(NamedFamily::katona(5, 4)), parameter_error);   // n < s+2
    CHECK_THROWS_AS(build(NamedFamily::j(6, 3, 2)), parameter_error);     // n <= 2k
    CHECK_THROWS_AS(build(NamedFamily::lex(5, 2, 11)), parameter_error);  // m > C(n,k)
    CHECK_THROWS_AS(build(NamedFamily::katona_intersecting(5, 1)), parameter_error);
}

TEST_CASE("W(n,4) builds under the extended definition and is flagged") {
    NamedFamily w4 = NamedFamily::w(8, 4);
    CHECK(build(w4).size() == closed_form_size(w4));
    CHECK(definition_note(w4).has_value());
    CHECK_FALSE(definition_note(NamedFamily::w(8, 6)).has_value());
}

TEST_CASE("katona intersecting family is the K dual") {
    // |F| >= a threshold families; complementation gives the s-union extremal family
    Family f = build(NamedFamily::katona_intersecting(6, 2));
    Family dual = complement_family(f);
    Family k = build(NamedFamily::katona(6, 4));
    CHECK(dual == k);  // even case lands on K(6,4) exactly
    Family f7 = build(NamedFamily::katona_intersecting(7, 3));
    CHECK(complement_family(f7).size() == build(NamedFamily::katona(7, 4)).size());
}
