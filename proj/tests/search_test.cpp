#include <catch2/catch_amalgamated.hpp>

#include "sunion/search.hpp"
#include "sunion/shiftlex.hpp"

using namespace sunion;

namespace {

// Independent oracle: all maximal cliques of an arbitrary compatibility
// relation over at most 63 vertices, via Bron-Kerbosch with pivoting.  This
// path knows nothing about hereditary families or layer completions.
struct CliqueOracle {
    std::vector<std::uint32_t> verts;
    std::vector<std::uint64_t> adj;
    std::vector<std::vector<std::uint32_t>> maximal;

    template <typename Compat>
    CliqueOracle(std::vector<std::uint32_t> vs, Compat compat) : verts(std::move(vs)) {
        REQUIRE(verts.size() <= 63);
        adj.assign(verts.size(), 0);
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = 0; j < verts.size(); ++j)
                if (i != j && compat(verts[i], verts[j])) adj[i] |= std::uint64_t{1} << j;
        bk(0, (std::uint64_t{1} << verts.size()) - 1, 0);
    }

    void bk(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (!p && !x) {
            std::vector<std::uint32_t> clique;
            for (std::uint64_t b = r; b; b &= b - 1)
                clique.push_back(verts[static_cast<std::size_t>(std::countr_zero(b))]);
            maximal.push_back(std::move(clique));
            return;
        }
        std::uint64_t px = p | x;
        std::size_t pivot = static_cast<std::size_t>(std::countr_zero(px));
        std::size_t bestdeg = 0;
        for (std::uint64_t b = px; b; b &= b - 1) {
            std::size_t v = static_cast<std::size_t>(std::countr_zero(b));
            std::size_t deg = static_cast<std::size_t>(std::popcount(p & adj[v]));
            if (deg >= bestdeg) {
                bestdeg = deg;
                pivot = v;
            }
        }
        std::uint64_t cand = p & ~adj[pivot];
        for (std::uint64_t b = cand; b; b &= b - 1) {
            std::size_t v = static_cast<std::size_t>(std::countr_zero(b));
            std::uint64_t vb = std::uint64_t{1} << v;
            bk(r | vb, p & adj[v], x & adj[v]);
            p &= ~vb;
            x |= vb;
        }
    }
};

struct OracleOutcome {
    std::uint64_t maximum = 0;
    std::vector<Family> classes;  // canonical representatives of maximum families
    bool any = false;
};

OracleOutcome oracle_max(int n, const CliqueOracle& bk, const std::vector<NamedFamily>& excl) {
    std::vector<Family> exfams;
    for (const auto& e : excl) exfams.push_back(build(e));
    OracleOutcome out;
    for (const auto& clique : bk.maximal) {
        Family f(n, clique);
        bool bad = false;
        for (const Family& e : exfams)
            if (is_subfamily_up_to_iso(f, e)) {
                bad = true;
                break;
            }
        if (bad) continue;
        if (f.size() > out.maximum) {
            out.maximum = f.size();
            out.classes.clear();
        }
        if (f.size() == out.maximum) {
            out.any = true;
            Family c = canonicalize(f).family;
            if (std::find(out.classes.begin(), out.classes.end(), c) == out.classes.end())
                out.classes.push_back(c);
        }
    }
    return out;
}

std::vector<std::uint32_t> sets_up_to_size(int n, int s) {
    std::vector<std::uint32_t> out;
    for (int i = 0; i <= s; ++i)
        for (std::uint32_t m : all_ksets(n, i)) out.push_back(m);
    return out;
}

void check_against_oracle(int n, int s, const std::vector<NamedFamily>& excl) {
    CliqueOracle bk(sets_up_to_size(n, s), [&](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a | b) <= s;
    });
    OracleOutcome want = oracle_max(n, bk, excl);
    SearchResult got = max_s_union(SearchProblem::s_union(n, s, excl));
    REQUIRE(got.feasible == want.any);
    if (!want.any) return;
    CHECK(got.maximum == want.maximum);
    REQUIRE(got.witnesses.size() == want.classes.size());
    for (const Family& w : got.witnesses)
        CHECK(std::find(want.classes.begin(), want.classes.end(), w) != want.classes.end());
}

}  // namespace

TEST_CASE("s-union search matches the clique oracle on tiny instances") {
    check_against_oracle(4, 2, {});
    check_against_oracle(5, 2, {});
    check_against_oracle(5, 3, {});
    check_against_oracle(6, 3, {});
    check_against_oracle(5, 2, {NamedFamily::katona(5, 2)});
    check_against_oracle(5, 3, {NamedFamily::katona(5, 3)});
    check_against_oracle(6, 3, {NamedFamily::katona(6, 3), NamedFamily::frankl(6, 3)});
    check_against_oracle(6, 4, {});
}

TEST_CASE("katona tier") {
    SearchResult r = max_s_union(SearchProblem::s_union(6, 4));
    CHECK(r.maximum == 22);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(is_isomorphic(r.witnesses[0], build(NamedFamily::katona(6, 4))));
}

TEST_CASE("frankl tier at (7,4)") {
    SearchResult r = max_s_union(SearchProblem::s_union(7, 4, {NamedFamily::katona(7, 4)}));
    CHECK(r.maximum == 24);
    REQUIRE(r.witnesses.size() == 2);
    Family h = canonicalize(build(NamedFamily::frankl(7, 4))).family;
    Family hs = canonicalize(build(NamedFamily::hstar4(7))).family;
    CHECK(std::find(r.witnesses.begin(), r.witnesses.end(), h) != r.witnesses.end());
    CHECK(std::find(r.witnesses.begin(), r.witnesses.end(), hs) != r.witnesses.end());
}

TEST_CASE("third tier at (7,4)") {
    SearchResult r = max_s_union(SearchProblem::s_union(
        7, 4, {NamedFamily::katona(7, 4), NamedFamily::frankl(7, 4), NamedFamily::hstar4(7)}));
    CHECK(r.maximum == 22);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0] == canonicalize(build(NamedFamily::w(7, 4))).family);
}

TEST_CASE("odd tiers at (7,5)") {
    SearchResult r0 = max_s_union(SearchProblem::s_union(7, 5));
    CHECK(r0.maximum == 44);
    REQUIRE(r0.witnesses.size() == 1);
    CHECK(is_isomorphic(r0.witnesses[0], build(NamedFamily::katona(7, 5))));

    SearchResult r1 = max_s_union(SearchProblem::s_union(7, 5, {NamedFamily::katona(7, 5)}));
    CHECK(r1.maximum == 42);
    REQUIRE(r1.witnesses.size() == 2);
    CHECK(std::find(r1.witnesses.begin(), r1.witnesses.end(),
                    canonicalize(build(NamedFamily::frankl(7, 5))).family) != r1.witnesses.end());
    CHECK(std::find(r1.witnesses.begin(), r1.witnesses.end(),
                    canonicalize(build(NamedFamily::t5(7))).family) != r1.witnesses.end());

    SearchResult r2 = max_s_union(SearchProblem::s_union(
        7, 5, {NamedFamily::katona(7, 5), NamedFamily::frankl(7, 5), NamedFamily::t5(7)}));
    CHECK(r2.maximum == 41);
    REQUIRE(r2.witnesses.size() == 1);
    CHECK(r2.witnesses[0] == canonicalize(build(NamedFamily::w(7, 5))).family);
}

TEST_CASE("small s leaves no third tier") {
    // every 2-union family embeds in K(n,2) or H(n,2)
    SearchResult r = max_s_union(
        SearchProblem::s_union(6, 2, {NamedFamily::katona(6, 2), NamedFamily::frankl(6, 2)}));
    CHECK_FALSE(r.feasible);

    // at s=3 the survivors are the power sets of a 3-set
    SearchResult r3 = max_s_union(
        SearchProblem::s_union(6, 3, {NamedFamily::katona(6, 3), NamedFamily::frankl(6, 3)}));
    CHECK(r3.feasible);
    CHECK(r3.maximum == 8);
    CHECK(r3.witnesses.size() == 1);
}

TEST_CASE("pruning and symmetry off reproduce maxima and witnesses") {
    SearchOptions plain;
    plain.use_bounds = false;
    plain.use_symmetry = false;
    for (int s = 2; s <= 4; ++s) {
        SearchProblem p = SearchProblem::s_union(6, s);
        SearchResult a = max_s_union(p);
        SearchResult b = max_s_union(p, plain);
        CHECK(a.maximum == b.maximum);
        CHECK(a.witnesses == b.witnesses);
    }
    SearchProblem px = SearchProblem::s_union(6, 4, {NamedFamily::katona(6, 4)});
    SearchResult a = max_s_union(px);
    SearchResult b = max_s_union(px, plain);
    CHECK(a.maximum == b.maximum);
    CHECK(a.witnesses == b.witnesses);

    SearchProblem pu = SearchProblem::uniform(6, 3, 1);
    SearchResult ua = max_uniform_intersecting(pu);
    SearchResult ub = max_uniform_intersecting(pu, plain);
    CHECK(ua.maximum == ub.maximum);
    CHECK(ua.witnesses == ub.witnesses);
}

TEST_CASE("results are deterministic across runs and worker counts") {
    SearchProblem p = SearchProblem::s_union(7, 4, {NamedFamily::katona(7, 4)});
    SearchResult r1 = max_s_union(p);
    SearchResult r2 = max_s_union(p);
    SearchOptions two;
    two.workers = 2;
    SearchResult r3 = max_s_union(p, two);
    CHECK(r1.maximum == r2.maximum);
    CHECK(r1.witnesses == r2.witnesses);
    CHECK(r1.stats.nodes == r2.stats.nodes);
    CHECK(r1.maximum == r3.maximum);
    CHECK(r1.witnesses == r3.witnesses);
    CHECK(r1.stats.nodes == r3.stats.nodes);
    CHECK(r1.stats.bound_prunes == r3.stats.bound_prunes);
}

TEST_CASE("uniform tiers at (7,3)") {
    SearchResult t0 = max_uniform_intersecting(SearchProblem::uniform(7, 3, 1));
    CHECK(t0.maximum == 15);
    REQUIRE(t0.witnesses.size() == 1);
    CHECK(is_isomorphic(t0.witnesses[0], build(NamedFamily::ekr(7, 3))));

    SearchResult t1 =
        max_uniform_intersecting(SearchProblem::uniform(7, 3, 1, {NamedFamily::ekr(7, 3)}));
    CHECK(t1.maximum == 13);
    REQUIRE(t1.witnesses.size() == 2);

    SearchResult t2 = max_uniform_intersecting(SearchProblem::uniform(
        7, 3, 1, {NamedFamily::ekr(7, 3), NamedFamily::hm(7, 3), NamedFamily::g(7, 3, 2)}));
    CHECK(t2.maximum == 12);
    REQUIRE(t2.witnesses.size() == 1);
    CHECK(t2.witnesses[0] == canonicalize(build(NamedFamily::j(7, 3, 2))).family);
}

TEST_CASE("uniform oracle agreement at (6,3)") {
    CliqueOracle bk(all_ksets(6, 3), [&](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a & b) >= 1;
    });
    OracleOutcome want = oracle_max(6, bk, {});
    SearchResult got = max_uniform_intersecting(SearchProblem::uniform(6, 3, 1));
    CHECK(got.maximum == want.maximum);
    CHECK(got.witnesses.size() == want.classes.size());
}

TEST_CASE("plain t >= 2 maximum (exact EKR regime)") {
    SearchResult r = max_uniform_intersecting(SearchProblem::uniform(9, 3, 2));
    CHECK(r.maximum == 7);
    REQUIRE(r.witnesses.size() == 1);
    // the unique extremal family fixes a 2-element kernel
    Family expect(9, [] {
        std::vector<std::uint32_t> ms;
        for (std::uint32_t m : all_ksets(9, 3))
            if ((m & 0b11u) == 0b11u) ms.push_back(m);
        return ms;
    }());
    CHECK(is_isomorphic(r.witnesses[0], expect));
}

TEST_CASE("cross pair small instances") {
    SearchResult r5 = max_cross_pair(SearchProblem::cross_pair(5, 3, 2, CrossSide::thm31));
    CHECK(r5.maximum == 10);  // the n = 2d+1 boundary value

    SearchResult r6 = max_cross_pair(SearchProblem::cross_pair(6, 3, 2, CrossSide::thm31));
    CHECK(r6.maximum == 13);
    REQUIRE(r6.witness_pairs.size() == 1);
    CHECK(r6.witness_pairs[0].first.size() == 4);   // {1,2,i} for i in [3,6]
    CHECK(r6.witness_pairs[0].second.size() == 9);  // pairs meeting {1,2}

    SearchResult l34 = max_cross_pair(SearchProblem::cross_pair(5, 2, 2, CrossSide::lemma34));
    CHECK(l34.maximum == 8);
    CHECK(l34.witness_pairs.size() == 3);
    bool found_star_star = false;
    for (const auto& [a, b] : l34.witness_pairs)
        if (a.size() == 4 && b.size() == 4 && a == b) found_star_star = true;
    CHECK(found_star_star);  // the extra (2,2) family: A = B = a star

    // oracle: enumerate every subfamily of C(5,2) directly
    {
        auto asets = all_ksets(5, 2);
        auto bsets = all_ksets(5, 2);
        std::uint64_t best = 0;
        for (std::uint32_t pick = 1; pick < (1u << asets.size()); ++pick) {
            std::vector<std::uint32_t> a;
            for (std::size_t i = 0; i < asets.size(); ++i)
                if ((pick >> i) & 1) a.push_back(asets[i]);
            std::uint64_t bc = 0;
            for (std::uint32_t bm : bsets) {
                bool ok = true;
                for (std::uint32_t am : a) ok = ok && (am & bm);
                bc += ok;
            }
            if (bc >= 1) best = std::max(best, a.size() + bc);
        }
        CHECK(best == 8);
    }

    SearchResult l33 = max_cross_pair(SearchProblem::cross_pair(5, 3, 2, CrossSide::plain));
    CHECK(l33.maximum == 10);  // C(2d+1, d)
}

TEST_CASE("shifted-only mode agrees on the maximum") {
    SearchProblem p = SearchProblem::s_union(7, 4);
    SearchProblem ps = p;
    ps.mode = SearchMode::shifted_only;
    CHECK(max_s_union(ps).maximum == max_s_union(p).maximum);

    SearchProblem c = SearchProblem::cross_pair(6, 3, 2, CrossSide::thm31);
    SearchProblem cs = c;
    cs.mode = SearchMode::shifted_only;
    CHECK(max_cross_pair(cs).maximum == max_cross_pair(c).maximum);

    // shifted-only with exclusions is rejected: shifting can land inside an
    // excluded family (see the stored counterexample below)
    SearchProblem bad = SearchProblem::s_union(7, 5, {NamedFamily::katona(7, 5)});
    bad.mode = SearchMode::shifted_only;
    CHECK_THROWS_AS(max_s_union(bad), parameter_error);
}

TEST_CASE("stored counterexample: shifting can enter an excluded family") {
    // three 3-sets with empty common intersection; S_{2,4} turns them into a
    // star, which lies inside the Katona family
    Family f = Family::of(7, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}});
    Family k = build(NamedFamily::katona(7, 5));
    CHECK(is_s_union(f, 5).holds);
    CHECK_FALSE(is_subfamily_up_to_iso(f, k));
    Family g = shift(f, {2, 4});
    CHECK(is_subfamily_up_to_iso(g, k));
}

TEST_CASE("diameter search") {
    SearchResult r = max_diameter(SearchProblem::diameter(5, 3));
    CHECK(r.maximum == 10);
    SearchResult r2 = max_diameter(SearchProblem::diameter(6, 4));
    CHECK(r2.maximum == 22);
    for (const Family& w : r2.witnesses) {
        CHECK(w.size() == 22);
        CHECK(diameter(w) <= 4);
    }
}

TEST_CASE("budget exhaustion is reported, not fatal") {
    SearchProblem p = SearchProblem::s_union(8, 6, {NamedFamily::katona(8, 6)});
    SearchOptions o;
    o.budget_seconds = 1e-4;
    SearchResult r = max_s_union(p, o);
    CHECK(r.budget_exhausted);
}

TEST_CASE("search input validation") {
    CHECK_THROWS_AS(max_s_union(SearchProblem::s_union(6, 5)), parameter_error);
    CHECK_THROWS_AS(max_s_union(SearchProblem::s_union(7, 4, {NamedFamily::t5(7)})),
                    parameter_error);  // T5 is an s=5 exclusion
    CHECK_THROWS_AS(max_cross_pair(SearchProblem::cross_pair(6, 3, 3, CrossSide::thm31)),
                    parameter_error);
    CHECK_THROWS_AS(max_diameter(SearchProblem::diameter(9, 4)), scale_error);
    SearchProblem k13 = SearchProblem::uniform(13, 3, 1);
    CHECK_THROWS_AS(max_uniform_intersecting(k13), scale_error);
}
