#pragma once

#include <chrono>
#include <functional>
#include <atomic>
#include <thread>

#include "sunion/constructions.hpp"
#include "sunion/iso.hpp"
#include "sunion/lexorder.hpp"
#include "sunion/properties.hpp"
#include "sunion/shiftlex.hpp"

namespace sunion {

enum class SearchKind { s_union_max, uniform_intersecting_max, cross_pair_max, diameter_max };
enum class SearchMode { full, shifted_only };
enum class CrossSide {
    thm31,    // A 2-intersecting with |A| >= 2, (a,b) = (d+1,d)
    lemma34,  // both families nonempty, general (a,b)
    plain     // no side constraints
};

inline const char* to_string(SearchKind k) {
    switch (k) {
        case SearchKind::s_union_max: return "s_union";
        case SearchKind::uniform_intersecting_max: return "uniform";
        case SearchKind::cross_pair_max: return "cross_pair";
        case SearchKind::diameter_max: return "diameter";
    }
    return "?";
}

struct SearchProblem {
    SearchKind kind = SearchKind::s_union_max;
    int n = 0;
    int s = -1;  // union bound / diameter bound
    int k = -1;  // uniformity
    int t = 1;   // intersection threshold
    int a = -1;  // cross-pair uniformities
    int b = -1;
    CrossSide side = CrossSide::thm31;
    std::vector<NamedFamily> exclusions;  // candidate must not embed into any
    SearchMode mode = SearchMode::full;

    static SearchProblem s_union(int n, int s, std::vector<NamedFamily> excl = {}) {
        SearchProblem p;
        p.kind = SearchKind::s_union_max;
        p.n = n;
        p.s = s;
        p.exclusions = std::move(excl);
        return p;
    }
    static SearchProblem uniform(int n, int k, int t, std::vector<NamedFamily> excl = {}) {
        SearchProblem p;
        p.kind = SearchKind::uniform_intersecting_max;
        p.n = n;
        p.k = k;
        p.t = t;
        p.exclusions = std::move(excl);
        return p;
    }
    static SearchProblem cross_pair(int n, int a, int b, CrossSide side) {
        SearchProblem p;
        p.kind = SearchKind::cross_pair_max;
        p.n = n;
        p.a = a;
        p.b = b;
        p.side = side;
        return p;
    }
    static SearchProblem diameter(int n, int s) {
        SearchProblem p;
        p.kind = SearchKind::diameter_max;
        p.n = n;
        p.s = s;
        return p;
    }
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t bound_prunes = 0;
    std::uint64_t symmetry_prunes = 0;
    std::uint64_t star_prunes = 0;        // subtrees inside an excluded star
    std::uint64_t fingerprint_skips = 0;  // exclusions decided by cheap profiles
    std::uint64_t exclusion_rejects = 0;
    std::uint64_t middle_searches = 0;
    double wall_seconds = 0;  // informational; not part of the determinism contract

    void merge(const SearchStats& o) {
        nodes += o.nodes;
        bound_prunes += o.bound_prunes;
        symmetry_prunes += o.symmetry_prunes;
        star_prunes += o.star_prunes;
        fingerprint_skips += o.fingerprint_skips;
        exclusion_rejects += o.exclusion_rejects;
        middle_searches += o.middle_searches;
    }
};

struct SearchResult {
    bool feasible = false;  // false when the exclusions wipe out every candidate
    std::uint64_t maximum = 0;
    std::vector<Family> witnesses;  // canonical forms, sorted by encoding
    std::vector<std::pair<Family, Family>> witness_pairs;  // cross-pair searches
    SearchStats stats;
    bool budget_exhausted = false;
};

struct SearchOptions {
    bool use_bounds = true;    // incumbent/upper-bound pruning
    bool use_symmetry = true;  // canonical first-choice fixing
    double budget_seconds = 0;  // 0 = unlimited
    int workers = 1;            // first-level branches run on threads, independently
};

namespace detail {

struct BudgetAbort {};

class Deadline {
  public:
    static std::chrono::steady_clock::time_point end_from_now(double seconds) {
        return std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds > 0 ? seconds : 0));
    }
    Deadline(double seconds, std::chrono::steady_clock::time_point end)
        : enabled_(seconds > 0), end_(end) {}
    explicit Deadline(double seconds) : Deadline(seconds, end_from_now(seconds)) {}

    void tick() {
        if (!enabled_) return;
        if (++calls_ % 1024 == 0 && std::chrono::steady_clock::now() > end_) throw BudgetAbort{};
    }

  private:
    bool enabled_;
    std::chrono::steady_clock::time_point end_;
    std::uint64_t calls_ = 0;
};

// fixed-capacity bitset over candidate indices
class IndexBits {
  public:
    IndexBits() = default;
    explicit IndexBits(std::size_t bits) : w_((bits + 63) / 64, 0) {}
    static IndexBits all(std::size_t bits) {
        IndexBits b(bits);
        for (std::size_t i = 0; i < bits; ++i) b.set(i);
        return b;
    }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t v : w_) c += static_cast<std::size_t>(std::popcount(v));
        return c;
    }
    bool empty() const {
        for (std::uint64_t v : w_)
            if (v) return false;
        return true;
    }
    IndexBits& operator&=(const IndexBits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    friend IndexBits operator&(IndexBits a, const IndexBits& b) {
        a &= b;
        return a;
    }
    static constexpr std::size_t npos = ~std::size_t{0};
    std::size_t find_first() const { return find_from(0); }
    std::size_t find_next(std::size_t i) const { return find_from(i + 1); }
    std::size_t find_from(std::size_t i) const {
        std::size_t wi = i >> 6;
        if (wi >= w_.size()) return npos;
        std::uint64_t v = w_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (v) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(v));
            if (++wi >= w_.size()) return npos;
            v = w_[wi];
        }
    }
    void and_not(const IndexBits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi)
            for (std::uint64_t v = w_[wi]; v; v &= v - 1)
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(v)));
    }

  private:
    std::vector<std::uint64_t> w_;
};

// Cheap necessary conditions before the full embedding search: per-layer
// counts and the sorted per-layer degree sequences must fit inside.
struct ExclusionProfile {
    Family family;
    std::vector<std::size_t> layers;
    std::vector<std::vector<int>> sorted_degrees;  // per layer, descending

    explicit ExclusionProfile(Family f) : family(std::move(f)) {
        layers = family.layer_profile();
        auto deg = degree_table(family);
        sorted_degrees.assign(static_cast<std::size_t>(family.n()) + 1, {});
        for (int i = 0; i <= family.n(); ++i) {
            for (int e = 0; e < family.n(); ++e)
                sorted_degrees[static_cast<std::size_t>(i)].push_back(
                    deg[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)]);
            std::sort(sorted_degrees[static_cast<std::size_t>(i)].rbegin(),
                      sorted_degrees[static_cast<std::size_t>(i)].rend());
        }
    }

    bool could_contain(const Family& f) const {
        auto prof = f.layer_profile();
        for (std::size_t i = 0; i < prof.size(); ++i)
            if (prof[i] > layers[i]) return false;
        auto deg = degree_table(f);
        for (int i = 0; i <= f.n(); ++i) {
            std::vector<int> ds;
            for (int e = 0; e < f.n(); ++e)
                ds.push_back(deg[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)]);
            std::sort(ds.rbegin(), ds.rend());
            for (std::size_t p = 0; p < ds.size(); ++p)
                if (ds[p] > sorted_degrees[static_cast<std::size_t>(i)][p]) return false;
        }
        return true;
    }
};

class ExclusionSet {
  public:
    ExclusionSet(const std::vector<NamedFamily>& nfs, int n) {
        for (const NamedFamily& nf : nfs) {
            if (nf.n != n) throw parameter_error("exclusion family has a different ground set");
            profiles_.emplace_back(build(nf));
        }
    }
    bool empty() const { return profiles_.empty(); }

    // true iff f embeds into one of the exclusion families
    bool excluded(const Family& f, SearchStats& stats) const {
        for (const auto& p : profiles_) {
            if (!p.could_contain(f)) {
                ++stats.fingerprint_skips;
                continue;
            }
            if (is_subfamily_up_to_iso(f, p.family)) {
                ++stats.exclusion_rejects;
                return true;
            }
        }
        return false;
    }

    // could some exclusion family contain a family with this layer profile?
    bool any_profile_fits(const std::vector<std::size_t>& prof) const {
        for (const auto& p : profiles_) {
            bool fits = true;
            for (std::size_t i = 0; i < prof.size() && fits; ++i)
                fits = prof[i] <= p.layers[i];
            if (fits) return true;
        }
        return false;
    }

  private:
    std::vector<ExclusionProfile> profiles_;
};

// ---------------------------------------------------------------------------
// Maximal t-intersecting subfamily enumeration (Bron-Kerbosch style), used
// both standalone and as the middle-layer engine of the odd s-union search.
// ---------------------------------------------------------------------------

struct UniformSpec {
    int n = 0, k = 0, t = 1;
    std::vector<std::uint32_t> candidates;  // sorted in lexicographic order
    std::vector<std::uint32_t> forced;      // pre-chosen members
    std::uint64_t initial_best = 0;         // total member count to beat (ties kept)
    bool first_level_symmetry = false;
    bool use_bounds = true;
    bool shifted_only = false;
    // when set, any family whose members all share an element is infeasible
    // (a full star embeds into one of the exclusions), so such subtrees die
    bool star_excluded = false;
    // feasibility of a complete family (exclusions); empty = always feasible
    std::function<bool(const std::vector<std::uint32_t>&)> feasible;
};

struct UniformOut {
    bool any = false;
    std::uint64_t maximum = 0;
    std::vector<std::vector<std::uint32_t>> witnesses;  // member masks incl. forced
    bool aborted = false;
};

class UniformEngine {
  public:
    UniformEngine(const UniformSpec& spec, SearchStats& stats, Deadline& deadline)
        : spec_(spec), stats_(stats), deadline_(deadline) {
        for (std::uint32_t c : spec_.candidates) {
            bool ok = true;
            for (std::uint32_t f : spec_.forced)
                ok = ok && c != f && std::popcount(c & f) >= spec_.t;
            if (ok) cands_.push_back(c);
        }
        std::sort(cands_.begin(), cands_.end(), lex_less);
        // branch on the most constrained candidates first; the degree is
        // invariant on stabilizer orbits, so the canonical-prefix rule is
        // unaffected by this ordering
        {
            std::vector<int> deg(cands_.size(), 0);
            for (std::size_t i = 0; i < cands_.size(); ++i)
                for (std::size_t j = 0; j < cands_.size(); ++j)
                    if (i != j && std::popcount(cands_[i] & cands_[j]) >= spec_.t) ++deg[i];
            std::vector<std::size_t> byd(cands_.size());
            std::iota(byd.begin(), byd.end(), 0);
            std::stable_sort(byd.begin(), byd.end(),
                             [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
            std::vector<std::uint32_t> sorted;
            sorted.reserve(cands_.size());
            for (std::size_t i : byd) sorted.push_back(cands_[i]);
            cands_ = std::move(sorted);
        }
        compat_.assign(cands_.size(), IndexBits(cands_.size()));
        incompat_.assign(cands_.size(), IndexBits(cands_.size()));
        for (std::size_t i = 0; i < cands_.size(); ++i)
            for (std::size_t j = 0; j < cands_.size(); ++j) {
                if (i == j) continue;
                if (std::popcount(cands_[i] & cands_[j]) >= spec_.t)
                    compat_[i].set(j);
                else
                    incompat_[i].set(j);
            }
        chosen_ = spec_.forced;
        for (std::uint32_t f : spec_.forced) in_chosen_.insert(f);
        best_ = spec_.initial_best;
        if (spec_.first_level_symmetry) cells_.push_back(universe_mask(spec_.n));
    }

    UniformOut run() {
        IndexBits pool = IndexBits::all(cands_.size());
        IndexBits excl(cands_.size());
        std::uint32_t common = universe_mask(spec_.n);
        for (std::uint32_t f : spec_.forced) common &= f;
        try {
            expand(std::move(pool), std::move(excl), common);
        } catch (const BudgetAbort&) {
            out_.aborted = true;
        }
        return std::move(out_);
    }

  private:
    // greedy matching on the incompatibility graph: at most one endpoint of
    // each matched pair can enter the family
    std::size_t matching_bound(const IndexBits& pool) const {
        IndexBits un = pool;
        std::size_t matched = 0;
        for (std::size_t i = un.find_first(); i != IndexBits::npos; i = un.find_next(i)) {
            std::size_t j = (un & incompat_[i]).find_first();
            if (j != IndexBits::npos) {
                un.reset(i);
                un.reset(j);
                ++matched;
            }
        }
        return matched;
    }

    void record() {
        std::uint64_t v = chosen_.size();
        if (v < best_ || v < spec_.forced.size()) return;
        if (spec_.feasible && !spec_.feasible(chosen_)) return;
        if (v > best_ || !out_.any) {
            best_ = v;
            out_.witnesses.clear();
        }
        out_.any = true;
        out_.maximum = best_;
        out_.witnesses.push_back(chosen_);
    }

    bool shifted_allowed(std::uint32_t m) const {
        // every immediate dominance predecessor must already be present
        for (std::uint32_t b = m & ~1u; b; b &= b - 1) {
            int e = std::countr_zero(b);  // element e+1, has predecessor e
            std::uint32_t below = std::uint32_t{1} << (e - 1);
            if (m & below) continue;
            std::uint32_t pred = (m & ~(std::uint32_t{1} << e)) | below;
            if (!in_chosen_.count(pred)) return false;
        }
        return true;
    }

    // Canonical-prefix symmetry: the next member must be lex-minimal in its
    // orbit under the stabilizer of the chosen members, which is the product
    // of symmetric groups on the cells of their Venn partition; minimality
    // means hitting a low prefix of every cell.
    bool cell_prefix_minimal(std::uint32_t m) const {
        for (std::uint32_t c : cells_) {
            std::uint32_t q = m & c;
            std::uint32_t rest = c & ~m;
            if (!q || !rest) continue;
            // prefix of the cell: every hit bit below every missed bit
            if (31 - std::countl_zero(q) > std::countr_zero(rest)) return false;
        }
        return true;
    }

    void refine_cells(std::uint32_t m) {
        cell_stack_.push_back(cells_);
        std::vector<std::uint32_t> next;
        for (std::uint32_t c : cells_) {
            std::uint32_t in = c & m, out = c & ~m;
            if (in) next.push_back(in);
            if (out) next.push_back(out);
        }
        cells_ = std::move(next);
    }

    void unrefine_cells() {
        cells_ = std::move(cell_stack_.back());
        cell_stack_.pop_back();
    }

    void expand(IndexBits pool, IndexBits excl, std::uint32_t common) {
        ++stats_.nodes;
        deadline_.tick();
        if (pool.empty()) {
            if (excl.empty()) record();
            return;
        }
        if (spec_.star_excluded) {
            // every completion stays inside a single star, hence excluded
            std::uint32_t shared = common;
            for (std::size_t i = pool.find_first(); shared && i != IndexBits::npos;
                 i = pool.find_next(i))
                shared &= cands_[i];
            if (shared) {
                ++stats_.star_prunes;
                return;
            }
        }
        if (spec_.use_bounds) {
            std::size_t raw = chosen_.size() + pool.count();
            if (raw < best_ || (best_ > 0 && raw - matching_bound(pool) < best_)) {
                ++stats_.bound_prunes;
                return;
            }
        }
        for (std::size_t idx = pool.find_first(); idx != IndexBits::npos;
             idx = pool.find_next(idx)) {
            pool.reset(idx);
            if (spec_.first_level_symmetry && !cell_prefix_minimal(cands_[idx])) {
                ++stats_.symmetry_prunes;
                excl.set(idx);
                continue;
            }
            if (spec_.shifted_only && !shifted_allowed(cands_[idx])) {
                // a left-shifted family cannot contain it now or later
                continue;
            }
            chosen_.push_back(cands_[idx]);
            if (spec_.shifted_only) in_chosen_.insert(cands_[idx]);
            if (spec_.first_level_symmetry) refine_cells(cands_[idx]);
            expand(pool & compat_[idx], excl & compat_[idx], common & cands_[idx]);
            if (spec_.first_level_symmetry) unrefine_cells();
            chosen_.pop_back();
            if (spec_.shifted_only) in_chosen_.erase(cands_[idx]);
            excl.set(idx);
        }
    }

    const UniformSpec& spec_;
    SearchStats& stats_;
    Deadline& deadline_;
    std::vector<std::uint32_t> cands_;
    std::vector<IndexBits> compat_;
    std::vector<IndexBits> incompat_;
    std::vector<std::uint32_t> chosen_;
    std::unordered_set<std::uint32_t> in_chosen_;
    std::vector<std::uint32_t> cells_;
    std::vector<std::vector<std::uint32_t>> cell_stack_;
    std::uint64_t best_ = 0;
    UniformOut out_;
};

inline void sort_and_dedup_witnesses(std::vector<Family>& ws) {
    std::vector<std::pair<std::vector<std::uint64_t>, Family>> keyed;
    for (Family& f : ws) {
        Family canon = canonicalize(f).family;
        std::vector<std::uint64_t> key;
        for (std::uint32_t m : canon.masks()) key.push_back(canonical_key(m));
        keyed.emplace_back(std::move(key), std::move(canon));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    ws.clear();
    for (auto& [k, f] : keyed) ws.push_back(std::move(f));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// uniform t-intersecting maximum with exclusion tiers
// ---------------------------------------------------------------------------

inline SearchResult max_uniform_intersecting(const SearchProblem& p, const SearchOptions& opts = {}) {
    if (p.k < 1 || p.k > p.n) throw parameter_error("uniform search needs 1 <= k <= n");
    if (p.t < 1) throw parameter_error("uniform search needs t >= 1");
    if (p.n > kMaxIsoGroundSet) throw scale_error("uniform search limited to n <= 12");
    if (p.mode == SearchMode::shifted_only && !p.exclusions.empty())
        throw parameter_error("shifted-only mode is incompatible with exclusions");

    auto start = std::chrono::steady_clock::now();
    SearchResult res;
    detail::ExclusionSet excl(p.exclusions, p.n);
    detail::Deadline deadline(opts.budget_seconds);

    detail::UniformSpec spec;
    spec.n = p.n;
    spec.k = p.k;
    spec.t = p.t;
    spec.candidates = all_ksets(p.n, p.k);
    spec.first_level_symmetry = opts.use_symmetry;
    spec.use_bounds = opts.use_bounds;
    spec.shifted_only = p.mode == SearchMode::shifted_only;
    if (!excl.empty()) {
        spec.feasible = [&](const std::vector<std::uint32_t>& members) {
            return !excl.excluded(Family(p.n, members), res.stats);
        };
        if (opts.use_bounds) {
            SearchStats scratch;
            std::vector<std::uint32_t> star;
            for (std::uint32_t m : all_ksets(p.n, p.k))
                if (m & 1u) star.push_back(m);
            spec.star_excluded = excl.excluded(Family(p.n, star), scratch);
        }
    }

    detail::UniformEngine engine(spec, res.stats, deadline);
    detail::UniformOut out = engine.run();
    res.budget_exhausted = out.aborted;
    if (out.any) {
        res.feasible = true;
        res.maximum = out.maximum;
        for (auto& w : out.witnesses) res.witnesses.emplace_back(p.n, std::move(w));
        detail::sort_and_dedup_witnesses(res.witnesses);
    }
    res.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

// ---------------------------------------------------------------------------
// s-union maximum with exclusion tiers
//
// Candidates are hereditary families encoded by the antichain of their
// maximal sets above s/2; everything below is completed greedily, which is
// exact because subsets never break the union constraint or re-enable an
// exclusion.  For odd s the middle layer is an intersecting-subfamily
// subproblem handled by the uniform engine.
// ---------------------------------------------------------------------------

namespace detail {

class SUnionEngine {
  public:
    SUnionEngine(const SearchProblem& p, const SearchOptions& opts, const ExclusionSet& excl,
                 SearchStats& stats, Deadline& deadline)
        : n_(p.n), s_(p.s), d_(p.s / 2), even_(p.s % 2 == 0), himin_(even_ ? d_ + 1 : d_ + 2),
          opts_(opts), excl_(excl), stats_(stats), deadline_(deadline),
          shifted_only_(p.mode == SearchMode::shifted_only) {
        layers_.resize(static_cast<std::size_t>(s_) + 1);
        alive_.resize(static_cast<std::size_t>(s_) + 1);
        for (int i = 0; i <= s_ && i <= n_; ++i) {
            layers_[static_cast<std::size_t>(i)] = all_ksets(n_, i);
            alive_[static_cast<std::size_t>(i)] =
                IndexBits::all(layers_[static_cast<std::size_t>(i)].size());
        }
        for (int j = s_; j >= himin_; --j) {
            auto sets = all_ksets(n_, j);
            std::sort(sets.begin(), sets.end(), lex_less);
            for (std::uint32_t m : sets) roots_.push_back(m);
        }
        kills_.assign(roots_.size(), {});
        for (std::size_t r = 0; r < roots_.size(); ++r) {
            kills_[r].resize(static_cast<std::size_t>(s_) + 1);
            for (int i = 0; i <= s_ && i <= n_; ++i) {
                const auto& layer = layers_[static_cast<std::size_t>(i)];
                IndexBits kb(layer.size());
                for (std::size_t x = 0; x < layer.size(); ++x)
                    if (std::popcount(layer[x] | roots_[r]) > s_) kb.set(x);
                kills_[r][static_cast<std::size_t>(i)] = std::move(kb);
            }
        }
    }

    // restrict the first chosen root to this index set (sharding); empty = all
    // returns false when the budget ran out (partial results are kept)
    bool run(std::uint64_t& best, std::vector<Family>& witnesses,
             const std::vector<std::size_t>& level1, bool include_empty_leaf) {
        best_ = best;
        witnesses_.clear();
        bool complete = true;
        try {
            if (include_empty_leaf) leaf();
            for (std::size_t r : level1) {
                if (!root_allowed(r)) continue;
                push_root(r);
                dfs(r + 1);
                pop_root(r);
            }
        } catch (const BudgetAbort&) {
            complete = false;
        }
        best = best_;
        witnesses = std::move(witnesses_);
        return complete;
    }

    std::vector<std::size_t> symmetric_level1() const {
        // wlog the largest antichain member is a prefix set
        std::vector<std::size_t> out;
        for (std::size_t r = 0; r < roots_.size(); ++r)
            if (roots_[r] == universe_mask(std::popcount(roots_[r]))) out.push_back(r);
        return out;
    }
    std::size_t root_count() const { return roots_.size(); }

  private:
    bool root_allowed(std::size_t r) const {
        std::uint32_t m = roots_[r];
        for (std::size_t q : chosen_) {
            if ((roots_[q] & m) == m) return false;  // already implied
            if (std::popcount(roots_[q] | m) > s_) return false;
        }
        return true;
    }

    void push_root(std::size_t r) {
        chosen_.push_back(r);
        alive_stack_.push_back(alive_);
        for (int i = 0; i <= s_ && i <= n_; ++i)
            alive_[static_cast<std::size_t>(i)].and_not(kills_[r][static_cast<std::size_t>(i)]);
        std::vector<std::uint32_t> added;
        for (int u = himin_; u <= std::popcount(roots_[r]); ++u)
            for (std::uint32_t sub : subsets_of(roots_[r], u))
                if (high_members_.insert(sub).second) added.push_back(sub);
        added_stack_.push_back(std::move(added));
    }

    void pop_root(std::size_t r) {
        (void)r;
        for (std::uint32_t m : added_stack_.back()) high_members_.erase(m);
        added_stack_.pop_back();
        alive_ = std::move(alive_stack_.back());
        alive_stack_.pop_back();
        chosen_.pop_back();
    }

    std::uint64_t extension_bound() const {
        std::uint64_t ub = 0;
        for (int i = 0; i <= d_; ++i) {
            std::uint64_t lo = alive_[static_cast<std::size_t>(i)].count();
            int hi = s_ + 1 - i;
            std::uint64_t hic =
                hi <= s_ && hi <= n_ ? alive_[static_cast<std::size_t>(hi)].count() : 0;
            ub += std::min(binom(n_, i), lo + hic);
        }
        if (!even_) {
            std::uint64_t mid = alive_[static_cast<std::size_t>(d_ + 1)].count();
            ub += std::min(mid, binom(n_ - 1, d_));  // middle layer is intersecting
        }
        return ub;
    }

    void record(std::vector<std::uint32_t> members) {
        Family f(n_, std::move(members));
        if (shifted_only_ && !is_left_shifted(f).holds) return;
        std::uint64_t v = f.size();
        if (v < best_) return;
        if (excl_.excluded(f, stats_)) return;
        if (v > best_ || witnesses_.empty()) {
            if (v > best_) witnesses_.clear();
            best_ = v;
        }
        witnesses_.push_back(std::move(f));
    }

    void leaf() {
        if (even_) {
            std::uint64_t v = high_members_.size();
            for (int i = 0; i <= d_; ++i) v += alive_[static_cast<std::size_t>(i)].count();
            if (v < best_) return;
            std::vector<std::uint32_t> members(high_members_.begin(), high_members_.end());
            for (int i = 0; i <= d_; ++i) {
                const auto& layer = layers_[static_cast<std::size_t>(i)];
                alive_[static_cast<std::size_t>(i)].for_each(
                    [&](std::size_t x) { members.push_back(layer[x]); });
            }
            record(std::move(members));
            return;
        }
        // odd s: the (d+1)-layer is an intersecting-subfamily subproblem
        std::uint64_t base = 0;
        for (int i = 0; i <= d_; ++i) base += alive_[static_cast<std::size_t>(i)].count();
        std::vector<std::uint32_t> high(high_members_.begin(), high_members_.end());
        base += high.size();
        std::uint64_t mid_cap = std::min(alive_[static_cast<std::size_t>(d_ + 1)].count(),
                                         static_cast<std::size_t>(binom(n_ - 1, d_)));
        if (opts_.use_bounds && base + mid_cap < best_) {
            ++stats_.bound_prunes;
            return;
        }
        std::vector<std::uint32_t> low;
        for (int i = 0; i <= d_; ++i) {
            const auto& layer = layers_[static_cast<std::size_t>(i)];
            alive_[static_cast<std::size_t>(i)].for_each(
                [&](std::size_t x) { low.push_back(layer[x]); });
        }
        UniformSpec spec;
        spec.n = n_;
        spec.k = d_ + 1;
        spec.t = 1;
        const auto& midlayer = layers_[static_cast<std::size_t>(d_ + 1)];
        alive_[static_cast<std::size_t>(d_ + 1)].for_each(
            [&](std::size_t x) { spec.candidates.push_back(midlayer[x]); });
        for (std::uint32_t r : chosen_roots_masks())
            for (std::uint32_t sub : subsets_of(r, d_ + 1))
                if (std::find(spec.forced.begin(), spec.forced.end(), sub) == spec.forced.end())
                    spec.forced.push_back(sub);
        spec.initial_best = best_ > base ? best_ - base : 0;
        spec.use_bounds = opts_.use_bounds;
        // exclusions can bite only if the fixed part fits one of them
        bool excl_active = false;
        if (!excl_.empty()) {
            std::vector<std::size_t> prof(static_cast<std::size_t>(n_) + 1, 0);
            for (std::uint32_t m : high) ++prof[static_cast<std::size_t>(std::popcount(m))];
            excl_active = excl_.any_profile_fits(prof);
        }
        std::vector<std::uint32_t> full = low;
        full.insert(full.end(), high.begin(), high.end());
        if (excl_active) {
            spec.feasible = [&](const std::vector<std::uint32_t>& mid) {
                std::vector<std::uint32_t> members = full;
                members.insert(members.end(), mid.begin(), mid.end());
                return !excl_.excluded(Family(n_, members), stats_);
            };
            if (opts_.use_bounds && chosen_.empty()) {
                // at the root leaf the family below a star-shaped middle layer
                // is the Katona family; prune those subtrees when it is excluded
                std::vector<std::uint32_t> kat = low;
                for (std::uint32_t m : spec.candidates)
                    if (m & 1u) kat.push_back(m);
                SearchStats scratch;
                spec.star_excluded = excl_.excluded(Family(n_, kat), scratch);
            }
        }
        ++stats_.middle_searches;
        UniformEngine mid(spec, stats_, deadline_);
        UniformOut out = mid.run();
        for (auto& midw : out.witnesses) {
            std::vector<std::uint32_t> members = full;
            members.insert(members.end(), midw.begin(), midw.end());
            record(std::move(members));
        }
        if (out.aborted) throw BudgetAbort{};
    }

    std::vector<std::uint32_t> chosen_roots_masks() const {
        std::vector<std::uint32_t> out;
        for (std::size_t r : chosen_) out.push_back(roots_[r]);
        return out;
    }

    void dfs(std::size_t start) {
        ++stats_.nodes;
        deadline_.tick();
        leaf();
        if (opts_.use_bounds && extension_bound() < best_) {
            ++stats_.bound_prunes;
            return;
        }
        for (std::size_t r = start; r < roots_.size(); ++r) {
            if (!root_allowed(r)) continue;
            push_root(r);
            dfs(r + 1);
            pop_root(r);
        }
    }

    int n_, s_, d_;
    bool even_;
    int himin_;
    const SearchOptions& opts_;
    const ExclusionSet& excl_;
    SearchStats& stats_;
    Deadline& deadline_;
    bool shifted_only_;
    std::vector<std::vector<std::uint32_t>> layers_;
    std::vector<IndexBits> alive_;
    std::vector<std::uint32_t> roots_;
    std::vector<std::vector<IndexBits>> kills_;
    std::vector<std::size_t> chosen_;
    std::vector<std::vector<IndexBits>> alive_stack_;
    std::vector<std::vector<std::uint32_t>> added_stack_;
    std::unordered_set<std::uint32_t> high_members_;
    std::uint64_t best_ = 0;
    std::vector<Family> witnesses_;
};

}  // namespace detail

inline SearchResult max_s_union(const SearchProblem& p, const SearchOptions& opts = {}) {
    if (p.s < 2 || p.s > p.n - 2) throw parameter_error("s-union search needs 2 <= s <= n - 2");
    if (p.n > kMaxIsoGroundSet) throw scale_error("s-union search limited to n <= 12");
    if (p.mode == SearchMode::shifted_only && !p.exclusions.empty())
        throw parameter_error("shifted-only mode is incompatible with exclusions");
    for (const NamedFamily& e : p.exclusions) {
        if (e.n != p.n) throw parameter_error("exclusion family has a different ground set");
        bool kind_ok = e.kind == FamilyKind::K || e.kind == FamilyKind::H ||
                       (e.kind == FamilyKind::Hstar4 && p.s == 4) ||
                       (e.kind == FamilyKind::T5 && p.s == 5);
        if (!kind_ok || ((e.kind == FamilyKind::K || e.kind == FamilyKind::H) && e.s != p.s))
            throw parameter_error("s-union exclusions must be K/H (same s), Hstar4 at s=4 or T5 at s=5");
    }

    auto start = std::chrono::steady_clock::now();
    auto deadline_end = detail::Deadline::end_from_now(opts.budget_seconds);
    SearchResult res;
    detail::ExclusionSet excl(p.exclusions, p.n);

    std::vector<std::size_t> level1;
    std::size_t total_roots;
    {
        SearchStats probe_stats;
        detail::Deadline probe_deadline(0);
        detail::SUnionEngine probe(p, opts, excl, probe_stats, probe_deadline);
        total_roots = probe.root_count();
        if (opts.use_symmetry) {
            level1 = probe.symmetric_level1();
        } else {
            level1.resize(total_roots);
            std::iota(level1.begin(), level1.end(), 0);
        }
    }

    // Each first-level branch is an independent run so that results and stats
    // never depend on the worker count; workers only parallelize the list.
    const std::size_t branches = level1.size() + 1;  // plus the empty-antichain leaf
    std::vector<std::uint64_t> bests(branches, 0);
    std::vector<std::vector<Family>> wits(branches);
    std::vector<SearchStats> stats(branches);
    std::vector<char> aborted(branches, 0);

    auto branch_work = [&](std::size_t bi) {
        detail::Deadline dl(opts.budget_seconds, deadline_end);
        detail::SUnionEngine engine(p, opts, excl, stats[bi], dl);
        std::vector<std::size_t> mine;
        if (bi > 0) mine.push_back(level1[bi - 1]);
        if (!engine.run(bests[bi], wits[bi], mine, /*include_empty_leaf=*/bi == 0))
            aborted[bi] = 1;
    };

    const int workers = std::max(1, opts.workers);
    if (workers == 1) {
        for (std::size_t bi = 0; bi < branches; ++bi) branch_work(bi);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&] {
                for (std::size_t bi = next.fetch_add(1); bi < branches; bi = next.fetch_add(1))
                    branch_work(bi);
            });
        for (auto& th : threads) th.join();
    }

    if (opts.use_symmetry && total_roots >= level1.size())
        res.stats.symmetry_prunes += total_roots - level1.size();
    std::uint64_t best = 0;
    bool any = false;
    for (std::size_t bi = 0; bi < branches; ++bi) {
        res.stats.merge(stats[bi]);
        if (aborted[bi]) res.budget_exhausted = true;
        if (!wits[bi].empty()) {
            any = true;
            best = std::max(best, bests[bi]);
        }
    }
    if (any) {
        res.feasible = true;
        res.maximum = best;
        for (auto& shard : wits)
            for (Family& f : shard)
                if (f.size() == best) res.witnesses.push_back(std::move(f));
        detail::sort_and_dedup_witnesses(res.witnesses);
    }
    res.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

// ---------------------------------------------------------------------------
// cross-intersecting pair maximum: given the A side, the best B is forced
// (all b-sets meeting every member of A), so only A is searched.
// ---------------------------------------------------------------------------

namespace detail {

class CrossEngine {
  public:
    CrossEngine(const SearchProblem& p, const SearchOptions& opts, SearchStats& stats,
                Deadline& deadline)
        : p_(p), opts_(opts), stats_(stats), deadline_(deadline) {
        acands_ = all_ksets(p.n, p.a);
        std::sort(acands_.begin(), acands_.end(), lex_less);
        bsets_ = all_ksets(p.n, p.b);
        bkill_.assign(acands_.size(), IndexBits(bsets_.size()));
        for (std::size_t i = 0; i < acands_.size(); ++i)
            for (std::size_t j = 0; j < bsets_.size(); ++j)
                if ((acands_[i] & bsets_[j]) == 0) bkill_[i].set(j);
        if (p.side == CrossSide::thm31) {
            compat_.assign(acands_.size(), IndexBits(acands_.size()));
            for (std::size_t i = 0; i < acands_.size(); ++i)
                for (std::size_t j = 0; j < acands_.size(); ++j)
                    if (i != j && std::popcount(acands_[i] & acands_[j]) >= 2) compat_[i].set(j);
        }
    }

    bool run(std::uint64_t& best, std::vector<std::pair<Family, Family>>& witnesses) {
        best_ = best;
        aliveb_ = IndexBits::all(bsets_.size());
        IndexBits pool = IndexBits::all(acands_.size());
        bool complete = true;
        try {
            if (opts_.use_symmetry && p_.side == CrossSide::thm31 && !acands_.empty()) {
                // wlog the lex-least member of A is the prefix set
                stats_.symmetry_prunes += acands_.size() - 1;
                include(0, pool & compat_[0]);
            } else {
                dfs(std::move(pool));
            }
        } catch (const BudgetAbort&) {
            complete = false;
        }
        best = best_;
        witnesses = std::move(witnesses_);
        return complete;
    }

  private:
    void record() {
        std::uint64_t asz = chosen_.size();
        std::uint64_t bsz = aliveb_.count();
        if (p_.side == CrossSide::thm31 && asz < 2) return;
        if (p_.side == CrossSide::lemma34 && (asz < 1 || bsz < 1)) return;
        std::uint64_t v = asz + bsz;
        if (v < best_) return;
        if (v > best_ || witnesses_.empty()) {
            if (v > best_) witnesses_.clear();
            best_ = v;
        }
        std::vector<std::uint32_t> am(chosen_.begin(), chosen_.end());
        std::vector<std::uint32_t> bm;
        aliveb_.for_each([&](std::size_t j) { bm.push_back(bsets_[j]); });
        witnesses_.emplace_back(Family(p_.n, std::move(am)), Family(p_.n, std::move(bm)));
    }

    bool shifted_allowed(std::uint32_t m) const {
        for (std::uint32_t b = m & ~1u; b; b &= b - 1) {
            int e = std::countr_zero(b);
            std::uint32_t below = std::uint32_t{1} << (e - 1);
            if (m & below) continue;
            std::uint32_t pred = (m & ~(std::uint32_t{1} << e)) | below;
            if (std::find(chosen_.begin(), chosen_.end(), pred) == chosen_.end()) return false;
        }
        return true;
    }

    void include(std::size_t idx, IndexBits pool) {
        chosen_.push_back(acands_[idx]);
        IndexBits savedb = aliveb_;
        aliveb_.and_not(bkill_[idx]);
        dfs(std::move(pool));
        aliveb_ = std::move(savedb);
        chosen_.pop_back();
    }

    void dfs(IndexBits pool) {
        ++stats_.nodes;
        deadline_.tick();
        record();
        if (opts_.use_bounds && chosen_.size() + pool.count() + aliveb_.count() < best_) {
            ++stats_.bound_prunes;
            return;
        }
        for (std::size_t idx = pool.find_first(); idx != detail::IndexBits::npos;
             idx = pool.find_next(idx)) {
            pool.reset(idx);
            if (p_.mode == SearchMode::shifted_only && !shifted_allowed(acands_[idx])) continue;
            IndexBits p2 = pool;
            if (p_.side == CrossSide::thm31) p2 &= compat_[idx];
            include(idx, std::move(p2));
        }
    }

    const SearchProblem& p_;
    const SearchOptions& opts_;
    SearchStats& stats_;
    Deadline& deadline_;
    std::vector<std::uint32_t> acands_;
    std::vector<std::uint32_t> bsets_;
    std::vector<IndexBits> bkill_;
    std::vector<IndexBits> compat_;
    std::vector<std::uint32_t> chosen_;
    IndexBits aliveb_;
    std::uint64_t best_ = 0;
    std::vector<std::pair<Family, Family>> witnesses_;
};

}  // namespace detail

inline SearchResult max_cross_pair(const SearchProblem& p, const SearchOptions& opts = {}) {
    if (p.a < 1 || p.b < 1 || p.a > p.n || p.b > p.n)
        throw parameter_error("cross-pair search needs 1 <= a,b <= n");
    if (p.side == CrossSide::thm31 && (p.a != p.b + 1 || p.n < p.a + p.b))
        throw parameter_error("the 2-intersecting side constraint needs (a,b) = (d+1,d), n >= 2d+1");
    if (p.n > 9) throw scale_error("cross-pair search limited to n <= 9");
    if (p.side != CrossSide::thm31 && binom(p.n, p.a) > 24)
        throw scale_error("unconstrained cross-pair search limited to C(n,a) <= 24");
    if (!p.exclusions.empty()) throw parameter_error("cross-pair search takes no exclusions");

    auto start = std::chrono::steady_clock::now();
    SearchResult res;
    detail::Deadline deadline(opts.budget_seconds);
    detail::CrossEngine engine(p, opts, res.stats, deadline);
    std::uint64_t best = 0;
    std::vector<std::pair<Family, Family>> wits;
    if (!engine.run(best, wits)) res.budget_exhausted = true;
    if (!wits.empty()) {
        res.feasible = true;
        res.maximum = best;
        // dedup pairs under simultaneous relabeling, keep deterministic order
        std::vector<std::pair<std::vector<std::uint64_t>, std::pair<Family, Family>>> keyed;
        for (auto& [fa, fb] : wits) {
            if (fa.size() + fb.size() != best) continue;
            auto [ca, cb] = canonical_pair(fa, fb);
            std::vector<std::uint64_t> key;
            for (std::uint32_t m : ca.masks()) key.push_back(canonical_key(m));
            key.push_back(~std::uint64_t{0});
            for (std::uint32_t m : cb.masks()) key.push_back(canonical_key(m));
            keyed.emplace_back(std::move(key), std::make_pair(std::move(ca), std::move(cb)));
        }
        std::sort(keyed.begin(), keyed.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        keyed.erase(std::unique(keyed.begin(), keyed.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; }),
                    keyed.end());
        for (auto& [k, pr] : keyed) res.witness_pairs.push_back(std::move(pr));
    }
    res.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

// ---------------------------------------------------------------------------
// maximum family of bounded symmetric-difference diameter
// ---------------------------------------------------------------------------

namespace detail {

class DiameterEngine {
  public:
    DiameterEngine(const SearchProblem& p, const SearchOptions& opts, SearchStats& stats,
                   Deadline& deadline)
        : p_(p), opts_(opts), stats_(stats), deadline_(deadline) {
        // translation-normalized: the empty set is a member, so candidates
        // are the nonempty sets of size <= s
        for (int i = 1; i <= p.s; ++i)
            for (std::uint32_t m : all_ksets(p.n, i)) cands_.push_back(m);
        compat_.assign(cands_.size(), IndexBits(cands_.size()));
        for (std::size_t i = 0; i < cands_.size(); ++i)
            for (std::size_t j = 0; j < cands_.size(); ++j)
                if (i != j && std::popcount(cands_[i] ^ cands_[j]) <= p.s) compat_[i].set(j);
    }

    bool run(std::uint64_t& best, std::vector<Family>& witnesses) {
        best_ = best;
        IndexBits pool = IndexBits::all(cands_.size());
        IndexBits excl(cands_.size());
        bool complete = true;
        try {
        if (opts_.use_symmetry) {
            // wlog the first nonempty member is a prefix set
            std::size_t skipped = 0;
            for (std::size_t i = 0; i < cands_.size(); ++i) {
                std::uint32_t m = cands_[i];
                if (m != universe_mask(std::popcount(m))) continue;
                IndexBits p2 = pool;
                for (std::size_t j = 0; j <= i; ++j) p2.reset(j);
                skipped += i;
                chosen_.push_back(m);
                expand(p2 & compat_[i], excl & compat_[i]);
                chosen_.pop_back();
            }
            stats_.symmetry_prunes += skipped;
            // the singleton family {emptyset}
            if (chosen_.empty() && best_ <= 1) record();
        } else {
            expand(std::move(pool), std::move(excl));
        }
        } catch (const BudgetAbort&) {
            complete = false;
        }
        best = best_;
        witnesses = std::move(witnesses_);
        return complete;
    }

  private:
    void record() {
        std::uint64_t v = chosen_.size() + 1;  // the empty set is a member
        if (v < best_) return;
        if (v > best_ || witnesses_.empty()) {
            if (v > best_) witnesses_.clear();
            best_ = v;
        }
        std::vector<std::uint32_t> ms(chosen_.begin(), chosen_.end());
        ms.push_back(0);
        witnesses_.emplace_back(p_.n, std::move(ms));
    }

    void expand(IndexBits pool, IndexBits excl) {
        ++stats_.nodes;
        deadline_.tick();
        if (pool.empty()) {
            if (excl.empty()) record();
            return;
        }
        if (opts_.use_bounds && chosen_.size() + 1 + pool.count() < best_) {
            ++stats_.bound_prunes;
            return;
        }
        for (std::size_t idx = pool.find_first(); idx != IndexBits::npos;
             idx = pool.find_next(idx)) {
            pool.reset(idx);
            chosen_.push_back(cands_[idx]);
            expand(pool & compat_[idx], excl & compat_[idx]);
            chosen_.pop_back();
            excl.set(idx);
        }
    }

    const SearchProblem& p_;
    const SearchOptions& opts_;
    SearchStats& stats_;
    Deadline& deadline_;
    std::vector<std::uint32_t> cands_;
    std::vector<IndexBits> compat_;
    std::vector<std::uint32_t> chosen_;
    std::uint64_t best_ = 0;
    std::vector<Family> witnesses_;
};

}  // namespace detail

inline SearchResult max_diameter(const SearchProblem& p, const SearchOptions& opts = {}) {
    if (p.s < 2 || p.s >= p.n) throw parameter_error("diameter search needs 2 <= s < n");
    if (p.n > 8) throw scale_error("diameter search limited to n <= 8");
    if (!p.exclusions.empty()) throw parameter_error("diameter search takes no exclusions");

    auto start = std::chrono::steady_clock::now();
    SearchResult res;
    detail::Deadline deadline(opts.budget_seconds);
    detail::DiameterEngine engine(p, opts, res.stats, deadline);
    std::uint64_t best = 0;
    std::vector<Family> wits;
    if (!engine.run(best, wits)) res.budget_exhausted = true;
    res.feasible = !wits.empty();
    if (!wits.empty()) {
        res.maximum = best;
        // dedup up to relabeling and translation: normalize over all translates
        std::vector<std::pair<std::vector<std::uint64_t>, Family>> keyed;
        for (Family& f : wits) {
            if (f.size() != best) continue;
            std::vector<std::uint64_t> bestkey;
            Family bestfam(f.n());
            for (std::uint32_t t : f.masks()) {
                std::vector<std::uint32_t> tr;
                for (std::uint32_t m : f.masks()) tr.push_back(m ^ t);
                Family g = canonicalize(Family(f.n(), std::move(tr))).family;
                std::vector<std::uint64_t> key;
                for (std::uint32_t m : g.masks()) key.push_back(canonical_key(m));
                if (bestkey.empty() || key < bestkey) {
                    bestkey = std::move(key);
                    bestfam = std::move(g);
                }
            }
            keyed.emplace_back(std::move(bestkey), std::move(bestfam));
        }
        std::sort(keyed.begin(), keyed.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        keyed.erase(std::unique(keyed.begin(), keyed.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; }),
                    keyed.end());
        for (auto& [k, f] : keyed) res.witnesses.push_back(std::move(f));
    }
    res.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

inline SearchResult run_search(const SearchProblem& p, const SearchOptions& opts = {}) {
    switch (p.kind) {
        case SearchKind::s_union_max: return max_s_union(p, opts);
        case SearchKind::uniform_intersecting_max: return max_uniform_intersecting(p, opts);
        case SearchKind::cross_pair_max: return max_cross_pair(p, opts);
        case SearchKind::diameter_max: return max_diameter(p, opts);
    }
    throw parameter_error("unknown search kind");
}

}  // namespace sunion
