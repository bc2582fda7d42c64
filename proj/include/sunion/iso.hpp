#pragma once

#include <numeric>

#include "sunion/family.hpp"

namespace sunion {

inline constexpr int kMaxIsoGroundSet = 12;

struct CanonicalForm {
    Family family;                 // the minimum relabeling of the input
    std::vector<int> certificate;  // certificate[e-1] is the new label of element e
};

struct CanonOptions {
    bool prune = true;  // false = full factorial sweep (test mode, n <= 8)
};

namespace detail {

inline std::vector<std::uint64_t> encode_permuted(const Family& f, const std::vector<int>& perm) {
    std::vector<std::uint64_t> keys;
    keys.reserve(f.size());
    for (std::uint32_t m : f.masks()) keys.push_back(canonical_key(apply_perm(m, perm)));
    std::sort(keys.begin(), keys.end());
    return keys;
}

// Minimum-image backtracking.  Labels 1..n are assigned to original elements;
// once a member lies inside the assigned prefix its image is frozen, and the
// frozen images form a prefix of each sorted layer, so a partial assignment
// can be compared against the incumbent minimum.  Automorphisms discovered at
// equal leaves collapse sibling branches to orbit representatives.
class Canonicalizer {
  public:
    explicit Canonicalizer(const Family& f) : f_(f), n_(f.n()) {
        members_ = f.masks();
        for (std::uint32_t m : members_) msize_.push_back(std::popcount(m));
        elem_members_.assign(static_cast<std::size_t>(n_), {});
        for (int mi = 0; mi < static_cast<int>(members_.size()); ++mi)
            for (std::uint32_t b = members_[static_cast<std::size_t>(mi)]; b; b &= b - 1)
                elem_members_[static_cast<std::size_t>(std::countr_zero(b))].push_back(mi);
        unassigned_ = msize_;
        label_of_.assign(static_cast<std::size_t>(n_) + 1, 0);
        pre_.assign(static_cast<std::size_t>(n_) + 1, 0);
        det_.assign(static_cast<std::size_t>(n_) + 1, {});
        // heuristic: heavy small-layer degrees get small labels first
        std::vector<std::vector<int>> deg(static_cast<std::size_t>(n_),
                                          std::vector<int>(static_cast<std::size_t>(n_) + 1, 0));
        for (std::size_t mi = 0; mi < members_.size(); ++mi)
            for (std::uint32_t b = members_[mi]; b; b &= b - 1)
                ++deg[static_cast<std::size_t>(std::countr_zero(b))][static_cast<std::size_t>(msize_[mi])];
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 1);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return deg[static_cast<std::size_t>(a - 1)] > deg[static_cast<std::size_t>(b - 1)];
        });
    }

    CanonicalForm run() {
        best_pre_.resize(static_cast<std::size_t>(n_) + 1);
        std::iota(best_pre_.begin(), best_pre_.end(), 0);  // identity incumbent
        std::vector<int> ident(static_cast<std::size_t>(n_));
        std::iota(ident.begin(), ident.end(), 1);
        set_best_layers(encode_permuted(f_, ident));
        if (!members_.empty() && members_.front() == 0)
            det_[0].push_back(0);  // the empty set is determined from the start
        dfs();
        std::vector<int> cert(static_cast<std::size_t>(n_));
        for (int lab = 1; lab <= n_; ++lab)
            cert[static_cast<std::size_t>(best_pre_[static_cast<std::size_t>(lab)] - 1)] = lab;
        return {apply_perm(f_, cert), cert};
    }

  private:
    enum class Cmp { less, greater, equal_complete, unknown };

    void set_best_layers(const std::vector<std::uint64_t>& flat) {
        best_layers_.assign(static_cast<std::size_t>(n_) + 1, {});
        for (std::uint64_t k : flat)
            best_layers_[static_cast<std::size_t>(k >> 32)].push_back(static_cast<std::uint32_t>(k));
    }

    Cmp compare() const {
        const std::uint32_t horizon = std::uint32_t{1} << depth_;
        for (int i = 0; i <= n_; ++i) {
            const auto& bl = best_layers_[static_cast<std::size_t>(i)];
            const auto& dl = det_[static_cast<std::size_t>(i)];
            for (std::size_t p = 0; p < bl.size(); ++p) {
                if (p < dl.size()) {
                    if (dl[p] < bl[p]) return Cmp::less;
                    if (dl[p] > bl[p]) return Cmp::greater;
                } else {
                    // the eventual entry here carries a label above the prefix
                    if (bl[p] < horizon) return Cmp::greater;
                    return Cmp::unknown;
                }
            }
        }
        return Cmp::equal_complete;
    }

    std::vector<int> completed_preimage() const {
        std::vector<int> pre = pre_;
        std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
        for (int lab = 1; lab <= depth_; ++lab) used[static_cast<std::size_t>(pre[static_cast<std::size_t>(lab)])] = true;
        int next = 1;
        for (int lab = depth_ + 1; lab <= n_; ++lab) {
            while (used[static_cast<std::size_t>(next)]) ++next;
            pre[static_cast<std::size_t>(lab)] = next;
            used[static_cast<std::size_t>(next)] = true;
        }
        return pre;
    }

    void take_incumbent() {
        std::vector<std::uint64_t> flat;
        for (int i = 0; i <= n_; ++i)
            for (std::uint32_t v : det_[static_cast<std::size_t>(i)])
                flat.push_back((std::uint64_t{static_cast<std::uint64_t>(i)} << 32) | v);
        set_best_layers(flat);
        best_pre_ = completed_preimage();
    }

    void collect_automorphism() {
        if (auts_.size() >= 64) return;
        std::vector<int> cur = completed_preimage();
        std::vector<int> tau(static_cast<std::size_t>(n_) + 1, 0);
        for (int lab = 1; lab <= n_; ++lab)
            tau[static_cast<std::size_t>(cur[static_cast<std::size_t>(lab)])] =
                best_pre_[static_cast<std::size_t>(lab)];
        auts_.push_back(std::move(tau));
    }

    void assign(int e) {
        ++depth_;
        label_of_[static_cast<std::size_t>(e)] = depth_;
        pre_[static_cast<std::size_t>(depth_)] = e;
        auto& log = appended_.emplace_back(static_cast<std::size_t>(n_) + 1, 0);
        std::vector<std::uint32_t> batch;
        for (int mi : elem_members_[static_cast<std::size_t>(e - 1)]) {
            if (--unassigned_[static_cast<std::size_t>(mi)] == 0) {
                std::uint32_t img = 0;
                for (std::uint32_t b = members_[static_cast<std::size_t>(mi)]; b; b &= b - 1)
                    img |= std::uint32_t{1}
                           << (label_of_[static_cast<std::size_t>(std::countr_zero(b) + 1)] - 1);
                batch.push_back(img);
            }
        }
        std::sort(batch.begin(), batch.end());
        for (std::uint32_t img : batch) {
            int layer = std::popcount(img);
            det_[static_cast<std::size_t>(layer)].push_back(img);
            ++log[static_cast<std::size_t>(layer)];
        }
    }

    void unassign(int e) {
        const auto& log = appended_.back();
        for (int i = 0; i <= n_; ++i)
            det_[static_cast<std::size_t>(i)].resize(
                det_[static_cast<std::size_t>(i)].size() - static_cast<std::size_t>(log[static_cast<std::size_t>(i)]));
        appended_.pop_back();
        for (int mi : elem_members_[static_cast<std::size_t>(e - 1)]) ++unassigned_[static_cast<std::size_t>(mi)];
        label_of_[static_cast<std::size_t>(e)] = 0;
        pre_[static_cast<std::size_t>(depth_)] = 0;
        --depth_;
    }

    void dfs() {
        Cmp c = compare();
        if (c == Cmp::greater) return;
        if (c == Cmp::equal_complete) {
            // every completion reproduces the incumbent
            collect_automorphism();
            return;
        }
        if (depth_ == n_) {
            if (c == Cmp::less) take_incumbent();
            return;
        }
        // orbit representatives under prefix-fixing automorphisms
        std::vector<int> uf(static_cast<std::size_t>(n_) + 1);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[static_cast<std::size_t>(x)] != x)
                x = uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
            return x;
        };
        for (const auto& tau : auts_) {
            bool fixes = true;
            for (int lab = 1; lab <= depth_ && fixes; ++lab) {
                int p = pre_[static_cast<std::size_t>(lab)];
                fixes = tau[static_cast<std::size_t>(p)] == p;
            }
            if (!fixes) continue;
            for (int e = 1; e <= n_; ++e) {
                int a = find(e), b = find(tau[static_cast<std::size_t>(e)]);
                if (a != b) uf[static_cast<std::size_t>(a)] = b;
            }
        }
        std::vector<bool> tried(static_cast<std::size_t>(n_) + 1, false);
        for (int e : order_) {
            if (label_of_[static_cast<std::size_t>(e)]) continue;
            int rep = find(e);
            if (tried[static_cast<std::size_t>(rep)]) continue;
            tried[static_cast<std::size_t>(rep)] = true;
            assign(e);
            dfs();
            unassign(e);
        }
    }

    const Family& f_;
    int n_;
    std::vector<std::uint32_t> members_;
    std::vector<int> msize_;
    std::vector<std::vector<int>> elem_members_;
    std::vector<int> unassigned_;
    std::vector<int> label_of_;
    std::vector<int> pre_;
    std::vector<int> order_;
    std::vector<std::vector<std::uint32_t>> det_;
    std::vector<std::vector<int>> appended_;
    std::vector<std::vector<std::uint32_t>> best_layers_;
    std::vector<int> best_pre_;
    std::vector<std::vector<int>> auts_;
    int depth_ = 0;
};

}  // namespace detail

inline CanonicalForm canonicalize(const Family& f, CanonOptions opts = {}) {
    if (f.n() > kMaxIsoGroundSet) throw scale_error("canonicalize limited to n <= 12");
    std::vector<int> ident(static_cast<std::size_t>(f.n()));
    std::iota(ident.begin(), ident.end(), 1);
    if (f.empty() || (f.size() == 1 && f.masks()[0] == 0)) return {f, ident};
    if (!opts.prune) {
        if (f.n() > 8) throw scale_error("factorial canonicalization limited to n <= 8");
        std::vector<int> perm = ident, best = ident;
        auto bestenc = detail::encode_permuted(f, perm);
        while (std::next_permutation(perm.begin(), perm.end())) {
            auto enc = detail::encode_permuted(f, perm);
            if (enc < bestenc) {
                bestenc = std::move(enc);
                best = perm;
            }
        }
        return {apply_perm(f, best), best};
    }
    detail::Canonicalizer c(f);
    return c.run();
}

inline bool is_isomorphic(const Family& a, const Family& b, CanonOptions opts = {}) {
    if (a.n() != b.n()) throw ground_set_error("isomorphism check across ground sets");
    if (a.size() != b.size()) return false;
    if (a.layer_profile() != b.layer_profile()) return false;
    return canonicalize(a, opts).family == canonicalize(b, opts).family;
}

struct SubfamilyOptions {
    bool degree_filter = true;  // false = plain backtracking (test mode)
};

namespace detail {

inline std::vector<std::vector<int>> degree_table(const Family& f) {
    std::vector<std::vector<int>> deg(static_cast<std::size_t>(f.n()),
                                      std::vector<int>(static_cast<std::size_t>(f.n()) + 1, 0));
    for (std::uint32_t m : f.masks())
        for (std::uint32_t b = m; b; b &= b - 1)
            ++deg[static_cast<std::size_t>(std::countr_zero(b))][static_cast<std::size_t>(std::popcount(m))];
    return deg;
}

class SubfamilySearch {
  public:
    SubfamilySearch(const Family& g, const Family& h, SubfamilyOptions opts)
        : g_(g), h_(h), opts_(opts), n_(g.n()) {}

    bool run() {
        for (int i = 0; i <= n_; ++i)
            if (g_.layer_size(i) > h_.layer_size(i)) return false;
        if (g_.empty()) return true;
        degg_ = degree_table(g_);
        degh_ = degree_table(h_);
        members_ = g_.masks();
        elem_members_.assign(static_cast<std::size_t>(n_), {});
        for (int mi = 0; mi < static_cast<int>(members_.size()); ++mi)
            for (std::uint32_t b = members_[static_cast<std::size_t>(mi)]; b; b &= b - 1)
                elem_members_[static_cast<std::size_t>(std::countr_zero(b))].push_back(mi);
        unassigned_.assign(members_.size(), 0);
        for (std::size_t mi = 0; mi < members_.size(); ++mi)
            unassigned_[mi] = std::popcount(members_[mi]);
        image_of_.assign(static_cast<std::size_t>(n_) + 1, 0);
        used_.assign(static_cast<std::size_t>(n_) + 1, false);
        for (int e = 1; e <= n_; ++e)
            if (!elem_members_[static_cast<std::size_t>(e - 1)].empty()) support_.push_back(e);
        std::stable_sort(support_.begin(), support_.end(), [&](int a, int b) {
            return elem_members_[static_cast<std::size_t>(a - 1)].size() >
                   elem_members_[static_cast<std::size_t>(b - 1)].size();
        });
        return dfs(0);
    }

  private:
    bool compatible(int e, int y) const {
        if (!opts_.degree_filter) return true;
        const auto& dg = degg_[static_cast<std::size_t>(e - 1)];
        const auto& dh = degh_[static_cast<std::size_t>(y - 1)];
        for (int i = 0; i <= n_; ++i)
            if (dg[static_cast<std::size_t>(i)] > dh[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    bool dfs(std::size_t pos) {
        if (pos == support_.size()) return true;
        int e = support_[pos];
        for (int y = 1; y <= n_; ++y) {
            if (used_[static_cast<std::size_t>(y)] || !compatible(e, y)) continue;
            image_of_[static_cast<std::size_t>(e)] = y;
            used_[static_cast<std::size_t>(y)] = true;
            for (int mi : elem_members_[static_cast<std::size_t>(e - 1)])
                --unassigned_[static_cast<std::size_t>(mi)];
            bool ok = true;
            for (int mi : elem_members_[static_cast<std::size_t>(e - 1)]) {
                if (unassigned_[static_cast<std::size_t>(mi)] != 0) continue;
                std::uint32_t img = 0;
                for (std::uint32_t b = members_[static_cast<std::size_t>(mi)]; b; b &= b - 1)
                    img |= std::uint32_t{1}
                           << (image_of_[static_cast<std::size_t>(std::countr_zero(b) + 1)] - 1);
                if (!h_.contains(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok && dfs(pos + 1)) return true;
            for (int mi : elem_members_[static_cast<std::size_t>(e - 1)])
                ++unassigned_[static_cast<std::size_t>(mi)];
            used_[static_cast<std::size_t>(y)] = false;
            image_of_[static_cast<std::size_t>(e)] = 0;
        }
        return false;
    }

    const Family& g_;
    const Family& h_;
    SubfamilyOptions opts_;
    int n_;
    std::vector<std::vector<int>> degg_, degh_;
    std::vector<std::uint32_t> members_;
    std::vector<std::vector<int>> elem_members_;
    std::vector<int> unassigned_;
    std::vector<int> image_of_;
    std::vector<bool> used_;
    std::vector<int> support_;
};

}  // namespace detail

// does a permutation map every member of g into h?
inline bool is_subfamily_up_to_iso(const Family& g, const Family& h, SubfamilyOptions opts = {}) {
    if (g.n() != h.n()) throw ground_set_error("subfamily check across ground sets");
    if (g.n() > kMaxIsoGroundSet) throw scale_error("subfamily search limited to n <= 12");
    detail::SubfamilySearch s(g, h, opts);
    return s.run();
}

// minimum pair encoding under a single relabeling applied to both families
inline std::pair<Family, Family> canonical_pair(const Family& a, const Family& b) {
    if (a.n() != b.n()) throw ground_set_error("pair canonicalization across ground sets");
    const int n = a.n();
    if (n > 9) throw scale_error("pair canonicalization limited to n <= 9");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> best = perm;
    auto encode = [&](const std::vector<int>& p) {
        auto ea = detail::encode_permuted(a, p);
        auto eb = detail::encode_permuted(b, p);
        ea.push_back(~std::uint64_t{0});  // separator
        ea.insert(ea.end(), eb.begin(), eb.end());
        return ea;
    };
    auto bestenc = encode(perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        auto enc = encode(perm);
        if (enc < bestenc) {
            bestenc = std::move(enc);
            best = perm;
        }
    }
    return {apply_perm(a, best), apply_perm(b, best)};
}

}  // namespace sunion
