#include "forge/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace forge {

void Poset::finalize() {
    if (m < 0 || m > 31) throw input_error("poset size out of range (0..31)");
    below.assign(static_cast<std::size_t>(m), 0);
    above.assign(static_cast<std::size_t>(m), 0);
    std::vector<std::uint32_t> direct_up(static_cast<std::size_t>(m), 0);
    for (auto [i, j] : covers) {
        if (i < 1 || i > m || j < 1 || j > m || i == j)
            throw input_error("cover (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        direct_up[static_cast<std::size_t>(i - 1)] |= 1u << (j - 1);
    }
    // transitive closure by repeated relaxation; a cycle makes an element sit
    // below itself
    std::vector<std::uint32_t> up = direct_up;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < m; ++i) {
            std::uint32_t acc = up[static_cast<std::size_t>(i)];
            std::uint32_t scan = up[static_cast<std::size_t>(i)];
            while (scan) {
                int j = std::countr_zero(scan);
                scan &= scan - 1;
                acc |= up[static_cast<std::size_t>(j)];
            }
            if (acc != up[static_cast<std::size_t>(i)]) {
                up[static_cast<std::size_t>(i)] = acc;
                changed = true;
            }
        }
    }
    for (int i = 0; i < m; ++i) {
        if ((up[static_cast<std::size_t>(i)] >> i) & 1) throw input_error("cover relations contain a cycle");
        above[static_cast<std::size_t>(i)] = up[static_cast<std::size_t>(i)];
        std::uint32_t scan = up[static_cast<std::size_t>(i)];
        while (scan) {
            int j = std::countr_zero(scan);
            scan &= scan - 1;
            below[static_cast<std::size_t>(j)] |= 1u << i;
        }
    }
    // reject covers implied by other covers (not a transitive reduction)
    for (auto [i, j] : covers) {
        std::uint32_t between = above[static_cast<std::size_t>(i - 1)] & below[static_cast<std::size_t>(j - 1)];
        if (between) throw input_error("cover (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") is implied by other covers");
    }
    finalized = true;
}

bool Poset::naturally_labeled() const {
    for (int j = 1; j <= m; ++j)
        for (int i = j + 1; i <= m; ++i)
            if (less(i, j)) return false;
    return true;
}

std::vector<int> Poset::ranks() const {
    std::vector<int> rank(static_cast<std::size_t>(m), 0);
    // longest-path layering; finite since the relation is acyclic
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [i, j] : covers)
            if (rank[static_cast<std::size_t>(j - 1)] < rank[static_cast<std::size_t>(i - 1)] + 1) {
                rank[static_cast<std::size_t>(j - 1)] = rank[static_cast<std::size_t>(i - 1)] + 1;
                changed = true;
            }
    }
    return rank;
}

bool Poset::graded() const {
    if (m == 0) return true;
    std::vector<int> rank = ranks();
    // every cover must climb exactly one level, minimal elements sit at level
    // 0, and maximal elements all at the top level
    for (auto [i, j] : covers)
        if (rank[static_cast<std::size_t>(j - 1)] != rank[static_cast<std::size_t>(i - 1)] + 1) return false;
    int top = *std::max_element(rank.begin(), rank.end());
    for (int i = 0; i < m; ++i) {
        if (below[static_cast<std::size_t>(i)] == 0 && rank[static_cast<std::size_t>(i)] != 0) return false;
        if (above[static_cast<std::size_t>(i)] == 0 && rank[static_cast<std::size_t>(i)] != top) return false;
    }
    return true;
}

int Poset::rank_levels() const {
    if (m == 0) return 0;
    std::vector<int> rank = ranks();
    return *std::max_element(rank.begin(), rank.end()) + 1;
}

bool Poset::is_ideal(std::uint32_t mask) const {
    for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1)
            if ((below[static_cast<std::size_t>(i)] & ~mask) != 0) return false;
    return true;
}

std::vector<std::uint32_t> Poset::ideals() const {
    std::vector<std::uint32_t> out;
    const std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
    for (std::uint32_t mask = 0;; ++mask) {
        if (is_ideal(mask)) out.push_back(mask);
        if (mask == full) break;
    }
    std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
        int ca = std::popcount(a), cb = std::popcount(b);
        if (ca != cb) return ca < cb;
        return a < b;
    });
    return out;
}

Poset chain_poset(int m) {
    Poset p;
    p.m = m;
    for (int i = 1; i < m; ++i) p.covers.emplace_back(i, i + 1);
    p.finalize();
    return p;
}

Poset antichain_poset(int m) {
    Poset p;
    p.m = m;
    p.finalize();
    return p;
}

Poset bipartite_poset(int a, int b) {
    Poset p;
    p.m = a + b;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) p.covers.emplace_back(i, a + j);
    p.finalize();
    return p;
}

std::vector<std::vector<int>> linear_extensions(const Poset& p, std::size_t guard) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::uint32_t placed = 0;
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == p.m) {
            if (out.size() >= guard) throw budget_error("linear extension enumeration exceeds the guard");
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < p.m; ++i) {
            if ((placed >> i) & 1) continue;
            if ((p.below[static_cast<std::size_t>(i)] & ~placed) != 0) continue;  // a smaller element is missing
            placed |= 1u << i;
            cur.push_back(i + 1);
            self(self);
            cur.pop_back();
            placed &= ~(1u << i);
        }
    };
    dfs(dfs);
    return out;
}

IntPolynomial eulerian_polynomial(const Poset& p, std::size_t guard) {
    if (!p.naturally_labeled()) throw input_error("eulerian_polynomial: poset is not naturally labeled");
    std::vector<Int> coeffs(static_cast<std::size_t>(std::max(1, p.m)), Int(0));
    for (const auto& w : linear_extensions(p, guard)) {
        int des = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) ++des;
        coeffs[static_cast<std::size_t>(des)] += 1;
    }
    if (p.m == 0) coeffs[0] = 1;  // the empty poset has one (empty) extension
    return IntPolynomial(std::move(coeffs));
}

Poset relabel_naturally(const Poset& p) {
    std::vector<int> ext;
    {  // first linear extension, greedily
        std::uint32_t placed = 0;
        while (static_cast<int>(ext.size()) < p.m) {
            for (int i = 0; i < p.m; ++i) {
                if ((placed >> i) & 1) continue;
                if ((p.below[static_cast<std::size_t>(i)] & ~placed) != 0) continue;
                placed |= 1u << i;
                ext.push_back(i + 1);
                break;
            }
        }
    }
    std::vector<int> new_label(static_cast<std::size_t>(p.m) + 1, 0);
    for (std::size_t k = 0; k < ext.size(); ++k) new_label[static_cast<std::size_t>(ext[k])] = static_cast<int>(k) + 1;
    Poset out;
    out.m = p.m;
    for (auto [i, j] : p.covers) out.covers.emplace_back(new_label[static_cast<std::size_t>(i)], new_label[static_cast<std::size_t>(j)]);
    std::sort(out.covers.begin(), out.covers.end());
    out.finalize();
    return out;
}

namespace {

// canonical form of a strict-order relation matrix under relabeling
std::vector<std::uint32_t> canonical_relation(int m, const std::vector<std::uint32_t>& below) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> inv(static_cast<std::size_t>(m));
    std::vector<std::uint32_t> best;
    do {
        for (int i = 0; i < m; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        std::vector<std::uint32_t> rel(static_cast<std::size_t>(m), 0);
        for (int j = 0; j < m; ++j) {
            std::uint32_t scan = below[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
            while (scan) {
                int i = std::countr_zero(scan);
                scan &= scan - 1;
                rel[static_cast<std::size_t>(j)] |= 1u << inv[static_cast<std::size_t>(i)];
            }
        }
        if (best.empty() || rel < best) best = rel;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Poset poset_from_below(int m, const std::vector<std::uint32_t>& below) {
    Poset p;
    p.m = m;
    for (int j = 0; j < m; ++j) {
        std::uint32_t scan = below[static_cast<std::size_t>(j)];
        while (scan) {
            int i = std::countr_zero(scan);
            scan &= scan - 1;
            // cover iff nothing sits strictly between
            if ((below[static_cast<std::size_t>(j)] & ~below[static_cast<std::size_t>(i)] & ~(1u << i)) == 0)
                p.covers.emplace_back(i + 1, j + 1);
        }
    }
    std::sort(p.covers.begin(), p.covers.end());
    p.finalize();
    return p;
}

}  // namespace

std::vector<Poset> all_posets(int m) {
    if (m < 0 || m > 7) throw budget_error("all_posets: size out of the supported range (0..7)");
    // below-masks of canonical representatives, grown one element at a time
    std::vector<std::vector<std::uint32_t>> reps = {{}};
    for (int size = 1; size <= m; ++size) {
        std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> next;
        for (const auto& base : reps) {
            const int k = size - 1;
            // choose a down-set D and an up-set U (disjoint) for the new element
            for (std::uint32_t d = 0; d < (1u << k); ++d) {
                bool down_ok = true;
                for (int i = 0; i < k && down_ok; ++i)
                    if ((d >> i) & 1)
                        if ((base[static_cast<std::size_t>(i)] & ~d) != 0) down_ok = false;
                if (!down_ok) continue;
                for (std::uint32_t u = 0; u < (1u << k); ++u) {
                    if (u & d) continue;
                    bool up_ok = true;
                    for (int i = 0; i < k && up_ok; ++i)
                        if ((u >> i) & 1) {
                            // everything above i must be in u
                            for (int j = 0; j < k && up_ok; ++j)
                                if (((base[static_cast<std::size_t>(j)] >> i) & 1) && !((u >> j) & 1)) up_ok = false;
                        }
                    if (!up_ok) continue;
                    std::vector<std::uint32_t> below(static_cast<std::size_t>(size), 0);
                    for (int i = 0; i < k; ++i) below[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i)];
                    below[static_cast<std::size_t>(k)] = d;
                    for (int j = 0; j < k; ++j)
                        if ((u >> j) & 1) below[static_cast<std::size_t>(j)] |= (1u << k) | d;
                    std::vector<std::uint32_t> canon = canonical_relation(size, below);
                    next.emplace(std::move(canon), below);
                }
            }
        }
        reps.clear();
        for (auto& [canon, below] : next) reps.push_back(canon);
    }
    std::vector<Poset> out;
    for (const auto& below : reps) out.push_back(poset_from_below(m, below));
    return out;
}

}  // namespace forge
