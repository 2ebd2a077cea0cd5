#include "forge/families.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "forge/ehrhart.hpp"

namespace forge {

namespace {

// Drops candidate facets whose tight set is empty, everything, rank-deficient
// or a duplicate of an earlier one. Builders generate the obvious candidate
// list and let this settle degenerate sizes.
void prune_facets(IntegerPolytope& p) {
    const int m = affine_rank(p.vertices);
    std::vector<LinearForm> kept;
    std::vector<VSet> tight_sets;
    for (const LinearForm& f : p.facets) {
        VSet tight;
        std::vector<std::vector<Int>> pts;
        bool valid_side = true;
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            Int dotv = 0;
            for (std::size_t j = 0; j < f.normal.size(); ++j) dotv += f.normal[j] * p.vertices[i][j];
            if (dotv > f.offset) {
                valid_side = false;
                break;
            }
            if (dotv == f.offset) {
                tight.set(static_cast<int>(i));
                pts.push_back(p.vertices[i]);
            }
        }
        if (!valid_side || pts.empty() || pts.size() == p.vertices.size()) continue;
        if (affine_rank(pts) != m - 1) continue;
        if (std::find(tight_sets.begin(), tight_sets.end(), tight) != tight_sets.end()) continue;
        tight_sets.push_back(tight);
        kept.push_back(f);
    }
    p.facets = std::move(kept);
}

}  // namespace

IntegerPolytope birkhoff(int n) {
    if (n < 1) throw input_error("birkhoff: n must be positive");
    if (n > 5) throw budget_error("birkhoff: n > 5 exceeds the vertex budget");
    IntegerPolytope p;
    p.id = "birkhoff_" + std::to_string(n);
    p.ambient_dim = n * n;

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Int> v(static_cast<std::size_t>(n * n), Int(0));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * n + perm[static_cast<std::size_t>(i)])] = 1;
        p.vertices.push_back(std::move(v));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(p.vertices.begin(), p.vertices.end());

    for (int i = 0; i < n; ++i) {
        LinearForm row, col;
        row.normal.assign(static_cast<std::size_t>(n * n), Int(0));
        col.normal.assign(static_cast<std::size_t>(n * n), Int(0));
        for (int j = 0; j < n; ++j) {
            row.normal[static_cast<std::size_t>(i * n + j)] = 1;
            col.normal[static_cast<std::size_t>(j * n + i)] = 1;
        }
        row.offset = 1;
        col.offset = 1;
        p.equalities.push_back(std::move(row));
        p.equalities.push_back(std::move(col));
    }
    for (int e = 0; e < n * n; ++e) {
        LinearForm f;
        f.normal.assign(static_cast<std::size_t>(n * n), Int(0));
        f.normal[static_cast<std::size_t>(e)] = -1;
        f.offset = 0;
        p.facets.push_back(std::move(f));
    }
    prune_facets(p);
    require_valid(p);
    return p;
}

std::vector<int> birkhoff_cyclic_simplex(int n, const IntegerPolytope& p) {
    std::vector<int> out;
    for (int k = 0; k < n; ++k) {
        std::vector<Int> v(static_cast<std::size_t>(n * n), Int(0));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * n + (i + k) % n)] = 1;
        auto it = std::lower_bound(p.vertices.begin(), p.vertices.end(), v);
        if (it == p.vertices.end() || *it != v) throw input_error("cyclic permutation matrix not found");
        out.push_back(static_cast<int>(it - p.vertices.begin()));
    }
    return out;
}

int OrderPolytope::vertex_of_ideal(std::uint32_t mask) const {
    for (std::size_t i = 0; i < ideal_masks.size(); ++i)
        if (ideal_masks[i] == mask) return static_cast<int>(i);
    return -1;
}

OrderPolytope order_polytope(const Poset& omega) {
    if (!omega.finalized) throw input_error("order_polytope: poset not finalized");
    OrderPolytope op;
    IntegerPolytope& p = op.polytope;
    p.id = "order_polytope_m" + std::to_string(omega.m);
    const int m = omega.m;
    p.ambient_dim = m + 1;

    for (std::uint32_t mask : omega.ideals()) {
        std::vector<Int> v(static_cast<std::size_t>(m) + 1, Int(0));
        v[0] = 1;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) v[static_cast<std::size_t>(i) + 1] = 1;
        p.vertices.push_back(std::move(v));
        op.ideal_masks.push_back(mask);
    }

    LinearForm top;
    top.normal.assign(static_cast<std::size_t>(m) + 1, Int(0));
    top.normal[0] = 1;
    top.offset = 1;
    p.equalities.push_back(std::move(top));

    auto cover_facet = [&](int lo, int hi) {  // x_hi <= x_lo, coordinates 0..m
        LinearForm f;
        f.normal.assign(static_cast<std::size_t>(m) + 1, Int(0));
        f.normal[static_cast<std::size_t>(hi)] = 1;
        f.normal[static_cast<std::size_t>(lo)] = -1;
        f.offset = 0;
        p.facets.push_back(std::move(f));
    };
    for (auto [i, j] : omega.covers) cover_facet(i, j);
    for (int i = 1; i <= m; ++i) {
        if (omega.below[static_cast<std::size_t>(i - 1)] == 0) cover_facet(0, i);  // bottom covers the minimal elements
        if (omega.above[static_cast<std::size_t>(i - 1)] == 0) {                   // maximal elements: x_i >= 0
            LinearForm f;
            f.normal.assign(static_cast<std::size_t>(m) + 1, Int(0));
            f.normal[static_cast<std::size_t>(i)] = -1;
            f.offset = 0;
            p.facets.push_back(std::move(f));
        }
    }
    prune_facets(p);
    require_valid(p);
    return op;
}

std::vector<int> rank_ideal_simplex(const Poset& omega, const OrderPolytope& op) {
    if (!omega.graded()) throw input_error("rank_ideal_simplex: poset is not graded");
    const int levels = omega.rank_levels();
    const int n = levels + 1;
    std::vector<int> rank = omega.ranks();
    std::vector<int> out;
    for (int k = 1; k <= n; ++k) {
        std::uint32_t mask = 0;
        for (int i = 0; i < omega.m; ++i)
            if (rank[static_cast<std::size_t>(i)] <= k - 2) mask |= 1u << i;
        int id = op.vertex_of_ideal(mask);
        if (id < 0) throw input_error("rank ideal vertex missing");
        out.push_back(id);
    }
    return out;
}

SimplicialComplex equatorial_complex(const Poset& omega, const OrderPolytope& op) {
    if (!omega.graded()) throw input_error("equatorial_complex: poset is not graded");
    const int m = omega.m;
    const int levels = omega.rank_levels();
    const int n = levels + 1;
    std::vector<int> rank = omega.ranks();

    // adjacent-rank related pairs, one bucket per condition index 2..n-1
    std::vector<std::vector<std::pair<int, int>>> pairs;  // 0-indexed elements
    for (int i = 2; i <= n - 1; ++i) {
        std::vector<std::pair<int, int>> bucket;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (rank[static_cast<std::size_t>(a)] == i - 2 && rank[static_cast<std::size_t>(b)] == i - 1 && omega.less(a + 1, b + 1))
                    bucket.emplace_back(a, b);
        pairs.push_back(std::move(bucket));
    }

    auto pair_matches = [&](std::uint32_t mask, const std::pair<int, int>& pr) {
        return ((mask >> pr.first) & 1) == ((mask >> pr.second) & 1);
    };

    const std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
    std::vector<std::uint32_t> candidates;  // nonempty proper equatorial ideals
    for (std::uint32_t mask : omega.ideals()) {
        if (mask == 0 || mask == full) continue;
        bool ok = true;
        for (const auto& bucket : pairs) {
            bool any = false;
            for (const auto& pr : bucket)
                if (pair_matches(mask, pr)) {
                    any = true;
                    break;
                }
            if (!any) {
                ok = false;
                break;
            }
        }
        if (ok) candidates.push_back(mask);
    }

    if (candidates.empty()) return SimplicialComplex::empty_face_complex();

    // a chain is equatorial iff each bucket keeps a pair matched by every member
    auto chain_ok = [&](const std::vector<std::uint32_t>& chain) {
        for (const auto& bucket : pairs) {
            bool any = false;
            for (const auto& pr : bucket) {
                bool all = true;
                for (std::uint32_t mask : chain)
                    if (!pair_matches(mask, pr)) {
                        all = false;
                        break;
                    }
                if (all) {
                    any = true;
                    break;
                }
            }
            if (!any) return false;
        }
        return true;
    };

    // enumerate equatorial chains; keep those with no upward extension, then
    // drop the ones that admit an insertion anywhere
    std::vector<std::vector<std::uint32_t>> leaves;
    std::vector<std::uint32_t> chain;
    auto dfs = [&](auto&& self) -> void {
        bool extended = false;
        for (std::uint32_t next : candidates) {
            if (!chain.empty()) {
                std::uint32_t last = chain.back();
                if (next == last || (next & last) != last) continue;  // need strict superset
            }
            chain.push_back(next);
            if (chain_ok(chain)) {
                extended = true;
                self(self);
            }
            chain.pop_back();
        }
        if (!extended && !chain.empty()) leaves.push_back(chain);
    };
    dfs(dfs);

    SimplicialComplex out;
    for (const auto& leaf : leaves) {
        bool insertable = false;
        for (std::uint32_t extra : candidates) {
            if (std::find(leaf.begin(), leaf.end(), extra) != leaf.end()) continue;
            bool comparable = true;
            for (std::uint32_t mask : leaf)
                if ((extra & mask) != mask && (extra & mask) != extra) {
                    comparable = false;
                    break;
                }
            if (!comparable) continue;
            std::vector<std::uint32_t> bigger = leaf;
            bigger.push_back(extra);
            if (chain_ok(bigger)) {
                insertable = true;
                break;
            }
        }
        if (insertable) continue;
        std::vector<int> face;
        for (std::uint32_t mask : leaf) face.push_back(op.vertex_of_ideal(mask));
        std::sort(face.begin(), face.end());
        out.maximal_faces.push_back(std::move(face));
    }
    out.canonicalize();
    if (out.maximal_faces.empty()) return SimplicialComplex::empty_face_complex();
    return out;
}

IntegerPolytope matching_polytope(const MultiGraph& g) {
    g.check();
    if (g.has_loop()) throw input_error("matching_polytope: graph has a loop");
    if (!g.bipartition()) throw input_error("graph not bipartite");
    if (!g.regular_degree()) throw input_error("graph not regular");
    if (!g.connected()) throw input_error("graph not connected");

    IntegerPolytope p;
    p.id = "matching_polytope_p" + std::to_string(g.p) + "_q" + std::to_string(g.q());
    const int q = g.q();
    p.ambient_dim = q;

    // enumerate perfect matchings: always match the lowest uncovered vertex
    std::vector<char> covered(static_cast<std::size_t>(g.p), 0);
    std::vector<char> used(static_cast<std::size_t>(q), 0);
    auto dfs = [&](auto&& self) -> void {
        int v = -1;
        for (int i = 0; i < g.p; ++i)
            if (!covered[static_cast<std::size_t>(i)]) {
                v = i;
                break;
            }
        if (v < 0) {
            std::vector<Int> vert(static_cast<std::size_t>(q), Int(0));
            for (int e = 0; e < q; ++e)
                if (used[static_cast<std::size_t>(e)]) vert[static_cast<std::size_t>(e)] = 1;
            p.vertices.push_back(std::move(vert));
            return;
        }
        for (int e = 0; e < q; ++e) {
            auto [a, b] = g.edges[static_cast<std::size_t>(e)];
            int u = a - 1, w = b - 1;
            if (u != v && w != v) continue;
            int other = (u == v) ? w : u;
            if (covered[static_cast<std::size_t>(other)]) continue;
            covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(other)] = 1;
            used[static_cast<std::size_t>(e)] = 1;
            self(self);
            covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(other)] = 0;
            used[static_cast<std::size_t>(e)] = 0;
        }
    };
    dfs(dfs);
    if (p.vertices.empty()) throw input_error("graph has no perfect matching");
    std::sort(p.vertices.begin(), p.vertices.end());

    for (int v = 0; v < g.p; ++v) {
        LinearForm eq;
        eq.normal.assign(static_cast<std::size_t>(q), Int(0));
        for (int e = 0; e < q; ++e) {
            auto [a, b] = g.edges[static_cast<std::size_t>(e)];
            if (a - 1 == v || b - 1 == v) eq.normal[static_cast<std::size_t>(e)] = 1;
        }
        eq.offset = 1;
        p.equalities.push_back(std::move(eq));
    }
    for (int e = 0; e < q; ++e) {
        LinearForm f;
        f.normal.assign(static_cast<std::size_t>(q), Int(0));
        f.normal[static_cast<std::size_t>(e)] = -1;
        f.offset = 0;
        p.facets.push_back(std::move(f));
    }
    prune_facets(p);
    require_valid(p);
    return p;
}

std::optional<std::pair<std::vector<Int>, Int>> ones_minimal_element(const IntegerPolytope& p) {
    // the all-ones vector must satisfy every equality scaled to one common
    // dilate r >= 1, and every inequality at that dilate
    std::optional<Rat> r;
    for (const LinearForm& e : p.equalities) {
        Int lhs = 0;
        for (const Int& c : e.normal) lhs += c;
        if (e.offset == 0) {
            if (lhs != 0) return std::nullopt;
            continue;
        }
        Rat cand(lhs, e.offset);
        cand.canonicalize();
        if (r && *r != cand) return std::nullopt;
        r = cand;
    }
    if (!r || r->get_den() != 1 || r->get_num() < 1) return std::nullopt;
    Int rr = r->get_num();
    for (const LinearForm& f : p.facets) {
        Int lhs = 0;
        for (const Int& c : f.normal) lhs += c;
        if (lhs > f.offset * rr) return std::nullopt;
    }
    return std::make_pair(std::vector<Int>(static_cast<std::size_t>(p.ambient_dim), Int(1)), rr);
}

bool monoid_generation_check(IntegerPolytope& p, int degree_bound) {
    require_valid(p);
    std::map<std::vector<Int>, bool> memo;
    auto decompose = [&](auto&& self, const std::vector<Int>& x, int r) -> bool {
        if (r == 0) {
            for (const Int& c : x)
                if (c != 0) return false;
            return true;
        }
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const auto& v : p.vertices) {
            bool fits = true;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[j] > x[j]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            std::vector<Int> y(x.size());
            for (std::size_t j = 0; j < x.size(); ++j) y[j] = x[j] - v[j];
            if (self(self, y, r - 1)) {
                ok = true;
                break;
            }
        }
        memo.emplace(x, ok);
        return ok;
    };
    for (int r = 0; r <= degree_bound; ++r) {
        for (const auto& x : enumerate_points(p, r))
            if (!decompose(decompose, x, r)) return false;
    }
    return true;
}

VertexOrder pipeline_order(const IntegerPolytope& p, const std::vector<int>& sigma) {
    VertexOrder order;
    std::vector<char> used(p.vertices.size(), 0);
    for (int v : sigma) {
        order.seq.push_back(v);
        used[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        if (!used[i]) order.seq.push_back(static_cast<int>(i));
    return order;
}

}  // namespace forge
