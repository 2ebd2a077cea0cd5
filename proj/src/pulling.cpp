#include "forge/pulling.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace forge {

namespace {

// dim-descending maximality filter over face ids
std::vector<int> maximal_of(const FaceLattice& lat, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        if (lat.dim[static_cast<std::size_t>(a)] != lat.dim[static_cast<std::size_t>(b)]) return lat.dim[static_cast<std::size_t>(a)] > lat.dim[static_cast<std::size_t>(b)];
        return a < b;
    });
    std::vector<int> out;
    for (int i : ids) {
        bool covered = false;
        for (int j : out)
            if (lat.faces[static_cast<std::size_t>(i)].subset_of(lat.faces[static_cast<std::size_t>(j)])) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(i);
    }
    return out;
}

std::vector<VSet> maximality_filter(std::vector<VSet> faces) {
    std::sort(faces.begin(), faces.end(), [](const VSet& a, const VSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca > cb;
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VSet> out;
    for (const VSet& f : faces) {
        bool covered = false;
        for (const VSet& g : out)
            if (f.subset_of(g)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(f);
    }
    return out;
}

struct Puller {
    const FaceLattice& lat;
    std::vector<int> pos;  // pull position per vertex, -1 = absent from the order

    struct Key {
        int face;
        VSet removed;
        bool operator==(const Key& o) const { return face == o.face && removed == o.removed; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return VSetHash{}(k.removed) * 1000003u + static_cast<std::size_t>(k.face);
        }
    };
    std::unordered_map<Key, std::vector<VSet>, KeyHash> memo;
    std::vector<std::vector<int>> subface_cache;  // per face id, dim-descending

    Puller(const FaceLattice& l, const VertexOrder& order) : lat(l) {
        pos.assign(static_cast<std::size_t>(lat.n_vertices), -1);
        for (std::size_t i = 0; i < order.seq.size(); ++i) {
            int v = order.seq[i];
            if (v < 0 || v >= lat.n_vertices || pos[static_cast<std::size_t>(v)] != -1)
                throw input_error("vertex order is not a permutation of vertex indices");
            pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
        subface_cache.resize(lat.faces.size());
    }

    int front_vertex(const VSet& candidates) const {
        int best = -1, best_pos = -1;
        for (int v : candidates.to_indices()) {
            int pv = pos[static_cast<std::size_t>(v)];
            if (pv < 0) throw input_error("vertex order does not cover the complex");
            if (best < 0 || pv < best_pos) {
                best = v;
                best_pos = pv;
            }
        }
        return best;
    }

    const std::vector<int>& subfaces(int face) {
        auto& cached = subface_cache[static_cast<std::size_t>(face)];
        if (!cached.empty()) return cached;
        std::vector<char> seen(lat.faces.size(), 0);
        std::vector<int> stack{face};
        seen[static_cast<std::size_t>(face)] = 1;
        std::vector<int> all;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            all.push_back(f);
            for (int c : lat.children[static_cast<std::size_t>(f)])
                if (!seen[static_cast<std::size_t>(c)]) {
                    seen[static_cast<std::size_t>(c)] = 1;
                    stack.push_back(c);
                }
        }
        std::sort(all.begin(), all.end(), [&](int a, int b) {
            if (lat.dim[static_cast<std::size_t>(a)] != lat.dim[static_cast<std::size_t>(b)]) return lat.dim[static_cast<std::size_t>(a)] > lat.dim[static_cast<std::size_t>(b)];
            return a < b;
        });
        cached = std::move(all);
        return cached;
    }

    // triangulation of the subcomplex {faces of `face` avoiding `removed`}
    const std::vector<VSet>& pull_face(int face, VSet removed) {
        removed = removed & lat.faces[static_cast<std::size_t>(face)];
        Key key{face, removed};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        std::vector<VSet> result;
        VSet surviving = lat.faces[static_cast<std::size_t>(face)].minus(removed);
        if (surviving.empty()) {
            return memo.emplace(key, std::move(result)).first->second;
        }
        if (surviving.count() == 1) {
            result.push_back(surviving);
            return memo.emplace(key, std::move(result)).first->second;
        }
        int v = front_vertex(surviving);

        VSet rest_removed = removed;
        rest_removed.set(v);
        {
            const std::vector<VSet>& rest = pull_face(face, rest_removed);
            result.insert(result.end(), rest.begin(), rest.end());
        }

        // maximal faces of the current subcomplex that contain v
        std::vector<int> current;
        for (int f : subfaces(face))
            if (!lat.faces[static_cast<std::size_t>(f)].intersects(removed)) current.push_back(f);
        for (int m : maximal_of(lat, current)) {
            if (!lat.faces[static_cast<std::size_t>(m)].test(v)) continue;
            result.push_back(VSet::single(v));
            for (int child : lat.children[static_cast<std::size_t>(m)]) {
                if (lat.faces[static_cast<std::size_t>(child)].test(v)) continue;
                for (const VSet& g : pull_face(child, VSet{})) {
                    VSet cone = g;
                    cone.set(v);
                    result.push_back(cone);
                }
            }
        }
        result = maximality_filter(std::move(result));
        return memo.emplace(key, std::move(result)).first->second;
    }

    // triangulation of an arbitrary downward-closed member set
    std::vector<VSet> pull_complex(const std::vector<char>& member) {
        std::vector<VSet> out;
        VSet removed;
        VSet verts;
        for (std::size_t i = 0; i < member.size(); ++i)
            if (member[i])
                for (int v : lat.faces[i].to_indices()) verts.set(v);
        while (true) {
            VSet surviving = verts.minus(removed);
            if (surviving.empty()) break;
            int v = front_vertex(surviving);
            std::vector<int> current;
            for (std::size_t i = 0; i < member.size(); ++i)
                if (member[i] && !lat.faces[i].intersects(removed)) current.push_back(static_cast<int>(i));
            for (int m : maximal_of(lat, current)) {
                if (!lat.faces[static_cast<std::size_t>(m)].test(v)) continue;
                out.push_back(VSet::single(v));
                for (int child : lat.children[static_cast<std::size_t>(m)]) {
                    if (lat.faces[static_cast<std::size_t>(child)].test(v)) continue;
                    for (const VSet& g : pull_face(child, VSet{})) {
                        VSet cone = g;
                        cone.set(v);
                        out.push_back(cone);
                    }
                }
            }
            removed.set(v);
        }
        return maximality_filter(std::move(out));
    }
};

SimplicialComplex to_complex(const std::vector<VSet>& faces) {
    SimplicialComplex out;
    if (faces.empty()) return SimplicialComplex::empty_face_complex();
    for (const VSet& f : faces) out.maximal_faces.push_back(f.to_indices());
    std::sort(out.maximal_faces.begin(), out.maximal_faces.end());
    return out;
}

}  // namespace

std::vector<int> PolytopalComplex::maximal_faces() const {
    std::vector<int> ids;
    for (std::size_t i = 0; i < member.size(); ++i)
        if (member[i]) ids.push_back(static_cast<int>(i));
    return maximal_of(*lat, std::move(ids));
}

PolytopalComplex face_complex(const FaceLattice& lat) {
    PolytopalComplex c;
    c.lat = &lat;
    c.member.assign(lat.faces.size(), 1);
    return c;
}

PolytopalComplex boundary_complex(const FaceLattice& lat) {
    PolytopalComplex c = face_complex(lat);
    c.member[static_cast<std::size_t>(lat.top)] = 0;
    return c;
}

PolytopalComplex restrict_complex(const PolytopalComplex& c, const std::vector<int>& sigma) {
    VSet s;
    for (int v : sigma) {
        if (v < 0 || v >= c.lat->n_vertices) throw input_error("restrict: vertex index out of range");
        s.set(v);
    }
    PolytopalComplex out;
    out.lat = c.lat;
    out.member.assign(c.member.size(), 0);
    for (std::size_t i = 0; i < c.member.size(); ++i)
        if (c.member[i] && !c.lat->faces[i].intersects(s)) out.member[i] = 1;
    return out;
}

SimplicialComplex pulling_triangulation(const PolytopalComplex& c, const VertexOrder& order) {
    Puller puller(*c.lat, order);
    return to_complex(puller.pull_complex(c.member));
}

SimplicialComplex pulling_triangulation_flags(const PolytopalComplex& c, const VertexOrder& order) {
    Puller puller(*c.lat, order);  // reused for pos bookkeeping only
    const FaceLattice& lat = *c.lat;
    std::set<std::vector<int>> out;
    std::vector<int> apexes;

    auto dfs = [&](auto&& self, int face) -> void {
        int a = puller.front_vertex(lat.faces[static_cast<std::size_t>(face)]);
        apexes.push_back(a);
        if (lat.dim[static_cast<std::size_t>(face)] == 0) {
            std::vector<int> simplex = apexes;
            std::sort(simplex.begin(), simplex.end());
            out.insert(std::move(simplex));
        } else {
            for (int child : lat.children[static_cast<std::size_t>(face)])
                if (!lat.faces[static_cast<std::size_t>(child)].test(a)) self(self, child);
        }
        apexes.pop_back();
    };

    for (int m : c.maximal_faces()) dfs(dfs, m);
    if (out.empty()) return SimplicialComplex::empty_face_complex();
    SimplicialComplex sc;
    sc.maximal_faces.assign(out.begin(), out.end());
    return sc;
}

UnimodularityResult is_unimodular_triangulation(const IntegerPolytope& p, const LatticeBasis& basis,
                                                const SimplicialComplex& tri) {
    UnimodularityResult res;
    const int m = p.dim;
    VSet covered;
    for (const auto& f : tri.maximal_faces) {
        if (static_cast<int>(f.size()) != m + 1) {
            res.message = "triangulation is not pure: a maximal cell has " +
                          std::to_string(f.size()) + " vertices, expected " + std::to_string(m + 1);
            res.bad_simplex = f;
            return res;
        }
        for (int v : f) covered.set(v);
    }
    if (covered.count() != static_cast<int>(p.vertices.size())) {
        res.message = "triangulation does not use every vertex";
        return res;
    }

    const int cells = static_cast<int>(tri.maximal_faces.size());
    std::vector<char> bad(static_cast<std::size_t>(cells), 0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < cells; ++i) {
        if (!is_unimodular_simplex(p, basis, tri.maximal_faces[static_cast<std::size_t>(i)])) bad[static_cast<std::size_t>(i)] = 1;
    }
    for (int i = 0; i < cells; ++i)
        if (bad[static_cast<std::size_t>(i)]) {
            res.message = "maximal cell " + std::to_string(i) + " has lattice determinant != +-1";
            res.bad_simplex = tri.maximal_faces[static_cast<std::size_t>(i)];
            return res;
        }
    res.ok = true;
    return res;
}

CompressednessResult is_compressed_ordering(const IntegerPolytope& p, const FaceLattice& lat,
                                            const LatticeBasis& basis, const VertexOrder& order) {
    CompressednessResult res;
    res.triangulation = pulling_triangulation(face_complex(lat), order);
    res.detail = is_unimodular_triangulation(p, basis, res.triangulation);
    res.ok = res.detail.ok;
    return res;
}

JoinDecomposition join_decomposition_check(const IntegerPolytope& p, const FaceLattice& lat,
                                           const std::vector<int>& sigma, const VertexOrder& order,
                                           const SimplicialComplex* precomputed_full) {
    JoinDecomposition out;
    const int n = static_cast<int>(sigma.size());
    const int m = p.dim;
    if (static_cast<int>(order.seq.size()) < n ||
        !std::is_permutation(order.seq.begin(), order.seq.begin() + n, sigma.begin(), sigma.end())) {
        out.message = "order must start with the simplex vertices";
        return out;
    }

    SimplicialComplex full = precomputed_full ? *precomputed_full
                                              : pulling_triangulation(face_complex(lat), order);

    VertexOrder rest;
    rest.seq.assign(order.seq.begin() + n, order.seq.end());
    PolytopalComplex restricted = restrict_complex(face_complex(lat), sigma);
    out.delta = pulling_triangulation(restricted, rest);

    std::vector<int> sorted_sigma = sigma;
    std::sort(sorted_sigma.begin(), sorted_sigma.end());
    std::vector<std::vector<int>> joined;
    for (const auto& s : out.delta.maximal_faces) {
        std::vector<int> u = s;
        u.insert(u.end(), sorted_sigma.begin(), sorted_sigma.end());
        std::sort(u.begin(), u.end());
        joined.push_back(std::move(u));
    }
    std::sort(joined.begin(), joined.end());
    out.join_ok = (joined == full.maximal_faces);
    if (!out.join_ok) {
        out.message = "maximal cells are not the simplex joined with the restricted triangulation";
        return out;
    }

    out.h_delta = h_polynomial(out.delta);
    if (!(out.h_delta == h_polynomial(full))) {
        out.message = "join identity violated: h of the full triangulation differs";
        return out;
    }

    // sphere certificate via the quotient boundary
    out.quotient = quotient_polytope(p, lat, sigma);
    const int k = m - n;  // dimension of delta
    bool euler_ok = (euler_characteristic(out.delta) == ((k >= 0 && k % 2 == 0) ? 2 : 0));
    bool pure_ok = true;
    if (k >= 0)
        for (const auto& f : out.delta.maximal_faces)
            if (static_cast<int>(f.size()) != k + 1) pure_ok = false;
    out.sphere_ok = out.quotient.iso_checked && out.quotient.iso_ok &&
                    out.quotient.dim == m - n + 1 && euler_ok && pure_ok;
    if (!out.sphere_ok) {
        out.message = "sphere certificate failed: " +
                      (out.quotient.message.empty() ? std::string("euler/purity mismatch")
                                                    : out.quotient.message);
        if (!euler_ok) out.message += " [euler]";
        if (!pure_ok) out.message += " [purity]";
        return out;
    }
    out.ok = true;
    out.message = "ok";
    return out;
}

}  // namespace forge
