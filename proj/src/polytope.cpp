#include "forge/polytope.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace forge {

Int IntegerPolytope::facet_slack(int facet, int vertex) const {
    const LinearForm& f = facets[static_cast<std::size_t>(facet)];
    Int dot = 0;
    for (int j = 0; j < ambient_dim; ++j) dot += f.normal[static_cast<std::size_t>(j)] * vertices[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(j)];
    return f.offset - dot;
}

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

}  // namespace

ValidationReport validate_polytope(IntegerPolytope& p) {
    ValidationReport rep;
    const int q = p.ambient_dim;
    const int nv = static_cast<int>(p.vertices.size());
    if (q < 0) {
        rep.message = "negative ambient dimension";
        return rep;
    }
    if (nv == 0) {
        rep.message = "polytope has no vertices";
        return rep;
    }
    if (nv > VSet::kMaxVertices) {
        rep.message = "too many vertices (limit " + std::to_string(VSet::kMaxVertices) + ")";
        return rep;
    }
    for (int i = 0; i < nv; ++i)
        if (static_cast<int>(p.vertices[i].size()) != q) {
            rep.message = "vertex arity mismatch";
            rep.vertex = i;
            return rep;
        }
    for (const LinearForm& f : p.facets)
        if (static_cast<int>(f.normal.size()) != q) {
            rep.message = "facet normal arity mismatch";
            return rep;
        }
    for (const LinearForm& e : p.equalities)
        if (static_cast<int>(e.normal.size()) != q) {
            rep.message = "equality normal arity mismatch";
            return rep;
        }
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (p.vertices[i] == p.vertices[j]) {
                rep.message = "duplicate vertex";
                rep.vertex = j;
                return rep;
            }

    for (int i = 0; i < nv; ++i) {
        for (std::size_t e = 0; e < p.equalities.size(); ++e)
            if (dot(p.equalities[e].normal, p.vertices[i]) != p.equalities[e].offset) {
                rep.message = "vertex violates equality " + std::to_string(e);
                rep.vertex = i;
                return rep;
            }
        for (std::size_t f = 0; f < p.facets.size(); ++f)
            if (dot(p.facets[f].normal, p.vertices[i]) > p.facets[f].offset) {
                rep.message = "vertex violates facet inequality " + std::to_string(f);
                rep.vertex = i;
                rep.facet = static_cast<int>(f);
                return rep;
            }
    }

    const int m = affine_rank(p.vertices);
    IntMat eq_normals;
    for (const LinearForm& e : p.equalities) eq_normals.push_back(e.normal);
    const int eq_rank = int_rank(eq_normals);
    if (m != q - eq_rank) {
        rep.message = "affine hull mismatch: vertex rank " + std::to_string(m) +
                      " but equalities leave dimension " + std::to_string(q - eq_rank);
        return rep;
    }

    p.facet_tight.assign(p.facets.size(), VSet{});
    for (std::size_t f = 0; f < p.facets.size(); ++f) {
        std::vector<std::vector<Int>> tight_pts;
        for (int i = 0; i < nv; ++i)
            if (p.facet_slack(static_cast<int>(f), i) == 0) {
                p.facet_tight[f].set(i);
                tight_pts.push_back(p.vertices[i]);
            }
        if (tight_pts.empty()) {
            rep.message = "facet " + std::to_string(f) + " is tight on no vertex";
            rep.facet = static_cast<int>(f);
            return rep;
        }
        if (static_cast<int>(tight_pts.size()) == nv) {
            rep.message = "facet " + std::to_string(f) + " contains every vertex";
            rep.facet = static_cast<int>(f);
            return rep;
        }
        if (affine_rank(tight_pts) != m - 1) {
            rep.message = "facet " + std::to_string(f) + " tight set has affine rank " +
                          std::to_string(affine_rank(tight_pts)) + ", expected " + std::to_string(m - 1);
            rep.facet = static_cast<int>(f);
            return rep;
        }
    }
    for (std::size_t f = 0; f < p.facets.size(); ++f)
        for (std::size_t g = f + 1; g < p.facets.size(); ++g)
            if (p.facet_tight[f] == p.facet_tight[g]) {
                rep.message = "facets " + std::to_string(f) + " and " + std::to_string(g) +
                              " have identical tight sets";
                rep.facet = static_cast<int>(g);
                return rep;
            }

    // vertex sharpness: the constraints active at a vertex must pin it down,
    // otherwise an inequality is missing from the H-representation
    for (int i = 0; i < nv; ++i) {
        IntMat active = eq_normals;
        for (std::size_t f = 0; f < p.facets.size(); ++f)
            if (p.facet_tight[f].test(i)) active.push_back(p.facets[f].normal);
        if (int_rank(active) != q) {
            rep.message = "vertex " + std::to_string(i) +
                          " is not cut out by its active constraints (missing facet?)";
            rep.vertex = i;
            return rep;
        }
    }

    p.dim = m;
    p.validated = true;
    rep.ok = true;
    rep.dim = m;
    rep.message = "ok";
    return rep;
}

void require_valid(IntegerPolytope& p) {
    if (p.validated) return;
    ValidationReport rep = validate_polytope(p);
    if (!rep.ok) throw input_error("invalid polytope" + (p.id.empty() ? "" : " " + p.id) + ": " + rep.message);
}

LatticeBasis saturated_lattice_basis(const IntegerPolytope& p) {
    if (!p.validated) throw input_error("saturated_lattice_basis: polytope not validated");
    LatticeBasis L;
    L.origin = p.vertices[0];
    IntMat diffs;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        std::vector<Int> d(static_cast<std::size_t>(p.ambient_dim));
        for (int j = 0; j < p.ambient_dim; ++j) d[static_cast<std::size_t>(j)] = p.vertices[i][static_cast<std::size_t>(j)] - L.origin[static_cast<std::size_t>(j)];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) {
        L.basis = {};
        return L;
    }
    IntMat sat = saturate_rows(diffs);
    // saturate_rows falls back to the identity when the kernel is empty; trim
    // to the actual rank in that case
    int r = int_rank(diffs);
    if (static_cast<int>(sat.size()) != r) throw input_error("saturated basis rank mismatch");
    L.basis = std::move(sat);

    // pick pivot columns for the coordinate solver
    const int m = L.rank();
    IntMat cols_so_far;
    for (int j = 0; j < p.ambient_dim && static_cast<int>(L.pivot_cols.size()) < m; ++j) {
        IntMat trial = cols_so_far;
        std::vector<Int> col(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) col[static_cast<std::size_t>(i)] = L.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        trial.push_back(col);
        if (int_rank(trial) == static_cast<int>(trial.size())) {
            cols_so_far = std::move(trial);
            L.pivot_cols.push_back(j);
        }
    }
    if (static_cast<int>(L.pivot_cols.size()) != m) throw input_error("lattice basis is rank deficient");
    RatMat s(static_cast<std::size_t>(m), std::vector<Rat>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = Rat(L.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(L.pivot_cols[static_cast<std::size_t>(k)])]);
    auto inv = rat_inverse(std::move(s));
    if (!inv) throw input_error("lattice basis pivot block is singular");
    L.pivot_inverse = std::move(*inv);
    return L;
}

std::vector<Int> LatticeBasis::coords(const std::vector<Int>& point) const {
    const int m = rank();
    const int q = static_cast<int>(origin.size());
    std::vector<Int> diff(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) diff[static_cast<std::size_t>(j)] = point[static_cast<std::size_t>(j)] - origin[static_cast<std::size_t>(j)];
    // c solves c * basis = diff; restrict to pivot columns and apply the inverse
    std::vector<Rat> c(static_cast<std::size_t>(m), Rat(0));
    for (int k = 0; k < m; ++k) {
        Rat acc = 0;
        for (int j = 0; j < m; ++j) acc += Rat(diff[static_cast<std::size_t>(pivot_cols[static_cast<std::size_t>(j)])]) * pivot_inverse[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        c[static_cast<std::size_t>(k)] = acc;
    }
    // verify the full system and integrality
    std::vector<Int> out(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        if (c[static_cast<std::size_t>(k)].get_den() != 1)
            throw input_error("point is not in the saturated lattice");
        out[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)].get_num();
    }
    for (int j = 0; j < q; ++j) {
        Int acc = 0;
        for (int k = 0; k < m; ++k) acc += out[static_cast<std::size_t>(k)] * basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        if (acc != diff[static_cast<std::size_t>(j)]) throw input_error("point is outside the affine hull");
    }
    return out;
}

bool is_unimodular_simplex(const IntegerPolytope& p, const LatticeBasis& basis,
                           const std::vector<int>& simplex_vertices) {
    const int m = basis.rank();
    if (static_cast<int>(simplex_vertices.size()) != m + 1)
        throw input_error("is_unimodular_simplex: expected " + std::to_string(m + 1) + " vertices");
    if (m == 0) return true;
    IntMat mat;
    const std::vector<Int>& base = p.vertices[static_cast<std::size_t>(simplex_vertices[0])];
    std::vector<Int> base_coords = basis.coords(base);
    for (int i = 1; i <= m; ++i) {
        std::vector<Int> c = basis.coords(p.vertices[static_cast<std::size_t>(simplex_vertices[static_cast<std::size_t>(i)])]);
        for (int k = 0; k < m; ++k) c[static_cast<std::size_t>(k)] -= base_coords[static_cast<std::size_t>(k)];
        mat.push_back(std::move(c));
    }
    Int d = int_det(std::move(mat));
    return d == 1 || d == -1;
}

FaceLattice build_face_lattice(const IntegerPolytope& p, std::size_t max_faces) {
    if (!p.validated) throw input_error("build_face_lattice: polytope not validated");
    const int nv = static_cast<int>(p.vertices.size());
    FaceLattice lat;
    lat.n_vertices = nv;

    std::unordered_map<VSet, int, VSetHash> seen;
    std::vector<VSet> faces;
    VSet full = VSet::full(nv);
    faces.push_back(full);
    seen.emplace(full, 0);
    for (std::size_t head = 0; head < faces.size(); ++head) {
        VSet cur = faces[head];
        for (const VSet& tight : p.facet_tight) {
            VSet next = cur & tight;
            if (next.empty() || seen.count(next)) continue;
            if (faces.size() >= max_faces)
                throw budget_error("face lattice exceeds the face budget (" +
                                   std::to_string(max_faces) + ")");
            seen.emplace(next, static_cast<int>(faces.size()));
            faces.push_back(next);
        }
    }

    // dimensions by exact affine rank
    std::vector<int> dims(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        std::vector<std::vector<Int>> pts;
        for (int v : faces[i].to_indices()) pts.push_back(p.vertices[static_cast<std::size_t>(v)]);
        dims[i] = affine_rank(pts);
    }

    std::vector<int> order(faces.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (dims[static_cast<std::size_t>(a)] != dims[static_cast<std::size_t>(b)]) return dims[static_cast<std::size_t>(a)] < dims[static_cast<std::size_t>(b)];
        return faces[static_cast<std::size_t>(a)] < faces[static_cast<std::size_t>(b)];
    });
    lat.faces.resize(faces.size());
    lat.dim.resize(faces.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        lat.faces[i] = faces[static_cast<std::size_t>(order[i])];
        lat.dim[i] = dims[static_cast<std::size_t>(order[i])];
        lat.index.emplace(lat.faces[i], static_cast<int>(i));
    }
    lat.top = lat.index_of(full);

    // codim-1 subfaces; the lattice is graded so covers sit one dimension down
    std::vector<std::vector<int>> by_dim(static_cast<std::size_t>(p.dim) + 1);
    for (std::size_t i = 0; i < lat.faces.size(); ++i) by_dim[static_cast<std::size_t>(lat.dim[i])].push_back(static_cast<int>(i));
    lat.children.assign(lat.faces.size(), {});
    for (std::size_t i = 0; i < lat.faces.size(); ++i) {
        int d = lat.dim[i];
        if (d == 0) continue;
        for (int j : by_dim[static_cast<std::size_t>(d) - 1])
            if (lat.faces[static_cast<std::size_t>(j)].subset_of(lat.faces[i])) lat.children[i].push_back(j);
    }

    lat.containing_facets.assign(lat.faces.size(), {});
    for (std::size_t i = 0; i < lat.faces.size(); ++i)
        for (std::size_t f = 0; f < p.facet_tight.size(); ++f)
            if (lat.faces[i].subset_of(p.facet_tight[f])) lat.containing_facets[i].push_back(static_cast<int>(f));

    lat.vertex_face_ids.assign(static_cast<std::size_t>(nv), -1);
    for (int v = 0; v < nv; ++v) {
        int id = lat.index_of(VSet::single(v));
        if (id < 0) throw input_error("face lattice is missing a vertex face");
        lat.vertex_face_ids[static_cast<std::size_t>(v)] = id;
    }
    return lat;
}

SpecialSimplexCertificate verify_special_simplex(const IntegerPolytope& p,
                                                 const std::vector<int>& sigma) {
    SpecialSimplexCertificate cert;
    cert.vertex_indices = sigma;
    cert.n = static_cast<int>(sigma.size());
    if (sigma.empty()) {
        cert.message = "empty vertex list";
        return cert;
    }
    VSet sset;
    std::vector<std::vector<Int>> pts;
    for (int v : sigma) {
        if (v < 0 || v >= static_cast<int>(p.vertices.size())) {
            cert.message = "vertex index out of range";
            return cert;
        }
        if (sset.test(v)) {
            cert.message = "repeated vertex index";
            return cert;
        }
        sset.set(v);
        pts.push_back(p.vertices[static_cast<std::size_t>(v)]);
    }
    if (affine_rank(pts) != cert.n - 1) {
        cert.message = "vertices are not affinely independent";
        return cert;
    }
    for (std::size_t f = 0; f < p.facet_tight.size(); ++f) {
        int c = (p.facet_tight[f] & sset).count();
        cert.per_facet_counts.push_back(c);
        if (c != cert.n - 1 && cert.first_bad_facet < 0) {
            cert.first_bad_facet = static_cast<int>(f);
            cert.message = "facet " + std::to_string(f) + " contains " + std::to_string(c) +
                           " simplex vertices, expected " + std::to_string(cert.n - 1);
        }
    }
    if (cert.first_bad_facet < 0) {
        cert.ok = true;
        cert.message = "ok";
    }
    return cert;
}

namespace {

struct HintSearch {
    const IntegerPolytope& p;
    const std::vector<Int>& beta;
    std::vector<int> chosen;
    std::vector<Int> remaining;
    SpecialSimplexCertificate found;
    bool done = false;

    void run() {
        // exact-cover style: always branch on the lowest coordinate still short
        if (done) return;
        int pivot = -1;
        for (std::size_t j = 0; j < remaining.size(); ++j)
            if (remaining[j] > 0) {
                pivot = static_cast<int>(j);
                break;
            }
        if (pivot < 0) {
            SpecialSimplexCertificate cert = verify_special_simplex(p, chosen);
            if (cert.ok) {
                found = cert;
                done = true;
            }
            return;
        }
        // branching on the first uncovered coordinate already makes every
        // solution unique, so all vertices covering it are candidates
        for (int v = 0; v < static_cast<int>(p.vertices.size()) && !done; ++v) {
            const auto& vert = p.vertices[static_cast<std::size_t>(v)];
            if (vert[static_cast<std::size_t>(pivot)] == 0) continue;
            bool fits = true;
            for (std::size_t j = 0; j < remaining.size(); ++j)
                if (vert[j] > remaining[j]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            // disjoint supports: every nonzero coordinate must still be fully unclaimed
            bool disjoint = true;
            for (std::size_t j = 0; j < remaining.size(); ++j)
                if (vert[j] != 0 && remaining[j] != beta[j]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            for (std::size_t j = 0; j < remaining.size(); ++j) remaining[j] -= vert[j];
            chosen.push_back(v);
            run();
            chosen.pop_back();
            for (std::size_t j = 0; j < remaining.size(); ++j) remaining[j] += vert[j];
        }
    }
};

struct ExhaustiveSearch {
    const IntegerPolytope& p;
    int n = 0;
    std::vector<int> chosen;
    std::vector<int> facet_counts;
    SpecialSimplexCertificate found;
    bool done = false;

    void run(int start) {
        if (done) return;
        int k = static_cast<int>(chosen.size());
        if (k == n) {
            SpecialSimplexCertificate cert = verify_special_simplex(p, chosen);
            if (cert.ok) {
                found = cert;
                done = true;
            }
            return;
        }
        for (int v = start; v < static_cast<int>(p.vertices.size()) && !done; ++v) {
            bool feasible = true;
            for (std::size_t f = 0; f < p.facet_tight.size(); ++f) {
                int c = facet_counts[f] + (p.facet_tight[f].test(v) ? 1 : 0);
                int could_add = n - k - 1;
                if (c > n - 1 || c + could_add < n - 1) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            for (std::size_t f = 0; f < p.facet_tight.size(); ++f)
                if (p.facet_tight[f].test(v)) ++facet_counts[f];
            chosen.push_back(v);
            run(v + 1);
            chosen.pop_back();
            for (std::size_t f = 0; f < p.facet_tight.size(); ++f)
                if (p.facet_tight[f].test(v)) --facet_counts[f];
        }
    }
};

}  // namespace

SpecialSimplexSearch find_special_simplex(const IntegerPolytope& p, const std::vector<Int>* hint_beta,
                                          int size_bound, int vertex_bound) {
    if (!p.validated) throw input_error("find_special_simplex: polytope not validated");
    SpecialSimplexSearch res;
    if (hint_beta) {
        if (static_cast<int>(hint_beta->size()) != p.ambient_dim)
            throw input_error("hint vector arity mismatch");
        HintSearch search{p, *hint_beta, {}, *hint_beta, {}, false};
        search.run();
        if (search.done) {
            res.outcome = SearchOutcome::found;
            res.cert = search.found;
            return res;
        }
        res.outcome = SearchOutcome::none;
        res.note = "no disjoint-support vertex decomposition of the hint vector is a special simplex";
        return res;
    }
    if (static_cast<int>(p.vertices.size()) > vertex_bound) {
        res.outcome = SearchOutcome::inconclusive;
        res.note = "vertex count exceeds the exhaustive-search bound " + std::to_string(vertex_bound);
        return res;
    }
    int max_n = std::min(size_bound, p.dim + 1);
    for (int n = 1; n <= max_n; ++n) {
        ExhaustiveSearch search{p, n, {}, std::vector<int>(p.facet_tight.size(), 0), {}, false};
        search.run(0);
        if (search.done) {
            res.outcome = SearchOutcome::found;
            res.cert = search.found;
            return res;
        }
    }
    if (p.dim + 1 > size_bound) {
        res.outcome = SearchOutcome::inconclusive;
        res.note = "subset size bound " + std::to_string(size_bound) + " reached";
        return res;
    }
    res.outcome = SearchOutcome::none;
    res.note = "exhaustive search over all vertex subsets found none";
    return res;
}

FaceScanResult special_simplex_face_scan(const IntegerPolytope& p, const FaceLattice& lat,
                                         const SpecialSimplexCertificate& cert) {
    FaceScanResult out;
    VSet sset;
    for (int v : cert.vertex_indices) sset.set(v);
    const int n = cert.n;
    for (std::size_t i = 0; i < lat.faces.size(); ++i) {
        int k = p.dim - lat.dim[i];
        if (k < 1 || k > n - 1) continue;
        int have = (lat.faces[i] & sset).count();
        if (have < n - k) {
            out.witness = "codimension-" + std::to_string(k) + " face with vertex set {";
            bool first = true;
            for (int v : lat.faces[i].to_indices()) {
                if (!first) out.witness += ",";
                out.witness += std::to_string(v);
                first = false;
            }
            out.witness += "} contains only " + std::to_string(have) + " simplex vertices (needs " +
                           std::to_string(n - k) + ")";
            return out;
        }
    }
    out.ok = true;
    return out;
}

namespace {

std::vector<Rat> project_point(const RatMat& minv_t, const std::vector<Int>& x, int keep_from) {
    const int m = static_cast<int>(minv_t.size());
    std::vector<Rat> a(static_cast<std::size_t>(m), Rat(0));
    for (int i = 0; i < m; ++i) {
        Rat acc = 0;
        for (int j = 0; j < m; ++j) acc += minv_t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * Rat(x[static_cast<std::size_t>(j)]);
        a[static_cast<std::size_t>(i)] = acc;
    }
    return std::vector<Rat>(a.begin() + keep_from, a.end());
}

}  // namespace

QuotientPolytope quotient_polytope(const IntegerPolytope& p, const FaceLattice& lat,
                                   const std::vector<int>& sigma) {
    if (!p.validated) throw input_error("quotient_polytope: polytope not validated");
    QuotientPolytope out;
    const int n = static_cast<int>(sigma.size());
    const int m = p.dim;
    if (n < 1) throw input_error("quotient_polytope: empty simplex");

    LatticeBasis L = saturated_lattice_basis(p);
    std::vector<std::vector<Int>> w;  // lattice coordinates of every vertex
    for (const auto& v : p.vertices) w.push_back(L.coords(v));

    VSet sset;
    for (int v : sigma) sset.set(v);

    IntMat span_rows;
    for (int k = 1; k < n; ++k) {
        std::vector<Int> d(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) d[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])][static_cast<std::size_t>(j)] - w[static_cast<std::size_t>(sigma[0])][static_cast<std::size_t>(j)];
        span_rows.push_back(std::move(d));
    }
    if (int_rank(span_rows) != n - 1)
        throw input_error("quotient_polytope: simplex vertices are not affinely independent");

    out.dim = m - n + 1;
    const int d = out.dim;

    // extend the span rows to a full basis of the lattice-coordinate space
    IntMat mat = span_rows;
    for (int j = 0; j < m && static_cast<int>(mat.size()) < m; ++j) {
        IntMat trial = mat;
        std::vector<Int> e(static_cast<std::size_t>(m), Int(0));
        e[static_cast<std::size_t>(j)] = 1;
        trial.push_back(std::move(e));
        if (int_rank(trial) == static_cast<int>(trial.size())) mat = std::move(trial);
    }
    RatMat mt(static_cast<std::size_t>(m), std::vector<Rat>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mt[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = Rat(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    RatMat minv_t;
    if (m > 0) {
        auto inv = rat_inverse(std::move(mt));
        if (!inv) throw input_error("quotient_polytope: projection basis is singular");
        minv_t = std::move(*inv);
    }

    out.sigma_image = project_point(minv_t, w[static_cast<std::size_t>(sigma[0])], n - 1);
    for (int k = 1; k < n; ++k)
        if (project_point(minv_t, w[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])], n - 1) != out.sigma_image)
            throw input_error("quotient_polytope: simplex vertices do not project to one point");

    out.vertex_map.assign(p.vertices.size(), -1);
    std::map<std::vector<Rat>, int> image_ids;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (sset.test(static_cast<int>(i))) continue;
        std::vector<Rat> u = project_point(minv_t, w[i], n - 1);
        auto [it, inserted] = image_ids.emplace(u, static_cast<int>(out.vertices.size()));
        if (inserted) out.vertices.push_back(u);
        else {
            out.message = "projection identifies vertices " + std::to_string(i) + " and an earlier one";
            // keep going: the isomorphism check below will fail and report
        }
        out.vertex_map[i] = it->second;
    }

    // with the whole vertex set in the simplex the quotient is a point
    const bool sigma_in_boundary = [&] {
        for (const VSet& tight : p.facet_tight)
            if (sset.subset_of(tight)) return true;
        return false;
    }();
    if (sigma_in_boundary) {
        out.iso_checked = false;
        out.message = "simplex lies in the boundary; face comparison skipped";
        return out;
    }
    out.iso_checked = true;

    if (!out.message.empty()) return out;  // vertex collision already fatal

    // candidate facets of Q = maximal faces of P avoiding the simplex
    std::vector<int> avoiding;
    for (std::size_t i = 0; i < lat.faces.size(); ++i)
        if (!lat.faces[i].intersects(sset)) avoiding.push_back(static_cast<int>(i));
    std::vector<int> maximal;
    for (int i : avoiding) {
        bool top_level = true;
        for (int j : avoiding)
            if (i != j && lat.faces[static_cast<std::size_t>(i)].subset_of(lat.faces[static_cast<std::size_t>(j)])) {
                top_level = false;
                break;
            }
        if (top_level) maximal.push_back(i);
    }

    std::vector<VSet> q_facets;
    for (int fi : maximal) {
        std::vector<int> members = lat.faces[static_cast<std::size_t>(fi)].to_indices();
        RatMat rows;
        for (int v : members) {
            std::vector<Rat> row = out.vertices[static_cast<std::size_t>(out.vertex_map[static_cast<std::size_t>(v)])];
            row.push_back(1);
            rows.push_back(std::move(row));
        }
        RatMat null = rat_nullspace(std::move(rows));
        if (null.size() != 1) {
            out.iso_ok = false;
            out.message = "face avoiding the simplex does not project to a hyperplane section";
            return out;
        }
        std::vector<Rat> c(null[0].begin(), null[0].end() - 1);
        Rat c0 = -null[0].back();
        Rat at_sigma = 0;
        for (int j = 0; j < d; ++j) at_sigma += c[static_cast<std::size_t>(j)] * out.sigma_image[static_cast<std::size_t>(j)];
        if (at_sigma == c0) {
            out.iso_ok = false;
            out.message = "simplex image lies on a candidate facet hyperplane";
            return out;
        }
        if (at_sigma > c0) {
            for (auto& x : c) x = -x;
            c0 = -c0;
        }
        VSet tight;
        for (std::size_t qi = 0; qi < out.vertices.size(); ++qi) {
            Rat val = 0;
            for (int j = 0; j < d; ++j) val += c[static_cast<std::size_t>(j)] * out.vertices[qi][static_cast<std::size_t>(j)];
            if (val > c0) {
                out.iso_ok = false;
                out.message = "candidate facet hyperplane fails to support the quotient";
                return out;
            }
            if (val == c0) tight.set(static_cast<int>(qi));
        }
        VSet expected;
        for (int v : members) expected.set(out.vertex_map[static_cast<std::size_t>(v)]);
        if (!(tight == expected)) {
            out.iso_ok = false;
            out.message = "candidate facet tight set does not match the projected face";
            return out;
        }
        q_facets.push_back(tight);
    }

    // boundary complex of Q: closure of the facet tight sets under intersection
    std::unordered_map<VSet, int, VSetHash> seen;
    std::vector<VSet> bfaces;
    for (const VSet& f : q_facets)
        if (!f.empty() && !seen.count(f)) {
            seen.emplace(f, 1);
            bfaces.push_back(f);
        }
    for (std::size_t head = 0; head < bfaces.size(); ++head) {
        VSet cur = bfaces[head];
        for (const VSet& f : q_facets) {
            VSet next = cur & f;
            if (next.empty() || seen.count(next)) continue;
            seen.emplace(next, 1);
            bfaces.push_back(next);
        }
    }
    std::sort(bfaces.begin(), bfaces.end(), [](const VSet& a, const VSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    out.boundary_faces = bfaces;

    // every quotient vertex must be pinned by its facets
    for (std::size_t qi = 0; qi < out.vertices.size(); ++qi) {
        int on = 0;
        for (const VSet& f : q_facets)
            if (f.test(static_cast<int>(qi))) ++on;
        if (on < d) {
            out.iso_ok = false;
            out.message = "quotient vertex " + std::to_string(qi) + " lies on fewer than dim facets";
            return out;
        }
    }

    // compare with the faces of P avoiding the simplex, mapped through the projection
    std::vector<VSet> mapped;
    for (int i : avoiding) {
        VSet img;
        for (int v : lat.faces[static_cast<std::size_t>(i)].to_indices()) img.set(out.vertex_map[static_cast<std::size_t>(v)]);
        mapped.push_back(img);
    }
    std::sort(mapped.begin(), mapped.end(), [](const VSet& a, const VSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    if (mapped != out.boundary_faces) {
        out.iso_ok = false;
        out.message = "faces avoiding the simplex do not biject with the quotient boundary";
        return out;
    }
    out.iso_ok = true;
    out.message = "ok";
    return out;
}

}  // namespace forge
