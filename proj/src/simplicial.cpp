#include "forge/simplicial.hpp"

#include <algorithm>
#include <unordered_set>

#include "forge/vset.hpp"

namespace forge {

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : maximal_faces) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    if (maximal_faces.empty()) return true;
    std::size_t s = maximal_faces[0].size();
    for (const auto& f : maximal_faces)
        if (f.size() != s) return false;
    return true;
}

std::vector<int> SimplicialComplex::vertices() const {
    std::set<int> vs;
    for (const auto& f : maximal_faces) vs.insert(f.begin(), f.end());
    return {vs.begin(), vs.end()};
}

std::size_t SimplicialComplex::vertex_count() const { return vertices().size(); }

bool SimplicialComplex::contains_face(const std::vector<int>& face) const {
    for (const auto& f : maximal_faces)
        if (std::includes(f.begin(), f.end(), face.begin(), face.end())) return true;
    return false;
}

void SimplicialComplex::canonicalize() {
    for (auto& f : maximal_faces) std::sort(f.begin(), f.end());
    std::sort(maximal_faces.begin(), maximal_faces.end());
    maximal_faces.erase(std::unique(maximal_faces.begin(), maximal_faces.end()),
                        maximal_faces.end());
    std::vector<std::vector<int>> keep;
    for (std::size_t i = 0; i < maximal_faces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < maximal_faces.size() && !dominated; ++j) {
            if (i == j || maximal_faces[j].size() <= maximal_faces[i].size()) continue;
            dominated = std::includes(maximal_faces[j].begin(), maximal_faces[j].end(),
                                      maximal_faces[i].begin(), maximal_faces[i].end());
        }
        if (!dominated) keep.push_back(maximal_faces[i]);
    }
    maximal_faces = std::move(keep);
}

std::vector<Int> f_vector(const SimplicialComplex& c) {
    const int d = c.dimension();
    if (d < 0) return {};
    // label -> dense index, subsets enumerated per maximal face
    std::vector<int> labels = c.vertices();
    if (labels.size() > VSet::kMaxVertices) throw budget_error("complex has too many vertices");
    std::unordered_set<VSet, VSetHash> seen;
    std::vector<Int> f(static_cast<std::size_t>(d) + 1, Int(0));
    for (const auto& face : c.maximal_faces) {
        if (face.size() > 30)
            throw budget_error("f_vector: a maximal face has more than 30 vertices");
        std::vector<int> dense;
        for (int v : face)
            dense.push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()));
        const std::size_t k = dense.size();
        for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
            VSet s;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1ULL << b)) s.set(dense[b]);
            if (seen.insert(s).second) ++f[static_cast<std::size_t>(s.count()) - 1];
        }
    }
    return f;
}

IntPolynomial h_polynomial(const SimplicialComplex& c) {
    if (c.is_void()) throw input_error("h_polynomial: void complex");
    std::vector<Int> f = f_vector(c);
    HVector h = h_from_f(f, c.dimension() + 1);
    return IntPolynomial(h.entries);
}

Int euler_characteristic(const SimplicialComplex& c) {
    Int chi = 0;
    std::vector<Int> f = f_vector(c);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (i % 2) chi -= f[i];
        else chi += f[i];
    return chi;
}

SimplicialComplex simplicial_join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<int> va = a.vertices(), vb = b.vertices();
    std::vector<int> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (!common.empty()) throw input_error("simplicial_join: overlapping vertex labels");
    SimplicialComplex out;
    for (const auto& fa : a.maximal_faces)
        for (const auto& fb : b.maximal_faces) {
            std::vector<int> u = fa;
            u.insert(u.end(), fb.begin(), fb.end());
            std::sort(u.begin(), u.end());
            out.maximal_faces.push_back(std::move(u));
        }
    out.canonicalize();
    return out;
}

}  // namespace forge
