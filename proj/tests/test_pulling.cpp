#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "forge/families.hpp"
#include "forge/pulling.hpp"
#include "forge/simplicial.hpp"
#include "helpers.hpp"

using namespace forge;
using namespace forge::testing;

namespace {

IntegerPolytope hexagon() {
    IntegerPolytope p;
    p.id = "hexagon";
    p.ambient_dim = 2;
    p.vertices = {{0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 2}, {3, 1}};
    p.facets.push_back(form({0, -1}, 0));
    p.facets.push_back(form({1, -1}, 2));
    p.facets.push_back(form({1, 1}, 4));
    p.facets.push_back(form({0, 1}, 2));
    p.facets.push_back(form({-1, 1}, 1));
    p.facets.push_back(form({-1, -1}, -1));
    require_valid(p);
    return p;
}

VertexOrder identity_order(const IntegerPolytope& p) {
    VertexOrder o;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) o.seq.push_back(static_cast<int>(i));
    return o;
}

}  // namespace

TEST_CASE("square pulls into the two triangles at the front vertex") {
    IntegerPolytope sq = unit_square();
    FaceLattice lat = build_face_lattice(sq);
    VertexOrder order = identity_order(sq);  // front vertex (0,0)
    SimplicialComplex tri = pulling_triangulation(face_complex(lat), order);
    std::vector<std::vector<int>> expect = {{0, 1, 3}, {0, 2, 3}};
    CHECK(tri.maximal_faces == expect);
}

TEST_CASE("already simplicial complexes are fixed points") {
    IntegerPolytope hex = hexagon();
    FaceLattice lat = build_face_lattice(hex);
    PolytopalComplex boundary = boundary_complex(lat);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        VertexOrder order{shuffled_range(6, seed)};
        SimplicialComplex tri = pulling_triangulation(boundary, order);
        CHECK(tri.maximal_faces.size() == 6);
        for (const auto& f : tri.maximal_faces) CHECK(f.size() == 2);
        // edges are exactly the hexagon's edges
        std::vector<std::vector<int>> edges;
        for (std::size_t i = 0; i < lat.faces.size(); ++i)
            if (lat.dim[i] == 1) edges.push_back(lat.faces[i].to_indices());
        std::sort(edges.begin(), edges.end());
        CHECK(tri.maximal_faces == edges);
    }
}

TEST_CASE("triangle face complex pulls to itself") {
    IntegerPolytope tri = unit_triangle();
    FaceLattice lat = build_face_lattice(tri);
    SimplicialComplex t = pulling_triangulation(face_complex(lat), identity_order(tri));
    CHECK(t.maximal_faces == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("restriction removes stars and keeps the rest") {
    IntegerPolytope sq = unit_square();
    FaceLattice lat = build_face_lattice(sq);
    PolytopalComplex full = face_complex(lat);

    PolytopalComplex no_corner = restrict_complex(full, {0});
    std::vector<int> maxes = no_corner.maximal_faces();
    // path of two edges opposite the removed corner
    CHECK(maxes.size() == 2);
    for (int id : maxes) CHECK(lat.dim[static_cast<std::size_t>(id)] == 1);

    PolytopalComplex same = restrict_complex(full, {});
    CHECK(same.member == full.member);
}

TEST_CASE("flag characterization agrees with the recursion") {
    // square, triangle, hexagon boundary, octahedron, B3, order polytopes
    std::vector<IntegerPolytope> polys;
    polys.push_back(unit_square());
    polys.push_back(unit_triangle());
    polys.push_back(octahedron());
    polys.push_back(birkhoff(3));
    polys.push_back(order_polytope(antichain_poset(3)).polytope);
    polys.push_back(order_polytope(bipartite_poset(2, 2)).polytope);
    for (IntegerPolytope& p : polys) {
        FaceLattice lat = build_face_lattice(p);
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            VertexOrder order{shuffled_range(static_cast<int>(p.vertices.size()), seed * 77 + 5)};
            SimplicialComplex a = pulling_triangulation(face_complex(lat), order);
            SimplicialComplex b = pulling_triangulation_flags(face_complex(lat), order);
            CHECK(a.maximal_faces == b.maximal_faces);
            SimplicialComplex c = pulling_triangulation(boundary_complex(lat), order);
            SimplicialComplex d = pulling_triangulation_flags(boundary_complex(lat), order);
            CHECK(c.maximal_faces == d.maximal_faces);
            // restrictions as well: drop the front vertex of the order
            PolytopalComplex rest = restrict_complex(face_complex(lat), {order.seq[0]});
            SimplicialComplex e = pulling_triangulation(rest, order);
            SimplicialComplex f = pulling_triangulation_flags(rest, order);
            CHECK(e.maximal_faces == f.maximal_faces);
        }
    }
}

TEST_CASE("pulling a restriction ignores the absent vertices of the order") {
    IntegerPolytope b3 = birkhoff(3);
    FaceLattice lat = build_face_lattice(b3);
    std::vector<int> sigma = birkhoff_cyclic_simplex(3, b3);
    PolytopalComplex rest = restrict_complex(face_complex(lat), sigma);
    VertexOrder full = pipeline_order(b3, sigma);
    VertexOrder induced;
    induced.seq.assign(full.seq.begin() + 3, full.seq.end());
    CHECK(pulling_triangulation(rest, full) == pulling_triangulation(rest, induced));
}

TEST_CASE("pulling is deterministic") {
    IntegerPolytope b3 = birkhoff(3);
    FaceLattice lat = build_face_lattice(b3);
    VertexOrder order{shuffled_range(6, 99)};
    SimplicialComplex a = pulling_triangulation(face_complex(lat), order);
    SimplicialComplex b = pulling_triangulation(face_complex(lat), order);
    CHECK(a.maximal_faces == b.maximal_faces);
}

TEST_CASE("B3 triangulations are pure with three maximal cells") {
    IntegerPolytope b3 = birkhoff(3);
    FaceLattice lat = build_face_lattice(b3);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        VertexOrder order{shuffled_range(6, seed)};
        SimplicialComplex tri = pulling_triangulation(face_complex(lat), order);
        CHECK(tri.maximal_faces.size() == 3);  // normalized volume of the polytope
        for (const auto& f : tri.maximal_faces) CHECK(f.size() == 5);
    }
}

TEST_CASE("membership queries see the downward closure") {
    SimplicialComplex c{{{0, 1, 2}, {2, 3}}};
    CHECK(c.contains_face({0, 1, 2}));
    CHECK(c.contains_face({0, 2}));
    CHECK(c.contains_face({3}));
    CHECK(c.contains_face({}));
    CHECK_FALSE(c.contains_face({0, 3}));
    CHECK_FALSE(c.contains_face({1, 3}));
    CHECK_FALSE(c.is_pure());
}

TEST_CASE("f and h of small complexes") {
    SimplicialComplex triangle_boundary{{{0, 1}, {0, 2}, {1, 2}}};
    CHECK(f_vector(triangle_boundary) == std::vector<Int>{3, 3});
    CHECK(h_polynomial(triangle_boundary) == IntPolynomial({1, 1, 1}));

    SimplicialComplex vertex{{{7}}};
    CHECK(f_vector(vertex) == std::vector<Int>{1});
    CHECK(h_polynomial(vertex) == IntPolynomial({1}));

    SimplicialComplex edge{{{0, 1}}};
    CHECK(f_vector(edge) == std::vector<Int>{2, 1});
    CHECK(h_polynomial(edge) == IntPolynomial({1}));

    SimplicialComplex empty = SimplicialComplex::empty_face_complex();
    CHECK(h_polynomial(empty) == IntPolynomial({1}));
    CHECK(euler_characteristic(empty) == 0);
}

TEST_CASE("simplicial joins multiply h-polynomials") {
    SimplicialComplex pt1{{{0}}}, pt2{{{1}}};
    SimplicialComplex join1 = simplicial_join(pt1, pt2);
    CHECK(join1.maximal_faces == std::vector<std::vector<int>>{{0, 1}});

    SimplicialComplex s0a{{{0}, {1}}}, s0b{{{2}, {3}}};
    SimplicialComplex cycle4 = simplicial_join(s0a, s0b);
    CHECK(cycle4.maximal_faces.size() == 4);
    CHECK(h_polynomial(cycle4) == IntPolynomial({1, 2, 1}));
    CHECK(h_polynomial(s0a) * h_polynomial(s0b) == h_polynomial(cycle4));

    // joining with a full simplex leaves h unchanged
    SimplicialComplex simplex{{{7, 8, 9}}};
    SimplicialComplex joined = simplicial_join(simplex, s0a);
    CHECK(h_polynomial(joined) == h_polynomial(s0a));

    CHECK_THROWS_AS(simplicial_join(s0a, SimplicialComplex{{{1, 4}}}), input_error);

    // the empty-face complex is the join identity
    SimplicialComplex empty = SimplicialComplex::empty_face_complex();
    CHECK(simplicial_join(empty, s0a) == s0a);
}

TEST_CASE("compressedness of small polytopes") {
    IntegerPolytope sq = unit_square();
    FaceLattice lat = build_face_lattice(sq);
    LatticeBasis basis = saturated_lattice_basis(sq);
    // all 24 orders of the square are compressed
    std::vector<int> perm = {0, 1, 2, 3};
    do {
        VertexOrder order{perm};
        CHECK(is_compressed_ordering(sq, lat, basis, order).ok);
    } while (std::next_permutation(perm.begin(), perm.end()));

    IntegerPolytope b3 = birkhoff(3);
    FaceLattice bl = build_face_lattice(b3);
    LatticeBasis bb = saturated_lattice_basis(b3);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        VertexOrder order{shuffled_range(6, seed * 13)};
        CHECK(is_compressed_ordering(b3, bl, bb, order).ok);
    }

    // the wide rectangle never is: the long edges force determinant 2 cells
    IntegerPolytope rect = rectangle_2x1();
    FaceLattice rl = build_face_lattice(rect);
    LatticeBasis rb = saturated_lattice_basis(rect);
    std::vector<int> rp = {0, 1, 2, 3};
    do {
        VertexOrder order{rp};
        CHECK_FALSE(is_compressed_ordering(rect, rl, rb, order).ok);
    } while (std::next_permutation(rp.begin(), rp.end()));
}

TEST_CASE("unimodular triangulation check rejects coarse cells") {
    IntegerPolytope rect = rectangle_2x1();
    FaceLattice lat = build_face_lattice(rect);
    LatticeBasis basis = saturated_lattice_basis(rect);
    SimplicialComplex tri = pulling_triangulation(face_complex(lat), identity_order(rect));
    UnimodularityResult res = is_unimodular_triangulation(rect, basis, tri);
    CHECK_FALSE(res.ok);
    CHECK_FALSE(res.bad_simplex.empty());

    // [0,2]^2 cut along a diagonal: both corner cells have determinant 4
    IntegerPolytope big;
    big.ambient_dim = 2;
    big.vertices = {{0, 0}, {0, 2}, {2, 0}, {2, 2}};
    big.facets.push_back(form({-1, 0}, 0));
    big.facets.push_back(form({0, -1}, 0));
    big.facets.push_back(form({1, 0}, 2));
    big.facets.push_back(form({0, 1}, 2));
    require_valid(big);
    LatticeBasis bb = saturated_lattice_basis(big);
    SimplicialComplex corners{{{0, 1, 2}, {1, 2, 3}}};
    UnimodularityResult coarse = is_unimodular_triangulation(big, bb, corners);
    CHECK_FALSE(coarse.ok);
}

TEST_CASE("join decomposition on B3") {
    IntegerPolytope b3 = birkhoff(3);
    FaceLattice lat = build_face_lattice(b3);
    std::vector<int> sigma = birkhoff_cyclic_simplex(3, b3);
    VertexOrder order = pipeline_order(b3, sigma);
    JoinDecomposition jd = join_decomposition_check(b3, lat, sigma, order);
    CHECK(jd.ok);
    CHECK(jd.join_ok);
    CHECK(jd.sphere_ok);
    CHECK(jd.h_delta == IntPolynomial({1, 1, 1}));
    // the restricted complex is a triangle boundary: pure one-dimensional
    CHECK(jd.delta.dimension() == 1);
    CHECK(jd.delta.maximal_faces.size() == 3);
}

TEST_CASE("join decomposition on the octahedron") {
    IntegerPolytope oct = octahedron();
    FaceLattice lat = build_face_lattice(oct);
    std::vector<int> sigma = {2, 3};  // opposite pair
    VertexOrder order = pipeline_order(oct, sigma);
    JoinDecomposition jd = join_decomposition_check(oct, lat, sigma, order);
    CHECK(jd.ok);
    CHECK(jd.h_delta == IntPolynomial({1, 2, 1}));  // quadrilateral boundary
}

TEST_CASE("join decomposition degenerate cases") {
    // a point with its only vertex
    IntegerPolytope pt = point_polytope();
    FaceLattice pl = build_face_lattice(pt);
    JoinDecomposition jd = join_decomposition_check(pt, pl, {0}, VertexOrder{{0}});
    CHECK(jd.ok);
    CHECK(jd.h_delta == IntPolynomial({1}));
    CHECK(jd.delta == SimplicialComplex::empty_face_complex());

    // a segment with both vertices
    IntegerPolytope seg = birkhoff(2);
    FaceLattice sl = build_face_lattice(seg);
    JoinDecomposition jd2 = join_decomposition_check(seg, sl, {0, 1}, VertexOrder{{0, 1}});
    CHECK(jd2.ok);
    CHECK(jd2.h_delta == IntPolynomial({1}));
}

TEST_CASE("restriction of B3 by the cyclic simplex is pure one dimensional") {
    IntegerPolytope b3 = birkhoff(3);
    FaceLattice lat = build_face_lattice(b3);
    std::vector<int> sigma = birkhoff_cyclic_simplex(3, b3);
    PolytopalComplex rest = restrict_complex(face_complex(lat), sigma);
    std::vector<int> maxes = rest.maximal_faces();
    CHECK(maxes.size() == 3);
    for (int id : maxes) CHECK(lat.dim[static_cast<std::size_t>(id)] == 1);
}

TEST_CASE("total normalized volume is independent of the order") {
    // the octahedron has no unimodular pulling triangulation, but the cell
    // determinants always sum to the same normalized volume
    IntegerPolytope oct = octahedron();
    FaceLattice lat = build_face_lattice(oct);
    LatticeBasis basis = saturated_lattice_basis(oct);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        VertexOrder order{shuffled_range(6, seed * 17)};
        SimplicialComplex tri = pulling_triangulation(face_complex(lat), order);
        Int volume = 0;
        for (const auto& cell : tri.maximal_faces) {
            IntMat mat;
            std::vector<Int> base = basis.coords(oct.vertices[static_cast<std::size_t>(cell[0])]);
            for (std::size_t i = 1; i < cell.size(); ++i) {
                std::vector<Int> c = basis.coords(oct.vertices[static_cast<std::size_t>(cell[i])]);
                for (std::size_t k = 0; k < c.size(); ++k) c[k] -= base[k];
                mat.push_back(std::move(c));
            }
            volume += abs(int_det(std::move(mat)));
        }
        CHECK(volume == 8);
    }
}

TEST_CASE("h is order-invariant across compressed orders") {
    IntegerPolytope b3 = birkhoff(3);
    FaceLattice lat = build_face_lattice(b3);
    IntPolynomial first;
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        VertexOrder order{shuffled_range(6, seed * 31)};
        IntPolynomial h = h_polynomial(pulling_triangulation(face_complex(lat), order));
        if (seed == 1) first = h;
        CHECK(h == first);
    }
}
