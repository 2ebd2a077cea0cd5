#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forge/ehrhart.hpp"
#include "forge/families.hpp"
#include "forge/io.hpp"
#include "helpers.hpp"

#include <sstream>

using namespace forge;
using namespace forge::testing;

TEST_CASE("counting basics") {
    IntegerPolytope b2 = birkhoff(2);
    for (long r = 0; r <= 6; ++r) CHECK(count_points(b2, r) == r + 1);

    IntegerPolytope b3 = birkhoff(3);
    CHECK(count_points(b3, 0) == 1);
    CHECK(count_points(b3, 1) == 6);
    CHECK(count_points(b3, 2) == 21);

    IntegerPolytope b4 = birkhoff(4);
    CHECK(count_points(b4, 1) == 24);
    CHECK(count_points(b4, 2) == 282);

    IntegerPolytope sq = unit_square();
    for (long r = 0; r <= 5; ++r) CHECK(count_points(sq, r) == (r + 1) * (r + 1));
}

TEST_CASE("5x5 line-sum counts match the published tables") {
    IntegerPolytope b5 = birkhoff(5);
    CHECK(count_points(b5, 1) == 120);
    CHECK(count_points(b5, 2) == 6210);
    CHECK(count_points(b5, 3) == 153040);
}

TEST_CASE("cube graph labelings") {
    MultiGraph q3;
    q3.p = 8;
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b) {
            int x = a ^ b;
            if (x == 1 || x == 2 || x == 4) q3.edges.emplace_back(a + 1, b + 1);
        }
    IntegerPolytope p = matching_polytope(q3);
    CHECK(p.vertices.size() == 9);
    CHECK(p.dim == 5);
    GraphSeries s = magic_labeling_series(q3);
    CHECK(s.series.numerator == IntPolynomial({1, 3, 3, 1}));
    CHECK(s.d == 3);

    // full pipeline with the three axis matchings (disjoint, summing to ones)
    auto ones = ones_minimal_element(p);
    REQUIRE(ones.has_value());
    CHECK(ones->second == 3);
    SpecialSimplexSearch found = find_special_simplex(p, &ones->first);
    REQUIRE(found.outcome == SearchOutcome::found);
    PipelineReport rep = run_pipeline(p, found.cert.vertex_indices,
                                      pipeline_order(p, found.cert.vertex_indices));
    CHECK(rep.pass);
    CHECK(rep.h_triangulation == IntPolynomial({1, 3, 3, 1}));
}

TEST_CASE("serial reference agrees with the parallel kernel") {
    std::vector<IntegerPolytope> polys;
    polys.push_back(birkhoff(3));
    polys.push_back(unit_square());
    polys.push_back(octahedron());
    polys.push_back(matching_polytope(cycle_graph(6)));
    polys.push_back(order_polytope(bipartite_poset(2, 2)).polytope);
    for (IntegerPolytope& p : polys)
        for (long r = 0; r <= 4; ++r) CHECK(count_points(p, r) == count_points_serial(p, r));
    IntegerPolytope b4 = birkhoff(4);
    for (long r = 0; r <= 3; ++r) CHECK(count_points(b4, r) == count_points_serial(b4, r));
}

TEST_CASE("counting is monotone in the dilate") {
    for (IntegerPolytope p : {birkhoff(3), octahedron(), unit_triangle()}) {
        Int prev = 0;
        for (long r = 0; r <= 5; ++r) {
            Int c = count_points(p, r);
            CHECK(c >= prev);
            prev = c;
        }
    }
}

TEST_CASE("the thread cap changes nothing but the worker count") {
    IntegerPolytope b3 = birkhoff(3);
    Int expect = count_points(b3, 3);
    setenv("EHRHART_FORGE_THREADS", "1", 1);
    CHECK(count_points(b3, 3) == expect);
    setenv("EHRHART_FORGE_THREADS", "7", 1);
    CHECK(count_points(b3, 3) == expect);
    unsetenv("EHRHART_FORGE_THREADS");
}

TEST_CASE("budget errors are reported, not truncated") {
    IntegerPolytope b3 = birkhoff(3);
    Budgets tight;
    tight.max_dilate = 2;
    CHECK_THROWS_AS(count_points(b3, 3, tight), budget_error);
    Budgets tiny;
    tiny.max_nodes = 10;
    CHECK_THROWS_AS(count_points(b3, 2, tiny), budget_error);
    CHECK_THROWS_AS(count_points_serial(b3, 2, tiny), budget_error);
}

TEST_CASE("point enumeration matches the counts") {
    IntegerPolytope b3 = birkhoff(3);
    for (long r = 0; r <= 3; ++r) {
        auto pts = enumerate_points(b3, r);
        CHECK(Int(pts.size()) == count_points(b3, r));
        for (const auto& x : pts) {
            for (const auto& e : b3.equalities) {
                Int dot = 0;
                for (std::size_t j = 0; j < x.size(); ++j) dot += e.normal[j] * x[j];
                CHECK(dot == e.offset * r);
            }
        }
    }
}

TEST_CASE("series by counting") {
    IntegerPolytope seg = birkhoff(2);
    CountingSeries s = series_by_counting(seg);
    CHECK(s.series.numerator == IntPolynomial({1}));
    CHECK(s.series.denom_exponent == 2);

    IntegerPolytope b3 = birkhoff(3);
    CountingSeries sb = series_by_counting(b3);
    CHECK(sb.series.numerator == IntPolynomial({1, 1, 1}));
    CHECK(sb.series.denom_exponent == 5);
    CHECK(sb.values == std::vector<Int>{1, 6, 21, 55, 120, 231});

    OrderPolytope oa = order_polytope(antichain_poset(3));
    CountingSeries so = series_by_counting(oa.polytope);
    CHECK(so.series.numerator == IntPolynomial({1, 4, 1}));
    CHECK(so.series.denom_exponent == 4);
}

TEST_CASE("series by triangulation") {
    IntegerPolytope sq = unit_square();
    FaceLattice lat = build_face_lattice(sq);
    LatticeBasis basis = saturated_lattice_basis(sq);
    VertexOrder order{{0, 1, 2, 3}};
    EhrhartSeries s = series_by_triangulation(sq, lat, basis, order);
    CHECK(s.numerator == IntPolynomial({1, 1}));
    CHECK(s.denom_exponent == 3);

    IntegerPolytope b3 = birkhoff(3);
    FaceLattice bl = build_face_lattice(b3);
    LatticeBasis bb = saturated_lattice_basis(b3);
    EhrhartSeries sb = series_by_triangulation(b3, bl, bb, pipeline_order(b3, {}));
    CHECK(sb.numerator == IntPolynomial({1, 1, 1}));
    CHECK(sb.denom_exponent == 5);

    IntegerPolytope pt = point_polytope();
    FaceLattice pl = build_face_lattice(pt);
    LatticeBasis pb = saturated_lattice_basis(pt);
    EhrhartSeries sp = series_by_triangulation(pt, pl, pb, VertexOrder{{0}});
    CHECK(sp.numerator == IntPolynomial({1}));
    CHECK(sp.denom_exponent == 1);

    // non-compressed order rejected with the offending cell
    IntegerPolytope rect = rectangle_2x1();
    FaceLattice rl = build_face_lattice(rect);
    LatticeBasis rb = saturated_lattice_basis(rect);
    CHECK_THROWS_AS(series_by_triangulation(rect, rl, rb, VertexOrder{{0, 1, 2, 3}}),
                    verification_error);
}

TEST_CASE("the octahedron is not compressed but still counts exactly") {
    // its pulling cells have lattice determinant 2, so the triangulation
    // route refuses; the counting route gives the centered octahedral numbers
    IntegerPolytope oct = octahedron();
    FaceLattice lat = build_face_lattice(oct);
    LatticeBasis basis = saturated_lattice_basis(oct);
    CHECK_FALSE(is_compressed_ordering(oct, lat, basis, pipeline_order(oct, {})).ok);
    CountingSeries s = series_by_counting(oct);
    CHECK(s.values == std::vector<Int>{1, 7, 25, 63, 129});
    CHECK(s.series.numerator == IntPolynomial({1, 3, 3, 1}));
}

TEST_CASE("both routes agree on the corpus") {
    std::vector<IntegerPolytope> polys;
    polys.push_back(birkhoff(2));
    polys.push_back(birkhoff(3));
    polys.push_back(unit_square());
    polys.push_back(unit_triangle());
    polys.push_back(matching_polytope(cycle_graph(6)));
    polys.push_back(matching_polytope(cycle_graph(8)));
    polys.push_back(matching_polytope(complete_bipartite(3, 3)));
    polys.push_back(order_polytope(antichain_poset(3)).polytope);
    polys.push_back(order_polytope(bipartite_poset(2, 2)).polytope);
    polys.push_back(order_polytope(chain_poset(4)).polytope);
    for (IntegerPolytope& p : polys) {
        FaceLattice lat = build_face_lattice(p);
        LatticeBasis basis = saturated_lattice_basis(p);
        EhrhartSeries tri = series_by_triangulation(p, lat, basis, pipeline_order(p, {}));
        CountingSeries cnt = series_by_counting(p);
        CHECK(tri.numerator == cnt.series.numerator);
        CHECK(tri.denom_exponent == cnt.series.denom_exponent);
    }
}

TEST_CASE("order reversing maps count the order polytope dilates") {
    // antichains: (r+1)^m
    for (int m = 1; m <= 4; ++m)
        for (long r = 0; r <= 4; ++r) {
            Int expect = 1;
            for (int i = 0; i < m; ++i) expect *= (r + 1);
            CHECK(order_reversing_count(antichain_poset(m), r) == expect);
        }
    // chains: binomial(r+m, m)
    for (int m = 1; m <= 5; ++m)
        for (long r = 0; r <= 5; ++r)
            CHECK(order_reversing_count(chain_poset(m), r) ==
                  binomial(Int(r + m), static_cast<unsigned long>(m)));
    CHECK(order_reversing_count(chain_poset(2), 2) == 6);

    // equals the lattice point counts of the order polytope
    for (Poset om : {antichain_poset(3), bipartite_poset(2, 2), chain_poset(3)}) {
        OrderPolytope op = order_polytope(om);
        for (long r = 0; r <= 4; ++r)
            CHECK(order_reversing_count(om, r) == count_points(op.polytope, r));
    }
}

TEST_CASE("magic square series") {
    EhrhartSeries s1 = magic_square_series(1);
    CHECK(s1.numerator == IntPolynomial({1}));
    CHECK(s1.denom_exponent == 1);

    EhrhartSeries s2 = magic_square_series(2);
    CHECK(s2.numerator == IntPolynomial({1}));
    CHECK(s2.denom_exponent == 2);

    EhrhartSeries s3 = magic_square_series(3);
    CHECK(s3.numerator == IntPolynomial({1, 1, 1}));
    CHECK(s3.denom_exponent == 5);
}

TEST_CASE("magic labeling series") {
    GraphSeries c6 = magic_labeling_series(cycle_graph(6));
    CHECK(c6.series.numerator == IntPolynomial({1}));
    CHECK(c6.m == 1);
    CHECK(c6.d == 0);
    IntegerPolytope pc6 = matching_polytope(cycle_graph(6));
    for (long r = 0; r <= 3; ++r) CHECK(count_points(pc6, r) == r + 1);

    GraphSeries k33 = magic_labeling_series(complete_bipartite(3, 3));
    CHECK(k33.series.numerator == IntPolynomial({1, 1, 1}));
    CHECK(k33.m == 4);
    CHECK(k33.n == 3);
    CHECK(k33.d == 2);
}

TEST_CASE("pipeline passes on B3") {
    IntegerPolytope b3 = birkhoff(3);
    std::vector<int> sigma = birkhoff_cyclic_simplex(3, b3);
    PipelineReport rep = run_pipeline(b3, sigma, pipeline_order(b3, sigma));
    CHECK(rep.pass);
    CHECK(rep.h_triangulation == IntPolynomial({1, 1, 1}));
    CHECK(rep.d == 2);
    CHECK(rep.g.all());
    for (const auto& s : rep.stages) CHECK(s.ok);
}

TEST_CASE("pipeline fails on the square with a non-special pair") {
    IntegerPolytope sq = unit_square();
    PipelineReport rep = run_pipeline(sq, {0, 1}, pipeline_order(sq, {0, 1}));
    CHECK_FALSE(rep.pass);
    const PipelineStage* stage = rep.find("special-simplex");
    REQUIRE(stage != nullptr);
    CHECK_FALSE(stage->ok);
}

TEST_CASE("pipeline passes on the square with a diagonal") {
    IntegerPolytope sq = unit_square();
    PipelineReport rep = run_pipeline(sq, {0, 3}, pipeline_order(sq, {0, 3}));
    CHECK(rep.pass);
    CHECK(rep.h_triangulation == IntPolynomial({1, 1}));
    CHECK(rep.d == 1);
}

TEST_CASE("pipeline passes on order polytopes with rank-ideal simplices") {
    for (Poset om : {antichain_poset(3), bipartite_poset(2, 2), chain_poset(3)}) {
        OrderPolytope op = order_polytope(om);
        std::vector<int> sigma = rank_ideal_simplex(om, op);
        PipelineReport rep = run_pipeline(op.polytope, sigma, pipeline_order(op.polytope, sigma));
        CHECK(rep.pass);
        CHECK(rep.h_triangulation == eulerian_polynomial(om));
    }
}

TEST_CASE("pipeline on B4 reproduces the degree six numerator") {
    IntegerPolytope b4 = birkhoff(4);
    std::vector<int> sigma = birkhoff_cyclic_simplex(4, b4);
    PipelineReport rep = run_pipeline(b4, sigma, pipeline_order(b4, sigma));
    CHECK(rep.pass);
    CHECK(rep.h_triangulation == IntPolynomial({1, 14, 87, 148, 87, 14, 1}));
    CHECK(rep.d == 6);
    CHECK(rep.counts == std::vector<Int>{1, 24, 282, 2008, 10147, 40176, 132724, 381424});
}

TEST_CASE("pipeline separates the two hypotheses on the wide rectangle") {
    // the diagonal of [0,2]x[0,1] is a valid special simplex, but no ordering
    // is compressed, and the numerator (1,3) is indeed not symmetric
    IntegerPolytope rect = rectangle_2x1();
    int far_corner = -1;
    for (std::size_t i = 0; i < rect.vertices.size(); ++i)
        if (rect.vertices[i] == std::vector<Int>{2, 1}) far_corner = static_cast<int>(i);
    REQUIRE(far_corner >= 0);
    std::vector<int> sigma = {0, far_corner};
    REQUIRE(verify_special_simplex(rect, sigma).ok);
    PipelineReport rep = run_pipeline(rect, sigma, pipeline_order(rect, sigma));
    CHECK_FALSE(rep.pass);
    CHECK(rep.find("special-simplex")->ok);
    CHECK_FALSE(rep.find("compressed-ordering")->ok);
    CHECK(rep.find("series-counting")->ok);
    CHECK(rep.h_counting == IntPolynomial({1, 3}));
    CHECK_FALSE(rep.find("symmetry")->ok);
}

TEST_CASE("quotient verification rejects a non-special interior triple") {
    IntegerPolytope oct = octahedron();
    FaceLattice lat = build_face_lattice(oct);
    // vertices sorted lex: -e1=0, -e2=1, -e3=2, e3=3, e2=4, e1=5
    std::vector<int> sigma = {5, 0, 4};  // e1, -e1, e2: spans two axes, not special
    REQUIRE_FALSE(verify_special_simplex(oct, sigma).ok);
    QuotientPolytope q = quotient_polytope(oct, lat, sigma);
    CHECK(q.iso_checked);
    CHECK_FALSE(q.iso_ok);
}

TEST_CASE("parallel edges are honest multigraph input") {
    MultiGraph doubled;
    doubled.p = 2;
    doubled.edges = {{1, 2}, {1, 2}};
    GraphSeries s = magic_labeling_series(doubled);
    CHECK(s.series.numerator == IntPolynomial({1}));
    CHECK(s.m == 1);
    CHECK(s.n == 2);
    CHECK(s.d == 0);
    IntegerPolytope p = matching_polytope(doubled);
    for (long r = 0; r <= 4; ++r) CHECK(count_points(p, r) == r + 1);
}

TEST_CASE("report rendering is stable") {
    IntegerPolytope b3 = birkhoff(3);
    std::vector<int> sigma = birkhoff_cyclic_simplex(3, b3);
    PipelineReport rep = run_pipeline(b3, sigma, pipeline_order(b3, sigma));
    std::ostringstream a, b;
    write_report(a, rep, true);
    write_report(b, rep, true);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("result pass") != std::string::npos);
    std::ostringstream human;
    write_report(human, rep, false);
    CHECK(human.str().find("== CONCLUSION ==") != std::string::npos);
    CHECK(human.str().find("PASS") != std::string::npos);
}
