#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "forge/ehrhart.hpp"
#include "forge/families.hpp"
#include "forge/io.hpp"
#include "helpers.hpp"

using namespace forge;
using namespace forge::testing;

TEST_CASE("polytope files round-trip") {
    IntegerPolytope sq = unit_square();
    std::ostringstream out;
    write_polytope(out, sq);
    std::istringstream in(out.str());
    IntegerPolytope back = read_polytope(in);
    CHECK(back.ambient_dim == 2);
    CHECK(back.vertices == sq.vertices);
    CHECK(back.facets.size() == 4);
    CHECK(validate_polytope(back).ok);
}

TEST_CASE("exported and reimported polytopes give identical numerators") {
    IntegerPolytope b3 = birkhoff(3);
    std::ostringstream out;
    write_polytope(out, b3);
    std::istringstream in(out.str());
    IntegerPolytope back = read_polytope(in);
    REQUIRE(validate_polytope(back).ok);
    CountingSeries original = series_by_counting(b3);
    CountingSeries reloaded = series_by_counting(back);
    CHECK(original.series.numerator == reloaded.series.numerator);
    CHECK(original.series.denom_exponent == reloaded.series.denom_exponent);
}

TEST_CASE("polytope parser reports line numbers") {
    std::istringstream bad("ambient_dim 2\nvertices 1\n0 zz\nfacets 0\nequalities 0\n");
    try {
        read_polytope(bad);
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    std::istringstream trailing("ambient_dim 2\nvertices 1\n0 0 7\nfacets 0\nequalities 0\n");
    CHECK_THROWS_AS(read_polytope(trailing), input_error);

    std::istringstream wrong_keyword("dimension 2\n");
    CHECK_THROWS_AS(read_polytope(wrong_keyword), input_error);
}

TEST_CASE("comments and blank lines are ignored") {
    std::istringstream in(
        "# a comment\n\nambient_dim 2\n# another\nvertices 2\n0 0\n1 0 # trailing\nfacets 2\n-1 0 "
        "0\n1 0 1\nequalities 1\n0 1 0\n");
    IntegerPolytope p = read_polytope(in);
    CHECK(p.vertices.size() == 2);
    CHECK(validate_polytope(p).ok);
}

TEST_CASE("poset files") {
    std::istringstream in("3\n1 2\n1 3\n");
    Poset p = read_poset(in);
    CHECK(p.m == 3);
    CHECK(p.less(1, 2));
    CHECK(p.less(1, 3));
    CHECK_FALSE(p.less(2, 3));

    std::istringstream cyc("2\n1 2\n2 1\n");
    CHECK_THROWS_AS(read_poset(cyc), input_error);

    std::istringstream range("2\n1 5\n");
    try {
        read_poset(range);
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("graph files") {
    std::istringstream in("4 4\n1 2\n2 3\n3 4\n4 1\n");
    MultiGraph g = read_graph(in);
    CHECK(g.p == 4);
    CHECK(g.q() == 4);
    CHECK(g.connected());
    CHECK(g.bipartition().has_value());
    CHECK(g.regular_degree() == 2);

    std::istringstream missing("4 4\n1 2\n");
    CHECK_THROWS_AS(read_graph(missing), input_error);
}

TEST_CASE("triangulation export format") {
    SimplicialComplex tri{{{0, 1, 3}, {0, 2, 3}}};
    std::ostringstream out;
    write_triangulation(out, tri);
    CHECK(out.str() == "4 2\n0 1 3\n0 2 3\n");
}

TEST_CASE("canonical writer sorts vertices") {
    IntegerPolytope p;
    p.ambient_dim = 1;
    p.vertices = {{1}, {0}};
    p.facets.push_back(form({-1}, 0));
    p.facets.push_back(form({1}, 1));
    require_valid(p);
    std::ostringstream sorted_out, kept_out;
    write_polytope(sorted_out, p);
    write_polytope(kept_out, p, true);
    CHECK(sorted_out.str().find("vertices 2\n0\n1\n") != std::string::npos);
    CHECK(kept_out.str().find("vertices 2\n1\n0\n") != std::string::npos);
}
