#include "forge/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace forge {

namespace {

// line-oriented tokenizer that strips # comments and tracks line numbers
struct Reader {
    std::istream& in;
    int line = 0;
    std::istringstream cur;

    explicit Reader(std::istream& s) : in(s) {}

    bool next_line() {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::istringstream probe(raw);
            std::string tok;
            if (probe >> tok) {
                cur = std::istringstream(raw);
                return true;
            }
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw input_error("line " + std::to_string(line) + ": " + what);
    }

    std::string word() {
        std::string w;
        if (!(cur >> w)) fail("expected a token");
        return w;
    }
    long integer() {
        long v;
        if (!(cur >> v)) fail("expected an integer");
        return v;
    }
    Int big() {
        std::string w = word();
        try {
            return Int(w);
        } catch (const std::invalid_argument&) {
            fail("expected an integer, got '" + w + "'");
        }
    }
    void expect_end() {
        std::string w;
        if (cur >> w) fail("unexpected trailing token '" + w + "'");
    }
};

std::vector<Int> read_row(Reader& r, int count) {
    if (!r.next_line()) r.fail("unexpected end of file");
    std::vector<Int> row;
    for (int i = 0; i < count; ++i) row.push_back(r.big());
    r.expect_end();
    return row;
}

long read_keyword(Reader& r, const std::string& keyword) {
    if (!r.next_line()) r.fail("expected '" + keyword + "'");
    std::string w = r.word();
    if (w != keyword) r.fail("expected '" + keyword + "', got '" + w + "'");
    long v = r.integer();
    r.expect_end();
    return v;
}

}  // namespace

IntegerPolytope read_polytope(std::istream& in) {
    Reader r(in);
    IntegerPolytope p;
    long q = read_keyword(r, "ambient_dim");
    if (q < 1 || q > 4096) r.fail("ambient_dim out of range");
    p.ambient_dim = static_cast<int>(q);
    long nv = read_keyword(r, "vertices");
    if (nv < 1 || nv > VSet::kMaxVertices) r.fail("vertex count out of range");
    for (long i = 0; i < nv; ++i) p.vertices.push_back(read_row(r, p.ambient_dim));
    long nf = read_keyword(r, "facets");
    if (nf < 0) r.fail("facet count out of range");
    for (long i = 0; i < nf; ++i) {
        std::vector<Int> row = read_row(r, p.ambient_dim + 1);
        LinearForm f;
        f.offset = row.back();
        row.pop_back();
        f.normal = std::move(row);
        p.facets.push_back(std::move(f));
    }
    long ne = read_keyword(r, "equalities");
    if (ne < 0) r.fail("equality count out of range");
    for (long i = 0; i < ne; ++i) {
        std::vector<Int> row = read_row(r, p.ambient_dim + 1);
        LinearForm f;
        f.offset = row.back();
        row.pop_back();
        f.normal = std::move(row);
        p.equalities.push_back(std::move(f));
    }
    return p;
}

IntegerPolytope read_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    IntegerPolytope p = read_polytope(in);
    p.id = path;
    return p;
}

void write_polytope(std::ostream& out, const IntegerPolytope& p, bool keep_order) {
    std::vector<std::vector<Int>> verts = p.vertices;
    if (!keep_order) std::sort(verts.begin(), verts.end());
    out << "ambient_dim " << p.ambient_dim << "\n";
    out << "vertices " << verts.size() << "\n";
    for (const auto& v : verts) out << join_ints(v) << "\n";
    out << "facets " << p.facets.size() << "\n";
    for (const auto& f : p.facets) out << join_ints(f.normal) << " " << f.offset.get_str() << "\n";
    out << "equalities " << p.equalities.size() << "\n";
    for (const auto& e : p.equalities) out << join_ints(e.normal) << " " << e.offset.get_str() << "\n";
}

Poset read_poset(std::istream& in) {
    Reader r(in);
    if (!r.next_line()) r.fail("expected the element count");
    long m = r.integer();
    r.expect_end();
    if (m < 0 || m > 31) r.fail("element count out of range (0..31)");
    Poset p;
    p.m = static_cast<int>(m);
    while (r.next_line()) {
        long i = r.integer();
        long j = r.integer();
        r.expect_end();
        if (i < 1 || i > m || j < 1 || j > m) r.fail("cover endpoint out of range");
        p.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    try {
        p.finalize();
    } catch (const input_error& e) {
        throw input_error(std::string("poset: ") + e.what());
    }
    return p;
}

Poset read_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return read_poset(in);
}

MultiGraph read_graph(std::istream& in) {
    Reader r(in);
    if (!r.next_line()) r.fail("expected 'p q'");
    long p = r.integer();
    long q = r.integer();
    r.expect_end();
    if (p < 1 || p > 4096 || q < 0 || q > 4096) r.fail("graph size out of range");
    MultiGraph g;
    g.p = static_cast<int>(p);
    for (long e = 0; e < q; ++e) {
        if (!r.next_line()) r.fail("expected an edge line");
        long u = r.integer();
        long v = r.integer();
        r.expect_end();
        if (u < 1 || u > p || v < 1 || v > p) r.fail("edge endpoint out of range");
        g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

MultiGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return read_graph(in);
}

void write_triangulation(std::ostream& out, const SimplicialComplex& c) {
    out << c.vertex_count() << " " << c.dimension() << "\n";
    for (const auto& f : c.maximal_faces) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << "\n";
    }
}

void write_report(std::ostream& out, const PipelineReport& rep, bool machine) {
    auto flag = [](bool b) { return b ? "pass" : "FAIL"; };
    if (machine) {
        out << "polytope " << rep.polytope_id << "\n";
        out << "ambient_dim " << rep.ambient_dim << "\n";
        out << "vertices " << rep.num_vertices << "\n";
        out << "m " << rep.m << "\n";
        out << "n " << rep.n << "\n";
        out << "d " << rep.d << "\n";
        for (const auto& s : rep.stages) out << "stage " << s.name << " " << flag(s.ok) << "\n";
        out << "h_triangulation " << rep.h_triangulation.coeff_string() << "\n";
        out << "h_counting " << rep.h_counting.coeff_string() << "\n";
        out << "counts " << join_ints(rep.counts) << "\n";
        out << "result " << (rep.pass ? "pass" : "fail") << "\n";
        return;
    }
    out << "== HYPOTHESES ==\n";
    out << "polytope: " << rep.polytope_id << " (ambient " << rep.ambient_dim << ", dim " << rep.m
        << ", " << rep.num_vertices << " vertices)\n";
    out << "simplex size n = " << rep.n << ", expected degree d = m-n+1 = " << rep.d << "\n";
    for (const auto& s : rep.stages)
        if (s.name == "special-simplex" || s.name == "face-scan" || s.name == "compressed-ordering")
            out << "  [" << flag(s.ok) << "] " << s.name << ": " << s.detail << "\n";
    out << "== H-NUMERATOR ==\n";
    out << "triangulation route: " << rep.h_triangulation.coeff_string() << "\n";
    out << "counting route:      " << rep.h_counting.coeff_string() << "\n";
    out << "counts: " << join_ints(rep.counts) << "\n";
    for (const auto& s : rep.stages)
        if (s.name == "series-triangulation" || s.name == "series-counting" ||
            s.name == "route-agreement" || s.name == "join-decomposition" ||
            s.name == "sphere-certificate" || s.name == "degree-law")
            out << "  [" << flag(s.ok) << "] " << s.name << ": " << s.detail << "\n";
    out << "== G-THEOREM ==\n";
    for (const auto& s : rep.stages)
        if (s.name == "h0-is-1" || s.name == "symmetry" || s.name == "m-vector" ||
            s.name == "unimodality")
            out << "  [" << flag(s.ok) << "] " << s.name << ": " << s.detail << "\n";
    out << "== CONCLUSION ==\n";
    out << (rep.pass ? "PASS" : "FAIL");
    if (!rep.pass) {
        out << " (failing:";
        for (const auto& s : rep.stages)
            if (!s.ok) out << " " << s.name;
        out << ")";
    }
    out << "\n";
}

}  // namespace forge
