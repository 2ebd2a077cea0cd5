#include "forge/ehrhart.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forge/families.hpp"

namespace forge {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

struct Constraint {
    std::vector<long long> coef;
    long long rhs = 0;
    bool equality = false;
    // interval of the contribution of variables j.. (precomputed suffixes)
    std::vector<long long> suffix_lo, suffix_hi;
};

// Dilate enumeration state. Variables are assigned in coordinate order; each
// constraint prunes via the exact interval of its unassigned part.
struct DilateSystem {
    int q = 0;
    std::vector<long long> lo, hi;  // per-variable bounds from the vertex extremes
    std::vector<Constraint> cons;
    std::vector<std::vector<int>> touching;  // constraints with a nonzero coefficient at var j
    bool infeasible = false;

    DilateSystem(const IntegerPolytope& p, long r) {
        q = p.ambient_dim;
        lo.assign(static_cast<std::size_t>(q), 0);
        hi.assign(static_cast<std::size_t>(q), 0);
        for (int j = 0; j < q; ++j) {
            Int mn = p.vertices[0][static_cast<std::size_t>(j)], mx = mn;
            for (const auto& v : p.vertices) {
                if (v[static_cast<std::size_t>(j)] < mn) mn = v[static_cast<std::size_t>(j)];
                if (v[static_cast<std::size_t>(j)] > mx) mx = v[static_cast<std::size_t>(j)];
            }
            lo[static_cast<std::size_t>(j)] = to_ll(mn * r);
            hi[static_cast<std::size_t>(j)] = to_ll(mx * r);
        }
        auto add = [&](const LinearForm& f, bool eq) {
            Constraint c;
            c.equality = eq;
            c.rhs = to_ll(f.offset * r);
            bool nonzero = false;
            for (int j = 0; j < q; ++j) {
                c.coef.push_back(to_ll(f.normal[static_cast<std::size_t>(j)]));
                if (c.coef.back() != 0) nonzero = true;
            }
            if (!nonzero) {
                if (eq ? (c.rhs != 0) : (c.rhs < 0)) infeasible = true;
                return;
            }
            cons.push_back(std::move(c));
        };
        for (const LinearForm& e : p.equalities) add(e, true);
        for (const LinearForm& f : p.facets) add(f, false);

        // suffix contribution intervals + machine-word certificate
        const long long cap = (1LL << 61);
        for (Constraint& c : cons) {
            c.suffix_lo.assign(static_cast<std::size_t>(q) + 1, 0);
            c.suffix_hi.assign(static_cast<std::size_t>(q) + 1, 0);
            long long total = std::abs(c.rhs);
            for (int j = q - 1; j >= 0; --j) {
                long long a = c.coef[static_cast<std::size_t>(j)] * lo[static_cast<std::size_t>(j)];
                long long b = c.coef[static_cast<std::size_t>(j)] * hi[static_cast<std::size_t>(j)];
                c.suffix_lo[static_cast<std::size_t>(j)] = c.suffix_lo[static_cast<std::size_t>(j) + 1] + std::min(a, b);
                c.suffix_hi[static_cast<std::size_t>(j)] = c.suffix_hi[static_cast<std::size_t>(j) + 1] + std::max(a, b);
                total += std::abs(c.coef[static_cast<std::size_t>(j)]) *
                         std::max(std::abs(lo[static_cast<std::size_t>(j)]), std::abs(hi[static_cast<std::size_t>(j)]));
                if (total >= cap) throw budget_error("count_points: coordinate magnitudes overflow the kernel");
            }
        }
        touching.assign(static_cast<std::size_t>(q), {});
        for (std::size_t k = 0; k < cons.size(); ++k)
            for (int j = 0; j < q; ++j)
                if (cons[k].coef[static_cast<std::size_t>(j)] != 0) touching[static_cast<std::size_t>(j)].push_back(static_cast<int>(k));
    }

    // allowed interval for variable j given the partial sums
    bool var_range(int j, const std::vector<long long>& sums, long long& out_lo,
                   long long& out_hi) const {
        long long L = lo[static_cast<std::size_t>(j)], U = hi[static_cast<std::size_t>(j)];
        for (int k : touching[static_cast<std::size_t>(j)]) {
            const Constraint& c = cons[static_cast<std::size_t>(k)];
            long long cj = c.coef[static_cast<std::size_t>(j)];
            long long rest_lo = c.suffix_lo[static_cast<std::size_t>(j) + 1];
            long long rest_hi = c.suffix_hi[static_cast<std::size_t>(j) + 1];
            long long room_hi = c.rhs - sums[static_cast<std::size_t>(k)] - rest_lo;  // cj*x <= room_hi
            if (cj > 0) U = std::min(U, floor_div(room_hi, cj));
            else L = std::max(L, ceil_div(room_hi, cj));
            if (c.equality) {
                long long room_lo = c.rhs - sums[static_cast<std::size_t>(k)] - rest_hi;  // cj*x >= room_lo
                if (cj > 0) L = std::max(L, ceil_div(room_lo, cj));
                else U = std::min(U, floor_div(room_lo, cj));
            }
            if (L > U) return false;
        }
        out_lo = L;
        out_hi = U;
        return true;
    }
};

struct DfsCounter {
    const DilateSystem& sys;
    unsigned long long node_budget;
    unsigned long long nodes = 0;
    bool budget_hit = false;
    std::vector<long long> sums;
    std::vector<std::vector<Int>>* collect = nullptr;
    std::vector<long long> point;

    explicit DfsCounter(const DilateSystem& s, unsigned long long budget)
        : sys(s), node_budget(budget), sums(s.cons.size(), 0) {
        point.assign(static_cast<std::size_t>(s.q), 0);
    }

    unsigned long long run(int depth) {
        if (budget_hit) return 0;
        if (++nodes > node_budget) {
            budget_hit = true;
            return 0;
        }
        if (depth == sys.q) {
            if (collect) {
                std::vector<Int> pt;
                pt.reserve(point.size());
                for (long long x : point) pt.push_back(Int(static_cast<long>(x)));
                collect->push_back(std::move(pt));
            }
            return 1;
        }
        long long L, U;
        if (!sys.var_range(depth, sums, L, U)) return 0;
        unsigned long long total = 0;
        for (long long x = L; x <= U; ++x) {
            point[static_cast<std::size_t>(depth)] = x;
            for (int k : sys.touching[static_cast<std::size_t>(depth)])
                sums[static_cast<std::size_t>(k)] += sys.cons[static_cast<std::size_t>(k)].coef[static_cast<std::size_t>(depth)] * x;
            total += run(depth + 1);
            for (int k : sys.touching[static_cast<std::size_t>(depth)])
                sums[static_cast<std::size_t>(k)] -= sys.cons[static_cast<std::size_t>(k)].coef[static_cast<std::size_t>(depth)] * x;
        }
        return total;
    }
};

int worker_count() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("EHRHART_FORGE_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

void check_dilate(long r, const Budgets& budgets) {
    if (r < 0) throw input_error("dilate must be nonnegative");
    if (r > budgets.max_dilate)
        throw budget_error("dilate " + std::to_string(r) + " exceeds the budget " +
                           std::to_string(budgets.max_dilate));
}

}  // namespace

Int count_points_serial(IntegerPolytope& p, long r, const Budgets& budgets) {
    check_dilate(r, budgets);
    require_valid(p);
    DilateSystem sys(p, r);
    if (sys.infeasible) return 0;
    DfsCounter counter(sys, budgets.max_nodes);
    unsigned long long total = counter.run(0);
    if (counter.budget_hit) throw budget_error("count_points: node budget exceeded");
    return Int(static_cast<unsigned long>(total));
}

Int count_points(IntegerPolytope& p, long r, const Budgets& budgets) {
    check_dilate(r, budgets);
    require_valid(p);
    DilateSystem sys(p, r);
    if (sys.infeasible) return 0;

    const int threads = worker_count();

    // expand the DFS tree breadth-first into prefix tasks
    struct Task {
        std::vector<long long> values;
    };
    std::vector<Task> tasks{{}};
    const std::size_t want = static_cast<std::size_t>(threads) * 8;
    int depth = 0;
    while (depth < sys.q && tasks.size() < want && depth < 4) {
        std::vector<Task> next;
        for (const Task& t : tasks) {
            std::vector<long long> sums(sys.cons.size(), 0);
            for (int j = 0; j < depth; ++j)
                for (int k : sys.touching[static_cast<std::size_t>(j)])
                    sums[static_cast<std::size_t>(k)] += sys.cons[static_cast<std::size_t>(k)].coef[static_cast<std::size_t>(j)] * t.values[static_cast<std::size_t>(j)];
            long long L, U;
            if (!sys.var_range(depth, sums, L, U)) continue;
            for (long long x = L; x <= U; ++x) {
                Task nt = t;
                nt.values.push_back(x);
                next.push_back(std::move(nt));
            }
        }
        tasks = std::move(next);
        ++depth;
        if (tasks.empty()) return 0;
    }

    std::vector<unsigned long long> counts(tasks.size(), 0);
    std::vector<unsigned long long> nodes(tasks.size(), 0);
    std::vector<char> budget_hit(tasks.size(), 0);
    const int ntasks = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int t = 0; t < ntasks; ++t) {
        DfsCounter counter(sys, budgets.max_nodes);
        for (int j = 0; j < depth; ++j) {
            long long x = tasks[static_cast<std::size_t>(t)].values[static_cast<std::size_t>(j)];
            counter.point[static_cast<std::size_t>(j)] = x;
            for (int k : sys.touching[static_cast<std::size_t>(j)])
                counter.sums[static_cast<std::size_t>(k)] += sys.cons[static_cast<std::size_t>(k)].coef[static_cast<std::size_t>(j)] * x;
        }
        counts[static_cast<std::size_t>(t)] = counter.run(depth);
        nodes[static_cast<std::size_t>(t)] = counter.nodes;
        budget_hit[static_cast<std::size_t>(t)] = counter.budget_hit ? 1 : 0;
    }
    unsigned long long total_nodes = 0;
    Int total = 0;
    for (int t = 0; t < ntasks; ++t) {
        if (budget_hit[static_cast<std::size_t>(t)]) throw budget_error("count_points: node budget exceeded");
        total_nodes += nodes[static_cast<std::size_t>(t)];
        total += Int(static_cast<unsigned long>(counts[static_cast<std::size_t>(t)]));
    }
    if (total_nodes > budgets.max_nodes) throw budget_error("count_points: node budget exceeded");
    return total;
}

std::vector<std::vector<Int>> enumerate_points(IntegerPolytope& p, long r, const Budgets& budgets) {
    check_dilate(r, budgets);
    require_valid(p);
    DilateSystem sys(p, r);
    std::vector<std::vector<Int>> out;
    if (sys.infeasible) return out;
    DfsCounter counter(sys, budgets.max_nodes);
    counter.collect = &out;
    counter.run(0);
    if (counter.budget_hit) throw budget_error("enumerate_points: node budget exceeded");
    return out;
}

CountingSeries series_by_counting(IntegerPolytope& p, const Budgets& budgets) {
    require_valid(p);
    const int m = p.dim;
    CountingSeries out;
    for (long r = 0; r <= static_cast<long>(m) + 1; ++r) out.values.push_back(count_points(p, r, budgets));
    out.series.numerator = numerator_from_values(out.values, m);
    out.series.denom_exponent = m + 1;
    return out;
}

std::vector<Int> counting_numerator_prefix(IntegerPolytope& p, long r_max, const Budgets& budgets) {
    require_valid(p);
    const int m = p.dim;
    std::vector<Int> values;
    for (long r = 0; r <= r_max; ++r) values.push_back(count_points(p, r, budgets));
    // h_i depends only on values[0..i]
    std::vector<Int> h(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j <= i; ++j) {
            Int term = binomial(Int(m + 1), static_cast<unsigned long>(i - j)) * values[j];
            if ((i - j) % 2) acc -= term;
            else acc += term;
        }
        h[i] = acc;
    }
    return h;
}

EhrhartSeries series_by_triangulation(IntegerPolytope& p, const FaceLattice& lat,
                                      const LatticeBasis& basis, const VertexOrder& order) {
    require_valid(p);
    CompressednessResult comp = is_compressed_ordering(p, lat, basis, order);
    if (!comp.ok)
        throw verification_error("order is not compressed: " + comp.detail.message);
    EhrhartSeries out;
    out.numerator = h_polynomial(comp.triangulation);
    out.denom_exponent = p.dim + 1;
    if (out.numerator.degree() > p.dim)
        throw verification_error("triangulation numerator degree exceeds the dimension");
    return out;
}

Int order_reversing_count(const Poset& omega, long r) {
    if (r < 0) return 0;
    // assign values in a topological order; each element is capped by the
    // values already fixed strictly below it
    std::vector<int> topo;
    {
        std::uint32_t placed = 0;
        while (static_cast<int>(topo.size()) < omega.m) {
            for (int i = 0; i < omega.m; ++i) {
                if ((placed >> i) & 1) continue;
                if ((omega.below[static_cast<std::size_t>(i)] & ~placed) != 0) continue;
                placed |= 1u << i;
                topo.push_back(i);
                break;
            }
        }
    }
    std::vector<long> value(static_cast<std::size_t>(omega.m), 0);
    auto dfs = [&](auto&& self, std::size_t idx) -> Int {
        if (idx == topo.size()) return 1;
        int e = topo[idx];
        long cap = r;
        std::uint32_t lower = omega.below[static_cast<std::size_t>(e)];
        for (std::size_t k = 0; k < idx; ++k)
            if ((lower >> topo[k]) & 1) cap = std::min(cap, value[static_cast<std::size_t>(topo[k])]);
        Int total = 0;
        for (long x = 0; x <= cap; ++x) {
            value[static_cast<std::size_t>(e)] = x;
            total += self(self, idx + 1);
        }
        return total;
    };
    return dfs(dfs, 0);
}

EhrhartSeries magic_square_series(int n, const Budgets& budgets) {
    IntegerPolytope p = birkhoff(n);
    FaceLattice lat = build_face_lattice(p, budgets.max_faces);
    LatticeBasis basis = saturated_lattice_basis(p);
    VertexOrder order = pipeline_order(p, {});
    EhrhartSeries series = series_by_triangulation(p, lat, basis, order);
    const int d = n * n - 3 * n + 2;
    if (series.denom_exponent != (n - 1) * (n - 1) + 1)
        throw verification_error("magic square series: unexpected denominator exponent");
    if (series.numerator.degree() != d)
        throw verification_error("magic square series: numerator degree " +
                                 std::to_string(series.numerator.degree()) + ", expected " +
                                 std::to_string(d));
    // cross-check the leading counts against the independent enumeration
    std::vector<Int> prefix = counting_numerator_prefix(p, std::min<long>(d + 1, p.dim + 1), budgets);
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (prefix[i] != series.numerator.at(i))
            throw verification_error("magic square series: counting route disagrees at index " +
                                     std::to_string(i));
    return series;
}

GraphSeries magic_labeling_series(const MultiGraph& g, const Budgets& budgets) {
    IntegerPolytope p = matching_polytope(g);
    GraphSeries out;
    out.m = g.q() - g.p + 1;
    if (p.dim != out.m)
        throw verification_error("matching polytope dimension " + std::to_string(p.dim) +
                                 ", expected q - p + 1 = " + std::to_string(out.m));
    out.n = *g.regular_degree();
    out.d = out.m - out.n + 1;
    FaceLattice lat = build_face_lattice(p, budgets.max_faces);
    LatticeBasis basis = saturated_lattice_basis(p);
    VertexOrder order = pipeline_order(p, {});
    out.series = series_by_triangulation(p, lat, basis, order);
    if (out.series.denom_exponent != g.q() - g.p + 2)
        throw verification_error("magic labeling series: unexpected denominator exponent");
    if (out.series.numerator.degree() != out.d)
        throw verification_error("magic labeling series: numerator degree " +
                                 std::to_string(out.series.numerator.degree()) + ", expected " +
                                 std::to_string(out.d));
    std::vector<Int> prefix = counting_numerator_prefix(p, std::min<long>(out.d + 1, p.dim + 1), budgets);
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (prefix[i] != out.series.numerator.at(i))
            throw verification_error("magic labeling series: counting route disagrees at index " +
                                     std::to_string(i));
    return out;
}

const PipelineStage* PipelineReport::find(const std::string& name) const {
    for (const auto& s : stages)
        if (s.name == name) return &s;
    return nullptr;
}

PipelineReport run_pipeline(IntegerPolytope& p, const std::vector<int>& sigma,
                            const VertexOrder& order, const Budgets& budgets) {
    require_valid(p);
    PipelineReport rep;
    rep.polytope_id = p.id;
    rep.ambient_dim = p.ambient_dim;
    rep.num_vertices = static_cast<int>(p.vertices.size());
    rep.m = p.dim;
    rep.n = static_cast<int>(sigma.size());
    rep.d = rep.m - rep.n + 1;
    auto stage = [&](const std::string& name, bool ok, const std::string& detail) {
        rep.stages.push_back({name, ok, detail});
        return ok;
    };

    FaceLattice lat = build_face_lattice(p, budgets.max_faces);
    LatticeBasis basis = saturated_lattice_basis(p);

    SpecialSimplexCertificate cert = verify_special_simplex(p, sigma);
    bool sigma_ok = stage("special-simplex", cert.ok, cert.message);

    if (sigma_ok) {
        FaceScanResult scan = special_simplex_face_scan(p, lat, cert);
        stage("face-scan", scan.ok, scan.ok ? "no codimension violations" : scan.witness);
    } else {
        stage("face-scan", false, "skipped: no special simplex certificate");
    }

    CompressednessResult comp = is_compressed_ordering(p, lat, basis, order);
    bool comp_ok = stage("compressed-ordering", comp.ok,
                         comp.ok ? "pulling triangulation is unimodular" : comp.detail.message);

    bool have_tri = false;
    if (comp_ok) {
        rep.h_triangulation = h_polynomial(comp.triangulation);
        have_tri = rep.h_triangulation.degree() <= rep.m;
        stage("series-triangulation", have_tri, "h = " + rep.h_triangulation.coeff_string());
    } else {
        stage("series-triangulation", false, "skipped: ordering is not compressed");
    }

    bool counting_ok = false;
    std::string counting_msg;
    try {
        long r_max = have_tri ? std::min<long>(static_cast<long>(rep.h_triangulation.degree()) + 1,
                                               static_cast<long>(rep.m) + 1)
                              : static_cast<long>(rep.m) + 1;
        rep.counts.clear();
        for (long r = 0; r <= r_max; ++r) rep.counts.push_back(count_points(p, r, budgets));
        std::vector<Int> h(rep.counts.size());
        for (std::size_t i = 0; i < rep.counts.size(); ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j <= i; ++j) {
                Int term = binomial(Int(rep.m + 1), static_cast<unsigned long>(i - j)) * rep.counts[j];
                if ((i - j) % 2) acc -= term;
                else acc += term;
            }
            h[i] = acc;
        }
        counting_ok = true;
        for (std::size_t i = static_cast<std::size_t>(rep.m) + 1; i < h.size(); ++i)
            if (h[i] != 0) {
                counting_ok = false;
                counting_msg = "coefficient beyond the dimension is nonzero";
            }
        rep.h_counting = IntPolynomial(std::move(h));
        if (counting_ok) counting_msg = "h prefix = " + rep.h_counting.coeff_string();
    } catch (const budget_error& e) {
        counting_msg = e.what();
    } catch (const input_error& e) {
        counting_msg = e.what();
    }
    stage("series-counting", counting_ok, counting_msg);

    bool agree = false;
    if (have_tri && counting_ok) {
        // the counting prefix covers deg(h)+1, so equality of the prefix plus a
        // vanishing surplus coefficient pins the whole numerator
        agree = true;
        long r_max = static_cast<long>(rep.counts.size()) - 1;
        for (long i = 0; i <= r_max; ++i) {
            Int expect = rep.h_triangulation.at(static_cast<std::size_t>(i));
            Int got = rep.h_counting.at(static_cast<std::size_t>(i));
            if (expect != got) agree = false;
        }
        stage("route-agreement", agree,
              agree ? "both numerators agree" : "triangulation and counting numerators differ");
    } else {
        stage("route-agreement", false, "skipped: a series route is missing");
    }

    if (sigma_ok) {
        JoinDecomposition jd =
            join_decomposition_check(p, lat, sigma, order, comp_ok ? &comp.triangulation : nullptr);
        stage("join-decomposition", jd.join_ok,
              jd.join_ok ? "maximal cells factor through the simplex" : jd.message);
        stage("sphere-certificate", jd.sphere_ok, jd.sphere_ok ? "quotient boundary matches" : jd.message);
    } else {
        stage("join-decomposition", false, "skipped: no special simplex certificate");
        stage("sphere-certificate", false, "skipped: no special simplex certificate");
    }

    const IntPolynomial& h = have_tri ? rep.h_triangulation : rep.h_counting;
    stage("degree-law", have_tri && h.degree() == rep.d,
          "deg h = " + std::to_string(h.degree()) + ", d = " + std::to_string(rep.d));

    bool h_ok = false;
    try {
        HVector hv = HVector::from_polynomial(h, std::max(rep.d, h.degree()));
        rep.g = g_theorem_check(hv);
        h_ok = true;
    } catch (const input_error&) {
    }
    stage("h0-is-1", h_ok && !h.is_zero() && h.at(0) == 1, "h_0 = " + h.at(0).get_str());
    stage("symmetry", h_ok && rep.g.symmetric,
          h_ok && rep.g.symmetric ? "h_i = h_{d-i}"
                                  : "violated at index " + std::to_string(rep.g.symmetric_fail));
    stage("m-vector", h_ok && rep.g.g_is_m_vector,
          h_ok && rep.g.g_is_m_vector ? "difference vector satisfies the growth bounds"
                                      : "violated at index " + std::to_string(rep.g.m_vector_fail));
    stage("unimodality", h_ok && rep.g.unimodal,
          h_ok && rep.g.unimodal ? "h_0 <= h_1 <= ... <= h_{d/2}"
                                 : "violated at index " + std::to_string(rep.g.unimodal_fail));

    rep.pass = true;
    for (const auto& s : rep.stages) rep.pass = rep.pass && s.ok;
    return rep;
}

}  // namespace forge
