// Release gate: every shipped claim re-verified in one binary.  Each numbered
// criterion prints a single PASS/FAIL line with its runtime; the process
// exits nonzero when anything fails.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "quiverkit/centroid.hpp"
#include "quiverkit/classify.hpp"
#include "quiverkit/closure.hpp"
#include "quiverkit/cycle_algebra.hpp"
#include "quiverkit/ideal.hpp"
#include "quiverkit/oracle.hpp"
#include "support/defs.hpp"
#include "support/gen.hpp"

using namespace quiverkit;
using testgen::share;

namespace {

int failures = 0;

template <typename F>
void criterion(int num, const std::string& label, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::cout << "  criterion " << num << " threw: " << e.what() << "\n";
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << label
              << " (" << std::fixed << std::setprecision(2) << secs << "s)"
              << std::endl;
    if (!ok) ++failures;
}

// 1. The walk-counting exponents satisfy n(i,j,k) + m(i,k) = m(i,j) + m(j,k).
bool coefficient_identity() {
    for (std::size_t n = 1; n <= 8; ++n) {
        CycleAlgebra c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (c.n_exp(i, j, k) + c.m_exp(i, k) !=
                        c.m_exp(i, j) + c.m_exp(j, k))
                        return false;
    }
    return true;
}

// 2. tau is a unital injective algebra map into M_n(K[x]).
template <typename K>
bool tau_monomorphism(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t n = 1; n <= 5; ++n) {
        CycleAlgebra c(n);
        auto g = c.graph();
        if (!(tau_embed(c, Element<K>::unit(g)) == PolyMatrix<K>::identity(n)))
            return false;
        for (int t = 0; t < 500; ++t) {
            Element<K> a = testgen::random_element<K>(rng, g, 4, 2 * n);
            Element<K> b = testgen::random_element<K>(rng, g, 4, 2 * n);
            if (!(tau_embed(c, a * b) == tau_embed(c, a) * tau_embed(c, b)))
                return false;
            if (!(tau_embed(c, a + b) == tau_embed(c, a) + tau_embed(c, b)))
                return false;
            if (!(a == b) && tau_embed(c, a) == tau_embed(c, b)) return false;
            if (!a.is_zero() && tau_embed(c, a).is_zero()) return false;
        }
    }
    return true;
}

// 3. Production deciders against the definition-level searches in
// tests/support/defs.hpp.
bool deciders_agree(const Graph& g) {
    return is_semiprime(g).value == testdefs::oracle_semiprime(g) &&
           is_prime(g).value == testdefs::oracle_prime(g) &&
           is_artinian(g).value == testdefs::oracle_artinian(g) &&
           is_noetherian(g, Side::Left).value == testdefs::oracle_noetherian(g, true) &&
           is_noetherian(g, Side::Right).value ==
               testdefs::oracle_noetherian(g, false) &&
           is_primitive(g).value == testdefs::oracle_primitive(g);
}

bool classifier_oracle_agreement() {
    bool ok = true;
    testgen::exhaustive_multigraphs(4, 5, [&](const Graph& g) {
        if (ok) ok = deciders_agree(g);
    });
    if (!ok) return false;
    std::mt19937_64 rng(314159);
    for (int t = 0; t < 10000; ++t)
        if (!deciders_agree(testgen::random_graph(rng, 6, 8))) return false;
    return true;
}

// 4. Radical dimensions on random acyclic graphs, then graph route vs trace
// form on the exhaustive acyclic suite up to total dimension 40.
bool radical_checks() {
    std::mt19937_64 rng(271828);
    for (int t = 0; t < 1000; ++t) {
        auto g = share(testgen::random_acyclic(rng, 8, 9));
        std::vector<Path> paths = testgen::enumerate_paths(*g);
        std::size_t span = 0;
        for (const Path& p : paths) {
            if (p.trivial()) continue;
            // Positive-length paths in an acyclic graph never return, so each
            // must individually land in the radical; distinct paths are
            // independent, so counting them is the span dimension.
            if (!radical_contains(Element<Rational>::path_term(g, p))) return false;
            ++span;
        }
        if (span != paths.size() - g->vertex_count()) return false;
        if (paths.size() - span != g->vertex_count()) return false;
    }

    bool ok = true;
    testgen::exhaustive_multigraphs(4, 5, [&](const Graph& raw) {
        if (!ok || !is_artinian(raw).value) return;
        StructureAlgebra alg = structure_constants(raw, 64);
        if (alg.dim() > 40) return;
        auto rad = trace_radical<Rational>(alg);
        if (rad.size() != alg.dim() - raw.vertex_count()) {
            ok = false;
            return;
        }
        for (const auto& vec : rad) {
            Element<Rational> e = Element<Rational>::zero(alg.graph());
            for (std::size_t i = 0; i < vec.size(); ++i)
                if (!vec[i].is_zero()) e.add_term(alg.basis()[i], vec[i]);
            // Same dimension plus containment pins the two spans together.
            if (!radical_contains(e)) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

// 5. Socle basis = paths from sources, and exactly those paths generate
// one-dimensional left ideals.
bool socle_minimality() {
    bool ok = true;
    testgen::exhaustive_multigraphs(4, 5, [&](const Graph& raw) {
        if (!ok || !is_artinian(raw).value) return;
        StructureAlgebra alg = structure_constants(raw, 64);
        const auto& g = alg.graph();
        std::set<std::string> expected;
        for (const Path& p : alg.basis())
            if (g->in_edges(p.source()).empty()) expected.insert(p.str(*g));
        std::set<std::string> got;
        for (const Path& p : socle_basis(*g, Side::Left)) got.insert(p.str(*g));
        if (got != expected) {
            ok = false;
            return;
        }
        for (const Path& p : alg.basis()) {
            bool minimal = minimal_ideal_check(
                alg, Element<Rational>::path_term(g, p), Side::Left);
            if (minimal != (expected.count(p.str(*g)) > 0)) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

// 6. Left data of g equals right data of the edge-reversed graph.
bool reversal_duality() {
    std::mt19937_64 rng(161803);
    for (int t = 0; t < 1000; ++t) {
        Graph g = testgen::random_graph(rng, 6, 8);
        Graph r = reverse_graph(g);
        if (socle_vertices(g, Side::Left) != socle_vertices(r, Side::Right))
            return false;
        if (socle_vertices(g, Side::Right) != socle_vertices(r, Side::Left))
            return false;
        if (is_noetherian(g, Side::Left).value !=
            is_noetherian(r, Side::Right).value)
            return false;
        if (is_noetherian(g, Side::Right).value !=
            is_noetherian(r, Side::Left).value)
            return false;
        if (is_semiartinian(g, Side::Left).value !=
            is_semiartinian(r, Side::Right).value)
            return false;
        if (is_semiartinian(g, Side::Right).value !=
            is_semiartinian(r, Side::Left).value)
            return false;
    }
    return true;
}

// 7. closure_preimage then theta reproduces arbitrary rational matrices.
template <typename K>
Poly<K> random_poly(std::mt19937_64& rng, int max_deg, bool nonzero) {
    std::uniform_int_distribution<long long> coef(-3, 3);
    std::uniform_int_distribution<int> d(0, max_deg);
    Poly<K> p;
    int deg = d(rng);
    for (int i = 0; i <= deg; ++i)
        p = p + Poly<K>::monomial(K::from_long(coef(rng)), static_cast<std::size_t>(i));
    if (nonzero && p.is_zero()) return Poly<K>::one();
    return p;
}

template <typename K>
bool closure_round_trip(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t n = 1; n <= 4; ++n) {
        CycleAlgebra c(n);
        for (int t = 0; t < 200; ++t) {
            RatMatrix<K> m(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m.at(i, j) = RatFunc<K>(random_poly<K>(rng, 2, false),
                                            random_poly<K>(rng, 2, true));
            ClosurePreimage<K> dec = closure_preimage(c, m);
            if (!(theta(c, dec.a, dec.pair) == m)) return false;
        }
    }
    return true;
}

// 8. (n0, cycle multiset) survives arbitrary relabeling.
bool noether_invariant_stability() {
    std::mt19937_64 rng(577215);
    for (int s = 0; s < 100; ++s) {
        testgen::NoetherianSample sample = testgen::random_noetherian(rng);
        if (!is_noetherian(sample.g, Side::Left).value) return false;
        NoetherInvariant base = noether_invariant(sample.g, Side::Left);
        if (base.n0 != sample.tail_vertices) return false;
        if (base.cycle_lengths != sample.cycle_lengths) return false;
        for (int r = 0; r < 100; ++r)
            if (!(noether_invariant(testgen::relabeled(sample.g, rng), Side::Left) ==
                  base))
                return false;
    }
    return true;
}

// 9. Collapse projection is multiplicative.
bool collapse_quotient_hom() {
    std::mt19937_64 rng(662607);
    for (int t = 0; t < 1000; ++t) {
        auto g = share(testgen::random_graph(rng, 5, 6));
        std::vector<std::string> gens;
        if (g->edge_count() == 0 || rng() % 2 == 0) {
            for (VertexIdx v = 0; v < g->vertex_count(); ++v)
                if (rng() % 3 == 0) gens.push_back(g->vertex_id(v));
        } else {
            for (EdgeIdx e = 0; e < g->edge_count(); ++e)
                if (rng() % 3 == 0) gens.push_back(g->edge_id(e));
        }
        Element<Rational> a = testgen::random_element<Rational>(rng, g);
        Element<Rational> b = testgen::random_element<Rational>(rng, g);
        if (!(quotient_project(a * b, gens) ==
              quotient_project(a, gens) * quotient_project(b, gens)))
            return false;
    }
    return true;
}

// 10. Centroid: z central on cycles, scalar seeds force k*Id elsewhere, and a
// non-scalar seed on a strongly connected non-cycle graph is rejected.
bool centroid_checks() {
    std::mt19937_64 rng(141421);
    for (std::size_t n = 1; n <= 5; ++n) {
        CycleAlgebra c(n);
        Element<Rational> z = center_generator<Rational>(c);
        for (int t = 0; t < 200; ++t) {
            Element<Rational> a =
                testgen::random_element<Rational>(rng, c.graph(), 4, 2 * n);
            if (!(z * a == a * z)) return false;
        }
    }

    auto scalar_connected = [](const Graph& g) {
        if (g.vertex_count() == 0 || undirected_components(g).size() != 1)
            return false;
        CentroidDescriptor d = centroid_descriptor(g);
        return d.components.size() == 1 &&
               d.components[0].kind == CentroidKind::Scalar;
    };
    Rational k = Rational::from_fraction(7, 2);
    auto extends_to_scalar = [&](const Graph& raw) {
        auto g = share(raw);
        VertexIdx u = static_cast<VertexIdx>(rng() % g->vertex_count());
        auto res = centralizer_extend<Rational>(
            g, g->vertex_id(u), Element<Rational>::vertex_term(g, u, k));
        if (!res.consistent) return false;
        for (VertexIdx v = 0; v < g->vertex_count(); ++v)
            if (!(res.values[v] == Element<Rational>::vertex_term(g, v, k)))
                return false;
        return true;
    };

    bool ok = true;
    testgen::exhaustive_multigraphs(4, 5, [&](const Graph& g) {
        if (ok && scalar_connected(g)) ok = extends_to_scalar(g);
    });
    if (!ok) return false;
    int found = 0;
    while (found < 500) {
        Graph g = testgen::random_graph(rng, 5, 7);
        if (g.vertex_count() != 5 || !scalar_connected(g)) continue;
        if (!extends_to_scalar(g)) return false;
        ++found;
    }

    auto rose = share(testgen::rose_two_loops());
    auto res = centralizer_extend<Rational>(
        rose, "u",
        Element<Rational>::path_term(rose, Path::along(*rose, {rose->edge("a")})));
    if (res.consistent) return false;

    Graph chord;
    chord.add_vertex("v0");
    chord.add_vertex("v1");
    chord.add_edge("f0", "v0", "v1");
    chord.add_edge("f1", "v1", "v0");
    chord.add_edge("h", "v0", "v1");
    auto cg = share(std::move(chord));
    auto res2 = centralizer_extend<Rational>(
        cg, "v0",
        Element<Rational>::path_term(
            cg, Path::along(*cg, {cg->edge("f0"), cg->edge("f1")})));
    return !res2.consistent;
}

} // namespace

int main() {
    criterion(1, "cycle coefficient identity, n = 1..8", coefficient_identity);
    criterion(2, "tau is a unital monomorphism over Q and GF(101)", [] {
        if (!tau_monomorphism<Rational>(9001)) return false;
        Fp::set_modulus(101);
        return tau_monomorphism<Fp>(9002);
    });
    criterion(3, "deciders match definition-level searches", classifier_oracle_agreement);
    criterion(4, "radical dimensions and trace-form agreement", radical_checks);
    criterion(5, "socle = source paths, exactly the minimal generators", socle_minimality);
    criterion(6, "left/right duality under edge reversal", reversal_duality);
    criterion(7, "central closure round trip over Q and GF(101)", [] {
        if (!closure_round_trip<Rational>(9003)) return false;
        Fp::set_modulus(101);
        return closure_round_trip<Fp>(9004);
    });
    criterion(8, "noetherian invariant is relabeling-invariant", noether_invariant_stability);
    criterion(9, "collapse projection is an algebra quotient", collapse_quotient_hom);
    criterion(10, "centroid scalar law and cycle center", centroid_checks);

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed" << std::endl;
    return 1;
}
