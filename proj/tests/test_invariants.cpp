#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "lpc/analysis.hpp"
#include "lpc/invariants.hpp"

using namespace lpc;

namespace {

const std::vector<std::string> kEHF{"e", "h", "f"};

Polynomial P(const std::string& s, const std::vector<std::string>& labels = kEHF) {
    return parse_polynomial(s, labels);
}

std::vector<int> degrees(const GeneratorSet& s) {
    std::vector<int> d;
    for (const auto& f : s.generators) d.push_back(f.degree());
    return d;
}

// Random Q in m variables; monomials limited so that Q(F) has degree at most max_deg.
Polynomial random_q(std::mt19937& rng, std::span<const int> gen_degrees, int max_deg) {
    const std::size_t m = gen_degrees.size();
    std::uniform_int_distribution<int> coef(-3, 3), var(0, static_cast<int>(m) - 1), len(1, 3);
    Polynomial q(m);
    for (int k = 0; k < 4; ++k) {
        Monomial mono;
        int deg = 0;
        for (int j = len(rng); j > 0; --j) {
            const auto v = static_cast<std::size_t>(var(rng));
            if (deg + gen_degrees[v] > max_deg) continue;
            deg += gen_degrees[v];
            mono.set_exponent(v, mono.exponent(v) + 1);
        }
        q += Polynomial::monomial(m, mono, Rational(coef(rng)));
    }
    return q;
}

struct Setting {
    LieAlgebra g;
    ContractionWeights w;
};

std::vector<Setting> settings() {
    std::vector<Setting> out;
    for (const char* name : {"sl2", "sl3", "sp4", "so5", "so4"}) {
        auto g = build_classical(name);
        auto w = borel_decomposition(g);
        out.push_back({std::move(g), std::move(w)});
    }
    for (const char* id : {"sl2/so2", "sp4/sp2+sp2", "so4/gl2"}) {
        auto pair = symmetric_pair(id);
        out.push_back({pair.algebra, pair.weights});
    }
    return out;
}

}  // namespace

TEST_CASE("characteristic invariants") {
    const auto sl2 = char_invariants(build_classical("sl2"));
    REQUIRE(sl2.generators.size() == 1);
    CHECK(sl2.generators[0] == P("-1/2*h^2 - 2*e*f"));
    CHECK(degrees(char_invariants(build_classical("sl3"))) == std::vector<int>{2, 3});
    CHECK(degrees(char_invariants(build_classical("sp4"))) == std::vector<int>{2, 4});
    CHECK(degrees(char_invariants(build_classical("so5"))) == std::vector<int>{2, 4});
    CHECK(degrees(char_invariants(build_classical("so4"))) == std::vector<int>{2, 2});
    CHECK(degrees(raw_char_invariants(build_classical("so6"))) == std::vector<int>{2, 3, 4});
    CHECK(degrees(raw_char_invariants(build_classical("sl5"))) == std::vector<int>{2, 3, 4, 5});
    CHECK(degrees(raw_char_invariants(build_classical("sp6"))) == std::vector<int>{2, 4, 6});
    CHECK(degrees(raw_char_invariants(build_classical("so8"))) == std::vector<int>{2, 4, 4, 6});
}

TEST_CASE("catalog generators are central and sum to dim b") {
    for (const auto& name : builtin_names()) {
        const auto g = build_classical(name);
        const auto gens = raw_char_invariants(g);
        CAPTURE(name);
        int sum = 0;
        for (const auto& f : gens.generators) {
            CHECK(centrality_check(f, g));
            CHECK(f.is_homogeneous());
            sum += f.degree();
        }
        CHECK(gens.generators.size() == g.root_data()->rank);
        CHECK(2 * static_cast<std::size_t>(sum) == g.dimension() + g.root_data()->rank);
    }
    CHECK(centrality_check(P("-1/2*h^2 - 2*e*f"), build_classical("sl2")));
    CHECK_FALSE(centrality_check(P("e"), build_classical("sl2")));
}

TEST_CASE("normalized generators satisfy the Kostant equality exactly") {
    for (const char* name : {"sl2", "sl3", "sp4", "so5", "so4", "so3"}) {
        const auto g = build_classical(name);
        const auto gens = char_invariants(g);
        const auto r = kostant_check(gens.generators, lie_poisson_bivector(g), std::nullopt);
        CAPTURE(name);
        CHECK(r.is_kostant_type);
        CHECK(r.exact);
    }
}

TEST_CASE("semi-invariants") {
    const auto sl2 = build_classical("sl2");
    const auto feigin = contract(sl2, ContractionWeights({0, 0, 1}));
    const auto wf = semi_invariant_weight(P("f"), feigin.pi_tilde);
    REQUIRE(wf);
    CHECK(*wf == std::vector<Rational>{Rational(0), Rational(-2), Rational(0)});
    const auto we = semi_invariant_weight(P("e"), feigin.pi_tilde);
    REQUIRE(we);
    CHECK(*we == std::vector<Rational>{Rational(0), Rational(2), Rational(0)});
    CHECK_FALSE(semi_invariant_weight(P("e + f"), sl2));
    const auto wc = semi_invariant_weight(P("-1/2*h^2 - 2*e*f"), sl2);
    REQUIRE(wc);
    CHECK(*wc == std::vector<Rational>(3));
    const auto wh = semi_invariant_weight(P("h"), sl2);
    CHECK_FALSE(wh);
}

TEST_CASE("membership") {
    const std::vector<Polynomial> gens{P("e*f")};
    const auto a = membership_linear(P("e^2*f^2"), gens);
    CHECK(a.member);
    CHECK(a.p == Polynomial::variable(1, 0).pow(2));
    CHECK_FALSE(membership_linear(P("h^2"), gens).member);
    CHECK_THROWS_AS(membership_linear(P("e^2*f^2 + e*f"), gens), std::invalid_argument);

    const auto sp4 = char_invariants(build_classical("sp4"));
    const auto& f = sp4.generators;
    const Polynomial target = f[0].pow(2) * Rational(3) - f[1];
    const auto m = membership_linear(target, f);
    REQUIRE(m.member);
    CHECK(m.p.compose(f) == target);
}

TEST_CASE("t-degree reduction") {
    const auto sl2 = char_invariants(build_classical("sl2"));
    const auto r = t_degree_reduction(sl2, ContractionWeights({0, 0, 1}));
    CHECK(r.steps.empty());
    CHECK(r.set.generators == sl2.generators);

    for (const char* id : {"sp4/sp2+sp2", "so4/gl2"}) {
        const auto pair = symmetric_pair(id);
        const auto gens = char_invariants(pair.algebra);
        const auto red = t_degree_reduction(gens, pair.weights);
        CAPTURE(id);
        int before = 0, after = 0;
        for (std::size_t i = 0; i < gens.generators.size(); ++i) {
            const int b = t_degree(gens.generators[i], pair.weights).degree;
            const int a = t_degree(red.set.generators[i], pair.weights).degree;
            CHECK(a <= b);
            before += b;
            after += a;
            CHECK(centrality_check(red.set.generators[i], pair.algebra));
            CHECK(red.set.generators[i].degree() == gens.generators[i].degree());
        }
        CHECK((red.steps.empty() ? after == before : after < before));
        CHECK(after == static_cast<int>(pair.g1.size()));
        for (const auto& s : red.steps) CHECK(s.degree_after < s.degree_before);
        // a fixpoint reduces no further
        CHECK(t_degree_reduction(red.set, pair.weights).steps.empty());
    }
}

TEST_CASE("highest components of random central elements are central") {
    std::mt19937 rng(20261014);
    for (const auto& [g, w] : settings()) {
        const auto gens = char_invariants(g).generators;
        std::vector<int> degs;
        for (const auto& f : gens) degs.push_back(f.degree());
        const auto pt = contract(g, w).pi_tilde;
        CAPTURE(g.name());
        for (int k = 0; k < 20; ++k) {
            const auto q = random_q(rng, degs, 8);
            const auto h = q.compose(gens);
            if (h.is_zero()) continue;
            CHECK(is_poisson_central(lie_poisson_bivector(g), h));
            CHECK(is_poisson_central(pt, t_degree(h, w).highest));
        }
    }
}

TEST_CASE("highest component of Q(F) under a good generating system") {
    std::mt19937 rng(99);
    for (const char* name : {"sl2", "sl3", "sp4", "so5"}) {
        const auto g = build_classical(name);
        const auto w = borel_decomposition(g);
        const auto gens = char_invariants(g).generators;
        std::vector<int> degs, tdeg;
        std::vector<Polynomial> top;
        for (const auto& f : gens) {
            const auto td = t_degree(f, w);
            degs.push_back(f.degree());
            tdeg.push_back(td.degree);
            top.push_back(td.highest);
        }
        REQUIRE(algebraic_independence(top));
        CAPTURE(name);
        for (int k = 0; k < 20; ++k) {
            const auto q = random_q(rng, degs, 8);
            if (q.is_zero()) continue;
            long best = -1;
            for (const auto& [m, c] : q.terms()) best = std::max(best, m.weighted_degree(tdeg));
            Polynomial qt(q.ring_dimension());
            for (const auto& [m, c] : q.terms())
                if (m.weighted_degree(tdeg) == best) qt += Polynomial::monomial(q.ring_dimension(), m, c);
            const auto td = t_degree(q.compose(gens), w);
            CHECK(td.degree == best);
            CHECK(td.highest == qt.compose(top));
        }
    }
}
