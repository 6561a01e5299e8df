#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "lpc/contract.hpp"
#include "lpc/invariants.hpp"

using namespace lpc;

namespace {

const std::vector<std::string> kEHF{"e", "h", "f"};

Polynomial P(const std::string& s, const std::vector<std::string>& labels = kEHF) {
    return parse_polynomial(s, labels);
}

// Oracle: the contracted bracket keeps c_ij^k exactly when w_k = w_i + w_j.
LieAlgebra graded_limit(const LieAlgebra& l, const ContractionWeights& w) {
    LieAlgebra out(l.name() + "~", l.labels());
    const std::size_t n = l.dimension();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto v = l.bracket(i, j);
            bool any = false;
            for (std::size_t k = 0; k < n; ++k) {
                if (w[k] != w[i] + w[j]) v[k] = Rational(0);
                any = any || !v[k].is_zero();
            }
            if (any) out.set_bracket(i, j, v);
        }
    return out;
}

// Level of a basis vector in the grading of sl3 by height: e's positive, f's negative, h zero.
ContractionWeights level_weights(const LieAlgebra& g, int shift) {
    const auto& rd = *g.root_data();
    std::vector<int> w(g.dimension(), shift);
    const std::vector<int> heights{1, 1, 2};
    for (std::size_t i = 0; i < rd.e.size(); ++i) {
        w[rd.e[i]] = shift + heights[i];
        w[rd.f[i]] = shift - heights[i];
    }
    return ContractionWeights(w);
}

}  // namespace

TEST_CASE("sl2 contractions") {
    const auto sl2 = build_classical("sl2");
    const auto pi = lie_poisson_bivector(sl2);

    const auto so2 = contract(sl2, ContractionWeights({1, 0, 1}));
    REQUIRE(so2.valid);
    MultiVector expect(3, 2);
    expect.add(IndexSet::of({0, 1}), P("-2*e"));
    expect.add(IndexSet::of({1, 2}), P("-2*f"));
    CHECK(so2.pi_tilde == expect);
    CHECK(so2.contracted->bracket(0, 2) == std::vector<Rational>(3));

    const auto feigin = contract(sl2, ContractionWeights({0, 0, 1}));
    REQUIRE(feigin.valid);
    CHECK(feigin.contracted->bracket(1, 0) == std::vector<Rational>{Rational(2), Rational(0), Rational(0)});
    CHECK(feigin.contracted->bracket(1, 2) == std::vector<Rational>{Rational(0), Rational(0), Rational(-2)});
    CHECK(feigin.contracted->bracket(0, 2) == std::vector<Rational>(3));

    const auto bad = contract(sl2, ContractionWeights({0, 1, 0}));
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.violation);
    CHECK(bad.violation->i == 0);
    CHECK(bad.violation->j == 2);
    CHECK(bad.violation->power == -1);
    CHECK(describe_violation(*bad.violation, kEHF) == "negative t-power at pair (e,f): t^-1");
    CHECK_FALSE(bad.contracted);
    CHECK(bad.pi_t.at_one() == pi);
}

TEST_CASE("t_degree examples") {
    const auto F = P("-1/2*h^2 - 2*e*f");
    const auto a = t_degree(F, ContractionWeights({1, 0, 1}));
    CHECK(a.degree == 2);
    CHECK(a.highest == P("-2*e*f"));
    const auto b = t_degree(F, ContractionWeights({0, 0, 1}));
    CHECK(b.degree == 1);
    CHECK(b.highest == P("-2*e*f"));
    const auto c = t_degree(P("h"), ContractionWeights({3, 0, 5}));
    CHECK(c.degree == 0);
    CHECK(c.highest == P("h"));
    CHECK_THROWS_AS(t_degree(Polynomial(3), ContractionWeights({0, 0, 1})), std::invalid_argument);
}

TEST_CASE("highest components of central elements") {
    const auto sl2 = build_classical("sl2");
    const auto pi = lie_poisson_bivector(sl2);
    const auto F = P("-1/2*h^2 - 2*e*f");
    for (const auto& w : {ContractionWeights({0, 0, 1}), ContractionWeights({1, 0, 1})}) {
        const auto r = contract(pi, w);
        CHECK(highest_component_central(F, pi, r));
        CHECK(highest_component_central(Polynomial::constant(3, Rational(7)), pi, r));
    }
    CHECK_THROWS_AS(highest_component_central(P("e"), pi, contract(pi, ContractionWeights({0, 0, 1}))),
                    std::invalid_argument);
}

TEST_CASE("contraction properties over the catalog") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> wd(0, 2);
    for (const char* name : {"sl2", "sl3", "sp4", "so5", "so4", "so3"}) {
        const auto g = build_classical(name);
        const auto pi = lie_poisson_bivector(g);
        const auto rk = bivector_rank(pi);
        std::vector<ContractionWeights> ws{borel_decomposition(g)};
        for (int k = 0; k < 6; ++k) {
            std::vector<int> w(g.dimension());
            for (auto& x : w) x = wd(rng);
            ws.emplace_back(w);
        }
        for (const auto& w : ws) {
            const auto r = contract(g, w);
            CAPTURE(name);
            CAPTURE(w.str());
            CHECK(r.pi_t.at_one() == pi);
            if (!r.valid) continue;
            CHECK(schouten_square(r.pi_tilde).is_zero());
            CHECK(bivector_rank(r.pi_tilde) <= rk);
            CHECK(*r.contracted == graded_limit(g, w));
        }
    }
}

TEST_CASE("grading by levels gives a valid contraction") {
    const auto sl3 = build_classical("sl3");
    for (int shift : {2, 3}) {
        const auto r = contract(sl3, level_weights(sl3, shift));
        CHECK(r.valid);
        CHECK(schouten_square(r.pi_tilde).is_zero());
    }
}

TEST_CASE("t_degree is multiplicative") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-4, 4), var(0, 3), wd(0, 3);
    auto rand_poly = [&] {
        Polynomial p(4);
        for (int k = 0; k < 4; ++k) {
            Polynomial m = Polynomial::constant(4, Rational(coef(rng)));
            for (int d = 0; d < 2; ++d) m *= Polynomial::variable(4, static_cast<std::size_t>(var(rng)));
            p += m;
        }
        return p;
    };
    for (int iter = 0; iter < 50; ++iter) {
        const auto a = rand_poly(), b = rand_poly();
        if (a.is_zero() || b.is_zero()) continue;
        const ContractionWeights w({wd(rng), wd(rng), wd(rng), wd(rng)});
        const auto ta = t_degree(a, w), tb = t_degree(b, w), tab = t_degree(a * b, w);
        CHECK(tab.degree == ta.degree + tb.degree);
        CHECK(tab.highest == ta.highest * tb.highest);
    }
}
