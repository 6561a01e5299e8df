#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "lpc/poly_gcd.hpp"
#include "lpc/polynomial.hpp"
#include "lpc/weights.hpp"

using namespace lpc;

namespace {

const std::vector<std::string> kEHF{"e", "h", "f"};

Polynomial P(const std::string& s, const std::vector<std::string>& labels = kEHF) {
    return parse_polynomial(s, labels);
}

Polynomial random_poly(std::mt19937& rng, std::size_t n, int terms, int max_deg) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> var(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Polynomial::Term> ts;
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        const int d = deg(rng);
        for (int j = 0; j < d; ++j) {
            const auto v = static_cast<std::size_t>(var(rng));
            m.set_exponent(v, m.exponent(v) + 1);
        }
        ts.emplace_back(m, Rational(coef(rng)));
    }
    return Polynomial::from_terms(n, std::move(ts));
}

}  // namespace

TEST_CASE("arithmetic basics") {
    const std::vector<std::string> xy{"x1", "x2"};
    CHECK(P("x1 + x2", xy) * P("x1 - x2", xy) == P("x1^2 - x2^2", xy));
    CHECK(partial_derivative(P("-1/2*h^2 - 2*e*f"), 1) == P("-h"));
    CHECK(partial_derivative(P("-1/2*h^2 - 2*e*f"), 0) == P("-2*f"));
    CHECK(P("e*h - h*e").is_zero());
    CHECK(P("3").is_constant());
    CHECK(P("e^2*f + h").degree() == 3);
    CHECK_FALSE(P("e^2*f + h").is_homogeneous());
    CHECK(P("0").degree() == -1);
}

TEST_CASE("canonical formatting") {
    CHECK(format_polynomial(P("-2*f*e + 1/2*h^2"), kEHF) == "-2*e*f + 1/2*h^2");
    CHECK(format_polynomial(P("0"), kEHF) == "0");
    CHECK(format_polynomial(P("-h"), kEHF) == "-h");
    CHECK(format_polynomial(P("e - 7/3"), kEHF) == "e - 7/3");
    CHECK_THROWS_AS(P("e + q"), std::invalid_argument);
    CHECK_THROWS_AS(P("e +"), std::invalid_argument);
    CHECK_THROWS_AS(P("e/0"), std::invalid_argument);
}

TEST_CASE("gcd examples") {
    CHECK(multivariate_gcd(P("2*e*f"), P("2*f")) == P("f"));
    CHECK(multivariate_gcd(P("-2*e"), P("-2*f")) == P("1"));
    CHECK(multivariate_gcd(P("e^2 - f^2"), P("e*h + f*h")) == P("e + f"));
    CHECK(multivariate_gcd(P("0"), P("-3*h")) == P("h"));
    CHECK_THROWS_AS(multivariate_gcd(P("0"), P("0")), std::invalid_argument);
    CHECK(divide_exact(P("e^2 - f^2"), P("e - f")) == P("e + f"));
    CHECK_FALSE(divide_exact(P("e^2 + f^2"), P("e - f")).has_value());
}

TEST_CASE("t_expand") {
    const ContractionWeights w({0, 0, 1});
    const auto tp = t_expand(P("-1/2*h^2 - 2*e*f"), w);
    CHECK(tp.top_power() == 1);
    CHECK(tp.coefficient(1) == P("-2*e*f"));
    CHECK(tp.coefficient(0) == P("-1/2*h^2"));
    CHECK(tp.at_one() == P("-1/2*h^2 - 2*e*f"));
    CHECK(w.d_t() == 1);
    CHECK(ContractionWeights::parse("[1, 0,2]") == ContractionWeights({1, 0, 2}));
    CHECK_THROWS(ContractionWeights({0, -1}));
}

TEST_CASE("property: ring axioms and derivations on random polynomials") {
    std::mt19937 rng(20261014);
    for (int iter = 0; iter < 60; ++iter) {
        const auto a = random_poly(rng, 4, 5, 3);
        const auto b = random_poly(rng, 4, 5, 3);
        const auto c = random_poly(rng, 4, 3, 2);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        for (std::size_t v = 0; v < 4; ++v)
            CHECK(partial_derivative(a * b, v) == partial_derivative(a, v) * b + a * partial_derivative(b, v));
        const std::vector<std::string> labels{"a", "b", "c", "d"};
        CHECK(parse_polynomial(format_polynomial(a, labels), labels) == a);
        std::vector<Rational> pt{Rational(2), Rational(-1), Rational(1, 3), Rational(5)};
        CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
    }
}

TEST_CASE("property: gcd divides, and recovers a planted common factor") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        const auto g = random_poly(rng, 3, 3, 2);
        const auto a = random_poly(rng, 3, 3, 2);
        const auto b = random_poly(rng, 3, 3, 2);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        const auto ga = g * a;
        const auto gb = g * b;
        const auto d = multivariate_gcd(ga, gb);
        REQUIRE(divide_exact(ga, d).has_value());
        REQUIRE(divide_exact(gb, d).has_value());
        CHECK(divide_exact(d, make_monic(g)).has_value());
        CHECK(d.leading_coefficient() == Rational(1));
        // quotient cofactors share no further common factor
        const auto d2 = multivariate_gcd(*divide_exact(ga, d), *divide_exact(gb, d));
        CHECK(d2 == Polynomial::constant(3, Rational(1)));
    }
}

TEST_CASE("property: t_expand matches direct substitution at sample t") {
    std::mt19937 rng(11);
    const ContractionWeights w({0, 2, 1, 3});
    for (int iter = 0; iter < 30; ++iter) {
        const auto a = random_poly(rng, 4, 6, 4);
        const auto tp = t_expand(a, w);
        const Rational t(3, 2);
        std::vector<Rational> pt{Rational(1), Rational(-2), Rational(3), Rational(1, 2)};
        std::vector<Rational> scaled(4);
        Rational tpow_total(0);
        for (std::size_t i = 0; i < 4; ++i) {
            Rational s(1);
            for (int k = 0; k < w[i]; ++k) s *= t;
            scaled[i] = pt[i] * s;
        }
        Rational sum(0);
        for (const auto& [k, coeff] : tp.coefficients()) {
            Rational s(1);
            for (int j = 0; j < k; ++j) s *= t;
            sum += s * evaluate(coeff, pt);
        }
        CHECK(sum == evaluate(a, scaled));
    }
}
