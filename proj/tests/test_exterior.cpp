#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "lpc/exterior.hpp"
#include "lpc/lie.hpp"

using namespace lpc;

namespace {

const std::vector<std::string> kEHF{"e", "h", "f"};

Polynomial P(const std::string& s, const std::vector<std::string>& labels = kEHF) { return parse_polynomial(s, labels); }

MultiVector sl2_pi() {
    MultiVector pi(3, 2);
    pi.add(IndexSet::of({0, 1}), P("-2*e"));
    pi.add(IndexSet::of({0, 2}), P("h"));
    pi.add(IndexSet::of({1, 2}), P("-2*f"));
    return pi;
}

// Brute-force Pfaffian over all perfect matchings, independent of the recursive code.
Rational matching_pfaffian(const RationalMatrix& a, std::vector<std::size_t> rest) {
    if (rest.empty()) return Rational(1);
    const std::size_t i = rest[0];
    Rational sum(0);
    for (std::size_t p = 1; p < rest.size(); ++p) {
        std::vector<std::size_t> sub;
        for (std::size_t q = 1; q < rest.size(); ++q)
            if (q != p) sub.push_back(rest[q]);
        const Rational term = a(i, rest[p]) * matching_pfaffian(a, sub);
        sum += (p % 2 == 1) ? term : -term;
    }
    return sum;
}

MultiVector random_bivector(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> c(-3, 3);
    std::uniform_int_distribution<int> var(0, static_cast<int>(n) - 1);
    MultiVector pi(n, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Polynomial p = Polynomial::constant(n, Rational(c(rng)));
            p += Polynomial::variable(n, static_cast<std::size_t>(var(rng))) * Rational(c(rng));
            pi.add(IndexSet::of({i, j}), p);
        }
    return pi;
}

}  // namespace

TEST_CASE("index sets and shuffle signs") {
    CHECK(IndexSet::of({0, 2}) < IndexSet::of({1, 2}));
    CHECK(IndexSet::of({0, 3}) < IndexSet::of({1, 2}));
    CHECK(shuffle_sign(IndexSet::of({1}), IndexSet::of({0})) == -1);
    CHECK(shuffle_sign(IndexSet::of({0, 2}), IndexSet::of({1})) == -1);
    CHECK(shuffle_sign(IndexSet::of({0, 3}), IndexSet::of({1, 2})) == 1);
    CHECK(IndexSet::of({2, 0}).elements() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("wedge examples") {
    Form dx1(2, 1), dx2(2, 1);
    dx1.add(IndexSet::of({0}), Polynomial::constant(2, Rational(1)));
    dx2.add(IndexSet::of({1}), Polynomial::constant(2, Rational(1)));
    CHECK(wedge(dx1, dx2).coefficient(IndexSet::of({0, 1})) == Polynomial::constant(2, Rational(1)));
    CHECK(wedge(dx1, dx1).is_zero());
    // (-2f de - 2e df) ^ (-h dh)
    Form a(3, 1), b(3, 1);
    a.add(IndexSet::of({0}), P("-2*f"));
    a.add(IndexSet::of({2}), P("-2*e"));
    b.add(IndexSet::of({1}), P("-h"));
    const Form w = wedge(a, b);
    CHECK(w.coefficient(IndexSet::of({0, 1})) == P("2*f*h"));
    CHECK(w.coefficient(IndexSet::of({1, 2})) == P("-2*e*h"));
    CHECK(w.terms().size() == 2);
    CHECK_THROWS_AS(wedge(wedge(a, b), wedge(a, b)), std::invalid_argument);
}

TEST_CASE("wedge powers") {
    const MultiVector pi = sl2_pi();
    CHECK(wedge_power(pi, 1) == pi);
    CHECK(wedge_power(pi, 0) == MultiVector::unit(3));
    CHECK_THROWS_AS(wedge_power(pi, 2), std::invalid_argument);
    const std::vector<std::string> ab{"a", "b", "c", "d"};
    MultiVector q(4, 2);
    q.add(IndexSet::of({0, 1}), P("a", ab));
    q.add(IndexSet::of({2, 3}), P("b", ab));
    const MultiVector q2 = wedge_power(q, 2);
    CHECK(q2.terms().size() == 1);
    CHECK(q2.coefficient(IndexSet::of({0, 1, 2, 3})) == P("2*a*b", ab));
}

TEST_CASE("volume dual") {
    Form omega(3, 3);
    omega.add(IndexSet::full(3), P("1"));
    CHECK(volume_dual(omega) == MultiVector::unit(3));
    const Polynomial casimir = P("-1/2*h^2 - 2*e*f");
    CHECK(volume_dual(differential(casimir)) == sl2_pi());
    Form dx1(2, 1);
    dx1.add(IndexSet::of({0}), Polynomial::constant(2, Rational(1)));
    MultiVector d2(2, 1);
    d2.add(IndexSet::of({1}), Polynomial::constant(2, Rational(1)));
    CHECK(volume_dual(dx1) == d2);
}

TEST_CASE("property: volume dual pairing F ^ dx_J = <D, J> omega, exhaustive for n <= 4") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-4, 4);
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            Form f(n, k);
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
                if (static_cast<std::size_t>(std::popcount(bits)) == k)
                    f.add(IndexSet(bits), Polynomial::constant(n, Rational(c(rng))));
            const MultiVector d = volume_dual(f);
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                if (static_cast<std::size_t>(std::popcount(bits)) != n - k) continue;
                Form dxj(n, n - k);
                dxj.add(IndexSet(bits), Polynomial::constant(n, Rational(1)));
                const Polynomial lhs = wedge(f, dxj).coefficient(IndexSet::full(n));
                // pairing of D against dx_J picks the coefficient of d_J
                CHECK(lhs == d.coefficient(IndexSet(bits)));
            }
        }
}

TEST_CASE("schouten square") {
    CHECK(schouten_square(sl2_pi()).is_zero());
    LieAlgebra bad("bad", {"x1", "x2", "x3"});
    bad.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});
    bad.set_bracket(1, 2, {Rational(1), Rational(0), Rational(0)});
    bad.set_bracket(0, 2, {Rational(1), Rational(0), Rational(0)});
    CHECK_FALSE(schouten_square(structure_bivector(bad)).is_zero());
}

TEST_CASE("pfaffian") {
    const std::vector<std::string> v{"a", "b", "c", "d", "u", "w"};
    PolynomialMatrix m2(2, 2, Polynomial(6));
    m2(0, 1) = P("a", v);
    m2(1, 0) = P("-a", v);
    CHECK(pfaffian(m2) == P("a", v));
    PolynomialMatrix m4(4, 4, Polynomial(6));
    const char* names[4][4] = {{"", "a", "b", "c"}, {"", "", "d", "u"}, {"", "", "", "w"}, {"", "", "", ""}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            m4(i, j) = P(names[i][j], v);
            m4(j, i) = -m4(i, j);
        }
    CHECK(pfaffian(m4) == P("a*w - b*u + c*d", v));
    PolynomialMatrix bad = m4;
    bad(0, 1) = P("u", v);
    CHECK_THROWS_AS(pfaffian(bad), std::invalid_argument);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-9, 9);
    for (int iter = 0; iter < 10; ++iter) {
        RationalMatrix r(6, 6);
        PolynomialMatrix pm(6, 6, Polynomial(1));
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j) {
                r(i, j) = Rational(c(rng), 1 + (c(rng) + 9) % 4);
                r(j, i) = -r(i, j);
                pm(i, j) = Polynomial::constant(1, r(i, j));
                pm(j, i) = Polynomial::constant(1, r(j, i));
            }
        const Rational pf = pfaffian(pm).constant_term();
        CHECK(pf * pf == determinant(r));
        CHECK(pf == matching_pfaffian(r, {0, 1, 2, 3, 4, 5}));
    }
}

TEST_CASE("bivector matrices") {
    const MultiVector pi = sl2_pi();
    std::vector<Rational> zero(3, Rational(0));
    CHECK(is_zero(bivector_matrix_at(pi, zero)));
    const RationalMatrix m = bivector_matrix_at(pi, std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(m(0, 1) == Rational(-2));
    CHECK(m(0, 2) == Rational(0));
    CHECK(m(1, 2) == Rational(0));
    CHECK(rank(m) == 2);
    CHECK(m.transpose() == Rational(-1) * m);
    CHECK(bivector_from_matrix(bivector_matrix(pi)) == pi);
}

TEST_CASE("property: wedge associative and graded commutative") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-3, 3);
    const std::size_t n = 5;
    auto random_form = [&](std::size_t k) {
        Form f(n, k);
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
            if (static_cast<std::size_t>(std::popcount(bits)) == k && c(rng) > 0)
                f.add(IndexSet(bits), Polynomial::variable(n, bits % n) * Rational(c(rng)) +
                                          Polynomial::constant(n, Rational(c(rng))));
        return f;
    };
    for (int iter = 0; iter < 20; ++iter) {
        const Form a = random_form(1), b = random_form(2), d = random_form(1);
        CHECK(wedge(wedge(a, b), d) == wedge(a, wedge(b, d)));
        CHECK(wedge(a, b) == wedge(b, a));
        CHECK(wedge(a, d) == Rational(-1) * wedge(d, a));
    }
}

TEST_CASE("property: Lambda^k pi coefficient equals k! Pf(pi[I]) for n <= 6") {
    std::mt19937 rng(17);
    for (std::size_t n = 2; n <= 6; ++n) {
        const MultiVector pi = random_bivector(rng, n);
        const PolynomialMatrix m = bivector_matrix(pi);
        for (unsigned k = 1; 2 * k <= n; ++k) {
            const MultiVector wk = wedge_power(pi, k);
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                if (std::popcount(bits) != static_cast<int>(2 * k)) continue;
                const auto el = IndexSet(bits).elements();
                PolynomialMatrix sub(2 * k, 2 * k, Polynomial(n));
                for (std::size_t a = 0; a < el.size(); ++a)
                    for (std::size_t b = 0; b < el.size(); ++b) sub(a, b) = m(el[a], el[b]);
                CHECK(wk.coefficient(IndexSet(bits)) == pfaffian(sub) * factorial(k));
            }
        }
    }
}

TEST_CASE("property: Lambda^k pi vanishes iff sampled rank < 2k") {
    std::mt19937 rng(23);
    for (const char* name : {"sl2", "sl3", "so5", "sp4"}) {
        const LieAlgebra l = build_classical(name);
        const MultiVector pi = lie_poisson_bivector(l);
        const std::size_t r = sampled_rank(bivector_matrix(pi));
        for (unsigned k = 1; 2 * k <= l.dimension() && k <= r / 2 + 1; ++k)
            CHECK(wedge_power(pi, k).is_zero() == (2 * k > r));
    }
    (void)rng;
}
