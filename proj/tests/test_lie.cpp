#include <string>
#include <vector>

#include "doctest.h"
#include "lpc/lie.hpp"

using namespace lpc;

namespace {

RationalMatrix mat2(long a, long b, long c, long d) {
    RationalMatrix m(2, 2);
    m(0, 0) = Rational(a);
    m(0, 1) = Rational(b);
    m(1, 0) = Rational(c);
    m(1, 1) = Rational(d);
    return m;
}

std::vector<Rational> vec(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

LieAlgebra non_jacobi() {
    LieAlgebra bad("bad", {"x1", "x2", "x3"});
    bad.set_bracket(0, 1, vec({0, 0, 1}));
    bad.set_bracket(1, 2, vec({1, 0, 0}));
    bad.set_bracket(0, 2, vec({1, 0, 0}));
    return bad;
}

}  // namespace

TEST_CASE("from_matrices") {
    const auto sl2 = from_matrices("sl2", {"e", "h", "f"}, {mat2(0, 1, 0, 0), mat2(1, 0, 0, -1), mat2(0, 0, 1, 0)});
    CHECK(sl2.bracket(1, 0) == vec({2, 0, 0}));
    CHECK(sl2.bracket(1, 2) == vec({0, 0, -2}));
    CHECK(sl2.bracket(0, 2) == vec({0, 1, 0}));
    const auto ab = from_matrices("ab", {"a", "b"}, {mat2(1, 0, 0, 0), mat2(0, 0, 0, 1)});
    CHECK(ab.structure().empty());
    const auto borel = from_matrices("b", {"e", "h"}, {mat2(0, 1, 0, 0), mat2(1, 0, 0, -1)});
    CHECK(borel.bracket(1, 0) == vec({2, 0}));
    CHECK_THROWS_AS(from_matrices("x", {"e", "f"}, {mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(from_matrices("x", {"e", "g"}, {mat2(0, 1, 0, 0), mat2(0, 2, 0, 0)}), std::invalid_argument);
}

TEST_CASE("jacobi and Lie-Poisson bivector") {
    const auto sl2 = build_classical("sl2");
    CHECK(jacobi_check(sl2).ok);
    const auto bad = jacobi_check(non_jacobi());
    CHECK_FALSE(bad.ok);
    CHECK(*bad.triple == std::array<std::size_t, 3>{0, 1, 2});
    CHECK(jacobi_check(LieAlgebra("ab", {"a", "b", "c"})).ok);
    CHECK_THROWS_AS(lie_poisson_bivector(non_jacobi()), std::invalid_argument);
    const auto pi = lie_poisson_bivector(sl2);
    CHECK(format_skew(pi, sl2.labels()) == "(-2*e)*D(e,h) + (h)*D(e,f) + (-2*f)*D(h,f)");
    CHECK(lie_poisson_bivector(LieAlgebra("ab", {"a", "b"})).is_zero());
    const auto borel = from_matrices("b", {"e", "h"}, {mat2(0, 1, 0, 0), mat2(1, 0, 0, -1)});
    CHECK(lie_poisson_bivector(borel).coefficient(IndexSet::of({0, 1})) == Polynomial::variable(2, 0) * Rational(-2));
}

TEST_CASE("classical builders") {
    const auto sl2 = build_classical("sl2");
    CHECK(sl2.dimension() == 3);
    CHECK(sl2.labels() == std::vector<std::string>{"e", "h", "f"});
    CHECK(sl2.root_data()->rank == 1);
    CHECK(sl2.root_data()->marks == std::vector<int>{1});
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto l = build_classical(ClassicalType::sl, n);
        CHECK(l.dimension() == n * n - 1);
        CHECK(l.root_data()->marks == std::vector<int>(n - 1, 1));
    }
    const auto sp4 = build_classical("sp4");
    CHECK(sp4.dimension() == 10);
    CHECK(sp4.root_data()->marks == std::vector<int>{2, 1});
    CHECK(build_classical("so5").root_data()->marks == std::vector<int>{1, 2});
    CHECK(build_classical("sp6").root_data()->marks == std::vector<int>{2, 2, 1});
    CHECK(build_classical("so7").root_data()->marks == std::vector<int>{1, 2, 2});
    CHECK(build_classical("so8").root_data()->marks == std::vector<int>{1, 2, 1, 1});
    CHECK_FALSE(build_classical("so4").root_data()->highest.has_value());
    CHECK_THROWS_AS(build_classical("sl9"), std::invalid_argument);
    CHECK_THROWS_AS(build_classical("g2"), std::invalid_argument);
    for (const auto& name : builtin_names()) {
        const auto l = build_classical(name);
        CHECK(jacobi_check(l).ok);
        const auto& rd = *l.root_data();
        for (std::size_t s = 0; s < rd.rank; ++s) {
            auto he = l.bracket(rd.h[s], rd.e[s]);
            auto ef = l.bracket(rd.e[s], rd.f[s]);
            CHECK(he[rd.e[s]] == Rational(2));
            CHECK(ef[rd.h[s]] == Rational(1));
        }
        // the stored matrices reproduce the structure constants
        const auto again = from_matrices(l.name(), l.labels(), *l.matrices());
        CHECK(again.structure() == l.structure());
        CHECK(schouten_square(lie_poisson_bivector(l)).is_zero());
    }
}

TEST_CASE("borel weights") {
    CHECK(borel_decomposition(build_classical("sl2")) == ContractionWeights({0, 0, 1}));
    const auto w = borel_decomposition(build_classical("sl3"));
    CHECK(w.d_t() == 3);
    CHECK_THROWS_AS(borel_decomposition(LieAlgebra("ab", {"a"})), std::invalid_argument);
}

TEST_CASE("killing form") {
    const auto sl2 = build_classical("sl2");
    const auto k = killing_form(sl2);
    CHECK(k(1, 1) == Rational(8));
    CHECK(k(0, 2) == Rational(4));
    CHECK(k(0, 0) == Rational(0));
    CHECK(k(0, 1) == Rational(0));
    CHECK(is_zero(killing_form(LieAlgebra("ab", {"a", "b"}))));
    for (const auto& name : builtin_names()) CHECK_FALSE(determinant(killing_form(build_classical(name))).is_zero());
}

TEST_CASE("index") {
    CHECK(algebra_index(build_classical("sl2")) == 1);
    for (const auto& name : {"sl3", "sl4", "sp4", "so5", "so4", "so6", "so3", "sp2"}) {
        const auto l = build_classical(name);
        CHECK(algebra_index(l) == l.root_data()->rank);
    }
    const auto sl3 = build_classical("sl3");
    std::vector<std::size_t> perm{7, 2, 0, 5, 1, 6, 3, 4};
    CHECK(algebra_index(permute_basis(sl3, perm)) == 2);
    CHECK(jacobi_check(permute_basis(sl3, perm)).ok);
}

TEST_CASE("symmetric pairs") {
    struct Expect {
        const char* id;
        std::size_t dim_g1, dim_c, dim_l;
    };
    for (const auto& e : {Expect{"sl2/so2", 2, 1, 0}, Expect{"sp4/sp2+sp2", 4, 1, 3}, Expect{"so4/gl2", 2, 1, 3},
                          Expect{"sl4/sp4", 5, 1, 6}}) {
        CAPTURE(e.id);
        const auto p = symmetric_pair(e.id);
        CHECK(check_grading(p).ok());
        CHECK(check_cartan_subspace(p).ok());
        CHECK(p.g1.size() == e.dim_g1);
        CHECK(p.cartan_subspace.size() == e.dim_c);
        CHECK(p.levi.size() == e.dim_l);
        CHECK(p.weights.d_t() == static_cast<int>(e.dim_g1));
        CHECK(jacobi_check(p.algebra).ok);
    }
    const auto sl2 = symmetric_pair("sl2/so2");
    CHECK(sl2.weights == ContractionWeights({1, 0, 1}));
    CHECK_THROWS_AS(symmetric_pair("e7/sl8"), std::invalid_argument);
}
