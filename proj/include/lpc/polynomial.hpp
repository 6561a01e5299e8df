#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpc/rational.hpp"

namespace lpc {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector packed densely; variables beyond the ring dimension are always zero.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(std::size_t index, unsigned power = 1);

    [[nodiscard]] unsigned exponent(std::size_t index) const { return exps_[index]; }
    [[nodiscard]] unsigned degree() const { return degree_; }
    [[nodiscard]] bool is_one() const { return degree_ == 0; }
    [[nodiscard]] bool divides(const Monomial& other) const;
    [[nodiscard]] long weighted_degree(std::span<const int> weights) const;
    /// Index of the highest variable with a nonzero exponent, or -1.
    [[nodiscard]] int highest_variable() const;

    void set_exponent(std::size_t index, unsigned power);

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) = default;
    /// Graded lexicographic order: total degree first, then the exponent of x0, x1, ...
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    [[nodiscard]] std::size_t hash() const;

private:
    std::array<std::uint8_t, kMaxVariables> exps_{};
    std::uint16_t degree_ = 0;
};

/// Sparse polynomial over Q in a fixed number of variables.  Terms are kept sorted in
/// descending graded-lex order with no zero coefficients, so equality is structural.
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::size_t ring_dimension);

    static Polynomial constant(std::size_t n, const Rational& c);
    static Polynomial variable(std::size_t n, std::size_t index);
    static Polynomial monomial(std::size_t n, const Monomial& m, const Rational& c = Rational(1));
    /// Builds from arbitrary (unsorted, possibly repeated, possibly zero) terms.
    static Polynomial from_terms(std::size_t n, std::vector<Term> terms);

    [[nodiscard]] std::size_t ring_dimension() const { return n_; }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
    [[nodiscard]] Rational constant_term() const;
    /// Leading term in graded-lex order.  Requires a nonzero polynomial.
    [[nodiscard]] const Term& leading_term() const;
    [[nodiscard]] const Rational& leading_coefficient() const { return leading_term().second; }
    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const;
    [[nodiscard]] bool is_homogeneous() const;
    [[nodiscard]] int highest_variable() const;
    [[nodiscard]] bool uses_variable(std::size_t index) const;
    [[nodiscard]] unsigned degree_in(std::size_t index) const;
    [[nodiscard]] Rational coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Multiplies by c * m.
    [[nodiscard]] Polynomial times_term(const Monomial& m, const Rational& c) const;
    [[nodiscard]] Polynomial pow(unsigned k) const;
    /// Renames variable i to map[i] in a ring of dimension new_dimension.  map[i] < 0 requires
    /// variable i to be absent.
    [[nodiscard]] Polynomial remap(std::size_t new_dimension, std::span<const int> map) const;
    /// Substitutes images[i] for variable i (all images share one ring).
    [[nodiscard]] Polynomial compose(std::span<const Polynomial> images) const;

private:
    void check_same_ring(const Polynomial& o) const;

    std::size_t n_ = 0;
    std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);
Polynomial partial_derivative(const Polynomial& p, std::size_t index);
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Canonical text: descending graded-lex terms, "*" products, "^" powers, e.g. "-2*e*f + 1/2*h^2".
std::string format_polynomial(const Polynomial& p, std::span<const std::string> labels);
/// Inverse of format_polynomial; throws std::invalid_argument with a position on bad input.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> labels);

/// Polynomial in an auxiliary parameter t with Polynomial coefficients.
class TPolynomial {
public:
    TPolynomial() = default;
    explicit TPolynomial(std::size_t ring_dimension) : n_(ring_dimension) {}

    void add(int power, const Polynomial& coefficient);

    [[nodiscard]] std::size_t ring_dimension() const { return n_; }
    [[nodiscard]] const std::map<int, Polynomial>& coefficients() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// True iff no negative powers of t occur.
    [[nodiscard]] bool regular() const { return coeffs_.empty() || coeffs_.begin()->first >= 0; }
    [[nodiscard]] int top_power() const;
    [[nodiscard]] int bottom_power() const;
    [[nodiscard]] Polynomial coefficient(int power) const;
    [[nodiscard]] Polynomial at_one() const;

    friend bool operator==(const TPolynomial& a, const TPolynomial& b) = default;

private:
    std::size_t n_ = 0;
    std::map<int, Polynomial> coeffs_;
};

}  // namespace lpc

template <>
struct std::hash<lpc::Monomial> {
    std::size_t operator()(const lpc::Monomial& m) const noexcept { return m.hash(); }
};
