#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpc/linalg.hpp"
#include "lpc/polynomial.hpp"

namespace lpc {

/// Strictly increasing set of variable indices, stored as a bitmask (n <= 32).
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
    static IndexSet of(std::initializer_list<std::size_t> indices);
    static IndexSet from_list(std::span<const std::size_t> indices);
    static IndexSet full(std::size_t n) { return IndexSet(n >= 32 ? 0xffffffffu : ((1u << n) - 1)); }

    [[nodiscard]] std::uint32_t bits() const { return bits_; }
    [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    [[nodiscard]] bool empty() const { return bits_ == 0; }
    [[nodiscard]] bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
    [[nodiscard]] std::vector<std::size_t> elements() const;
    [[nodiscard]] IndexSet complement(std::size_t n) const { return IndexSet(full(n).bits_ & ~bits_); }
    [[nodiscard]] bool disjoint(IndexSet o) const { return (bits_ & o.bits_) == 0; }
    [[nodiscard]] IndexSet with(std::size_t i) const { return IndexSet(bits_ | (1u << i)); }
    [[nodiscard]] IndexSet without(std::size_t i) const { return IndexSet(bits_ & ~(1u << i)); }
    [[nodiscard]] std::string str(std::span<const std::string> labels) const;

    friend IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
    friend bool operator==(IndexSet a, IndexSet b) = default;
    /// Lexicographic order on the sorted element lists (for equal cardinalities).
    friend bool operator<(IndexSet a, IndexSet b) {
        const std::uint32_t x = a.bits_ ^ b.bits_;
        if (x == 0) return false;
        return (a.bits_ & (x & (~x + 1))) != 0;
    }

private:
    std::uint32_t bits_ = 0;
};

/// Sign of the permutation that sorts the elements of a followed by the elements of b.
/// Requires a and b disjoint.
int shuffle_sign(IndexSet a, IndexSet b);

struct VectorKind {};
struct FormKind {};

/// Homogeneous element of degree k of W^k (VectorKind) or Omega^k (FormKind), stored as a
/// map index set -> nonzero polynomial coefficient.
template <typename Kind>
class Skew {
public:
    Skew() = default;
    Skew(std::size_t n, std::size_t k);

    [[nodiscard]] std::size_t ring_dimension() const { return n_; }
    [[nodiscard]] std::size_t degree() const { return k_; }
    [[nodiscard]] const std::map<IndexSet, Polynomial>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Polynomial coefficient(IndexSet s) const;
    void add(IndexSet s, const Polynomial& c);

    Skew& operator+=(const Skew& o);
    Skew& operator-=(const Skew& o);
    Skew& operator*=(const Rational& c);
    Skew& operator*=(const Polynomial& c);
    friend Skew operator+(Skew a, const Skew& b) { return a += b; }
    friend Skew operator-(Skew a, const Skew& b) { return a -= b; }
    friend Skew operator*(const Rational& c, Skew a) { return a *= c; }
    friend Skew operator*(const Polynomial& c, Skew a) { return a *= c; }
    friend bool operator==(const Skew&, const Skew&) = default;

    /// The unit element of degree 0.
    static Skew unit(std::size_t n);

private:
    void check_compatible(const Skew& o) const;

    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::map<IndexSet, Polynomial> terms_;
};

using MultiVector = Skew<VectorKind>;
using Form = Skew<FormKind>;

extern template class Skew<VectorKind>;
extern template class Skew<FormKind>;

/// Exterior product; throws std::invalid_argument on ring mismatch or degree overflow.
template <typename Kind>
Skew<Kind> wedge(const Skew<Kind>& a, const Skew<Kind>& b);

/// Lambda^k pi, the k-fold wedge of a bivector.  Lambda^0 is the unit.
MultiVector wedge_power(const MultiVector& pi, unsigned k);

/// dF as a 1-form.
Form differential(const Polynomial& f);
/// dF_1 ^ ... ^ dF_m.
Form wedge_differentials(std::span<const Polynomial> fs);

/// The map 1/omega : Omega^k -> W^{n-k}.
MultiVector volume_dual(const Form& f);

/// Coordinate trivector whose vanishing is the Jacobi identity for pi.
MultiVector schouten_square(const MultiVector& pi);

/// {f, g} = sum over i<j of pi_ij (d_i f d_j g - d_j f d_i g).
Polynomial poisson_bracket(const MultiVector& pi, const Polynomial& f, const Polynomial& g);

/// Pfaffian by recursive first-row expansion; throws if m is not antisymmetric.
Polynomial pfaffian(const PolynomialMatrix& m);

/// Skew matrix with entries pi_ij (and -pi_ij below the diagonal).
PolynomialMatrix bivector_matrix(const MultiVector& pi);
RationalMatrix bivector_matrix_at(const MultiVector& pi, std::span<const Rational> point);
MultiVector bivector_from_matrix(const PolynomialMatrix& m);

/// (index-set labels, canonical polynomial) pairs in lexicographic index-set order.
template <typename Kind>
std::vector<std::pair<std::vector<std::string>, std::string>> serialize(const Skew<Kind>& v,
                                                                        std::span<const std::string> labels);
/// Human-readable rendering, e.g. "-2*e d(e,h) + h d(e,f)".
template <typename Kind>
std::string format_skew(const Skew<Kind>& v, std::span<const std::string> labels);

/// Degree-k multivector with TPolynomial coefficients (pi_t).
class TMultiVector {
public:
    TMultiVector() = default;
    TMultiVector(std::size_t n, std::size_t k) : n_(n), k_(k) {}

    [[nodiscard]] std::size_t ring_dimension() const { return n_; }
    [[nodiscard]] std::size_t degree() const { return k_; }
    [[nodiscard]] const std::map<IndexSet, TPolynomial>& terms() const { return terms_; }
    void set(IndexSet s, TPolynomial c);
    [[nodiscard]] bool regular() const;
    /// The MultiVector of t^power coefficients.
    [[nodiscard]] MultiVector at_power(int power) const;
    [[nodiscard]] MultiVector at_one() const;

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::map<IndexSet, TPolynomial> terms_;
};

}  // namespace lpc

namespace lpc {

/// Generic rank of a bivector over the fraction field (Bareiss elimination, cross-checked
/// against evaluation at sample points).
std::size_t bivector_rank(const MultiVector& pi);

/// Rank of pi at deterministic pseudo-random rational points; a lower bound for the generic rank.
std::size_t sampled_rank(const PolynomialMatrix& m, unsigned samples = 3);

}  // namespace lpc

namespace lpc {

/// {x_j, h} for every coordinate j.
std::vector<Polynomial> brackets_with_coordinates(const MultiVector& pi, const Polynomial& h);
/// True iff {x_j, h} = 0 for all j.
bool is_poisson_central(const MultiVector& pi, const Polynomial& h);

}  // namespace lpc
