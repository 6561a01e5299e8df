#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpc/contract.hpp"
#include "lpc/lie.hpp"

namespace lpc {

struct GeneratorSet {
    LieAlgebra algebra;
    std::vector<Polynomial> generators;  ///< homogeneous, degrees ascending
    Rational normalization{1};           ///< factor applied to the last generator
};

/// Generic matrix sum_i x_i M^i, M^i the trace-form dual of the matrix basis.
PolynomialMatrix generic_matrix(const LieAlgebra& l);

/// Sums of principal k-minors e_1..e_m of a square polynomial matrix (index k-1 holds e_k).
std::vector<Polynomial> principal_minor_sums(const PolynomialMatrix& a);

/// Characteristic-coefficient (and Pfaffian) generators, scaled so the Kostant equality holds
/// exactly on the algebra itself.
GeneratorSet char_invariants(const LieAlgebra& l);
/// Same without the Kostant normalization.
GeneratorSet raw_char_invariants(const LieAlgebra& l);

bool centrality_check(const Polynomial& h, const LieAlgebra& l);

/// (lambda_1..lambda_n) with {x_j, h} = lambda_j h, or nullopt.
std::optional<std::vector<Rational>> semi_invariant_weight(const Polynomial& h, const MultiVector& pi);
std::optional<std::vector<Rational>> semi_invariant_weight(const Polynomial& h, const LieAlgebra& l);

struct Membership {
    bool member = false;
    Polynomial p;  ///< in gens.size() variables y_1..y_m; h = p(gens) when member
    std::string reason;
};

/// Solves h = P(gens) over monomials in gens of matching degree (and matching weighted degree
/// when weights are given).  Throws std::invalid_argument if h or a generator is not homogeneous.
Membership membership_linear(const Polynomial& h, std::span<const Polynomial> gens,
                             const ContractionWeights* weights = nullptr);

struct ReductionStep {
    std::size_t generator = 0;
    int degree_before = 0;
    int degree_after = 0;
    Polynomial p;  ///< in the variables y_1..y_{generator}
};

struct ReducedGenerators {
    GeneratorSet set;
    std::vector<ReductionStep> steps;
};

/// Replaces H_j by H_j - P(H_1..H_{j-1}) whenever H_j^bullet = P(H_1^bullet..H_{j-1}^bullet) with
/// P of matching degree and t-degree, until no step applies.
ReducedGenerators t_degree_reduction(const GeneratorSet& gens, const ContractionWeights& w);

}  // namespace lpc
