#pragma once

#include <optional>
#include <string>

#include "lpc/exterior.hpp"
#include "lpc/lie.hpp"
#include "lpc/weights.hpp"

namespace lpc {

/// First index pair (lexicographic) whose coefficient in pi_t has a negative power of t.
struct ContractionViolation {
    std::size_t i = 0;
    std::size_t j = 0;
    int power = 0;
};

struct ContractionResult {
    ContractionWeights weights;
    TMultiVector pi_t;
    MultiVector pi_tilde;  ///< t^0 part; meaningful only when valid
    bool valid = false;
    std::optional<ContractionViolation> violation;
    std::optional<LieAlgebra> contracted;  ///< set when pi is linear and the contraction is valid
};

/// pi_t = phi_t^{-1}(pi): {x_i, x_j}_t = t^{w_i + w_j} pi_ij(t^{-w} x).
ContractionResult contract(const MultiVector& pi, const ContractionWeights& w);
/// Same, with the contracted Lie algebra read off pi_tilde.
ContractionResult contract(const LieAlgebra& l, const ContractionWeights& w);

std::string describe_violation(const ContractionViolation& v, std::span<const std::string> labels);

struct TDegree {
    int degree = 0;
    Polynomial highest;
};

/// Top power of t in phi_t(h) and its coefficient h^bullet.  Throws for h = 0.
TDegree t_degree(const Polynomial& h, const ContractionWeights& w);

/// Checks that h^bullet is central for pi_tilde.  Throws std::invalid_argument when h is not
/// central for the original pi or the contraction is invalid.
bool highest_component_central(const Polynomial& h, const MultiVector& pi, const ContractionResult& result);

}  // namespace lpc
