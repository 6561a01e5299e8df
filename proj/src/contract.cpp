#include "lpc/contract.hpp"

#include <stdexcept>

namespace lpc {

ContractionResult contract(const MultiVector& pi, const ContractionWeights& w) {
    const std::size_t n = pi.ring_dimension();
    if (pi.degree() != 2) throw std::invalid_argument("contract: expected a bivector");
    if (w.size() != n) throw std::invalid_argument("contract: weight length does not match the dimension");
    ContractionResult r;
    r.weights = w;
    r.pi_t = TMultiVector(n, 2);
    for (const auto& [ab, c] : pi.terms()) {
        const auto el = ab.elements();
        const int shift = w[el[0]] + w[el[1]];
        TPolynomial tp(n);
        for (const auto& [m, v] : c.terms())
            tp.add(shift - static_cast<int>(m.weighted_degree(w.values())), Polynomial::monomial(n, m, v));
        if (!tp.regular() && !r.violation) r.violation = ContractionViolation{el[0], el[1], tp.bottom_power()};
        r.pi_t.set(ab, std::move(tp));
    }
    r.valid = !r.violation.has_value();
    r.pi_tilde = r.valid ? r.pi_t.at_power(0) : MultiVector(n, 2);
    return r;
}

ContractionResult contract(const LieAlgebra& l, const ContractionWeights& w) {
    ContractionResult r = contract(structure_bivector(l), w);
    if (r.valid) r.contracted = algebra_from_bivector(l.name() + "~", l.labels(), r.pi_tilde);
    return r;
}

std::string describe_violation(const ContractionViolation& v, std::span<const std::string> labels) {
    return "negative t-power at pair (" + labels[v.i] + "," + labels[v.j] + "): t^" + std::to_string(v.power);
}

TDegree t_degree(const Polynomial& h, const ContractionWeights& w) {
    if (h.is_zero()) throw std::invalid_argument("t_degree: zero polynomial");
    if (w.size() != h.ring_dimension()) throw std::invalid_argument("t_degree: weight length mismatch");
    const TPolynomial tp = t_expand(h, w);
    return {tp.top_power(), tp.coefficient(tp.top_power())};
}

bool highest_component_central(const Polynomial& h, const MultiVector& pi, const ContractionResult& result) {
    if (!result.valid) throw std::invalid_argument("highest_component_central: contraction is not valid");
    if (!is_poisson_central(pi, h)) throw std::invalid_argument("highest_component_central: input is not central");
    if (h.is_zero()) return true;
    return is_poisson_central(result.pi_tilde, t_degree(h, result.weights).highest);
}

}  // namespace lpc
