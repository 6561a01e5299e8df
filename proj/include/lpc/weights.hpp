#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpc/polynomial.hpp"

namespace lpc {

/// Nonnegative integer weight per basis vector; phi_t scales basis vector i by t^weight(i).
class ContractionWeights {
public:
    ContractionWeights() = default;
    explicit ContractionWeights(std::vector<int> weights);

    /// Parses "0,0,1" (optionally wrapped in brackets).
    static ContractionWeights parse(std::string_view text);

    [[nodiscard]] std::size_t size() const { return w_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return w_[i]; }
    [[nodiscard]] std::span<const int> values() const { return w_; }
    /// Degree in t of det(phi_t).
    [[nodiscard]] int d_t() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const ContractionWeights&, const ContractionWeights&) = default;

private:
    std::vector<int> w_;
};

/// phi_t(p): substitutes x_i -> t^{w(i)} x_i and collects by powers of t.
TPolynomial t_expand(const Polynomial& p, const ContractionWeights& w);

}  // namespace lpc
