#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "lpc/lie.hpp"
#include "lpc/weights.hpp"

namespace lpc {

/// Malformed algebra document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AlgebraFile {
    LieAlgebra algebra;
    std::optional<ContractionWeights> weights;
    friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

/// YAML document: name, type, basis, brackets [i, j, k, "c"], matrices, rootdata, weights.
std::string emit_algebra(const AlgebraFile& file);
std::string emit_algebra(const LieAlgebra& l);
/// Throws ParseError.  The table is not Jacobi-checked here.
AlgebraFile parse_algebra(const std::string& text);
AlgebraFile load_algebra(const std::string& path);
void save_algebra(const AlgebraFile& file, const std::string& path);

}  // namespace lpc
