#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpc/exterior.hpp"
#include "lpc/linalg.hpp"
#include "lpc/weights.hpp"

namespace lpc {

enum class ClassicalType { sl, so, sp };

struct ClassicalTag {
    ClassicalType type;
    std::size_t size;  ///< matrix size: sl(n), so(m), sp(2n)
    [[nodiscard]] std::string name() const;
    friend bool operator==(const ClassicalTag&, const ClassicalTag&) = default;
};

/// Parses "sl4", "so5", "sp4".
std::optional<ClassicalTag> parse_classical_name(const std::string& name);

struct RootData {
    std::size_t rank = 0;
    std::vector<std::size_t> e;  ///< simple root vectors
    std::vector<std::size_t> h;  ///< simple coroots
    std::vector<std::size_t> f;  ///< negative simple root vectors
    std::optional<std::size_t> highest;  ///< e_delta, absent when the algebra is not simple
    std::vector<int> marks;              ///< [delta : alpha_i]
    std::vector<std::size_t> positive;   ///< all positive root vectors
    std::vector<std::size_t> negative;
    std::vector<std::size_t> cartan;
    friend bool operator==(const RootData&, const RootData&) = default;
};

using StructureConstants = std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>>;

/// Finite-dimensional Lie algebra over Q given by structure constants c_ij^k for i < j.
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(std::string name, std::vector<std::string> labels);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::size_t dimension() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const StructureConstants& structure() const { return c_; }
    [[nodiscard]] const std::optional<std::vector<RationalMatrix>>& matrices() const { return matrices_; }
    [[nodiscard]] const std::optional<RootData>& root_data() const { return roots_; }
    [[nodiscard]] const std::optional<ClassicalTag>& classical() const { return classical_; }
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& label) const;

    /// Sets [x_i, x_j] (i != j); the antisymmetric partner is implied.
    void set_bracket(std::size_t i, std::size_t j, const std::vector<Rational>& coords);
    /// Coordinates of [x_i, x_j].
    [[nodiscard]] std::vector<Rational> bracket(std::size_t i, std::size_t j) const;
    /// Bracket of two coordinate vectors.
    [[nodiscard]] std::vector<Rational> bracket(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

    void set_name(std::string name) { name_ = std::move(name); }
    void set_matrices(std::vector<RationalMatrix> mats) { matrices_ = std::move(mats); }
    void set_root_data(RootData rd) { roots_ = std::move(rd); }
    void set_classical(ClassicalTag tag) { classical_ = tag; }

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    std::string name_;
    std::vector<std::string> labels_;
    StructureConstants c_;
    std::optional<std::vector<RationalMatrix>> matrices_;
    std::optional<RootData> roots_;
    std::optional<ClassicalTag> classical_;
};

/// Exact coordinates with respect to a linearly independent list of matrices.
class MatrixCoordinates {
public:
    explicit MatrixCoordinates(const std::vector<RationalMatrix>& basis);
    /// nullopt when x is outside the span.
    [[nodiscard]] std::optional<std::vector<Rational>> coordinates(const RationalMatrix& x) const;

private:
    std::vector<RationalMatrix> basis_;
    std::vector<std::pair<std::size_t, std::size_t>> positions_;
    RationalMatrix inverse_;
};

/// Structure constants from commutators; throws if the span is not closed or the matrices
/// are dependent.
LieAlgebra from_matrices(const std::string& name, const std::vector<std::string>& labels,
                         const std::vector<RationalMatrix>& mats);

struct JacobiResult {
    bool ok = true;
    std::optional<std::array<std::size_t, 3>> triple;
};
JacobiResult jacobi_check(const LieAlgebra& l);

/// pi_ij = sum_k c_ij^k x_k; throws std::invalid_argument when Jacobi fails.
MultiVector lie_poisson_bivector(const LieAlgebra& l);
/// Same without the Jacobi gate (for negative controls).
MultiVector structure_bivector(const LieAlgebra& l);
/// Reads structure constants off a bivector with linear coefficients.
LieAlgebra algebra_from_bivector(const std::string& name, const std::vector<std::string>& labels, const MultiVector& pi);

/// Chevalley basis of sl(n), so(m), sp(2n) with root data.
LieAlgebra build_classical(ClassicalType type, std::size_t size);
LieAlgebra build_classical(const std::string& name);
/// Names accepted by build_classical(name) and the CLI.
std::vector<std::string> builtin_names();

/// Weight 0 on the Borel part, 1 on n^-.
ContractionWeights borel_decomposition(const LieAlgebra& l);

RationalMatrix killing_form(const LieAlgebra& l);
RationalMatrix ad_matrix(const LieAlgebra& l, const std::vector<Rational>& x);

/// n - generic rank of the structure bivector.
std::size_t algebra_index(const LieAlgebra& l);

/// Algebra on a subspace spanned by coordinate vectors; throws if not closed.
LieAlgebra subalgebra(const LieAlgebra& l, const std::vector<std::vector<Rational>>& span, const std::string& name,
                      const std::vector<std::string>& labels);
/// Sub-table on a subset of basis indices; throws if not closed.
LieAlgebra restrict_to_indices(const LieAlgebra& l, const std::vector<std::size_t>& indices, const std::string& name);
/// Basis of {y in span(space) : [y, x] = 0 for all x in elements}.
std::vector<std::vector<Rational>> centralizer(const LieAlgebra& l, const std::vector<std::vector<Rational>>& space,
                                               const std::vector<std::vector<Rational>>& elements);
/// Same basis vector list with a permutation applied (labels and constants follow).
LieAlgebra permute_basis(const LieAlgebra& l, const std::vector<std::size_t>& perm);

struct SymmetricPair {
    std::string id;
    LieAlgebra algebra;
    std::vector<std::size_t> g0;
    std::vector<std::size_t> g1;
    std::vector<std::vector<Rational>> cartan_subspace;
    std::vector<std::vector<Rational>> levi;  ///< centralizer of the Cartan subspace in g0
    ContractionWeights weights;
    bool codim2_metadata = true;
};

struct GradingCheck {
    bool g00 = false;
    bool g01 = false;
    bool g11 = false;
    [[nodiscard]] bool ok() const { return g00 && g01 && g11; }
};
GradingCheck check_grading(const SymmetricPair& p);

struct CartanSubspaceCheck {
    bool abelian = false;
    bool semisimple = false;
    bool maximal = false;
    [[nodiscard]] bool ok() const { return abelian && semisimple && maximal; }
};
CartanSubspaceCheck check_cartan_subspace(const SymmetricPair& p);

/// Ids: "sl2/so2", "sp4/sp2+sp2", "so4/gl2", "sl4/sp4".
SymmetricPair symmetric_pair(const std::string& id);
std::vector<std::string> symmetric_pair_ids();

}  // namespace lpc
