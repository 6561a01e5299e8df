#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpc/contract.hpp"
#include "lpc/invariants.hpp"

namespace lpc {

struct ProportionalityCertificate {
    Polynomial q1;
    Polynomial q2;
    bool proportional = false;
    std::string reason;
};

/// q1 A = q2 B with coprime q1, q2 (q1 monic), or proportional = false.
ProportionalityCertificate proportionality(const MultiVector& a, const MultiVector& b);

struct KostantReport {
    bool is_kostant_type = false;  ///< q1, q2 constant
    bool exact = false;            ///< dF/omega equals the wedge power on the nose
    ProportionalityCertificate certificate;
    std::size_t index = 0;
    bool independent = false;
    std::string reason;
};

/// Compares (dF_1 ^ ... ^ dF_l)/omega with Lambda^{(n-l)/2} pi.  The index is computed unless given.
KostantReport kostant_check(std::span<const Polynomial> gens, const MultiVector& pi,
                            std::optional<std::size_t> index = std::nullopt);

bool algebraic_independence(std::span<const Polynomial> polys);

struct ContrDegReport {
    bool valid_contraction = false;
    bool index_preserved = false;
    std::size_t index = 0;
    std::size_t contracted_index = 0;
    std::vector<int> t_degrees;
    std::vector<Polynomial> highest;
    int sum_t_degrees = 0;
    int d_t = 0;
    enum class Case { equality, excess, deficit, unclassified } classification = Case::unclassified;
    bool highest_independent = false;
    std::optional<KostantReport> contracted_kostant;
    bool good_generating_system = false;
    /// Clause (i) and (ii) consequences hold for the observed case.
    [[nodiscard]] bool consistent() const;
};

const char* to_string(ContrDegReport::Case c);

ContrDegReport contr_deg_report(std::span<const Polynomial> gens, const MultiVector& pi, const ContractionWeights& w,
                                std::optional<std::size_t> index = std::nullopt);

struct FundamentalSemiInvariant {
    Polynomial p;
    MultiVector cofactor;
    bool cofactor_content_one = false;
};

/// p = gcd of all coefficients of Lambda^{(n-l)/2} pi; throws if that wedge power vanishes.
FundamentalSemiInvariant fundamental_semiinvariant(const MultiVector& pi, std::size_t index);

/// prod f_i^{r_i - 1} over the simple roots.
Polynomial expected_fundamental_semiinvariant(const LieAlgebra& g);

struct Clause {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string subject;
    std::vector<Clause> clauses;
    /// Canonical polynomial strings and integers keyed by name, in insertion order.
    std::vector<std::pair<std::string, std::string>> values;
    [[nodiscard]] bool pass() const;
};

SuiteReport feigin_suite(const LieAlgebra& g);
SuiteReport z2_suite(const SymmetricPair& pair);

}  // namespace lpc
