#include "lpc/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpc/poly_gcd.hpp"

namespace lpc {

ProportionalityCertificate proportionality(const MultiVector& a, const MultiVector& b) {
    if (a.ring_dimension() != b.ring_dimension() || a.degree() != b.degree())
        throw std::invalid_argument("proportionality: inputs differ in ring or degree");
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("proportionality: zero input");
    const std::size_t n = a.ring_dimension();
    ProportionalityCertificate cert;
    cert.q1 = Polynomial(n);
    cert.q2 = Polynomial(n);
    // pivot: the common-support coefficient pair with the fewest terms
    std::optional<IndexSet> pivot;
    std::size_t best = 0;
    for (const auto& [s, c] : a.terms()) {
        auto it = b.terms().find(s);
        if (it == b.terms().end()) continue;
        const std::size_t cost = c.size() + it->second.size();
        if (!pivot || cost < best) {
            pivot = s;
            best = cost;
        }
    }
    if (!pivot) {
        cert.reason = "supports are disjoint";
        return cert;
    }
    const Polynomial& ai = a.terms().at(*pivot);
    const Polynomial& bi = b.terms().at(*pivot);
    for (const auto& [s, c] : a.terms())
        if (!(c * bi == ai * b.coefficient(s))) {
            cert.reason = "cross products differ at " + std::to_string(s.bits());
            return cert;
        }
    for (const auto& [s, c] : b.terms())
        if (!a.terms().contains(s)) {
            cert.reason = "support of the second input is larger";
            return cert;
        }
    const Polynomial g = multivariate_gcd(ai, bi);
    Polynomial q2 = *divide_exact(ai, g);
    Polynomial q1 = *divide_exact(bi, g);
    const Rational s = q1.leading_coefficient().inverse();
    cert.q1 = q1 * s;
    cert.q2 = q2 * s;
    cert.proportional = true;
    return cert;
}

bool algebraic_independence(std::span<const Polynomial> polys) {
    const std::size_t m = polys.size();
    if (m == 0) return true;
    const std::size_t n = polys[0].ring_dimension();
    if (m > n) return false;
    PolynomialMatrix jac(m, n, Polynomial(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) jac(i, j) = partial_derivative(polys[i], j);
    // full rank at one point certifies independence; otherwise decide symbolically
    if (sampled_rank(jac) == m) return true;
    return bareiss_rank(jac) == m;
}

KostantReport kostant_check(std::span<const Polynomial> gens, const MultiVector& pi, std::optional<std::size_t> index) {
    KostantReport r;
    const std::size_t n = pi.ring_dimension();
    r.index = index ? *index : n - bivector_rank(pi);
    if (gens.size() != r.index) {
        r.reason = "generator count " + std::to_string(gens.size()) + " differs from the index " + std::to_string(r.index);
        return r;
    }
    if ((n - r.index) % 2 != 0) {
        r.reason = "n - index is odd";
        return r;
    }
    r.independent = algebraic_independence(gens);
    if (!r.independent) {
        r.reason = "generators are algebraically dependent";
        return r;
    }
    const MultiVector rhs = wedge_power(pi, static_cast<unsigned>((n - r.index) / 2));
    if (rhs.is_zero()) {
        r.reason = "wedge power vanishes";
        return r;
    }
    MultiVector lhs = gens.empty() ? MultiVector::unit(n) : volume_dual(wedge_differentials(gens));
    if (lhs.is_zero()) {
        r.reason = "differentials are dependent";
        return r;
    }
    r.certificate = proportionality(lhs, rhs);
    r.is_kostant_type = r.certificate.proportional && r.certificate.q1.is_constant() && r.certificate.q2.is_constant();
    r.exact = lhs == rhs;
    if (!r.certificate.proportional) r.reason = "not proportional: " + r.certificate.reason;
    else if (!r.is_kostant_type) r.reason = "proportional with non-constant factors";
    return r;
}

const char* to_string(ContrDegReport::Case c) {
    switch (c) {
        case ContrDegReport::Case::equality: return "equality";
        case ContrDegReport::Case::excess: return "excess";
        case ContrDegReport::Case::deficit: return "deficit";
        case ContrDegReport::Case::unclassified: return "unclassified";
    }
    return "";
}

bool ContrDegReport::consistent() const {
    if (!valid_contraction || !index_preserved) return false;
    switch (classification) {
        case Case::equality: return highest_independent && contracted_kostant && contracted_kostant->exact;
        case Case::excess: return !highest_independent;
        default: return false;
    }
}

ContrDegReport contr_deg_report(std::span<const Polynomial> gens, const MultiVector& pi, const ContractionWeights& w,
                                std::optional<std::size_t> index) {
    ContrDegReport r;
    const std::size_t n = pi.ring_dimension();
    const ContractionResult cr = contract(pi, w);
    r.valid_contraction = cr.valid;
    r.d_t = w.d_t();
    for (const auto& g : gens) {
        const TDegree td = t_degree(g, w);
        r.t_degrees.push_back(td.degree);
        r.highest.push_back(td.highest);
        r.sum_t_degrees += td.degree;
    }
    if (!cr.valid) return r;
    r.index = index ? *index : n - bivector_rank(pi);
    r.contracted_index = n - bivector_rank(cr.pi_tilde);
    r.index_preserved = r.index == r.contracted_index;
    if (!r.index_preserved) return r;
    r.highest_independent = algebraic_independence(r.highest);
    if (r.sum_t_degrees == r.d_t) {
        r.classification = ContrDegReport::Case::equality;
        r.contracted_kostant = kostant_check(r.highest, cr.pi_tilde, r.index);
    } else if (r.sum_t_degrees > r.d_t) {
        r.classification = ContrDegReport::Case::excess;
    } else {
        r.classification = ContrDegReport::Case::deficit;
    }
    r.good_generating_system = r.highest_independent;
    return r;
}

FundamentalSemiInvariant fundamental_semiinvariant(const MultiVector& pi, std::size_t index) {
    const std::size_t n = pi.ring_dimension();
    if (index > n || (n - index) % 2 != 0) throw std::invalid_argument("fundamental_semiinvariant: n - index must be even");
    const MultiVector w = wedge_power(pi, static_cast<unsigned>((n - index) / 2));
    if (w.is_zero()) throw std::invalid_argument("fundamental_semiinvariant: wedge power vanishes (index inconsistent)");
    std::vector<Polynomial> coeffs;
    for (const auto& [s, c] : w.terms()) coeffs.push_back(c);
    FundamentalSemiInvariant out;
    out.p = gcd_all(coeffs);
    out.cofactor = MultiVector(n, w.degree());
    std::vector<Polynomial> rest;
    for (const auto& [s, c] : w.terms()) {
        auto q = divide_exact(c, out.p);
        if (!q) throw std::logic_error("fundamental_semiinvariant: gcd does not divide");
        out.cofactor.add(s, *q);
        rest.push_back(*q);
    }
    out.cofactor_content_one = gcd_all(rest) == Polynomial::constant(n, Rational(1));
    return out;
}

Polynomial expected_fundamental_semiinvariant(const LieAlgebra& g) {
    if (!g.root_data() || g.root_data()->marks.empty())
        throw std::invalid_argument("expected_fundamental_semiinvariant: no marks for this algebra");
    const auto& rd = *g.root_data();
    const std::size_t n = g.dimension();
    Polynomial p = Polynomial::constant(n, Rational(1));
    for (std::size_t i = 0; i < rd.rank; ++i) p *= Polynomial::variable(n, rd.f[i]).pow(static_cast<unsigned>(rd.marks[i] - 1));
    return p;
}

bool SuiteReport::pass() const {
    return !clauses.empty() && std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.pass; });
}

namespace {

std::string join_polys(std::span<const Polynomial> ps, std::span<const std::string> labels) {
    std::string s = "[";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "; " : "") + format_polynomial(ps[i], labels);
    return s + "]";
}

std::string join_ints(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

}  // namespace

SuiteReport feigin_suite(const LieAlgebra& g) {
    SuiteReport rep;
    rep.subject = g.name();
    if (!g.root_data() || !g.root_data()->highest) throw std::invalid_argument("feigin_suite: algebra needs root data with a highest root");
    const auto& rd = *g.root_data();
    const std::size_t n = g.dimension();
    const std::size_t ell = rd.rank;
    const auto& labels = g.labels();

    const ContractionWeights w = borel_decomposition(g);
    const ContractionResult cr = contract(g, w);
    if (!cr.valid) {
        rep.clauses.push_back({"contraction", false, describe_violation(*cr.violation, labels)});
        return rep;
    }
    const LieAlgebra& gt = *cr.contracted;
    rep.values.emplace_back("weights", w.str());

    // (a)
    const std::size_t ind = algebra_index(gt);
    rep.clauses.push_back({"a: ind g~ = l", ind == ell, "ind = " + std::to_string(ind) + ", l = " + std::to_string(ell)});

    // (b)
    const GeneratorSet gens = char_invariants(g);
    std::vector<Polynomial> top;
    std::vector<int> degs, tdegs;
    bool b_ok = true;
    for (const auto& f : gens.generators) {
        const TDegree td = t_degree(f, w);
        top.push_back(td.highest);
        degs.push_back(f.degree());
        tdegs.push_back(td.degree);
        if (td.degree != f.degree() - 1) b_ok = false;
    }
    rep.values.emplace_back("deg", join_ints(degs));
    rep.values.emplace_back("deg_t", join_ints(tdegs));
    rep.values.emplace_back("F_bullet", join_polys(top, labels));
    rep.clauses.push_back({"b: deg_t F_i = deg F_i - 1", b_ok, "deg = " + join_ints(degs) + ", deg_t = " + join_ints(tdegs)});

    // (c)
    const KostantReport kr = kostant_check(top, cr.pi_tilde, ind);
    rep.clauses.push_back({"c: Kostant equality for F_i^bullet", kr.is_kostant_type && kr.exact,
                           kr.reason.empty() ? (kr.exact ? "exact" : "up to constant") : kr.reason});

    // (d)
    const FundamentalSemiInvariant fsi = fundamental_semiinvariant(cr.pi_tilde, ell);
    const Polynomial expected = make_monic(expected_fundamental_semiinvariant(g));
    const bool semi = semi_invariant_weight(fsi.p, cr.pi_tilde).has_value();
    rep.values.emplace_back("p", format_polynomial(fsi.p, labels));
    rep.clauses.push_back({"d: p = prod f_i^(r_i - 1)", fsi.p == expected && fsi.cofactor_content_one && semi,
                           "p = " + format_polynomial(fsi.p, labels) + ", expected " + format_polynomial(expected, labels)});

    // (e): g~' = n + n^- on the non-Cartan coordinates
    std::vector<std::size_t> keep;
    std::vector<int> remap(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(rd.cartan.begin(), rd.cartan.end(), i) == rd.cartan.end()) {
            remap[i] = static_cast<int>(keep.size());
            keep.push_back(i);
        }
    const std::size_t np = keep.size();
    const LieAlgebra gp = restrict_to_indices(gt, keep, g.name() + "~'");
    std::vector<Polynomial> hs;
    bool cartan_free = true;
    for (std::size_t i = 0; i + 1 < ell; ++i) {
        for (auto c : rd.cartan)
            if (top[i].uses_variable(c)) cartan_free = false;
        if (cartan_free) hs.push_back(top[i].remap(np, remap));
    }
    for (std::size_t i = 0; i < ell; ++i) hs.push_back(Polynomial::variable(np, static_cast<std::size_t>(remap[rd.f[i]])));
    hs.push_back(Polynomial::variable(np, static_cast<std::size_t>(remap[*rd.highest])));
    const std::size_t ind_p = algebra_index(gp);
    const bool indep = cartan_free && algebraic_independence(hs);
    rep.values.emplace_back("H", join_polys(hs, gp.labels()));
    rep.clauses.push_back({"e: 2l semicentre generators independent, ind g~' = 2l", indep && ind_p == 2 * ell && hs.size() == 2 * ell,
                           "ind g~' = " + std::to_string(ind_p) + (cartan_free ? "" : ", F_i^bullet uses a Cartan variable")});

    // (f)
    bool f_ok = false;
    std::string f_detail;
    if (cartan_free && 3 * ell <= n && (n - 3 * ell) % 2 == 0) {
        bool p_cartan_free = true;
        for (auto c : rd.cartan)
            if (fsi.p.uses_variable(c)) p_cartan_free = false;
        if (p_cartan_free) {
            const Polynomial pp = fsi.p.remap(np, remap);
            const MultiVector lhs = pp * volume_dual(wedge_differentials(hs));
            const MultiVector rhs = wedge_power(structure_bivector(gp), static_cast<unsigned>((n - 3 * ell) / 2));
            if (!lhs.is_zero() && !rhs.is_zero()) {
                const auto cert = proportionality(lhs, rhs);
                if (cert.proportional) rep.values.emplace_back("q1 divides p", divide_exact(pp, cert.q1) ? "true" : "false");
                if (cert.proportional && cert.q1.is_constant() && cert.q2.is_constant()) {
                    const Rational a = cert.q2.constant_term() / cert.q1.constant_term();
                    f_ok = !a.is_zero();
                    f_detail = "a = " + a.str();
                    rep.values.emplace_back("a", a.str());
                } else {
                    f_detail = cert.proportional ? "non-constant factor" : cert.reason;
                }
            } else {
                f_detail = "a side vanishes";
            }
        } else {
            f_detail = "p uses a Cartan variable";
        }
    } else {
        f_detail = "degree bookkeeping fails";
    }
    rep.clauses.push_back({"f: p (H/omega') = a Lambda pi~'", f_ok, f_detail});
    return rep;
}

SuiteReport z2_suite(const SymmetricPair& pair) {
    SuiteReport rep;
    rep.subject = pair.id;
    const LieAlgebra& g = pair.algebra;
    const auto& labels = g.labels();
    const std::size_t n = g.dimension();

    const GradingCheck gc = check_grading(pair);
    const CartanSubspaceCheck cc = check_cartan_subspace(pair);
    rep.clauses.push_back({"grading", gc.ok(), ""});
    rep.clauses.push_back({"Cartan subspace", cc.ok(), ""});

    const std::size_t ell = algebra_index(g);
    std::size_t dim_l = pair.levi.size(), rk_l = 0;
    if (dim_l > 0) {
        std::vector<std::string> ll;
        for (std::size_t i = 0; i < dim_l; ++i) ll.push_back("l" + std::to_string(i + 1));
        rk_l = algebra_index(subalgebra(g, pair.levi, "l", ll));
    }
    const std::size_t dim_b = (n + ell) / 2;
    const std::size_t dim_bl = (dim_l + rk_l) / 2;
    rep.values.emplace_back("dim b", std::to_string(dim_b));
    rep.values.emplace_back("dim g1", std::to_string(pair.g1.size()));
    rep.values.emplace_back("dim b_l", std::to_string(dim_bl));
    rep.clauses.push_back({"rk-dim: dim b = dim g1 + dim b_l", dim_b == pair.g1.size() + dim_bl,
                           std::to_string(dim_b) + " = " + std::to_string(pair.g1.size()) + " + " + std::to_string(dim_bl)});

    const ContractionResult cr = contract(g, pair.weights);
    if (!cr.valid) {
        rep.clauses.push_back({"contraction", false, describe_violation(*cr.violation, labels)});
        return rep;
    }
    const std::size_t ind = algebra_index(*cr.contracted);
    rep.clauses.push_back({"ind g~ = l", ind == ell, "ind = " + std::to_string(ind) + ", l = " + std::to_string(ell)});

    const GeneratorSet gens = char_invariants(g);
    const ReducedGenerators red = t_degree_reduction(gens, pair.weights);
    std::vector<Polynomial> top;
    std::vector<int> tdegs;
    int sum = 0;
    for (const auto& f : red.set.generators) {
        const TDegree td = t_degree(f, pair.weights);
        top.push_back(td.highest);
        tdegs.push_back(td.degree);
        sum += td.degree;
    }
    rep.values.emplace_back("reduction steps", std::to_string(red.steps.size()));
    rep.values.emplace_back("deg_t", join_ints(tdegs));
    rep.values.emplace_back("F_bullet", join_polys(top, labels));
    rep.clauses.push_back({"sum deg_t F_i = dim g1", sum == static_cast<int>(pair.g1.size()),
                           "sum = " + std::to_string(sum) + ", D_t = " + std::to_string(pair.weights.d_t())});
    const KostantReport kr = kostant_check(top, cr.pi_tilde, ind);
    rep.clauses.push_back({"F_i^bullet independent", kr.independent, ""});
    rep.clauses.push_back({"Kostant equality for F_i^bullet with pi~", kr.is_kostant_type && kr.exact,
                           kr.reason.empty() ? (kr.exact ? "exact" : "up to constant") : kr.reason});
    rep.values.emplace_back("codim-2 (catalog metadata)", pair.codim2_metadata ? "true" : "false");
    return rep;
}

}  // namespace lpc
