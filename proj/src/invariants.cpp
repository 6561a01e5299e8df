#include "lpc/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "lpc/analysis.hpp"

namespace lpc {

namespace {

PolynomialMatrix multiply(const PolynomialMatrix& a, const PolynomialMatrix& b) {
    const std::size_t ring = a(0, 0).ring_dimension();
    PolynomialMatrix out(a.rows(), b.cols(), Polynomial(ring));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

bool homogeneous(const Polynomial& p, const ContractionWeights* w) {
    if (!p.is_homogeneous()) return false;
    if (!w || p.is_zero()) return true;
    const long first = p.terms().front().first.weighted_degree(w->values());
    for (const auto& [m, c] : p.terms())
        if (m.weighted_degree(w->values()) != first) return false;
    return true;
}

long weighted(const Polynomial& p, const ContractionWeights& w) { return p.terms().front().first.weighted_degree(w.values()); }

}  // namespace

PolynomialMatrix generic_matrix(const LieAlgebra& l) {
    if (!l.matrices()) throw std::invalid_argument("generic_matrix: algebra has no matrix realization");
    const auto& mats = *l.matrices();
    const std::size_t n = mats.size();
    RationalMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = trace(mats[i] * mats[j]);
    const auto binv = inverse(b);
    if (!binv) throw std::invalid_argument("generic_matrix: trace form is degenerate");
    const std::size_t m = mats[0].rows();
    PolynomialMatrix a(m, m, Polynomial(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial xi = Polynomial::variable(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& c = (*binv)(i, j);
            if (c.is_zero()) continue;
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t s = 0; s < m; ++s)
                    if (!mats[j](r, s).is_zero()) a(r, s) += xi * (c * mats[j](r, s));
        }
    }
    return a;
}

std::vector<Polynomial> principal_minor_sums(const PolynomialMatrix& a) {
    // Faddeev-LeVerrier: det(lambda - A) = sum c_k lambda^k, and e_k = (-1)^k c_{m-k}.
    const std::size_t m = a.rows();
    if (m == 0 || a.cols() != m) throw std::invalid_argument("principal_minor_sums: matrix not square");
    const std::size_t ring = a(0, 0).ring_dimension();
    std::vector<Polynomial> c(m + 1, Polynomial(ring));
    c[m] = Polynomial::constant(ring, Rational(1));
    PolynomialMatrix mk(m, m, Polynomial(ring));
    std::vector<Polynomial> e;
    for (std::size_t k = 1; k <= m; ++k) {
        mk = multiply(a, mk);
        for (std::size_t i = 0; i < m; ++i) mk(i, i) += c[m - k + 1];
        const PolynomialMatrix amk = multiply(a, mk);
        Polynomial tr(ring);
        for (std::size_t i = 0; i < m; ++i) tr += amk(i, i);
        c[m - k] = tr * Rational(-1, static_cast<long>(k));
        e.push_back(k % 2 == 0 ? c[m - k] : -c[m - k]);
    }
    return e;
}

GeneratorSet raw_char_invariants(const LieAlgebra& l) {
    if (!l.classical()) throw std::invalid_argument("char_invariants: algebra is not a built-in classical algebra");
    if (!l.matrices()) throw std::invalid_argument("char_invariants: algebra has no matrix realization");
    const auto tag = *l.classical();
    const PolynomialMatrix a = generic_matrix(l);
    const std::size_t m = a.rows();
    if (m != tag.size) throw std::invalid_argument("char_invariants: matrix size does not match the type");
    const auto e = principal_minor_sums(a);
    GeneratorSet gs;
    gs.algebra = l;
    switch (tag.type) {
        case ClassicalType::sl:
            for (std::size_t k = 2; k <= m; ++k) gs.generators.push_back(e[k - 1]);
            break;
        case ClassicalType::sp:
            for (std::size_t k = 2; k <= m; k += 2) gs.generators.push_back(e[k - 1]);
            break;
        case ClassicalType::so: {
            const std::size_t top = m % 2 == 0 ? m - 2 : m - 1;
            for (std::size_t k = 2; k <= top; k += 2) gs.generators.push_back(e[k - 1]);
            if (m % 2 == 0) {
                // J A is skew when A is skew about the anti-diagonal
                const std::size_t ring = l.dimension();
                PolynomialMatrix ja(m, m, Polynomial(ring));
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t s = 0; s < m; ++s) ja(r, s) = a(m - 1 - r, s);
                gs.generators.push_back(pfaffian(ja));
            }
            break;
        }
    }
    std::stable_sort(gs.generators.begin(), gs.generators.end(),
                     [](const Polynomial& x, const Polynomial& y) { return x.degree() < y.degree(); });
    for (const auto& g : gs.generators) {
        if (g.is_zero() || !g.is_homogeneous()) throw std::logic_error("char_invariants: degenerate generator");
        if (!centrality_check(g, l)) throw std::logic_error("char_invariants: generator is not central");
    }
    return gs;
}

GeneratorSet char_invariants(const LieAlgebra& l) {
    GeneratorSet gs = raw_char_invariants(l);
    const MultiVector pi = lie_poisson_bivector(l);
    const std::size_t n = l.dimension();
    const std::size_t ell = gs.generators.size();
    const MultiVector lhs = volume_dual(wedge_differentials(gs.generators));
    const MultiVector rhs = wedge_power(pi, static_cast<unsigned>((n - ell) / 2));
    const auto cert = proportionality(lhs, rhs);
    if (!cert.proportional || !cert.q1.is_constant() || !cert.q2.is_constant())
        throw std::logic_error("char_invariants: Kostant equality does not hold up to a constant");
    // q1 lhs = q2 rhs, so scaling the last generator by q1/q2 turns lhs into rhs
    gs.normalization = cert.q1.constant_term() / cert.q2.constant_term();
    gs.generators.back() *= gs.normalization;
    return gs;
}

bool centrality_check(const Polynomial& h, const LieAlgebra& l) { return is_poisson_central(structure_bivector(l), h); }

std::optional<std::vector<Rational>> semi_invariant_weight(const Polynomial& h, const MultiVector& pi) {
    if (h.is_zero()) throw std::invalid_argument("semi_invariant_weight: zero polynomial");
    std::vector<Rational> weight;
    for (const auto& b : brackets_with_coordinates(pi, h)) {
        if (b.is_zero()) {
            weight.emplace_back(0);
            continue;
        }
        const Rational lambda = b.leading_coefficient() / h.leading_coefficient();
        if (!(b == h * lambda)) return std::nullopt;
        weight.push_back(lambda);
    }
    return weight;
}

std::optional<std::vector<Rational>> semi_invariant_weight(const Polynomial& h, const LieAlgebra& l) {
    return semi_invariant_weight(h, structure_bivector(l));
}

Membership membership_linear(const Polynomial& h, std::span<const Polynomial> gens, const ContractionWeights* weights) {
    const std::size_t m = gens.size();
    const std::size_t ring = h.ring_dimension();
    Membership out;
    out.p = Polynomial(m);
    if (!homogeneous(h, weights)) throw std::invalid_argument("membership_linear: target is not homogeneous");
    std::vector<int> deg(m);
    std::vector<long> wdeg(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (gens[i].ring_dimension() != ring) throw std::invalid_argument("membership_linear: ring mismatch");
        if (gens[i].is_zero() || gens[i].degree() < 1 || !homogeneous(gens[i], weights))
            throw std::invalid_argument("membership_linear: generator is not homogeneous of positive degree");
        deg[i] = gens[i].degree();
        if (weights) wdeg[i] = weighted(gens[i], *weights);
    }
    if (h.is_zero()) {
        out.member = true;
        return out;
    }
    const int target = h.degree();
    const long wtarget = weights ? weighted(h, *weights) : 0;
    if (m == 0) {
        out.reason = "no generators";
        return out;
    }

    std::vector<std::vector<unsigned>> candidates;
    std::vector<unsigned> cur(m, 0);
    std::function<void(std::size_t, int, long)> rec = [&](std::size_t i, int d, long wd) {
        if (i == m) {
            if (d == target && (!weights || wd == wtarget)) candidates.push_back(cur);
            return;
        }
        for (unsigned a = 0; d + static_cast<int>(a) * deg[i] <= target; ++a) {
            cur[i] = a;
            rec(i + 1, d + static_cast<int>(a) * deg[i], wd + static_cast<long>(a) * wdeg[i]);
        }
        cur[i] = 0;
    };
    rec(0, 0, 0);
    if (candidates.empty()) {
        out.reason = "no monomial in the generators has matching degree";
        return out;
    }

    std::vector<Polynomial> products;
    for (const auto& a : candidates) {
        Polynomial prod = Polynomial::constant(ring, Rational(1));
        for (std::size_t i = 0; i < m; ++i)
            if (a[i] > 0) prod *= gens[i].pow(a[i]);
        products.push_back(std::move(prod));
    }
    std::map<Monomial, std::size_t> rows;
    auto row_of = [&](const Monomial& mono) {
        auto [it, inserted] = rows.try_emplace(mono, rows.size());
        return it->second;
    };
    for (const auto& p : products)
        for (const auto& [mono, c] : p.terms()) row_of(mono);
    for (const auto& [mono, c] : h.terms()) row_of(mono);
    RationalMatrix sys(rows.size(), candidates.size());
    std::vector<Rational> rhs(rows.size(), Rational(0));
    for (std::size_t k = 0; k < products.size(); ++k)
        for (const auto& [mono, c] : products[k].terms()) sys(rows.at(mono), k) = c;
    for (const auto& [mono, c] : h.terms()) rhs[rows.at(mono)] = c;
    const auto sol = solve(sys, rhs);
    if (!sol) {
        out.reason = "target is not in the span of generator monomials of matching degree";
        return out;
    }
    std::vector<Polynomial::Term> terms;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if ((*sol)[k].is_zero()) continue;
        Monomial y;
        for (std::size_t i = 0; i < m; ++i) y.set_exponent(i, candidates[k][i]);
        terms.emplace_back(y, (*sol)[k]);
    }
    out.p = Polynomial::from_terms(m, std::move(terms));
    if (!(out.p.compose(gens) == h)) throw std::logic_error("membership_linear: recomposition check failed");
    out.member = true;
    return out;
}

ReducedGenerators t_degree_reduction(const GeneratorSet& gens, const ContractionWeights& w) {
    ReducedGenerators out{gens, {}};
    auto& g = out.set.generators;
    for (std::size_t i = 1; i < g.size(); ++i)
        if (g[i].degree() < g[i - 1].degree()) throw std::invalid_argument("t_degree_reduction: degrees not ascending");
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 1; j < g.size(); ++j) {
            std::vector<Polynomial> lower_top;
            for (std::size_t i = 0; i < j; ++i) lower_top.push_back(t_degree(g[i], w).highest);
            const TDegree tj = t_degree(g[j], w);
            const Membership mem = membership_linear(tj.highest, lower_top, &w);
            if (!mem.member) continue;
            const std::span<const Polynomial> lower(g.data(), j);
            Polynomial reduced = g[j] - mem.p.compose(lower);
            if (reduced.is_zero()) throw std::logic_error("t_degree_reduction: generators are dependent");
            const int after = t_degree(reduced, w).degree;
            if (after >= tj.degree) throw std::logic_error("t_degree_reduction: reduction did not lower the t-degree");
            out.steps.push_back({j, tj.degree, after, mem.p});
            g[j] = std::move(reduced);
            changed = true;
        }
    }
    return out;
}

}  // namespace lpc
