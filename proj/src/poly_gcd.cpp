#include "lpc/poly_gcd.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lpc {

namespace {

using CoeffMap = std::map<unsigned, Polynomial>;

CoeffMap coefficients_in(const Polynomial& p, std::size_t v) {
    std::map<unsigned, std::vector<Polynomial::Term>> buckets;
    for (const auto& [m, c] : p.terms()) {
        Monomial stripped = m;
        stripped.set_exponent(v, 0);
        buckets[m.exponent(v)].emplace_back(stripped, c);
    }
    CoeffMap out;
    for (auto& [k, terms] : buckets) out.emplace(k, Polynomial::from_terms(p.ring_dimension(), std::move(terms)));
    return out;
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t v) {
    const unsigned d = p.degree_in(v);
    std::vector<Polynomial::Term> terms;
    for (const auto& [m, c] : p.terms()) {
        if (m.exponent(v) != d) continue;
        Monomial stripped = m;
        stripped.set_exponent(v, 0);
        terms.emplace_back(stripped, c);
    }
    return Polynomial::from_terms(p.ring_dimension(), std::move(terms));
}

Polynomial one_like(const Polynomial& p) { return Polynomial::constant(p.ring_dimension(), Rational(1)); }

Monomial monomial_content(const Polynomial& p) {
    Monomial g = p.terms().front().first;
    for (const auto& [m, c] : p.terms()) {
        g = gcd(g, m);
        if (g.is_one()) break;
    }
    return g;
}

Polynomial divide_by_monomial(const Polynomial& p, const Monomial& m) {
    if (m.is_one()) return p;
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.size());
    for (const auto& [mm, c] : p.terms()) terms.emplace_back(mm / m, c);
    return Polynomial::from_terms(p.ring_dimension(), std::move(terms));
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

// GCD of the coefficients of p viewed as a polynomial in v; result does not involve v.
Polynomial content_in(const Polynomial& p, std::size_t v) {
    const CoeffMap coeffs = coefficients_in(p, v);
    // Start from the smallest coefficient: it bounds the gcd and keeps the recursion cheap.
    std::vector<const Polynomial*> order;
    order.reserve(coeffs.size());
    for (const auto& [k, c] : coeffs) order.push_back(&c);
    std::sort(order.begin(), order.end(), [](const Polynomial* x, const Polynomial* y) { return x->size() < y->size(); });
    Polynomial g = *order.front();
    for (std::size_t i = 1; i < order.size() && !g.is_constant(); ++i) g = gcd_impl(g, *order[i]);
    return g.is_constant() ? one_like(p) : make_monic(g);
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t v) {
    const Polynomial c = content_in(p, v);
    if (c.is_constant()) return p;
    auto q = divide_exact(p, c);
    if (!q) throw std::logic_error("primitive_part_in: content does not divide");
    return *q;
}

// a, b nonzero, not constant, free of monomial factors.
Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b) {
    const int v_signed = std::max(a.highest_variable(), b.highest_variable());
    const auto v = static_cast<std::size_t>(v_signed);
    if (!a.uses_variable(v)) return gcd_impl(a, content_in(b, v));
    if (!b.uses_variable(v)) return gcd_impl(content_in(a, v), b);

    const Polynomial ca = content_in(a, v);
    const Polynomial cb = content_in(b, v);
    const Polynomial c = gcd_impl(ca, cb);
    Polynomial pa = ca.is_constant() ? a : *divide_exact(a, ca);
    Polynomial pb = cb.is_constant() ? b : *divide_exact(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (true) {
        const Polynomial r = pseudo_remainder(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            pb = one_like(a);
            break;
        }
        pa = std::move(pb);
        pb = primitive_part_in(make_monic(r), v);
    }
    return make_monic(c * primitive_part_in(pb, v));
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("multivariate_gcd: both inputs are zero");
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return one_like(a);
    if (a == b) return make_monic(a);
    const Monomial ma = monomial_content(a);
    const Monomial mb = monomial_content(b);
    const Monomial mg = gcd(ma, mb);
    const Polynomial ra = divide_by_monomial(a, ma);
    const Polynomial rb = divide_by_monomial(b, mb);
    Polynomial g = (ra.is_constant() || rb.is_constant()) ? one_like(a) : gcd_primitive(ra, rb);
    if (!mg.is_one()) g = g.times_term(mg, Rational(1));
    return make_monic(g);
}

}  // namespace

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero() || p.leading_coefficient().is_one()) return p;
    return p * p.leading_coefficient().inverse();
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (a.ring_dimension() != b.ring_dimension()) throw std::invalid_argument("divide_exact: ring dimension mismatch");
    if (a.is_zero()) return Polynomial(a.ring_dimension());
    if (b.is_constant()) return a * b.leading_coefficient().inverse();
    if (a.degree() < b.degree()) return std::nullopt;
    const auto& [lm_b, lc_b] = b.leading_term();
    const Rational inv_lc = lc_b.inverse();
    if (b.is_monomial()) {
        std::vector<Polynomial::Term> terms;
        terms.reserve(a.size());
        for (const auto& [m, c] : a.terms()) {
            if (!lm_b.divides(m)) return std::nullopt;
            terms.emplace_back(m / lm_b, c * inv_lc);
        }
        return Polynomial::from_terms(a.ring_dimension(), std::move(terms));
    }
    // Leading terms of the quotient appear in descending order, so push_back keeps it sorted.
    std::vector<Polynomial::Term> quotient;
    Polynomial rem = a;
    while (!rem.is_zero()) {
        const auto& [lm, lc] = rem.leading_term();
        if (!lm_b.divides(lm)) return std::nullopt;
        Monomial qm = lm / lm_b;
        Rational qc = lc * inv_lc;
        rem -= b.times_term(qm, qc);
        quotient.emplace_back(std::move(qm), std::move(qc));
    }
    return Polynomial::from_terms(a.ring_dimension(), std::move(quotient));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t v) {
    const unsigned db = b.degree_in(v);
    const Polynomial lcb = leading_coefficient_in(b, v);
    Polynomial r = a;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        const unsigned dr = r.degree_in(v);
        const Polynomial lcr = leading_coefficient_in(r, v);
        const Polynomial shift = Polynomial::monomial(a.ring_dimension(), Monomial::variable(v, dr - db));
        r = lcb * r - lcr * shift * b;
    }
    return r;
}

Polynomial multivariate_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.ring_dimension() != b.ring_dimension()) throw std::invalid_argument("multivariate_gcd: ring dimension mismatch");
    return gcd_impl(a, b);
}

Polynomial gcd_all(std::span<const Polynomial> polys) {
    std::vector<const Polynomial*> nonzero;
    for (const auto& p : polys)
        if (!p.is_zero()) nonzero.push_back(&p);
    if (nonzero.empty()) throw std::invalid_argument("gcd_all: all inputs are zero");
    std::sort(nonzero.begin(), nonzero.end(), [](const Polynomial* x, const Polynomial* y) {
        return x->size() != y->size() ? x->size() < y->size() : x->degree() < y->degree();
    });
    Polynomial g = make_monic(*nonzero.front());
    for (std::size_t i = 1; i < nonzero.size() && !g.is_constant(); ++i) {
        if (divide_exact(*nonzero[i], g)) continue;
        g = multivariate_gcd(g, *nonzero[i]);
    }
    return g;
}

}  // namespace lpc
