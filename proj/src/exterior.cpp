#include "lpc/exterior.hpp"

#include <set>
#include <type_traits>
#include <stdexcept>
#include <unordered_map>

namespace lpc {

IndexSet IndexSet::of(std::initializer_list<std::size_t> indices) {
    std::vector<std::size_t> v(indices);
    return from_list(v);
}

IndexSet IndexSet::from_list(std::span<const std::size_t> indices) {
    std::uint32_t bits = 0;
    for (auto i : indices) {
        if (i >= kMaxVariables) throw std::out_of_range("IndexSet: index out of range");
        if ((bits >> i) & 1u) throw std::invalid_argument("IndexSet: repeated index");
        bits |= 1u << i;
    }
    return IndexSet(bits);
}

std::vector<std::size_t> IndexSet::elements() const {
    std::vector<std::size_t> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

std::string IndexSet::str(std::span<const std::string> labels) const {
    std::string s = "{";
    bool first = true;
    for (auto i : elements()) {
        if (!first) s += ",";
        s += i < labels.size() ? labels[i] : std::to_string(i);
        first = false;
    }
    return s + "}";
}

int shuffle_sign(IndexSet a, IndexSet b) {
    if (!a.disjoint(b)) throw std::invalid_argument("shuffle_sign: sets not disjoint");
    int inversions = 0;
    for (std::uint32_t x = b.bits(); x != 0; x &= x - 1) {
        const int j = std::countr_zero(x);
        const std::uint32_t above = j >= 31 ? 0u : ~((2u << j) - 1);
        inversions += std::popcount(a.bits() & above);
    }
    return (inversions & 1) ? -1 : 1;
}

template <typename Kind>
Skew<Kind>::Skew(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (n > kMaxVariables) throw std::invalid_argument("Skew: too many variables");
    if (k > n) throw std::invalid_argument("Skew: degree exceeds dimension");
}

template <typename Kind>
Skew<Kind> Skew<Kind>::unit(std::size_t n) {
    Skew s(n, 0);
    s.terms_.emplace(IndexSet(), Polynomial::constant(n, Rational(1)));
    return s;
}

template <typename Kind>
Polynomial Skew<Kind>::coefficient(IndexSet s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Polynomial(n_) : it->second;
}

template <typename Kind>
void Skew<Kind>::add(IndexSet s, const Polynomial& c) {
    if (s.size() != k_) throw std::invalid_argument("Skew::add: index set has wrong cardinality");
    if (s.bits() >> n_ != 0 && n_ < 32) throw std::out_of_range("Skew::add: index out of range");
    if (c.ring_dimension() != n_) throw std::invalid_argument("Skew::add: coefficient ring mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

template <typename Kind>
void Skew<Kind>::check_compatible(const Skew& o) const {
    if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("Skew: ring or degree mismatch");
}

template <typename Kind>
Skew<Kind>& Skew<Kind>::operator+=(const Skew& o) {
    check_compatible(o);
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

template <typename Kind>
Skew<Kind>& Skew<Kind>::operator-=(const Skew& o) {
    check_compatible(o);
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

template <typename Kind>
Skew<Kind>& Skew<Kind>::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, p] : terms_) p *= c;
    return *this;
}

template <typename Kind>
Skew<Kind>& Skew<Kind>::operator*=(const Polynomial& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, p] : terms_) p *= c;
    return *this;
}

template class Skew<VectorKind>;
template class Skew<FormKind>;

template <typename Kind>
Skew<Kind> wedge(const Skew<Kind>& a, const Skew<Kind>& b) {
    if (a.ring_dimension() != b.ring_dimension()) throw std::invalid_argument("wedge: ring mismatch");
    if (a.degree() + b.degree() > a.ring_dimension()) throw std::invalid_argument("wedge: degree overflow");
    Skew<Kind> out(a.ring_dimension(), a.degree() + b.degree());
    for (const auto& [s, p] : a.terms())
        for (const auto& [t, q] : b.terms()) {
            if (!s.disjoint(t)) continue;
            Polynomial c = p * q;
            if (shuffle_sign(s, t) < 0) c = -c;
            out.add(s | t, c);
        }
    return out;
}

template MultiVector wedge(const MultiVector&, const MultiVector&);
template Form wedge(const Form&, const Form&);

namespace {

// pi ^ cur by the pull formulation: each output coefficient is summed over its own pairs,
// so the result does not depend on iteration order.
MultiVector wedge_step(const MultiVector& pi, const MultiVector& cur) {
    const std::size_t n = pi.ring_dimension();
    std::set<IndexSet> targets;
    for (const auto& [ab, p] : pi.terms())
        for (const auto& [s, q] : cur.terms())
            if (ab.disjoint(s)) targets.insert(ab | s);
    MultiVector next(n, cur.degree() + 2);
    for (IndexSet j : targets) {
        std::vector<Polynomial::Term> acc;
        const auto el = j.elements();
        for (std::size_t x = 0; x < el.size(); ++x)
            for (std::size_t y = x + 1; y < el.size(); ++y) {
                const IndexSet ab = IndexSet::of({el[x], el[y]});
                auto pit = pi.terms().find(ab);
                if (pit == pi.terms().end()) continue;
                const IndexSet rest(j.bits() & ~ab.bits());
                auto cit = cur.terms().find(rest);
                if (cit == cur.terms().end()) continue;
                Polynomial prod = pit->second * cit->second;
                if (shuffle_sign(ab, rest) < 0) prod = -prod;
                for (auto& t : prod.terms()) acc.push_back(t);
            }
        next.add(j, Polynomial::from_terms(n, std::move(acc)));
    }
    return next;
}

}  // namespace

MultiVector wedge_power(const MultiVector& pi, unsigned k) {
    const std::size_t n = pi.ring_dimension();
    if (pi.degree() != 2) throw std::invalid_argument("wedge_power: expected a bivector");
    if (2 * static_cast<std::size_t>(k) > n) throw std::invalid_argument("wedge_power: 2k exceeds dimension");
    MultiVector cur = MultiVector::unit(n);
    for (unsigned step = 1; step <= k && !cur.is_zero(); ++step) cur = wedge_step(pi, cur);
    if (cur.is_zero()) return MultiVector(n, 2 * k);
    return cur;
}

Form differential(const Polynomial& f) {
    const std::size_t n = f.ring_dimension();
    Form out(n, 1);
    for (std::size_t i = 0; i < n; ++i) out.add(IndexSet::of({i}), partial_derivative(f, i));
    return out;
}

Form wedge_differentials(std::span<const Polynomial> fs) {
    if (fs.empty()) throw std::invalid_argument("wedge_differentials: empty list");
    Form acc = differential(fs[0]);
    for (std::size_t i = 1; i < fs.size(); ++i) acc = wedge(acc, differential(fs[i]));
    return acc;
}

MultiVector volume_dual(const Form& f) {
    const std::size_t n = f.ring_dimension();
    MultiVector out(n, n - f.degree());
    for (const auto& [s, c] : f.terms()) {
        const IndexSet rest = s.complement(n);
        out.add(rest, shuffle_sign(s, rest) < 0 ? -c : c);
    }
    return out;
}

MultiVector schouten_square(const MultiVector& pi) {
    const std::size_t n = pi.ring_dimension();
    if (pi.degree() != 2) throw std::invalid_argument("schouten_square: expected a bivector");
    MultiVector out(n, 3);
    if (n < 3) return out;
    const PolynomialMatrix m = bivector_matrix(pi);
    // derivative cache d_l pi_ab for a < b
    std::vector<std::vector<Polynomial>> deriv(n * n);
    for (const auto& [ab, c] : pi.terms()) {
        const auto el = ab.elements();
        auto& slot = deriv[el[0] * n + el[1]];
        for (std::size_t l = 0; l < n; ++l) slot.push_back(partial_derivative(c, l));
    }
    auto d = [&](std::size_t l, std::size_t a, std::size_t b) -> Polynomial {
        const bool swap = a > b;
        const auto& slot = deriv[swap ? b * n + a : a * n + b];
        if (slot.empty()) return Polynomial(n);
        return swap ? -slot[l] : slot[l];
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Polynomial s(n);
                for (std::size_t l = 0; l < n; ++l) {
                    const Polynomial& li = m(l, i);
                    const Polynomial& lj = m(l, j);
                    const Polynomial& lk = m(l, k);
                    if (!li.is_zero()) s += li * d(l, j, k);
                    if (!lj.is_zero()) s -= lj * d(l, i, k);
                    if (!lk.is_zero()) s += lk * d(l, i, j);
                }
                out.add(IndexSet::of({i, j, k}), s);
            }
    return out;
}

Polynomial poisson_bracket(const MultiVector& pi, const Polynomial& f, const Polynomial& g) {
    const std::size_t n = pi.ring_dimension();
    if (f.ring_dimension() != n || g.ring_dimension() != n) throw std::invalid_argument("poisson_bracket: ring mismatch");
    std::vector<Polynomial> df, dg;
    for (std::size_t i = 0; i < n; ++i) {
        df.push_back(partial_derivative(f, i));
        dg.push_back(partial_derivative(g, i));
    }
    Polynomial out(n);
    for (const auto& [ab, c] : pi.terms()) {
        const auto el = ab.elements();
        const std::size_t i = el[0], j = el[1];
        Polynomial inner = df[i] * dg[j] - df[j] * dg[i];
        if (!inner.is_zero()) out += c * inner;
    }
    return out;
}

namespace {

Polynomial pfaffian_rec(const PolynomialMatrix& m, std::uint32_t mask, std::unordered_map<std::uint32_t, Polynomial>& memo,
                        std::size_t ring) {
    if (mask == 0) return Polynomial::constant(ring, Rational(1));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const auto i0 = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & ~(1u << i0);
    Polynomial sum(ring);
    int position = 0;
    for (std::uint32_t x = rest; x != 0; x &= x - 1) {
        const auto j = static_cast<std::size_t>(std::countr_zero(x));
        ++position;
        const Polynomial& a = m(i0, j);
        if (a.is_zero()) continue;
        Polynomial sub = pfaffian_rec(m, rest & ~(1u << j), memo, ring);
        if (sub.is_zero()) continue;
        Polynomial term = a * sub;
        if (position % 2 == 0) term = -term;
        sum += term;
    }
    memo.emplace(mask, sum);
    return sum;
}

}  // namespace

Polynomial pfaffian(const PolynomialMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: matrix not square");
    if (m.rows() > kMaxVariables) throw std::invalid_argument("pfaffian: matrix too large");
    if (m.rows() == 0) throw std::invalid_argument("pfaffian: empty matrix");
    const std::size_t ring = m(0, 0).ring_dimension();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (!(m(i, j) == -m(j, i))) throw std::invalid_argument("pfaffian: matrix not antisymmetric");
    if (m.rows() % 2 == 1) return Polynomial(ring);
    std::unordered_map<std::uint32_t, Polynomial> memo;
    return pfaffian_rec(m, IndexSet::full(m.rows()).bits(), memo, ring);
}

PolynomialMatrix bivector_matrix(const MultiVector& pi) {
    if (pi.degree() != 2) throw std::invalid_argument("bivector_matrix: expected a bivector");
    const std::size_t n = pi.ring_dimension();
    PolynomialMatrix m(n, n, Polynomial(n));
    for (const auto& [ab, c] : pi.terms()) {
        const auto el = ab.elements();
        m(el[0], el[1]) = c;
        m(el[1], el[0]) = -c;
    }
    return m;
}

RationalMatrix bivector_matrix_at(const MultiVector& pi, std::span<const Rational> point) {
    if (point.size() != pi.ring_dimension()) throw std::invalid_argument("bivector_matrix_at: point length mismatch");
    return evaluate(bivector_matrix(pi), point);
}

MultiVector bivector_from_matrix(const PolynomialMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("bivector_from_matrix: matrix not square");
    const std::size_t n = m.rows();
    MultiVector pi(n, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pi.add(IndexSet::of({i, j}), m(i, j));
    return pi;
}

template <typename Kind>
std::vector<std::pair<std::vector<std::string>, std::string>> serialize(const Skew<Kind>& v,
                                                                        std::span<const std::string> labels) {
    std::vector<std::pair<std::vector<std::string>, std::string>> out;
    for (const auto& [s, c] : v.terms()) {
        std::vector<std::string> names;
        for (auto i : s.elements()) names.push_back(labels[i]);
        out.emplace_back(std::move(names), format_polynomial(c, labels));
    }
    return out;
}

template <typename Kind>
std::string format_skew(const Skew<Kind>& v, std::span<const std::string> labels) {
    if (v.is_zero()) return "0";
    const char* frame = std::is_same_v<Kind, VectorKind> ? "D" : "d";
    std::string s;
    for (const auto& [set, c] : v.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + format_polynomial(c, labels) + ")";
        if (!set.empty()) {
            s += std::string("*") + frame + "(";
            bool first = true;
            for (auto i : set.elements()) {
                if (!first) s += ",";
                s += labels[i];
                first = false;
            }
            s += ")";
        }
    }
    return s;
}

template std::vector<std::pair<std::vector<std::string>, std::string>> serialize(const MultiVector&,
                                                                                std::span<const std::string>);
template std::vector<std::pair<std::vector<std::string>, std::string>> serialize(const Form&,
                                                                                std::span<const std::string>);
template std::string format_skew(const MultiVector&, std::span<const std::string>);
template std::string format_skew(const Form&, std::span<const std::string>);

void TMultiVector::set(IndexSet s, TPolynomial c) {
    if (s.size() != k_) throw std::invalid_argument("TMultiVector::set: wrong cardinality");
    if (c.is_zero()) {
        terms_.erase(s);
        return;
    }
    terms_[s] = std::move(c);
}

bool TMultiVector::regular() const {
    for (const auto& [s, c] : terms_)
        if (!c.regular()) return false;
    return true;
}

MultiVector TMultiVector::at_power(int power) const {
    MultiVector out(n_, k_);
    for (const auto& [s, c] : terms_) out.add(s, c.coefficient(power));
    return out;
}

MultiVector TMultiVector::at_one() const {
    MultiVector out(n_, k_);
    for (const auto& [s, c] : terms_) out.add(s, c.at_one());
    return out;
}

}  // namespace lpc

#include <random>

namespace lpc {

std::size_t sampled_rank(const PolynomialMatrix& m, unsigned samples) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const std::size_t n = m(0, 0).ring_dimension();
    std::mt19937_64 rng(0x5eed + m.rows() * 131 + m.cols());
    std::uniform_int_distribution<int> num(-97, 97);
    std::uniform_int_distribution<int> den(1, 13);
    std::size_t best = 0;
    for (unsigned s = 0; s < samples; ++s) {
        std::vector<Rational> pt;
        for (std::size_t i = 0; i < n; ++i) pt.emplace_back(num(rng), den(rng));
        best = std::max(best, rank(evaluate(m, pt)));
    }
    return best;
}

std::size_t bivector_rank(const MultiVector& pi) {
    const PolynomialMatrix m = bivector_matrix(pi);
    const std::size_t lower = sampled_rank(m);
    const std::size_t n = pi.ring_dimension();
    if (lower >= n - (n % 2)) return lower;
    if (n <= 10) {
        const std::size_t r = bareiss_rank(m);
        if (r < lower) throw std::logic_error("bivector_rank: symbolic rank below sampled rank");
        return r;
    }
    // Fraction-free elimination grows too fast here; use rk pi = 2 max{k : Lambda^k pi != 0}.
    MultiVector power = MultiVector::unit(n);
    std::size_t k = 0;
    while (2 * (k + 1) <= n) {
        MultiVector next = wedge_step(pi, power);
        if (next.is_zero()) break;
        power = std::move(next);
        ++k;
    }
    if (2 * k < lower) throw std::logic_error("bivector_rank: wedge certificate below sampled rank");
    return 2 * k;
}

}  // namespace lpc

namespace lpc {

std::vector<Polynomial> brackets_with_coordinates(const MultiVector& pi, const Polynomial& h) {
    const std::size_t n = pi.ring_dimension();
    if (h.ring_dimension() != n) throw std::invalid_argument("brackets_with_coordinates: ring mismatch");
    std::vector<Polynomial> dh;
    for (std::size_t i = 0; i < n; ++i) dh.push_back(partial_derivative(h, i));
    std::vector<Polynomial> out(n, Polynomial(n));
    for (const auto& [ab, c] : pi.terms()) {
        const auto el = ab.elements();
        // {x_a, h} gains pi_ab d_b h, {x_b, h} gains -pi_ab d_a h
        if (!dh[el[1]].is_zero()) out[el[0]] += c * dh[el[1]];
        if (!dh[el[0]].is_zero()) out[el[1]] -= c * dh[el[0]];
    }
    return out;
}

bool is_poisson_central(const MultiVector& pi, const Polynomial& h) {
    for (const auto& b : brackets_with_coordinates(pi, h))
        if (!b.is_zero()) return false;
    return true;
}

}  // namespace lpc
