#include "lpc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace lpc {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t index, unsigned power) {
    Monomial m;
    m.set_exponent(index, power);
    return m;
}

void Monomial::set_exponent(std::size_t index, unsigned power) {
    if (index >= kMaxVariables) throw std::out_of_range("Monomial: variable index out of range");
    if (power > 255) throw std::overflow_error("Monomial: exponent overflow");
    degree_ = static_cast<std::uint16_t>(degree_ - exps_[index] + power);
    exps_[index] = static_cast<std::uint8_t>(power);
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

long Monomial::weighted_degree(std::span<const int> weights) const {
    long d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += static_cast<long>(weights[i]) * exps_[i];
    return d;
}

int Monomial::highest_variable() const {
    if (degree_ == 0) return -1;
    for (std::size_t i = kMaxVariables; i-- > 0;)
        if (exps_[i] != 0) return static_cast<int>(i);
    return -1;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        const unsigned e = static_cast<unsigned>(a.exps_[i]) + b.exps_[i];
        if (e > 255) throw std::overflow_error("Monomial: exponent overflow");
        m.exps_[i] = static_cast<std::uint8_t>(e);
    }
    m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
    m.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
    return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        d += m.exps_[i];
    }
    m.degree_ = static_cast<std::uint16_t>(d);
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    const int c = std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVariables);
    return c <=> 0;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ULL;
    return h;
}

// ---------------------------------------------------------------- Polynomial

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) { return a.first > b.first; }

// Merges two descending term lists; sign is applied to b.
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, bool subtract) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const auto c = a[i].first <=> b[j].first;
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
            ++j;
        } else {
            Rational s = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
    return out;
}

}  // namespace

Polynomial::Polynomial(std::size_t ring_dimension) : n_(ring_dimension) {
    if (ring_dimension > kMaxVariables) throw std::invalid_argument("Polynomial: too many variables");
}

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
    Polynomial p(n);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial(), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t index) {
    if (index >= n) throw std::out_of_range("Polynomial::variable: index out of range");
    Polynomial p(n);
    p.terms_.emplace_back(Monomial::variable(index), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(std::size_t n, const Monomial& m, const Rational& c) {
    Polynomial p(n);
    if (m.highest_variable() >= static_cast<int>(n)) throw std::out_of_range("Polynomial::monomial: variable out of range");
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
}

Polynomial Polynomial::from_terms(std::size_t n, std::vector<Term> terms) {
    Polynomial p(n);
    std::sort(terms.begin(), terms.end(), term_greater);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            if (t.first.highest_variable() >= static_cast<int>(n))
                throw std::out_of_range("Polynomial::from_terms: variable out of range");
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Polynomial: ring dimension mismatch");
}

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return Rational(0);
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("Polynomial: leading term of zero");
    return terms_.front();
}

int Polynomial::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.degree()); }

bool Polynomial::is_homogeneous() const {
    return terms_.empty() || terms_.front().first.degree() == terms_.back().first.degree();
}

int Polynomial::highest_variable() const {
    int h = -1;
    for (const auto& [m, c] : terms_) h = std::max(h, m.highest_variable());
    return h;
}

bool Polynomial::uses_variable(std::size_t index) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first.exponent(index) != 0; });
}

unsigned Polynomial::degree_in(std::size_t index) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(index));
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                     [](const Term& t, const Monomial& key) { return t.first > key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rational(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_ring(o);
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_ring(o);
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    Polynomial out(n_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) out.terms_.emplace_back(mm * m, cc * c);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    Polynomial out(a.n_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    const Polynomial& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const Polynomial& large = a.terms_.size() <= b.terms_.size() ? b : a;
    if (small.terms_.size() <= 6) {
        // Shifted copies of a sorted list stay sorted, so merging is cheaper than sorting.
        for (const auto& [m, c] : small.terms_) out += large.times_term(m, c);
        return out;
    }
    std::vector<Polynomial::Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma * mb, ca * cb);
    return Polynomial::from_terms(a.n_, std::move(prods));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(n_, Rational(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::remap(std::size_t new_dimension, std::span<const int> map) const {
    if (map.size() != n_) throw std::invalid_argument("Polynomial::remap: map size mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial nm;
        for (std::size_t i = 0; i < n_; ++i) {
            const unsigned e = m.exponent(i);
            if (e == 0) continue;
            if (map[i] < 0 || static_cast<std::size_t>(map[i]) >= new_dimension)
                throw std::invalid_argument("Polynomial::remap: variable " + std::to_string(i) + " has no image");
            nm.set_exponent(static_cast<std::size_t>(map[i]), nm.exponent(static_cast<std::size_t>(map[i])) + e);
        }
        out.emplace_back(nm, c);
    }
    return from_terms(new_dimension, std::move(out));
}

Polynomial Polynomial::compose(std::span<const Polynomial> images) const {
    if (images.size() != n_) throw std::invalid_argument("Polynomial::compose: wrong number of images");
    if (images.empty()) return *this;
    const std::size_t target = images[0].ring_dimension();
    std::vector<std::vector<Polynomial>> powers(n_);
    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        Polynomial term = constant(target, c);
        for (std::size_t i = 0; i < n_; ++i) {
            const unsigned e = m.exponent(i);
            if (e == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(target, Rational(1)));
            while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
            term *= pw[e];
        }
        out += term;
    }
    return out;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
    }
    throw std::invalid_argument("poly_arith: unknown op");
}

Polynomial partial_derivative(const Polynomial& p, std::size_t index) {
    if (index >= p.ring_dimension()) throw std::out_of_range("partial_derivative: variable index out of range");
    std::vector<Polynomial::Term> out;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.exponent(index);
        if (e == 0) continue;
        Monomial d = m;
        d.set_exponent(index, e - 1);
        out.emplace_back(d, c * Rational(static_cast<long>(e)));
    }
    return Polynomial::from_terms(p.ring_dimension(), std::move(out));
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
    if (point.size() != p.ring_dimension()) throw std::invalid_argument("evaluate: point length mismatch");
    Rational sum(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < point.size() && !t.is_zero(); ++i) {
            const unsigned e = m.exponent(i);
            if (e == 0) continue;
            mpq_class pw;
            mpz_pow_ui(pw.get_num_mpz_t(), point[i].raw().get_num_mpz_t(), e);
            mpz_pow_ui(pw.get_den_mpz_t(), point[i].raw().get_den_mpz_t(), e);
            t *= Rational(pw);
        }
        sum += t;
    }
    return sum;
}

// ---------------------------------------------------------------- text

std::string format_polynomial(const Polynomial& p, std::span<const std::string> labels) {
    if (labels.size() != p.ring_dimension()) throw std::invalid_argument("format_polynomial: label count mismatch");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rational a = c.abs();
        bool need_star = false;
        if (!a.is_one() || m.is_one()) {
            os << a;
            need_star = true;
        }
        for (std::size_t i = 0; i < p.ring_dimension(); ++i) {
            const unsigned e = m.exponent(i);
            if (e == 0) continue;
            if (need_star) os << '*';
            os << labels[i];
            if (e > 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::span<const std::string> labels) : s_(text), labels_(labels) {}

    Polynomial parse() {
        std::vector<Polynomial::Term> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto term = parse_term();
            if (negative) term.second = -term.second;
            terms.push_back(std::move(term));
            skip_ws();
        }
        return Polynomial::from_terms(labels_.size(), std::move(terms));
    }

private:
    Polynomial::Term parse_term() {
        Rational coeff(1);
        Monomial mono;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (at_end()) fail("expected factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                const std::size_t start = pos_;
                while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
                const std::string name(s_.substr(start, pos_ - start));
                const auto it = std::find(labels_.begin(), labels_.end(), name);
                if (it == labels_.end()) fail("unknown variable '" + name + "'");
                const auto index = static_cast<std::size_t>(it - labels_.begin());
                unsigned power = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    const std::size_t ds = pos_;
                    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                    if (ds == pos_) fail("expected exponent");
                    power = static_cast<unsigned>(std::stoul(std::string(s_.substr(ds, pos_ - ds))));
                }
                mono.set_exponent(index, mono.exponent(index) + power);
            } else {
                fail("unexpected character");
            }
            skip_ws();
            expect_factor = !at_end() && peek() == '*';
            if (expect_factor) ++pos_;
        }
        return {mono, coeff};
    }

    Rational parse_number() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (!at_end() && peek() == '/') {
            ++pos_;
            const std::size_t ds = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (ds == pos_) fail("expected denominator");
        }
        try {
            return Rational::parse(s_.substr(start, pos_ - start));
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse_polynomial: " + msg + " at position " + std::to_string(pos_) + " in '" +
                                    std::string(s_) + "'");
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[nodiscard]] bool at_end() const { return pos_ >= s_.size(); }
    [[nodiscard]] char peek() const { return s_[pos_]; }

    std::string_view s_;
    std::span<const std::string> labels_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> labels) {
    return PolyParser(text, labels).parse();
}

// ---------------------------------------------------------------- TPolynomial

void TPolynomial::add(int power, const Polynomial& coefficient) {
    if (coefficient.is_zero()) return;
    if (coefficient.ring_dimension() != n_) throw std::invalid_argument("TPolynomial: ring dimension mismatch");
    auto [it, inserted] = coeffs_.try_emplace(power, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

int TPolynomial::top_power() const {
    if (coeffs_.empty()) throw std::domain_error("TPolynomial: top power of zero");
    return coeffs_.rbegin()->first;
}

int TPolynomial::bottom_power() const {
    if (coeffs_.empty()) throw std::domain_error("TPolynomial: bottom power of zero");
    return coeffs_.begin()->first;
}

Polynomial TPolynomial::coefficient(int power) const {
    const auto it = coeffs_.find(power);
    return it == coeffs_.end() ? Polynomial(n_) : it->second;
}

Polynomial TPolynomial::at_one() const {
    Polynomial sum(n_);
    for (const auto& [k, c] : coeffs_) sum += c;
    return sum;
}

}  // namespace lpc
