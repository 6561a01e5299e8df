#include "lpc/weights.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lpc {

ContractionWeights::ContractionWeights(std::vector<int> weights) : w_(std::move(weights)) {
    for (int v : w_)
        if (v < 0) throw std::invalid_argument("ContractionWeights: weights must be nonnegative");
}

ContractionWeights ContractionWeights::parse(std::string_view text) {
    std::string s(text);
    for (char& c : s)
        if (c == '[' || c == ']' || c == ',') c = ' ';
    std::istringstream is(s);
    std::vector<int> w;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw std::invalid_argument("ContractionWeights: bad entry '" + tok + "'");
        w.push_back(v);
    }
    return ContractionWeights(std::move(w));
}

int ContractionWeights::d_t() const { return std::accumulate(w_.begin(), w_.end(), 0); }

std::string ContractionWeights::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w_.size(); ++i) os << (i ? "," : "") << w_[i];
    os << ']';
    return os.str();
}

TPolynomial t_expand(const Polynomial& p, const ContractionWeights& w) {
    if (w.size() != p.ring_dimension()) throw std::invalid_argument("t_expand: weight length mismatch");
    TPolynomial out(p.ring_dimension());
    std::map<int, std::vector<Polynomial::Term>> buckets;
    for (const auto& term : p.terms())
        buckets[static_cast<int>(term.first.weighted_degree(w.values()))].push_back(term);
    for (auto& [k, terms] : buckets) out.add(k, Polynomial::from_terms(p.ring_dimension(), std::move(terms)));
    return out;
}

}  // namespace lpc
