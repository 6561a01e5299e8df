#include "lpc/report.hpp"

#include <sstream>

namespace lpc {

Json to_json(const Polynomial& p, std::span<const std::string> labels) { return format_polynomial(p, labels); }

Json to_json(const MultiVector& m, std::span<const std::string> labels) {
    Json out = Json::object();
    out["degree"] = m.degree();
    Json terms = Json::array();
    for (const auto& [s, c] : m.terms()) {
        Json idx = Json::array();
        for (auto i : s.elements()) idx.push_back(labels[i]);
        terms.push_back({{"index", idx}, {"coefficient", format_polynomial(c, labels)}});
    }
    out["terms"] = terms;
    return out;
}

Json brackets_json(const LieAlgebra& l) {
    Json out = Json::object();
    const auto& labels = l.labels();
    const std::size_t n = l.dimension();
    for (const auto& [ij, terms] : l.structure()) {
        Polynomial p(n);
        for (const auto& [k, c] : terms) p += Polynomial::variable(n, k) * c;
        out["[" + labels[ij.first] + "," + labels[ij.second] + "]"] = format_polynomial(p, labels);
    }
    return out;
}

Json to_json(const ContractionResult& r, std::span<const std::string> labels) {
    Json out = Json::object();
    out["weights"] = r.weights.str();
    out["valid"] = r.valid;
    if (r.violation)
        out["violation"] = {{"pair", {labels[r.violation->i], labels[r.violation->j]}},
                            {"power", r.violation->power},
                            {"message", describe_violation(*r.violation, labels)}};
    if (r.valid) {
        out["pi_tilde"] = to_json(r.pi_tilde, labels);
        if (r.contracted) out["brackets"] = brackets_json(*r.contracted);
    }
    return out;
}

Json to_json(const GeneratorSet& s) {
    Json gens = Json::array();
    for (const auto& g : s.generators)
        gens.push_back({{"degree", g.degree()}, {"polynomial", format_polynomial(g, s.algebra.labels())}});
    return {{"algebra", s.algebra.name()}, {"normalization", s.normalization.str()}, {"generators", gens}};
}

Json to_json(const KostantReport& r, std::span<const std::string> labels) {
    Json out = Json::object();
    out["index"] = r.index;
    out["independent"] = r.independent;
    out["proportional"] = r.certificate.proportional;
    if (r.certificate.proportional) {
        out["q1"] = to_json(r.certificate.q1, labels);
        out["q2"] = to_json(r.certificate.q2, labels);
    }
    out["kostant_type"] = r.is_kostant_type;
    out["exact"] = r.exact;
    out["reason"] = r.reason;
    return out;
}

Json to_json(const ContrDegReport& r, std::span<const std::string> labels) {
    Json out = Json::object();
    out["valid_contraction"] = r.valid_contraction;
    out["index"] = r.index;
    out["contracted_index"] = r.contracted_index;
    out["index_preserved"] = r.index_preserved;
    out["t_degrees"] = r.t_degrees;
    Json hs = Json::array();
    for (const auto& h : r.highest) hs.push_back(format_polynomial(h, labels));
    out["highest"] = hs;
    out["sum_t_degrees"] = r.sum_t_degrees;
    out["d_t"] = r.d_t;
    out["classification"] = to_string(r.classification);
    out["highest_independent"] = r.highest_independent;
    if (r.contracted_kostant) out["contracted_kostant"] = to_json(*r.contracted_kostant, labels);
    out["good_generating_system"] = r.good_generating_system;
    out["consistent"] = r.consistent();
    return out;
}

Json to_json(const FundamentalSemiInvariant& f, std::span<const std::string> labels) {
    return {{"p", format_polynomial(f.p, labels)}, {"cofactor_terms", f.cofactor.terms().size()},
            {"cofactor_content_one", f.cofactor_content_one}};
}

Json to_json(const SuiteReport& r) {
    Json clauses = Json::array();
    for (const auto& c : r.clauses) clauses.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    Json values = Json::object();
    for (const auto& [k, v] : r.values) values[k] = v;
    return {{"subject", r.subject}, {"pass", r.pass()}, {"clauses", clauses}, {"values", values}};
}

namespace {

void render(const Json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) render(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& payload) {
    std::ostringstream out;
    render(payload, "", out);
    return out.str();
}

}  // namespace lpc
