#include "lpc/io.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace lpc {

namespace {

template <class Seq>
void emit_flow(YAML::Emitter& out, const Seq& v) {
    out << YAML::Flow << YAML::BeginSeq;
    for (const auto& x : v) out << x;
    out << YAML::EndSeq;
}

void emit_root_data(YAML::Emitter& out, const RootData& rd) {
    out << YAML::Key << "rootdata" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "rank" << YAML::Value << rd.rank;
    out << YAML::Key << "e" << YAML::Value;
    emit_flow(out, rd.e);
    out << YAML::Key << "h" << YAML::Value;
    emit_flow(out, rd.h);
    out << YAML::Key << "f" << YAML::Value;
    emit_flow(out, rd.f);
    if (rd.highest) out << YAML::Key << "highest" << YAML::Value << *rd.highest;
    out << YAML::Key << "marks" << YAML::Value;
    emit_flow(out, rd.marks);
    out << YAML::Key << "positive" << YAML::Value;
    emit_flow(out, rd.positive);
    out << YAML::Key << "negative" << YAML::Value;
    emit_flow(out, rd.negative);
    out << YAML::Key << "cartan" << YAML::Value;
    emit_flow(out, rd.cartan);
    out << YAML::EndMap;
}

Rational parse_rational(const YAML::Node& n, const std::string& where) {
    try {
        return Rational::parse(n.as<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(where + ": bad rational: " + e.what());
    }
}

template <class T>
T scalar(const YAML::Node& n, const std::string& where) {
    if (!n || !n.IsScalar()) throw ParseError(where + ": expected a scalar");
    try {
        return n.as<T>();
    } catch (const YAML::Exception&) {
        throw ParseError(where + ": bad value '" + n.Scalar() + "'");
    }
}

std::vector<std::size_t> index_list(const YAML::Node& n, const std::string& where, std::size_t dim) {
    if (!n || !n.IsSequence()) throw ParseError(where + ": expected a list");
    std::vector<std::size_t> out;
    for (const auto& x : n) {
        const auto i = scalar<std::size_t>(x, where);
        if (i >= dim) throw ParseError(where + ": index out of range");
        out.push_back(i);
    }
    return out;
}

}  // namespace

std::string emit_algebra(const AlgebraFile& file) {
    const LieAlgebra& l = file.algebra;
    const std::size_t n = l.dimension();
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << l.name();
    if (l.classical()) out << YAML::Key << "type" << YAML::Value << l.classical()->name();
    out << YAML::Key << "basis" << YAML::Value;
    emit_flow(out, l.labels());
    out << YAML::Key << "brackets" << YAML::Value << YAML::BeginSeq;
    for (const auto& [ij, terms] : l.structure())
        for (const auto& [k, c] : terms)
            out << YAML::Flow << YAML::BeginSeq << ij.first << ij.second << k << YAML::DoubleQuoted << c.str()
                << YAML::EndSeq;
    out << YAML::EndSeq;
    if (l.matrices()) {
        const auto& ms = *l.matrices();
        out << YAML::Key << "matrix_size" << YAML::Value << (ms.empty() ? 0 : ms[0].rows());
        out << YAML::Key << "matrices" << YAML::Value << YAML::BeginSeq;
        for (const auto& m : ms) {
            out << YAML::Flow << YAML::BeginSeq;
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) out << YAML::DoubleQuoted << m(r, c).str();
            out << YAML::EndSeq;
        }
        out << YAML::EndSeq;
    }
    if (l.root_data()) emit_root_data(out, *l.root_data());
    if (file.weights) {
        if (file.weights->size() != n) throw std::invalid_argument("emit_algebra: weight count differs from dimension");
        out << YAML::Key << "weights" << YAML::Value;
        emit_flow(out, file.weights->values());
    }
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

std::string emit_algebra(const LieAlgebra& l) { return emit_algebra(AlgebraFile{l, std::nullopt}); }

AlgebraFile parse_algebra(const std::string& text) {
    YAML::Node doc;
    try {
        doc = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ParseError(std::string("yaml: ") + e.what());
    }
    if (!doc.IsMap()) throw ParseError("document must be a mapping");
    static const std::set<std::string> known{"name", "type", "basis", "brackets", "matrix_size", "matrices", "rootdata", "weights"};
    for (const auto& kv : doc)
        if (!known.contains(kv.first.as<std::string>())) throw ParseError("unknown key '" + kv.first.as<std::string>() + "'");

    const auto name = scalar<std::string>(doc["name"], "name");
    const YAML::Node basis = doc["basis"];
    if (!basis || !basis.IsSequence() || basis.size() == 0) throw ParseError("basis: expected a nonempty list");
    std::vector<std::string> labels;
    for (const auto& b : basis) labels.push_back(scalar<std::string>(b, "basis"));
    const std::size_t n = labels.size();

    AlgebraFile file;
    try {
        file.algebra = LieAlgebra(name, labels);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("basis: ") + e.what());
    }
    LieAlgebra& l = file.algebra;

    std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> table;
    if (const YAML::Node br = doc["brackets"]) {
        if (!br.IsSequence()) throw ParseError("brackets: expected a list");
        for (const auto& t : br) {
            if (!t.IsSequence() || t.size() != 4) throw ParseError("brackets: entries are [i, j, k, c]");
            const auto i = scalar<std::size_t>(t[0], "brackets"), j = scalar<std::size_t>(t[1], "brackets"),
                       k = scalar<std::size_t>(t[2], "brackets");
            if (i >= n || j >= n || k >= n) throw ParseError("brackets: index out of range");
            if (i >= j) throw ParseError("brackets: entries need i < j");
            auto& v = table[{i, j}];
            if (v.empty()) v.assign(n, Rational(0));
            if (!v[k].is_zero()) throw ParseError("brackets: duplicate entry");
            v[k] = parse_rational(t[3], "brackets");
        }
    }
    for (const auto& [ij, v] : table) l.set_bracket(ij.first, ij.second, v);

    if (const YAML::Node t = doc["type"]) {
        const auto tag = parse_classical_name(scalar<std::string>(t, "type"));
        if (!tag) throw ParseError("type: unknown classical type");
        l.set_classical(*tag);
    }
    if (const YAML::Node ms = doc["matrices"]) {
        const auto m = scalar<std::size_t>(doc["matrix_size"], "matrix_size");
        if (!ms.IsSequence() || ms.size() != n) throw ParseError("matrices: expected one matrix per basis vector");
        std::vector<RationalMatrix> mats;
        for (const auto& row : ms) {
            if (!row.IsSequence() || row.size() != m * m) throw ParseError("matrices: wrong entry count");
            RationalMatrix a(m, m);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) a(r, c) = parse_rational(row[r * m + c], "matrices");
            mats.push_back(std::move(a));
        }
        l.set_matrices(std::move(mats));
    }
    if (const YAML::Node rd = doc["rootdata"]) {
        if (!rd.IsMap()) throw ParseError("rootdata: expected a mapping");
        RootData r;
        r.rank = scalar<std::size_t>(rd["rank"], "rootdata.rank");
        r.e = index_list(rd["e"], "rootdata.e", n);
        r.h = index_list(rd["h"], "rootdata.h", n);
        r.f = index_list(rd["f"], "rootdata.f", n);
        if (rd["highest"]) {
            r.highest = scalar<std::size_t>(rd["highest"], "rootdata.highest");
            if (*r.highest >= n) throw ParseError("rootdata.highest: index out of range");
        }
        if (!rd["marks"] || !rd["marks"].IsSequence()) throw ParseError("rootdata.marks: expected a list");
        for (const auto& x : rd["marks"]) r.marks.push_back(scalar<int>(x, "rootdata.marks"));
        r.positive = index_list(rd["positive"], "rootdata.positive", n);
        r.negative = index_list(rd["negative"], "rootdata.negative", n);
        r.cartan = index_list(rd["cartan"], "rootdata.cartan", n);
        if (r.e.size() != r.rank || r.h.size() != r.rank || r.f.size() != r.rank)
            throw ParseError("rootdata: e, h, f must have rank entries");
        l.set_root_data(std::move(r));
    }
    if (const YAML::Node w = doc["weights"]) {
        if (!w.IsSequence() || w.size() != n) throw ParseError("weights: expected one weight per basis vector");
        std::vector<int> ws;
        for (const auto& x : w) ws.push_back(scalar<int>(x, "weights"));
        try {
            file.weights = ContractionWeights(ws);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("weights: ") + e.what());
        }
    }
    return file;
}

AlgebraFile load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

void save_algebra(const AlgebraFile& file, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << emit_algebra(file);
}

}  // namespace lpc
