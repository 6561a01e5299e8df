#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpc/io.hpp"
#include "lpc/report.hpp"

using namespace lpc;

namespace {

/// Bad command line or unreadable input: exit 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string target;
    std::string weights;
    std::string format = "text";
    std::string output;
    std::vector<std::string> polys;
    std::optional<std::size_t> index;
    bool reduce = false;
    bool raw = false;
};

struct Outcome {
    Json payload;
    bool pass = true;
    std::string message;
};

AlgebraFile resolve(const std::string& target) {
    for (const auto& id : symmetric_pair_ids())
        if (id == target) {
            auto pair = symmetric_pair(id);
            return {pair.algebra, pair.weights};
        }
    for (const auto& name : builtin_names())
        if (name == target) return {build_classical(name), std::nullopt};
    if (std::filesystem::exists(target)) return load_algebra(target);
    throw InputError("unknown algebra or missing file: " + target);
}

ContractionWeights weights_for(const Options& o, const AlgebraFile& f, bool required) {
    std::optional<ContractionWeights> w;
    if (!o.weights.empty()) {
        try {
            w = ContractionWeights::parse(o.weights);
        } catch (const std::exception& e) {
            throw InputError(std::string("--weights: ") + e.what());
        }
    } else if (f.weights) {
        w = f.weights;
    } else if (!required) {
        return ContractionWeights();
    } else {
        throw InputError("weights required: pass --weights or use a file with a weights block");
    }
    if (w->size() != f.algebra.dimension())
        throw InputError("--weights: expected " + std::to_string(f.algebra.dimension()) + " entries");
    return *w;
}

std::vector<Polynomial> parse_polys(const Options& o, const LieAlgebra& l) {
    std::vector<Polynomial> out;
    for (const auto& s : o.polys) {
        try {
            out.push_back(parse_polynomial(s, l.labels()));
        } catch (const std::exception& e) {
            throw InputError("--poly '" + s + "': " + e.what());
        }
    }
    return out;
}

Outcome run(const std::string& verb, const Options& o) {
    const AlgebraFile file = resolve(o.target);
    const LieAlgebra& g = file.algebra;
    const auto& labels = g.labels();
    Outcome out;
    out.payload["verb"] = verb;
    out.payload["algebra"] = g.name();

    if (verb == "validate") {
        const auto jr = jacobi_check(g);
        const bool sq = schouten_square(structure_bivector(g)).is_zero();
        out.payload["dimension"] = g.dimension();
        out.payload["jacobi"] = jr.ok;
        if (jr.triple) out.payload["failing_triple"] = {labels[(*jr.triple)[0]], labels[(*jr.triple)[1]], labels[(*jr.triple)[2]]};
        out.payload["schouten_square_zero"] = sq;
        out.pass = jr.ok && sq;
        if (!out.pass) out.message = "Jacobi identity fails";
        return out;
    }
    if (verb == "bivector") {
        out.payload["pi"] = to_json(lie_poisson_bivector(g), labels);
        return out;
    }
    if (verb == "index") {
        out.payload["index"] = algebra_index(g);
        return out;
    }
    if (verb == "contract") {
        const auto r = contract(g, weights_for(o, file, true));
        out.payload["contraction"] = to_json(r, labels);
        out.pass = r.valid;
        if (!r.valid) out.message = describe_violation(*r.violation, labels);
        return out;
    }
    if (verb == "tdeg") {
        const auto w = weights_for(o, file, true);
        const auto ps = parse_polys(o, g);
        if (ps.empty()) throw InputError("tdeg needs at least one --poly");
        Json items = Json::array();
        for (const auto& p : ps) {
            if (p.is_zero()) throw InputError("tdeg: zero polynomial");
            const auto td = t_degree(p, w);
            items.push_back({{"polynomial", format_polynomial(p, labels)}, {"t_degree", td.degree},
                             {"highest", format_polynomial(td.highest, labels)}});
        }
        out.payload["t_degrees"] = items;
        return out;
    }
    if (verb == "invariants") {
        out.payload["invariants"] = to_json(o.raw ? raw_char_invariants(g) : char_invariants(g));
        return out;
    }
    if (verb == "kostant") {
        auto gens = parse_polys(o, g);
        if (gens.empty()) gens = (o.raw ? raw_char_invariants(g) : char_invariants(g)).generators;
        const auto r = kostant_check(gens, lie_poisson_bivector(g), o.index);
        out.payload["kostant"] = to_json(r, labels);
        out.pass = r.is_kostant_type;
        if (!out.pass) out.message = r.reason;
        return out;
    }
    if (verb == "ggs") {
        const auto w = weights_for(o, file, true);
        GeneratorSet gens = char_invariants(g);
        if (o.reduce) {
            const auto red = t_degree_reduction(gens, w);
            out.payload["reduction_steps"] = red.steps.size();
            gens = red.set;
        }
        const auto r = contr_deg_report(gens.generators, lie_poisson_bivector(g), w, o.index);
        out.payload["generators"] = to_json(gens)["generators"];
        out.payload["contr_deg"] = to_json(r, labels);
        out.pass = r.consistent() && r.good_generating_system;
        if (!out.pass) out.message = std::string("classification ") + to_string(r.classification);
        return out;
    }
    if (verb == "fsi") {
        const auto w = weights_for(o, file, false);
        MultiVector pi = lie_poisson_bivector(g);
        if (w.size() > 0) {
            const auto r = contract(pi, w);
            if (!r.valid) {
                out.pass = false;
                out.message = describe_violation(*r.violation, labels);
                return out;
            }
            pi = r.pi_tilde;
        }
        const std::size_t ell = o.index ? *o.index : g.dimension() - bivector_rank(pi);
        out.payload["index"] = ell;
        out.payload["fsi"] = to_json(fundamental_semiinvariant(pi, ell), labels);
        return out;
    }
    if (verb == "feigin") {
        const auto r = feigin_suite(g);
        out.payload["suite"] = to_json(r);
        out.pass = r.pass();
        return out;
    }
    if (verb == "z2") {
        const auto ids = symmetric_pair_ids();
        if (std::find(ids.begin(), ids.end(), o.target) == ids.end())
            throw InputError("z2 needs a catalog pair id");
        const auto r = z2_suite(symmetric_pair(o.target));
        out.payload["suite"] = to_json(r);
        out.pass = r.pass();
        return out;
    }
    throw InputError("unknown verb " + verb);
}

void first_failure(Outcome& out) {
    if (!out.message.empty() || !out.payload.contains("suite")) return;
    for (const auto& c : out.payload["suite"]["clauses"])
        if (!c["pass"].get<bool>()) {
            out.message = "failing clause: " + c["name"].get<std::string>();
            return;
        }
}

void write(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lie-Poisson contraction toolkit"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> verbs{
        {"validate", "check Jacobi and [pi,pi] = 0"},
        {"bivector", "print the Lie-Poisson bivector"},
        {"contract", "contract with weights"},
        {"tdeg", "t-degree and highest component of --poly"},
        {"invariants", "characteristic-coefficient generators"},
        {"kostant", "check the Kostant equality"},
        {"ggs", "t-degree trichotomy report for the generators under weights"},
        {"fsi", "fundamental semi-invariant"},
        {"index", "index of the algebra"},
        {"feigin", "Feigin contraction suite"},
        {"z2", "Z2-contraction suite for a catalog pair"},
        {"emit-builtin", "write the canonical algebra file"},
    };
    for (const auto& [name, help] : verbs) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("target", o.target, "built-in name, pair id or algebra file")->required();
        sub->add_option("--output,-o", o.output, "write to this path");
        if (name == "emit-builtin") continue;
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--weights,-w", o.weights, "comma-separated nonnegative weights");
        sub->add_option("--poly,-p", o.polys, "polynomial in the basis labels");
        sub->add_option("--index", o.index, "known index");
        sub->add_flag("--reduce", o.reduce, "apply t-degree reduction first");
        sub->add_flag("--raw", o.raw, "skip the Kostant normalization");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    const std::string verb = app.get_subcommands().front()->get_name();

    try {
        if (verb == "emit-builtin") {
            const auto ids = symmetric_pair_ids();
            const auto names = builtin_names();
            const bool is_pair = std::find(ids.begin(), ids.end(), o.target) != ids.end();
            if (!is_pair && std::find(names.begin(), names.end(), o.target) == names.end())
                throw InputError("not in the catalog: " + o.target);
            write(emit_algebra(resolve(o.target)), o.output);
            return 0;
        }
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out = run(verb, o);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.payload["status"] = out.pass ? "pass" : "fail";
        first_failure(out);
        if (!out.message.empty()) out.payload["message"] = out.message;
        if (o.format == "json") {
            Json doc{{"payload", out.payload}, {"timings", {{"seconds", seconds}}}};
            write(doc.dump(2) + "\n", o.output);
        } else {
            write(render_text(out.payload), o.output);
            std::cerr << "time: " << seconds << " s\n";
        }
        if (!out.pass) std::cerr << "error: " << out.message << "\n";
        return out.pass ? 0 : 1;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
