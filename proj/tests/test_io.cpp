#include <filesystem>
#include <string>

#include "doctest.h"
#include "lpc/io.hpp"

using namespace lpc;

TEST_CASE("canonical files round-trip for the whole catalog") {
    for (const auto& name : builtin_names()) {
        const auto g = build_classical(name);
        const auto text = emit_algebra(g);
        const auto back = parse_algebra(text);
        CAPTURE(name);
        CHECK(back.algebra == g);
        CHECK_FALSE(back.weights);
        CHECK(emit_algebra(back) == text);
    }
    for (const auto& id : symmetric_pair_ids()) {
        const auto pair = symmetric_pair(id);
        const AlgebraFile f{pair.algebra, pair.weights};
        const auto back = parse_algebra(emit_algebra(f));
        CAPTURE(id);
        CHECK(back == f);
    }
}

TEST_CASE("file contents") {
    const auto sl2 = emit_algebra(build_classical("sl2"));
    const auto s = parse_algebra(sl2);
    CHECK(s.algebra.dimension() == 3);
    std::size_t triples = 0;
    for (const auto& [ij, terms] : s.algebra.structure()) triples += terms.size();
    CHECK(triples == 3);
    const auto sp4 = parse_algebra(emit_algebra(build_classical("sp4")));
    CHECK(sp4.algebra.dimension() == 10);
    REQUIRE(sp4.algebra.root_data());
    CHECK(sp4.algebra.root_data()->marks == std::vector<int>{2, 1});
}

TEST_CASE("save and load") {
    const auto path = std::filesystem::temp_directory_path() / "lpc_io_test.yaml";
    const AlgebraFile f{build_classical("so5"), ContractionWeights({0, 0, 0, 0, 0, 0, 1, 1, 1, 1})};
    save_algebra(f, path.string());
    CHECK(load_algebra(path.string()) == f);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_algebra("/nonexistent/algebra.yaml"), ParseError);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_algebra("[1, 2]"), ParseError);
    CHECK_THROWS_AS(parse_algebra("name: x\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("name: x\nbasis: [a, b]\nbrackets:\n  - [0, 5, 0, \"1\"]\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("name: x\nbasis: [a, b]\nbrackets:\n  - [1, 0, 0, \"1\"]\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("name: x\nbasis: [a, b]\nbrackets:\n  - [0, 1, 0, \"1/0\"]\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("name: x\nbasis: [a, a]\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("name: x\nbasis: [a, b]\nweights: [0]\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("name: x\nbasis: [a, b]\ncolour: red\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("name: x\nbasis: [a, b\n"), ParseError);
    const auto ok = parse_algebra("name: heis\nbasis: [x, y, z]\nbrackets:\n  - [0, 1, 2, \"1\"]\nweights: [1, 1, 2]\n");
    CHECK(ok.algebra.bracket(0, 1) == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
    CHECK(ok.weights->d_t() == 4);
}
