// Instance parsing and serialization: the three auto-detected formats,
// 1-based/0-based numbering, label retention, and error locations.

#include <string>
#include <variant>

#include "doctest.h"
#include "helpers.hpp"
#include "hpd/core.hpp"
#include "hpd/fixtures.hpp"
#include "hpd/io.hpp"

using namespace hpd;
using hpdtest::hg;
using hpdtest::mask;
using hpdtest::path;

TEST_CASE("hypergraph text parses in both numberings and keeps the input names") {
    const std::string one_based =
        "1,2\n2,3\n3,4\n4,5\n5\n1,6\n6\n1,7\n7\n";
    Hypergraph h = std::get<Hypergraph>(parse_instance(one_based));
    CHECK(h == fixture("nine-face").hypergraph);
    CHECK(h.label(0) == "1");
    CHECK(h.label(6) == "7");

    const std::string zero_based =
        "0,1\n1,2\n2,3\n3,4\n4\n0,5\n5\n0,6\n6\n";
    Hypergraph z = std::get<Hypergraph>(parse_instance(zero_based, true));
    CHECK(z == fixture("nine-face").hypergraph);
    CHECK(z.label(0) == "0");

    // Comments and blank lines are skipped; spacing inside faces is free.
    Hypergraph spaced = std::get<Hypergraph>(
        parse_instance("# a path\n 1 , 2 \n\n2,3\n1\n3\n"));
    CHECK(spaced == path(3, mask({0, 2})));
}

TEST_CASE("ideal text parses into the dual hypergraph") {
    Instance inst = parse_instance("a b\nb c\nc d\n");
    const auto& ideal = std::get<MonomialIdeal>(inst);
    CHECK(ideal.num_vars == 4);
    CHECK(ideal.gens.size() == 3);
    CHECK(instance_hypergraph(inst) == path(3, mask({0, 2})));

    // One generator per line; names are free-form words.
    Instance named = parse_instance("xy zw\nzw q\n");
    CHECK(instance_hypergraph(named) == hg(2, {{0}, {0, 1}, {1}}));
}

TEST_CASE("json parses hypergraphs and ideals") {
    Hypergraph h = std::get<Hypergraph>(
        parse_instance(R"({"mu": 3, "faces": [[1,2],[2,3],[1],[3]]})"));
    CHECK(h == path(3, mask({0, 2})));

    Hypergraph z = std::get<Hypergraph>(
        parse_instance(R"({"mu": 3, "faces": [[0,1],[1,2],[0],[2]]})", true));
    CHECK(z == path(3, mask({0, 2})));

    Instance ideal = parse_instance(
        R"({"vars": ["a","b","c"], "gens": [["a","b"],["b","c"]]})");
    CHECK(instance_hypergraph(ideal) == hg(2, {{0}, {0, 1}, {1}}));
}

TEST_CASE("serializations round-trip every fixture") {
    for (const auto& fx : fixtures()) {
        const Hypergraph& h = fx.hypergraph;
        CHECK(std::get<Hypergraph>(parse_instance(to_text(h))) == h);
        CHECK(std::get<Hypergraph>(parse_instance(to_json(h))) == h);

        MonomialIdeal ideal = instance_ideal(h);
        CHECK(instance_hypergraph(parse_instance(to_text(ideal))) == h);
        CHECK(instance_hypergraph(parse_instance(to_json(ideal))) == h);
    }
    CHECK(to_text(path(3, mask({0, 2}))) == "1\n1,2\n3\n2,3\n");
}

TEST_CASE("parse errors carry locations and speak the user's language") {
    CHECK_THROWS_WITH_AS(parse_instance(""), "empty input", ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("# nothing\n"),
                         "no data lines in input", ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("1,x\n"),
                         "1:3: expected a vertex number, got 'x'", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance("0,1\n"),
        "1:1: vertex 0 in 1-based input (did you mean --zero-based?)",
        ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("1,2\n4\n"),
                         "vertex 3 appears in no face", ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("1,2\n3\n", true),
                         "vertex 2 appears in no face", ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("65,66\n"),
                         "1:1: vertex number exceeds the 64-vertex cap",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_instance("1,,2\n"), "1:3: empty vertex entry",
                         ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance("a b\nc,d\n"),
        "2:1: commas are face syntax; variable names may not contain ','",
        ParseError);
    CHECK_THROWS_AS(parse_instance("{\"mu\": 3, }"), ParseError);
    CHECK_THROWS_WITH_AS(parse_instance(R"({"mu": 3})"),
                         "json hypergraph needs a \"faces\" array", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"mu": 2, "faces": [[1,3],[2]]})"),
        "face #1: vertex 3 outside 1..2", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"vars": ["a"], "gens": [["b"]]})"),
        "generator #1 uses undeclared variable \"b\"", ParseError);
    CHECK_THROWS_WITH_AS(parse_instance(R"({"answer": 42})"),
                         "json object must carry mu+faces (hypergraph) or "
                         "vars+gens (ideal)",
                         ParseError);
    CHECK_THROWS_AS(parse_file("/nonexistent/instance.txt"), ParseError);
}

TEST_CASE("non-minimal generators are rejected when dualized") {
    Instance inst = parse_instance("a\na b\n");
    CHECK_THROWS_AS(instance_hypergraph(inst), MinimalityError);
    // ... but the ideal itself parses fine; minimality is a dual concern.
    CHECK(std::get<MonomialIdeal>(inst).gens.size() == 2);
}
