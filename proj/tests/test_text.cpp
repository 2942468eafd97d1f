#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cospectra/cotree.hpp"
#include "cospectra/cotree_text.hpp"
#include "cospectra/errors.hpp"
#include "cospectra/graph.hpp"

#include <string>

using namespace cospectra;

namespace {
const std::string kGolden = "J(U(J(U(2*_),U(2*_)),3*_),U(5*_))";
}

TEST_CASE("running example round-trips verbatim") {
    Cotree t = parse_cotree(kGolden);
    CHECK(t.leaf_count() == 12);
    CHECK(t.nodes.size() == 6);
    CHECK(format_cotree(t) == kGolden);
    // Formatting is a fixed point: parse(format(t)) formats identically.
    CHECK(format_cotree(parse_cotree(format_cotree(t))) == kGolden);
}

TEST_CASE("whitespace and comments are insignificant") {
    const std::string messy = "  # spectrum example\n"
                              "J ( U( J(U(2*_), U(2 * _)) , 3*_ ),\n"
                              "    U(5*_) )  # trailing note\n";
    CHECK(signature(parse_cotree(messy)) == signature(parse_cotree(kGolden)));
    CHECK(format_cotree(parse_cotree(messy)) == kGolden);
}

TEST_CASE("repeat shorthand expands labeled leaves") {
    Cotree t = parse_cotree("U(3*x)");
    REQUIRE(t.leaf_count() == 3);
    for (std::uint32_t i = 0; i < 3; ++i) CHECK(t.leaves[i].label == "x");
    // Only unlabeled runs compress on output.
    CHECK(format_cotree(t) == "U(x,x,x)");
    CHECK(signature(parse_cotree(format_cotree(t)), false) == signature(t, false));
}

TEST_CASE("unlabeled runs compress on output") {
    CHECK(format_cotree(parse_cotree("J(_,_)")) == "J(2*_)");
    CHECK(format_cotree(parse_cotree("J(_,x,_)")) == "J(_,x,_)");
    CHECK(format_cotree(parse_cotree("J(_,_,x)")) == "J(2*_,x)");
    CHECK(format_cotree(parse_cotree("J(x,_,_,_)")) == "J(x,3*_)");
    CHECK(format_cotree(parse_cotree("J(2*_,U(2*_))")) == "J(2*_,U(2*_))");
}

TEST_CASE("single leaves parse as bare trees") {
    Cotree t = parse_cotree("alpha");
    CHECK(t.root.is_leaf);
    CHECK(t.leaf_count() == 1);
    CHECK(format_cotree(t) == "alpha");
    CHECK(format_cotree(parse_cotree("_")) == "_");

    // "J" and "U" only open nodes when followed by '('; bare they are leaves.
    Cotree j = parse_cotree("J");
    CHECK(j.root.is_leaf);
    CHECK(j.leaves[0].label == "J");

    // A space between the tag and '(' is still a node.
    Cotree spaced = parse_cotree("J (a,b)");
    CHECK_FALSE(spaced.root.is_leaf);
    CHECK(format_cotree(spaced) == "J(a,b)");
}

TEST_CASE("parser keeps the written shape without normalizing") {
    Cotree t = parse_cotree("J(J(a,b),c)");
    CHECK(t.nodes.size() == 2);
    CHECK_FALSE(is_canonical(t));
    CHECK(format_cotree(t) == "J(J(a,b),c)");
}

TEST_CASE("parse errors carry line and column") {
    auto check_error = [](const std::string& text, std::size_t line, std::size_t column) {
        try {
            parse_cotree(text);
            FAIL("expected ParseError for: ", text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
        }
    };
    check_error("J(a,,b)", 1, 5);
    check_error("J(a,\n,b)", 2, 1);
    check_error("J(a,b", 1, 6);  // unclosed node
    check_error("J(a,b))", 1, 7); // trailing input
    check_error("J()", 1, 3);     // empty node
    check_error("", 1, 1);
    check_error("   \n  # only a comment\n", 3, 1);
    check_error("J(0*_)", 1, 3); // repeat count must be >= 1
    check_error("J(5*)", 1, 5);  // missing leaf after '*'
    check_error("J(5 _)", 1, 5); // missing '*'
}

TEST_CASE("parse error messages are descriptive") {
    CHECK_THROWS_WITH_AS(parse_cotree(""), "parse error at 1:1: empty input (expected a cotree)",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_cotree("2*_"),
                         "parse error at 1:1: top-level repeated leaf needs an enclosing node",
                         ParseError);
}

TEST_CASE("format detection looks at the first significant character") {
    CHECK(detect_format("J(a,b)") == InputFormat::CotreeText);
    CHECK(detect_format("_") == InputFormat::CotreeText);
    CHECK(detect_format("3 2\n0 1\n1 2\n") == InputFormat::EdgeList);
    CHECK(detect_format("# comment\n \t\n12 39\n") == InputFormat::EdgeList);
    CHECK(detect_format("# comment\nU(2*_)") == InputFormat::CotreeText);
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 3);
    CHECK(has_edge(g, 1, 2));
    CHECK_FALSE(has_edge(g, 0, 2));

    SUBCASE("comments, blank lines, and unnormalized endpoints") {
        Graph h = parse_edge_list("# path\n4 3 # header\n\n1 0\n2 1\n3 2\n");
        CHECK(graphs_equal(g, h));
    }
    SUBCASE("round trip through format_edge_list") {
        CHECK(graphs_equal(parse_edge_list(format_edge_list(g)), g));
        CHECK(format_edge_list(g) == "4 3\n0 1\n1 2\n2 3\n");
    }
    SUBCASE("duplicate edges collapse") {
        Graph h = parse_edge_list("3 3\n0 1\n1 0\n0 1\n");
        CHECK(h.edge_count() == 1);
    }
}

TEST_CASE("edge list rejects malformed input") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("3\n") == 1);             // header needs two numbers
    CHECK(line_of("0 0\n") == 1);           // n >= 1
    CHECK(line_of("3 -1\n") == 1);          // m >= 0
    CHECK(line_of("3 2\n0 1\n") == 2);      // fewer edge lines than m
    CHECK(line_of("3 1\n0 1\n1 2\n") == 3); // more edge lines than m
    CHECK(line_of("3 1\n0 3\n") == 2);      // endpoint out of range
    CHECK(line_of("3 1\n1 1\n") == 2);      // self-loop
    CHECK(line_of("3 1\n0 1 2\n") == 2);    // edge line needs two numbers
    CHECK(line_of("3 1\na b\n") == 2);      // not an integer
    CHECK_THROWS_AS(parse_edge_list("x y\n"), ParseError);
}
