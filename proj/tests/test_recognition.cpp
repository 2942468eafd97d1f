#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cospectra/cotree.hpp"
#include "cospectra/cotree_text.hpp"
#include "cospectra/generate.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/oracle.hpp"
#include "cospectra/recognition.hpp"

#include <string>
#include <utility>
#include <vector>

using namespace cospectra;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make_graph(n, std::move(e));
}

// All graphs on n vertices, one per subset of the possible edges.
std::vector<Graph> all_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask & (1u << i)) e.push_back(pairs[i]);
        out.push_back(make_graph(n, std::move(e)));
    }
    return out;
}

} // namespace

TEST_CASE("the path on four vertices is the canonical non-cograph") {
    Graph p4 = path_graph(4);
    RecognitionOutcome out = build_cotree(p4);
    REQUIRE(std::holds_alternative<P4Witness>(out));
    P4Witness w = std::get<P4Witness>(out);
    CHECK(w == P4Witness{0, 1, 2, 3});
    CHECK(is_valid_p4(p4, w));
    CHECK_FALSE(is_cograph(p4));

    NotACographError err(w);
    CHECK(std::string(err.what()) == "not a cograph: induced P4 0 1 2 3");
    CHECK(err.witness == w);
}

TEST_CASE("small classics") {
    CHECK_FALSE(is_cograph(path_graph(5)));
    CHECK_FALSE(is_cograph(cycle_graph(5)));
    CHECK_FALSE(is_cograph(cycle_graph(6)));
    CHECK(is_cograph(cycle_graph(4))); // C4 = K_{2,2}
    CHECK(is_cograph(path_graph(3)));
    CHECK(is_cograph(make_graph(3, {})));
    CHECK(is_cograph(make_graph(1, {})));
}

TEST_CASE("single vertex recognizes to a bare leaf") {
    RecognitionOutcome out = build_cotree(make_graph(1, {}));
    REQUIRE(std::holds_alternative<Cotree>(out));
    CHECK(std::get<Cotree>(out).root.is_leaf);
    CHECK_THROWS_AS(build_cotree(make_graph(0, {})), std::invalid_argument);
}

TEST_CASE("edgeless and complete graphs") {
    RecognitionOutcome empty3 = build_cotree(make_graph(3, {}));
    REQUIRE(std::holds_alternative<Cotree>(empty3));
    CHECK(format_cotree(std::get<Cotree>(empty3)) == "U(3*_)");

    RecognitionOutcome k4 = build_cotree(make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    REQUIRE(std::holds_alternative<Cotree>(k4));
    CHECK(format_cotree(std::get<Cotree>(k4)) == "J(4*_)");
}

TEST_CASE("complete bipartite graph splits into co-components") {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) e.emplace_back(u, v);
    RecognitionOutcome out = build_cotree(make_graph(6, std::move(e)));
    REQUIRE(std::holds_alternative<Cotree>(out));
    const Cotree& t = std::get<Cotree>(out);
    CHECK(signature(t) == signature(parse_cotree("J(U(3*_),U(3*_))")));
    CHECK(is_canonical(t));
}

TEST_CASE("recognition inverts expansion on a nested example") {
    Cotree t = parse_cotree("J(U(J(a,b),J(c,d)),U(J(e,f),g))");
    RecognitionOutcome out = build_cotree(expand_to_graph(t));
    REQUIRE(std::holds_alternative<Cotree>(out));
    // Leaf i is vertex i on both sides, so identified signatures must agree.
    CHECK(signature(std::get<Cotree>(out)) == signature(t));
}

TEST_CASE("exhaustive order-4 and order-5 recognition against the brute oracle") {
    for (int n : {4, 5}) {
        for (const Graph& g : all_graphs(n)) {
            const bool oracle_cograph = !has_induced_p4(g);
            RecognitionOutcome out = build_cotree(g);
            if (auto* w = std::get_if<P4Witness>(&out)) {
                REQUIRE_FALSE(oracle_cograph);
                REQUIRE(is_valid_p4(g, *w));
            } else {
                const Cotree& t = std::get<Cotree>(out);
                REQUIRE(oracle_cograph);
                REQUIRE(is_canonical(t));
                REQUIRE(graphs_equal(expand_to_graph(t), g));
            }
        }
    }
}

TEST_CASE("random cotrees survive expansion and re-recognition") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(seed * 7 % 39);
        Cotree t = random_cotree(n, seed, seed % 2 ? 0.3 : 0.7);
        RecognitionOutcome out = build_cotree(expand_to_graph(t));
        REQUIRE(std::holds_alternative<Cotree>(out));
        CHECK(signature(std::get<Cotree>(out)) == signature(t));
    }
}

TEST_CASE("planting one chord inside a union creates a P4") {
    // Two joined pairs unioned together, plus one edge across the union:
    // a-b joined, c-d joined, chord b-c produces the induced path a-b-c-d.
    Graph g = make_graph(4, {{0, 1}, {2, 3}, {1, 2}});
    RecognitionOutcome out = build_cotree(g);
    REQUIRE(std::holds_alternative<P4Witness>(out));
    CHECK(is_valid_p4(g, std::get<P4Witness>(out)));
}
