#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cospectra/exact.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/oracle.hpp"
#include "cospectra/recognition.hpp"

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

using namespace cospectra;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, std::move(e));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make_graph(n, std::move(e));
}

} // namespace

TEST_CASE("dense laplacian entries") {
    auto L = dense_laplacian(path_graph(3));
    REQUIRE(L.size() == 3);
    CHECK(L(0, 0) == 1);
    CHECK(L(1, 1) == 2);
    CHECK(L(2, 2) == 1);
    CHECK(L(0, 1) == -1);
    CHECK(L(1, 0) == -1);
    CHECK(L(0, 2) == 0);
    std::int64_t trace = 0, total = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            total += L(i, j);
            if (i == j) trace += L(i, j);
        }
    CHECK(trace == 4);  // twice the edge count
    CHECK(total == 0);  // rows sum to zero
}

TEST_CASE("jacobi eigensolver on known matrices") {
    SUBCASE("already diagonal") {
        SquareMatrix<double> d(3);
        d(0, 0) = 5;
        d(1, 1) = -2;
        d(2, 2) = 1;
        auto eig = eig_symmetric(d);
        REQUIRE(eig.size() == 3);
        CHECK(eig[0] == doctest::Approx(-2));
        CHECK(eig[1] == doctest::Approx(1));
        CHECK(eig[2] == doctest::Approx(5));
    }
    SUBCASE("2x2 with known roots") {
        SquareMatrix<double> m(2);
        m(0, 0) = 2;
        m(1, 1) = 2;
        m(0, 1) = m(1, 0) = 1;
        auto eig = eig_symmetric(m);
        CHECK(eig[0] == doctest::Approx(1).epsilon(1e-10));
        CHECK(eig[1] == doctest::Approx(3).epsilon(1e-10));
    }
    SUBCASE("path laplacian") {
        auto eig = eig_symmetric(to_double(dense_laplacian(path_graph(3))));
        CHECK(eig[0] == doctest::Approx(0).epsilon(1e-10));
        CHECK(eig[1] == doctest::Approx(1).epsilon(1e-10));
        CHECK(eig[2] == doctest::Approx(3).epsilon(1e-10));
    }
    SUBCASE("empty matrix") { CHECK(eig_symmetric(SquareMatrix<double>(0)).empty()); }
    SUBCASE("rejects non-symmetric input") {
        SquareMatrix<double> m(2);
        m(0, 1) = 1;
        m(1, 0) = 2;
        CHECK_THROWS_AS(eig_symmetric(m), std::invalid_argument);
    }
}

TEST_CASE("jacobi eigensolver preserves trace and Frobenius norm") {
    // A fixed, moderately dense symmetric integer matrix.
    const std::size_t n = 16;
    SquareMatrix<double> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const auto v = static_cast<double>((7 * (i + 1) + 13 * (j + 1)) % 11) - 5.0;
            m(i, j) = v;
            m(j, i) = v;
        }
    double trace = 0, frob2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        trace += m(i, i);
        for (std::size_t j = 0; j < n; ++j) frob2 += m(i, j) * m(i, j);
    }
    auto eig = eig_symmetric(m);
    double sum = 0, sq = 0;
    for (double v : eig) {
        sum += v;
        sq += v * v;
    }
    CHECK(sum == doctest::Approx(trace).epsilon(1e-9));
    CHECK(sq == doctest::Approx(frob2).epsilon(1e-9));
}

TEST_CASE("matrix-tree counts of classic graphs") {
    CHECK(matrix_tree_count(complete_graph(4)) == 16); // Cayley: 4^2
    CHECK(matrix_tree_count(complete_graph(5)) == 125);
    CHECK(matrix_tree_count(path_graph(4)) == 1);
    CHECK(matrix_tree_count(cycle_graph(5)) == 5);
    CHECK(matrix_tree_count(make_graph(1, {})) == 1);
    CHECK(matrix_tree_count(make_graph(3, {{0, 1}})) == 0); // disconnected
    for (int removed = 0; removed < 5; ++removed)
        CHECK(matrix_tree_count(cycle_graph(5), removed) == 5);
}

TEST_CASE("exact inertia of diagonal and indefinite matrices") {
    SUBCASE("zero matrix") { CHECK(exact_inertia(SquareMatrix<Rational>(3)) == Inertia{0, 3, 0}); }
    SUBCASE("identity and its negative") {
        SquareMatrix<Rational> m(3);
        for (std::size_t i = 0; i < 3; ++i) m(i, i) = 1;
        CHECK(exact_inertia(m) == Inertia{3, 0, 0});
        for (std::size_t i = 0; i < 3; ++i) m(i, i) = -1;
        CHECK(exact_inertia(m) == Inertia{0, 0, 3});
    }
    SUBCASE("hollow symmetric needs the zero-diagonal pivot fix") {
        SquareMatrix<Rational> m(2);
        m(0, 1) = m(1, 0) = 1; // eigenvalues +1 and -1
        CHECK(exact_inertia(m) == Inertia{1, 0, 1});
    }
    SUBCASE("block of hollow pairs") {
        SquareMatrix<Rational> m(4);
        m(0, 2) = m(2, 0) = 1;
        m(1, 3) = m(3, 1) = Rational(-2, 3);
        CHECK(exact_inertia(m) == Inertia{2, 0, 2});
    }
    SUBCASE("rejects non-symmetric input") {
        SquareMatrix<Rational> m(2);
        m(0, 1) = 1;
        CHECK_THROWS_AS(exact_inertia(m), std::invalid_argument);
    }
}

TEST_CASE("exact inertia locates laplacian eigenvalues") {
    Graph g = parse_edge_list(format_edge_list(complete_graph(4)));
    // K4 spectrum is {4,4,4,0}.
    CHECK(exact_inertia(rational_laplacian_shift(g, Rational(0))) == Inertia{3, 1, 0});
    CHECK(exact_inertia(rational_laplacian_shift(g, Rational(-4))) == Inertia{0, 3, 1});
    CHECK(exact_inertia(rational_laplacian_shift(g, Rational(-7, 2))) == Inertia{3, 0, 1});
    CHECK(exact_inertia(rational_laplacian_shift(g, Rational(-5))) == Inertia{0, 0, 4});
}

TEST_CASE("brute-force P4 search") {
    Graph p4 = path_graph(4);
    auto w = find_induced_p4_brute(p4);
    REQUIRE(w.has_value());
    CHECK(*w == P4Witness{0, 1, 2, 3});
    CHECK(is_valid_p4(p4, *w));

    CHECK_FALSE(find_induced_p4_brute(cycle_graph(4)).has_value());
    CHECK(has_induced_p4(cycle_graph(5)));
    CHECK(has_induced_p4(path_graph(5)));
    CHECK_FALSE(has_induced_p4(complete_graph(5)));
    CHECK_FALSE(has_induced_p4(make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                              {2, 3}, {2, 4}, {2, 5}})));
}

TEST_CASE("p4 witness validator") {
    Graph p4 = path_graph(4);
    CHECK(is_valid_p4(p4, P4Witness{3, 2, 1, 0})); // reversed path is the same witness
    CHECK_FALSE(is_valid_p4(p4, P4Witness{0, 1, 3, 2}));
    CHECK_FALSE(is_valid_p4(p4, P4Witness{0, 1, 2, 2})); // repeated vertex
    CHECK_FALSE(is_valid_p4(p4, P4Witness{0, 1, 2, 4})); // out of range
    CHECK_FALSE(is_valid_p4(cycle_graph(4), P4Witness{0, 1, 2, 3}));
}

TEST_CASE("tiny graph isomorphism") {
    // C4 under a vertex relabeling.
    Graph c4 = cycle_graph(4);
    Graph k22 = make_graph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    CHECK(graphs_isomorphic_brute(c4, k22));

    // Path vs star: same order and size, different degree sequence.
    Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(graphs_isomorphic_brute(path_graph(4), star));
    CHECK_FALSE(graphs_isomorphic_brute(path_graph(4), path_graph(3)));
    CHECK_THROWS_AS(graphs_isomorphic_brute(complete_graph(9), complete_graph(9)),
                    std::invalid_argument);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("7/2") == Rational(7, 2));
    CHECK(parse_rational("-7/12") == Rational(-7, 12));
    CHECK(parse_rational("+3/6") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}
