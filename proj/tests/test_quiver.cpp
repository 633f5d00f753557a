#include "doctest.h"

#include <random>

#include "rdim/errors.hpp"
#include "rdim/quiver.hpp"

using namespace rdim;

namespace {

// random orientation/labeling of an undirected tree given by edges on 1..n
Quiver orient_randomly(size_t n, std::vector<std::pair<size_t, size_t>> edges,
                       std::mt19937& rng)
{
    std::vector<size_t> relabel(n + 1);
    for (size_t v = 1; v <= n; ++v)
        relabel[v] = v;
    std::shuffle(relabel.begin() + 1, relabel.end(), rng);
    std::vector<std::pair<size_t, size_t>> arrows;
    for (auto [a, b] : edges) {
        size_t x = relabel[a], y = relabel[b];
        if (rng() % 2)
            std::swap(x, y);
        arrows.push_back({x, y});
    }
    std::shuffle(arrows.begin(), arrows.end(), rng);
    return Quiver(n, std::move(arrows));
}

std::vector<std::pair<size_t, size_t>> path_edges(size_t n)
{
    std::vector<std::pair<size_t, size_t>> e;
    for (size_t v = 1; v < n; ++v)
        e.push_back({v, v + 1});
    return e;
}

// star with given branch lengths; vertex 1 is the center
std::vector<std::pair<size_t, size_t>> star_edges(const std::vector<size_t>& branches)
{
    std::vector<std::pair<size_t, size_t>> e;
    size_t next = 2;
    for (size_t len : branches) {
        size_t prev = 1;
        for (size_t k = 0; k < len; ++k) {
            e.push_back({prev, next});
            prev = next++;
        }
    }
    return e;
}

size_t star_vertex_count(const std::vector<size_t>& branches)
{
    size_t n = 1;
    for (size_t len : branches)
        n += len;
    return n;
}

} // namespace

TEST_CASE("quiver validation")
{
    CHECK_THROWS_AS(Quiver(2, {{1, 1}}), InputError);                  // loop
    CHECK_THROWS_AS(Quiver(2, {{1, 2}, {2, 1}}), InputError);          // multi-edge
    CHECK_THROWS_AS(Quiver(3, {{1, 2}, {2, 3}, {3, 1}}), InputError);  // cycle
    CHECK_THROWS_AS(Quiver(4, {{1, 2}, {3, 4}, {2, 3}, {1, 4}}), InputError);
    CHECK_THROWS_AS(Quiver(4, {{1, 2}}), InputError);                  // disconnected
    CHECK_THROWS_AS(Quiver(2, {{1, 3}}), InputError);                  // out of range
    CHECK_NOTHROW(Quiver(1, {}));
}

TEST_CASE("dynkin classification: worked examples")
{
    CHECK(dynkin_classify(Quiver(4, {{1, 2}, {2, 3}, {3, 4}})).name() == "A4");
    CHECK(dynkin_classify(Quiver(4, {{2, 1}, {2, 3}, {4, 3}})).name() == "A4");

    // star with branches (1,1,2) on 5 vertices -> D5
    auto d5 = star_edges({1, 1, 2});
    CHECK(dynkin_classify(Quiver(5, d5)).name() == "D5");

    // (2,2,2)-star on 7 vertices: the affine E6 shape is not Dynkin
    auto e6tilde = star_edges({2, 2, 2});
    CHECK(dynkin_classify(Quiver(7, e6tilde)).type == DynkinType::NonDynkin);

    CHECK(dynkin_classify(Quiver(1, {})).name() == "A1");
    CHECK(dynkin_classify(Quiver(6, star_edges({1, 2, 2}))).name() == "E6");
    CHECK(dynkin_classify(Quiver(7, star_edges({1, 2, 3}))).name() == "E7");
    CHECK(dynkin_classify(Quiver(8, star_edges({1, 2, 4}))).name() == "E8");
    CHECK(dynkin_classify(Quiver(9, star_edges({1, 2, 5}))).type == DynkinType::NonDynkin);
    // four branches: the affine D4 shape
    CHECK(dynkin_classify(Quiver(5, star_edges({1, 1, 1, 1}))).type == DynkinType::NonDynkin);
}

TEST_CASE("quiver rdim: 0 for ADE, 1 otherwise; orientation-independent")
{
    CHECK(quiver_rdim(Quiver(1, {})) == 0);
    CHECK(quiver_rdim(Quiver(8, star_edges({1, 2, 4}))) == 0);
    CHECK(quiver_rdim(Quiver(7, star_edges({2, 2, 2}))) == 1);

    std::mt19937 rng(2718281);
    std::vector<std::vector<std::pair<size_t, size_t>>> shapes = {
        path_edges(6), star_edges({1, 1, 3}), star_edges({1, 2, 4}), star_edges({2, 2, 2}),
        star_edges({1, 1, 1, 1})};
    std::vector<size_t> sizes = {6, star_vertex_count({1, 1, 3}), star_vertex_count({1, 2, 4}),
                                 star_vertex_count({2, 2, 2}),
                                 star_vertex_count({1, 1, 1, 1})};
    for (size_t s = 0; s < shapes.size(); ++s) {
        int expected = quiver_rdim(Quiver(sizes[s], shapes[s]));
        for (int trial = 0; trial < 20; ++trial)
            CHECK(quiver_rdim(orient_randomly(sizes[s], shapes[s], rng)) == expected);
    }
}

TEST_CASE("tree to quiver: worked examples")
{
    // single edge rooted at one end: arrow into the root
    RootedSignedTree edge({{0, 1}}, 0, {});
    Quiver q1 = tree_to_quiver(edge);
    CHECK(q1.vertex_count() == 2);
    REQUIRE(q1.arrows().size() == 1);
    CHECK(q1.arrows()[0] == std::pair<size_t, size_t>{2, 1});

    // path rooted at the middle: both arrows point inward
    RootedSignedTree path({{0, 1}, {1, 2}}, 1, {});
    Quiver q2 = tree_to_quiver(path);
    REQUIRE(q2.arrows().size() == 2);
    CHECK(q2.arrows()[0] == std::pair<size_t, size_t>{1, 2});
    CHECK(q2.arrows()[1] == std::pair<size_t, size_t>{3, 2});

    // (2,2,2)-star rooted at the center is not Dynkin
    RootedSignedTree star({{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}, 0,
                          {{{1, 2}, '+'}, {{3, 4}, '-'}, {{5, 6}, '+'}});
    Quiver q3 = tree_to_quiver(star);
    CHECK(quiver_rdim(q3) == 1);

    // signs must sit exactly on the edges away from the root
    CHECK_THROWS_AS(RootedSignedTree({{0, 1}, {1, 2}}, 0, {}), InputError);
    CHECK_THROWS_AS(RootedSignedTree({{0, 1}}, 0, {{{0, 1}, '+'}}), InputError);

    // sign choices do not change the quiver
    RootedSignedTree flip({{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}, 0,
                          {{{1, 2}, '-'}, {{3, 4}, '+'}, {{5, 6}, '-'}});
    Quiver q4 = tree_to_quiver(flip);
    CHECK(q4.arrows() == q3.arrows());
}

TEST_CASE("worst-case tree rdim by vertex count")
{
    for (size_t size = 1; size <= 4; ++size)
        CHECK(worst_case_tree_rdim(size) == 0);
    for (size_t size = 5; size <= 9; ++size)
        CHECK(worst_case_tree_rdim(size) == 1);
}
