#include "doctest.h"

#include "oracles.hpp"
#include "rainbowk/construction.hpp"
#include "rainbowk/core.hpp"

#include <random>

using namespace rainbowk;

TEST_CASE("flat_index of grouped and extra labels") {
    const LabelParams p{4, 2, 2};
    CHECK(flat_index(Grouped{1, 1}, p) == 0);
    CHECK(flat_index(Grouped{3, 2}, p) == 5);
    CHECK(flat_index(Extra{2}, p) == 17);
}

TEST_CASE("from_flat inverts flat_index") {
    const LabelParams p{4, 2, 2};
    CHECK(std::get<Grouped>(label_at(0, p)) == Grouped{1, 1});
    CHECK(std::get<Extra>(label_at(16, p)) == Extra{1});
    CHECK(std::get<Grouped>(label_at(5, p)) == Grouped{3, 2});
    CHECK(from_flat(5, Side::W, p).side == Side::W);
}

TEST_CASE("labels out of range are rejected") {
    const LabelParams p{4, 2, 2};
    CHECK_THROWS_AS(flat_index(Grouped{9, 1}, p), LabelError);
    CHECK_THROWS_AS(flat_index(Grouped{0, 1}, p), LabelError);
    CHECK_THROWS_AS(flat_index(Grouped{1, 3}, p), LabelError);
    CHECK_THROWS_AS(flat_index(Extra{3}, p), LabelError);
    CHECK_THROWS_AS(flat_index(Extra{1}, LabelParams{4, 2, 0}), LabelError);
    CHECK_THROWS_AS(flat_index(Plain{1}, p), LabelError);
    CHECK_THROWS_AS(label_at(18, p), LabelError);
    CHECK_THROWS_AS(label_at(-1, p), LabelError);
}

TEST_CASE("flat index round-trips for every valid shape") {
    for (int k = 2; k <= 8; ++k)
        for (int k1 = 1; k1 <= 5; ++k1)
            for (int r1 = 0; r1 < 2 * k; ++r1) {
                const LabelParams p{k, k1, r1};
                for (int i = 0; i < p.r(); ++i) {
                    const auto label = label_at(i, p);
                    REQUIRE(flat_index(label, p) == i);
                    REQUIRE(std::holds_alternative<Extra>(label) == (i >= 2 * k * k1));
                }
            }
    const auto plain = LabelParams::plain(7);
    for (int i = 0; i < 7; ++i) CHECK(flat_index(label_at(i, plain), plain) == i);
}

TEST_CASE("label grammar round-trips") {
    for (const auto& p : {LabelParams{4, 2, 2}, LabelParams{5, 3, 3}, LabelParams::plain(5)})
        for (Side side : {Side::U, Side::W})
            for (int i = 0; i < p.r(); ++i) {
                const std::string text = to_string(from_flat(i, side, p));
                const VertexRef back = parse_vertex(text, p);
                CHECK(to_string(back) == text);
                CHECK(back.flat == i);
            }
    CHECK(to_string(parse_vertex("U:e:1", LabelParams{4, 2, 2})) == "U:e:1");
    CHECK(to_string(parse_vertex("W:8:2", LabelParams{4, 2, 2})) == "W:8:2");
    for (const char* bad : {"X:1:1", "U:0:1", "U:e:", "U:1:1:1", "U:01:1", "U", "U:", "U:a:1", "U:1:-1"})
        CHECK_THROWS_AS(parse_label(bad), LabelError);
}

TEST_CASE("edge colorings cover exactly r^2 edges") {
    CHECK_THROWS_AS(EdgeColoring(2, 3, std::vector<std::uint8_t>(3, 1)), ParameterError);
    CHECK_THROWS_AS(EdgeColoring(2, 3, std::vector<std::uint8_t>{1, 2, 3, 4}), ParameterError);
    CHECK_THROWS_AS(EdgeColoring(2, 3, std::vector<std::uint8_t>{1, 2, 0, 3}), ParameterError);
    const auto c = EdgeColoring::uniform(3, 2, 2);
    const auto h = c.histogram();
    CHECK(h[1] == 0);
    CHECK(h[2] == 9);
}

TEST_CASE("path_is_rainbow") {
    const LabelParams plain = LabelParams::plain(2);
    const auto u1 = from_flat(0, Side::U, plain);
    const auto u2 = from_flat(1, Side::U, plain);
    const auto w1 = from_flat(0, Side::W, plain);
    const auto mono = EdgeColoring::uniform(2, 1, 1);

    SUBCASE("a single edge is always rainbow") {
        CHECK(path_is_rainbow(std::vector{u1, w1}, mono));
    }
    SUBCASE("repeated color is not rainbow") {
        CHECK_FALSE(path_is_rainbow(std::vector{u1, w1, u2}, mono));
    }
    SUBCASE("malformed paths") {
        CHECK_THROWS_AS(path_is_rainbow(std::vector{u1, u2}, mono), MalformedPathError);
        CHECK_THROWS_AS(path_is_rainbow(std::vector{u1, w1, u1}, mono), MalformedPathError);
        CHECK_THROWS_AS(path_is_rainbow(std::vector{u1}, mono), MalformedPathError);
    }
    SUBCASE("constructed coloring, k=4 r=18") {
        const auto s = make_scheme(4, 18);
        const auto c = build_coloring(s);
        const auto p = s.params();
        const std::vector path{make_vertex(Side::U, Grouped{1, 1}, p), make_vertex(Side::W, Grouped{3, 1}, p),
                               make_vertex(Side::U, Grouped{4, 2}, p), make_vertex(Side::W, Grouped{2, 1}, p)};
        CHECK(path_is_rainbow(path, c));
        const auto rp = make_rainbow_path(path, c);
        CHECK(rp.colors == std::vector<Color>{1, 2, 3});
    }
}

TEST_CASE("rainbowness is invariant under reversal") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = 4;
        const auto c = testing::random_coloring(rng, r, 5);
        const auto plain = LabelParams::plain(r);
        std::vector<int> us{0, 1, 2, 3}, ws{0, 1, 2, 3};
        std::shuffle(us.begin(), us.end(), rng);
        std::shuffle(ws.begin(), ws.end(), rng);
        const int len = 2 + trial % 6;
        std::vector<VertexRef> path;
        for (int t = 0; t < len; ++t)
            path.push_back(t % 2 == 0 ? from_flat(us[t / 2], Side::U, plain) : from_flat(ws[t / 2], Side::W, plain));
        std::vector<VertexRef> rev(path.rbegin(), path.rend());
        const bool fwd = path_is_rainbow(path, c);
        CHECK(fwd == path_is_rainbow(rev, c));
        if (fwd) CHECK(make_rainbow_path(path, c).colors.size() <= static_cast<std::size_t>(c.colors()));
    }
}
