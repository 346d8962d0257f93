#include "doctest.h"

#include "properties.hpp"
#include "support.hpp"

#include "sosprop/canonical.hpp"
#include "sosprop/oracle.hpp"
#include "sosprop/search.hpp"

using namespace sosprop;

TEST_CASE("row and column permutations move whole lines")
{
    const Grid g = testing::example_3_5_7();
    const Grid rows = apply_action(g, 7, RowPermutation{{1, 0, 2}});
    for (int j = 0; j < 5; ++j) {
        CHECK(rows.at(0, j) == g.at(1, j));
        CHECK(rows.at(1, j) == g.at(0, j));
        CHECK(rows.at(2, j) == g.at(2, j));
    }
    CHECK(is_csim(rows, 7));

    const Grid cols = apply_action(g, 7, ColumnPermutation{{4, 0, 1, 2, 3}});
    for (int i = 0; i < 3; ++i) {
        CHECK(cols.at(i, 0) == g.at(i, 4));
        CHECK(cols.at(i, 1) == g.at(i, 0));
    }
    CHECK(is_csim(cols, 7));
}

TEST_CASE("identity actions change nothing")
{
    const Grid g = testing::example_3_5_7();
    CHECK(apply_action(g, 7, RowPermutation{{0, 1, 2}}) == g);
    CHECK(apply_action(g, 7, ColumnPermutation{{0, 1, 2, 3, 4}}) == g);
    CHECK(apply_action(g, 7, ColorPermutation{{0, 1, 2, 3, 4, 5, 6}}) == g);
    CHECK(apply_action(g, 7, RowSignFlip{{}}) == g);
    CHECK(apply_action(g, 7, ColorSignFlip{{}}) == g);
}

TEST_CASE("sign flips and relabelling")
{
    const Grid g = testing::example_3_5_7();
    const Grid flipped = apply_action(g, 7, ColorSignFlip{{3}});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) {
            const SignedValue v = *g.at(i, j);
            CHECK(*flipped.at(i, j) == (v.color() == Color{3} ? -v : v));
        }
    CHECK(is_csim(flipped, 7));

    const Grid row_flip = apply_action(g, 7, RowSignFlip{{2}});
    CHECK(*row_flip.at(2, 0) == SignedValue::from_int(-3));
    CHECK(is_csim(row_flip, 7));
    CHECK(is_csim(apply_action(g, 7, ColumnSignFlip{{0, 4}}), 7));

    // Color 2 is now called 1 and color 1 is called 2.
    const Grid relabelled = apply_action(g, 7, ColorPermutation{{1, 0, 2, 3, 4, 5, 6}});
    CHECK(relabelled.at(0, 0)->as_int() == 2);
    CHECK(relabelled.at(0, 1)->as_int() == 1);
    CHECK(relabelled.at(1, 1)->as_int() == -2);
    CHECK(is_csim(relabelled, 7));
}

TEST_CASE("malformed actions")
{
    const Grid g = testing::example_3_5_7();
    CHECK_THROWS_AS(apply_action(g, 7, RowPermutation{{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_action(g, 7, RowPermutation{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_action(g, 7, ColumnPermutation{{0, 1, 2, 3, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_action(g, 7, ColorPermutation{{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_action(g, 7, RowSignFlip{{3}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_action(g, 7, ColorSignFlip{{0}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_action(g, 7, ColorSignFlip{{8}}), std::invalid_argument);
}

TEST_CASE("partial grids keep their holes")
{
    const Grid partial = parse_grid("1 *\n* -2\n");
    const Grid moved = apply_action(partial, 2, RowPermutation{{1, 0}});
    CHECK_FALSE(moved.at(0, 0));
    CHECK(moved.at(0, 1)->as_int() == -2);
    CHECK(moved.at(1, 0)->as_int() == 1);
}

TEST_CASE("transpose")
{
    const Grid t = transpose(testing::example_3_5_7());
    CHECK(t.rows() == 5);
    CHECK(t.cols() == 3);
    CHECK(t.at(4, 2)->as_int() == 7);
    CHECK(is_csim(t, 7));
    CHECK(transpose(t) == testing::example_3_5_7());
}

TEST_CASE("closure under random compositions")
{
    std::vector<std::pair<Grid, int>> seeds{{testing::example_3_5_7(), 7}, {testing::walkthrough_4_4_4(), 4}};
    for (const Grid& g : enumerate_csims(3, 3, 4, {.limit = 20})) seeds.emplace_back(g, 4);
    const auto report = testing::check_group_closure(seeds, 1000, 10, 2024);
    CHECK(report.compositions == 1000);
    CHECK(report.violations == 0);
}

TEST_CASE("canonical inputs")
{
    CHECK(diagonal_ones(4, 4, 4) == 4);
    CHECK(diagonal_ones(3, 5, 7) == 3);
    CHECK(diagonal_ones(10, 17, 28) == 7);

    SUBCASE("4x4")
    {
        const auto m = canonical_input(4, 4, 4);
        REQUIRE(m);
        const Grid g = Grid::from_state(*m);
        CHECK(is_canonical_form(g, 4));
        for (int i = 1; i < 4; ++i) CHECK(g.at(i, i)->as_int() == 1);
        // The first column is forced to 1, -2, -3, -4.
        for (int i = 0; i < 4; ++i) CHECK(g.at(i, 0)->as_int() == (i == 0 ? 1 : -(i + 1)));
    }
    SUBCASE("3x5 over seven colors")
    {
        const auto m = canonical_input(3, 5, 7);
        REQUIRE(m);
        const Grid g = Grid::from_state(*m);
        CHECK(is_canonical_form(g, 7));
        CHECK(g.at(1, 1)->as_int() == 1);
        CHECK(g.at(2, 2)->as_int() == 1);
        CHECK(g.at(1, 0)->as_int() == -2);
        CHECK(g.at(2, 0)->as_int() == -3);
    }
    SUBCASE("rejections")
    {
        CHECK(canonical_input_rejection(3, 5, 4));
        CHECK(canonical_input_rejection(5, 3, 4));
        CHECK_FALSE(canonical_input_rejection(3, 5, 5));
        CHECK_THROWS_AS(canonical_input(3, 5, 4), std::invalid_argument);
    }
    SUBCASE("dead inputs")
    {
        // Propagation alone refutes 3x3 over three colors.
        const auto m = canonical_input(3, 3, 3);
        if (m) CHECK(complete_matrix(*m).verdict == Verdict::Nonexistent);
    }
}

TEST_CASE("canonicalize")
{
    auto check_canonical = [](const Grid& g, int n) {
        const Grid c = canonicalize(g, n);
        CHECK(is_csim(c, n));
        CHECK(is_canonical_form(c, n));
        return c;
    };
    const Grid base = check_canonical(testing::example_3_5_7(), 7);
    CHECK(canonicalize(base, 7) == base);
    check_canonical(apply_action(testing::example_3_5_7(), 7, RowPermutation{{2, 0, 1}}), 7);
    check_canonical(testing::walkthrough_4_4_4(), 4);

    std::mt19937 rng(99);
    for (int k = 0; k < 200; ++k) {
        Grid g = testing::walkthrough_4_4_4();
        for (int step = 0; step < 8; ++step) g = apply_action(g, 4, testing::random_action(4, 4, 4, rng));
        check_canonical(g, 4);
    }
    for (const Grid& g : enumerate_csims(2, 3, 4, {.limit = 50})) check_canonical(g, 4);

    CHECK_THROWS_AS(canonicalize(Grid::from_rows({{1, 2}, {2, 1}}), 2), std::invalid_argument);
}

TEST_CASE("canonical forms exist exactly when CSIMs do")
{
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int n = 1; n <= 4; ++n) {
                INFO("type " << r << "," << s << "," << n);
                const bool any = exists_csim(r, s, n);
                OracleOptions canonical;
                canonical.canonical_only = true;
                CHECK(exists_csim(r, s, n, canonical) == any);
            }
}
