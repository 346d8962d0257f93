#include "doctest.h"

#include "support.hpp"

#include "sosprop/propagation.hpp"
#include "sosprop/verification.hpp"

#include <cmath>

using namespace sosprop;

namespace {

MatrixState state_of(const Grid& g, int n)
{
    MatrixState m(g.rows(), g.cols(), n);
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            if (g.at(i, j)) m.candidates(m.index({i, j})) = CandidateSet::single(*g.at(i, j));
    return m;
}

}  // namespace

TEST_CASE("the two reference matrices are CSIMs")
{
    const Grid a = testing::example_3_5_7();
    const Grid b = testing::walkthrough_4_4_4();
    CHECK(is_csim(a, 7));
    CHECK(is_csim(b, 4));
    CHECK(verify(state_of(a, 7)));
    CHECK(verify(state_of(b, 4)));
    CHECK(verify_complete(state_of(b, 4)));
    CHECK_FALSE(is_csim(a, 6));
}

TEST_CASE("single rows are CSIMs")
{
    for (int s = 1; s <= 6; ++s) {
        std::vector<int> row;
        for (int j = 1; j <= s; ++j) row.push_back(j);
        CHECK(is_csim(Grid::from_rows({row}), s));
    }
}

TEST_CASE("a flipped sign breaks the square")
{
    Grid g = testing::example_3_5_7();
    g.at(1, 1) = SignedValue::from_int(1);
    CHECK_FALSE(is_csim(g, 7));
    CHECK_FALSE(verify(state_of(g, 7)));
    // Independent count on the top-left square: 1, 2, 2, 1 has no minus sign.
    CHECK_FALSE(testing::naive_csim({1, 2, 3, 4, 5, 2, 1, 4, -3, 6, 3, -4, -1, 2, 7}, 3, 5, 7));
}

TEST_CASE("all-plus 2x2 swap")
{
    const Grid g = Grid::from_rows({{1, 2}, {2, 1}});
    CHECK_FALSE(is_csim(g, 2));
    CHECK_FALSE(verify(state_of(g, 2)));
}

TEST_CASE("verify ignores squares with an unassigned corner")
{
    MatrixState m = make_matrix(2, 2, 2);
    m.candidates(0) = CandidateSet::single(SignedValue::from_int(1));
    m.candidates(1) = CandidateSet::single(SignedValue::from_int(2));
    m.candidates(2) = CandidateSet::single(SignedValue::from_int(2));
    CHECK(verify(m));
    CHECK_FALSE(verify_complete(m));
    m.candidates(3) = CandidateSet::single(SignedValue::from_int(1));
    CHECK_FALSE(verify(m));

    MatrixState rows = make_matrix(1, 3, 3);
    rows.candidates(0) = CandidateSet::single(SignedValue::from_int(2));
    rows.candidates(2) = CandidateSet::single(SignedValue::from_int(-2));
    CHECK_FALSE(verify(rows));
}

TEST_CASE("verify_complete")
{
    CHECK_FALSE(verify_complete(make_matrix(2, 2, 2)));
    MatrixState m = state_of(testing::walkthrough_4_4_4(), 4);
    CHECK(verify_complete(m));
    m.candidates(5) = CandidateSet::of_color(Color{4});
    CHECK_FALSE(verify_complete(m));
}

TEST_CASE("is_csim agrees with an independent counting check on every small grid")
{
    for (auto [r, s, n] : std::vector<std::array<int, 3>>{{1, 2, 2}, {2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {1, 3, 3}}) {
        int agree = 0, csims = 0;
        testing::for_each_filling(r, s, n, [&](const std::vector<int>& cells) {
            const Grid g = testing::grid_of(cells, r, s);
            const bool expected = testing::naive_csim(cells, r, s, n);
            CHECK(is_csim(g, n) == expected);
            CHECK(verify(state_of(g, n)) == expected);
            agree += 1;
            csims += expected;
        });
        CHECK(agree == static_cast<int>(std::pow(2 * n, r * s)));
        if (r == 2 && s == 3 && n == 3) CHECK(csims == 0);
        if (r == 2 && s == 2 && n == 2) CHECK(csims > 0);
    }
}

TEST_CASE("grid text")
{
    const Grid g = parse_grid("1 2 *\n-2 * 3\n");
    CHECK(g.rows() == 2);
    CHECK(g.cols() == 3);
    CHECK_FALSE(g.complete());
    CHECK(g.max_color() == 3);
    CHECK(format_grid(g) == "1 2 *\n-2 * 3\n");
    CHECK_THROWS_AS(parse_grid("±1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(Grid::from_rows({{1, 2}, {3}}), std::invalid_argument);

    const Grid a = Grid::from_rows({{1, -1}});
    const Grid b = Grid::from_rows({{1, 2}});
    CHECK(a < b);
    CHECK_FALSE(b < a);
}
