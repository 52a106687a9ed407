#include "oracle.hpp"

#include <gtopo/core.hpp>
#include <gtopo/atlas.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace gtopo;

TEST(Core, ParsesPrisonersDilemmaCells) {
    Game pd = parse_game("1324/4321");
    EXPECT_EQ(pd.row[cell_index(0, 0)], 1);
    EXPECT_EQ(pd.col[cell_index(0, 0)], 4);
    EXPECT_EQ(pd.row[cell_index(0, 1)], 3);
    EXPECT_EQ(pd.col[cell_index(0, 1)], 3);
    EXPECT_EQ(pd.row[cell_index(1, 0)], 2);
    EXPECT_EQ(pd.col[cell_index(1, 0)], 2);
    EXPECT_EQ(pd.row[cell_index(1, 1)], 4);
    EXPECT_EQ(pd.col[cell_index(1, 1)], 1);
}

TEST(Core, ParsesChickenCells) {
    Game g = parse_game("2314/4312");
    std::array<std::pair<int, int>, 4> want = {{{2, 4}, {3, 3}, {1, 1}, {4, 2}}};
    for (int k = 0; k < 4; ++k) {
        EXPECT_EQ(g.row[k], want[k].first);
        EXPECT_EQ(g.col[k], want[k].second);
    }
}

TEST(Core, RejectsMalformedInput) {
    EXPECT_THROW(parse_game("1324-4321"), parse_error);
    EXPECT_THROW(parse_game("1325/4321"), parse_error);
    EXPECT_THROW(parse_game("1224/4321"), parse_error);
    EXPECT_THROW(parse_game("0123/4321"), parse_error);
    try {
        parse_game("1224/4321");
    } catch (const parse_error& e) {
        EXPECT_NE(std::string(e.what()).find("{1,2,2,4}"), std::string::npos);
    }
}

TEST(Core, EncodingRoundTripOverAllRawPairs) {
    int n = 0;
    for (const Game& g : raw_games()) {
        EXPECT_EQ(parse_game(format_game(g)), g);
        ++n;
    }
    EXPECT_EQ(n, 75 * 75);
}

TEST(Core, TransformsAgreeWithMatrixOperations) {
    for (const Game& g : raw_games(ClassFilter{TieClass::Strict, TieClass::Low})) {
        oracle::Matrix m = oracle::from_encoding(format_game(g));
        EXPECT_EQ(format_game(apply_transform(g, SwapRows)), oracle::to_encoding(oracle::flip_rows(m)));
        EXPECT_EQ(format_game(apply_transform(g, SwapColumns)), oracle::to_encoding(oracle::flip_cols(m)));
        EXPECT_EQ(format_game(apply_transform(g, Transpose)), oracle::to_encoding(oracle::reflect(m)));
    }
}

TEST(Core, ComposeMatchesSequentialApplication) {
    Game g = parse_game("1324/4312");
    for (const Transform& a : full_group())
        for (const Transform& b : full_group()) {
            EXPECT_EQ(apply_transform(g, compose(a, b)), apply_transform(apply_transform(g, b), a));
        }
    for (const Transform& t : full_group()) EXPECT_EQ(apply_transform(apply_transform(g, t), inverse(t)), g);
}

TEST(Core, CanonicalizationIsIdempotentAndOrbitInvariant) {
    for (const Game& g : raw_games()) {
        Game c = canonical(g);
        EXPECT_EQ(canonical(c), c);
        for (const Transform& t : interchange_group) EXPECT_EQ(canonical(apply_transform(g, t)), c);
        CanonicalKey k = canonicalize(g);
        EXPECT_EQ(apply_transform(g, k.applied), k.game);
    }
}

TEST(Core, CanonicalFormsOfNamedGames) {
    EXPECT_EQ(format_game(canonical(parse_game("1314/4311"))), "1314/4311");
    EXPECT_EQ(format_game(canonical(parse_game("4131/1134"))), "1314/4311");
    EXPECT_EQ(format_game(canonical(parse_game("3142/3412"))), "1324/4321");
    EXPECT_EQ(format_game(canonical(parse_game("1414/1144"))), "1414/4411");
}

TEST(Core, StrictCanonicalPlacesRowFourRightAndColumnFourUp) {
    for (const Game& g : raw_games(ClassFilter{TieClass::Strict, TieClass::Strict})) {
        Game c = canonical(g);
        EXPECT_TRUE(c.row[1] == 4 || c.row[3] == 4) << format_game(c);
        EXPECT_TRUE(c.col[0] == 4 || c.col[1] == 4) << format_game(c);
    }
}

TEST(Core, NormalizationIsInvariantUnderMonotoneMaps) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 2000; ++trial) {
        std::array<double, 4> v{};
        for (double& x : v) x = d(rng);
        Pattern p = normalize_payoffs(v);
        std::array<double, 4> w{}, z{};
        for (int k = 0; k < 4; ++k) {
            w[k] = std::exp(v[k]) * 5 + 2;
            z[k] = v[k] * v[k] * v[k] - 10;
        }
        EXPECT_EQ(normalize_payoffs(w), p);
        EXPECT_EQ(normalize_payoffs(z), p);
        // Oracle: ranks from the distinct levels.
        std::array<int, 4> lv{};
        for (int k = 0; k < 4; ++k) lv[k] = static_cast<int>(v[k]);
        auto r = oracle::ranks_of_levels(lv);
        for (int k = 0; k < 4; ++k) EXPECT_EQ(p[k], r[k]);
    }
}

TEST(Core, NormalizationExamples) {
    EXPECT_EQ(normalize_payoffs({0.0, 5.0, 2.5, 10.0}).str(), "1324");
    EXPECT_EQ(normalize_payoffs({1.0, 1.0, 1.0, 1.0}).str(), "0000");
    EXPECT_EQ(normalize_payoffs({1.0, 1.05, 3.0, 7.0}, 0.1).str(), "1134");
    // Chained tolerance joins 1.0, 1.08 and 1.16 although the ends differ by more than tol.
    EXPECT_EQ(normalize_payoffs({1.0, 1.08, 1.16, 7.0}, 0.1).str(), "1114");
    EXPECT_THROW(normalize_payoffs({1.0, NAN, 2.0, 3.0}), invalid_payoff);
    EXPECT_THROW(normalize_payoffs({1.0, 2.0, 2.0, 3.0}, -1), invalid_payoff);
}
