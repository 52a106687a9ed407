#include "oracle.hpp"

#include <gtopo/classify.hpp>
#include <gtopo/naming.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace gtopo;

namespace {

std::vector<std::pair<int, int>> as_pairs(const CellSet& cells) {
    std::vector<std::pair<int, int>> out;
    for (int c : cells) out.push_back({row_of(c), col_of(c)});
    return out;
}

}  // namespace

TEST(Classify, EquilibriaParetoDominanceMatchOracleOnAllGames) {
    for (const Game& g : atlas().games) {
        oracle::Matrix m = oracle::from_encoding(format_game(g));
        Classification c = classify(g);
        EXPECT_EQ(as_pairs(c.nash_weak), oracle::nash(m)) << format_game(g);
        EXPECT_EQ(as_pairs(c.nash_strict), oracle::strict_nash(m)) << format_game(g);
        std::vector<std::pair<int, int>> po;
        for (int r = 0; r < 2; ++r)
            for (int k = 0; k < 2; ++k)
                if (oracle::pareto_optimal(m, r, k)) po.push_back({r, k});
        EXPECT_EQ(as_pairs(c.pareto_optimal), po);
        for (int p = 0; p < 2; ++p) {
            int d = oracle::dominant(m, p);
            EXPECT_EQ(c.dominance[p].dominant(), d >= 0);
            if (d >= 0) EXPECT_EQ(c.dominance[p].strategy, d);
            EXPECT_EQ(c.degenerate[p], oracle::degenerate(m, p));
        }
        EXPECT_EQ(c.fixed_rank_sum, oracle::fixed_sum(m));
        EXPECT_EQ(subfamily_name(c.subfamily), oracle::subfamily(m)) << format_game(g);
    }
}

TEST(Classify, PrisonersDilemma) {
    Classification c = classify(parse_game("1324/4321"));
    EXPECT_EQ(c.nash_strict, CellSet{cell_index(1, 0)});
    EXPECT_EQ(c.dominance[0].kind, DominanceKind::Strict);
    EXPECT_EQ(c.dominance[1].kind, DominanceKind::Strict);
    EXPECT_EQ(c.pareto_optimal, (CellSet{0, 1, 3}));
    EXPECT_EQ(c.family, Family::PdFamily);
    EXPECT_EQ(c.subfamily, Subfamily::PrisonersDilemma);
}

TEST(Classify, TotalConflictIsFixedRankSum) {
    Classification c = classify(parse_game("1234/4321"));
    EXPECT_TRUE(c.fixed_rank_sum);
    EXPECT_EQ(c.inducement[0], Inducement::AlwaysNegative);
    EXPECT_EQ(c.inducement[1], Inducement::AlwaysNegative);
}

TEST(Classify, TieGamePhenomena) {
    Classification hd = classify(*resolve_game("High Dilemma"));
    EXPECT_EQ(hd.nash_weak.size(), 2u);
    Classification ze = classify(parse_game("0000/0000"));
    EXPECT_EQ(ze.family, Family::Indeterminate);
    EXPECT_TRUE(ze.degenerate[0] && ze.degenerate[1]);
    Classification mp = classify(*resolve_game("Matching Pennies"));
    EXPECT_EQ(mp.family, Family::Cyclic);
    Classification ld = classify(*resolve_game("Low Dilemma"));
    EXPECT_EQ(ld.nash_strict.size(), 0u);
    EXPECT_TRUE(std::find(ld.nash_weak.begin(), ld.nash_weak.end(), cell_index(1, 0)) != ld.nash_weak.end());
}

TEST(Classify, MutualParetoOptimality) {
    for (const Game& g : atlas().games) {
        Classification c = classify(g);
        oracle::Matrix m = oracle::from_encoding(format_game(g));
        for (int k = 0; k < 4; ++k) {
            bool beaten = false;
            for (int j = 0; j < 4; ++j)
                beaten |= m[row_of(j)][col_of(j)][0] > m[row_of(k)][col_of(k)][0] &&
                          m[row_of(j)][col_of(j)][1] > m[row_of(k)][col_of(k)][1];
            bool in = std::find(c.mutually_pareto_optimal.begin(), c.mutually_pareto_optimal.end(), k) !=
                      c.mutually_pareto_optimal.end();
            EXPECT_EQ(in, !beaten);
        }
    }
}

TEST(Classify, TableOneCensusOnStrictGames) {
    FamilyCensus c = census(strict_universe());
    EXPECT_EQ(c.total(), 144);
    auto row = [&](Subfamily s) { return c.rows.at(s); };
    EXPECT_EQ(c.family(Family::WinWin).total(), 36);
    EXPECT_EQ(row(Subfamily::Harmonious).total(), 27);
    EXPECT_EQ(row(Subfamily::StagHunt).total(), 9);
    EXPECT_EQ(c.family(Family::Biased).total(), 44);
    EXPECT_EQ(row(Subfamily::Altruistic).total(), 12);
    EXPECT_EQ(row(Subfamily::AltruisticSelfServing).total(), 12);
    EXPECT_EQ(row(Subfamily::SelfServing).total(), 12);
    EXPECT_EQ(row(Subfamily::BattleOfSexes).total(), 8);
    EXPECT_EQ(c.family(Family::SecondBest).total(), 12);
    EXPECT_EQ(c.family(Family::Unfair).total(), 19);
    EXPECT_EQ(row(Subfamily::Chicken).total(), 1);
    EXPECT_EQ(row(Subfamily::Winner).total(), 6);
    EXPECT_EQ(row(Subfamily::WinLose).total(), 6);
    EXPECT_EQ(row(Subfamily::Loser).total(), 6);
    EXPECT_EQ(c.family(Family::PdFamily).total(), 15);
    EXPECT_EQ(row(Subfamily::PrisonersDilemma).total(), 3);
    EXPECT_EQ(row(Subfamily::Alibi).total(), 4);
    EXPECT_EQ(row(Subfamily::Tragic).total(), 8);
    EXPECT_EQ(c.family(Family::Cyclic).total(), 18);
    std::vector<int> sym;
    for (Family f : {Family::WinWin, Family::Biased, Family::SecondBest, Family::Unfair, Family::PdFamily,
                     Family::Cyclic})
        sym.push_back(c.family(f).symmetric);
    EXPECT_EQ(sym, (std::vector<int>{6, 2, 2, 1, 1, 0}));
}

TEST(Classify, CensusMatchesOracleOnCompleteSet) {
    std::map<std::string, int> want;
    for (const Game& g : atlas().games) ++want[oracle::subfamily(oracle::from_encoding(format_game(g)))];
    FamilyCensus c = census(complete_universe());
    EXPECT_EQ(c.total(), 1413);
    for (Subfamily s : all_subfamilies) EXPECT_EQ(c.rows.at(s).total(), want[subfamily_name(s)]) << subfamily_name(s);
}

TEST(Classify, SpecialSetsOnStrictGames) {
    SpecialSets s = special_sets(strict_universe());
    EXPECT_EQ(s.fixed_rank_sum.size(), 6u);
    EXPECT_EQ(s.pareto_deficient_equilibrium.size(), 7u);
    EXPECT_EQ(s.ne_at_least_second_best.size(), 92u);
    std::set<std::string> fixed;
    for (const Game& g : s.fixed_rank_sum) fixed.insert(name_of(g));
    EXPECT_EQ(fixed, (std::set<std::string>{"sk-sd", "sd-sk", "su-sm", "sm-su", "sa-sr", "sr-sa"}));
}

// Inducement oracle: for each unilateral switch that strictly improves the mover,
// the sign of the other player's change.
TEST(Classify, InducementSetsMatchOracle) {
    auto sign_set = [](const oracle::Matrix& m, int p) {
        std::set<int> signs;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                int r2 = p == 0 ? 1 - r : r, c2 = p == 0 ? c : 1 - c;
                if (m[r2][c2][p] > m[r][c][p]) {
                    int d = m[r2][c2][1 - p] - m[r][c][1 - p];
                    signs.insert(d > 0 ? 1 : d < 0 ? -1 : 0);
                }
            }
        return signs;
    };
    int conflict = 0, coop = 0, jh = 0;
    for (const Game& g : strict_universe()) {
        oracle::Matrix m = oracle::from_encoding(format_game(g));
        auto a = sign_set(m, 0), b = sign_set(m, 1);
        std::set<int> neg{-1}, pos{1};
        conflict += a == neg && b == neg;
        coop += a == pos && b == pos;
        jh += (a == pos && b == neg) || (a == neg && b == pos);
    }
    SpecialSets s = special_sets(strict_universe());
    EXPECT_EQ(static_cast<int>(s.pure_conflict.size()), conflict);
    EXPECT_EQ(static_cast<int>(s.pure_cooperation.size()), coop);
    EXPECT_EQ(static_cast<int>(s.jekyll_hyde_type.size()), jh);
    std::set<std::string> jh_names;
    for (const Game& g : s.jekyll_hyde_type) jh_names.insert(name_of(g));
    for (const char* n : {"sd-sn", "sd-sh", "sk-sn", "sk-sh"}) EXPECT_TRUE(jh_names.count(n)) << n;
}

TEST(Classify, MixedEquilibriumOfChicken) {
    MixedEquilibrium m = mixed_equilibrium(parse_game("2314/4312"));
    // Row indifferent: q*2 + (1-q)*3 = q*1 + (1-q)*4 gives q = 1/2.
    EXPECT_EQ(m.col_left, Rational(1, 2));
    EXPECT_EQ(m.row_up, Rational(1, 2));
    EXPECT_EQ(m.row_value, Rational(5, 2));
    EXPECT_EQ(m.row_value.decimal(), "2.5");
    EXPECT_TRUE(m.cardinal_caveat);
    EXPECT_THROW(mixed_equilibrium(parse_game("1324/4321")), no_interior_equilibrium);
}

TEST(Classify, MixedEquilibriumSatisfiesIndifference) {
    for (const Game& g : atlas().games) {
        try {
            MixedEquilibrium m = mixed_equilibrium(g);
            double q = m.col_left.value(), p = m.row_up.value();
            double up = q * g.row[0] + (1 - q) * g.row[1], down = q * g.row[2] + (1 - q) * g.row[3];
            double left = p * g.col[0] + (1 - p) * g.col[2], right = p * g.col[1] + (1 - p) * g.col[3];
            EXPECT_NEAR(up, down, 1e-12);
            EXPECT_NEAR(left, right, 1e-12);
            EXPECT_GT(p, 0);
            EXPECT_LT(p, 1);
        } catch (const no_interior_equilibrium&) {
        }
    }
}

TEST(Classify, RandomPayoffsAreUniformOverStrictGames) {
    const long n = 144000;
    auto freq = sample_random_games(n, 20260101);
    long strict_total = 0;
    double p = 1.0 / 144, sigma = std::sqrt(n * p * (1 - p));
    for (const Game& g : strict_universe()) {
        long f = freq.count(g) ? freq.at(g) : 0;
        strict_total += f;
        EXPECT_LT(std::abs(f - n * p), 5 * sigma) << format_game(g);
    }
    EXPECT_EQ(strict_total, n);
    EXPECT_EQ(freq.size(), 144u);
}
