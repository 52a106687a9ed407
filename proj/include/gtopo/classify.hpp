#pragma once

#include <gtopo/atlas.hpp>

#include <map>
#include <numeric>
#include <random>

namespace gtopo {

enum class DominanceKind : std::uint8_t { None, Weak, Strict };

struct Dominance {
    DominanceKind kind = DominanceKind::None;
    int strategy = -1;  // 0 = up/left, 1 = down/right

    bool dominant() const { return kind != DominanceKind::None; }
    friend bool operator==(const Dominance&, const Dominance&) = default;
};

enum class Inducement : std::uint8_t { AlwaysPositive, AlwaysNegative, Mixed };

inline const char* inducement_name(Inducement i) {
    switch (i) {
        case Inducement::AlwaysPositive: return "always-positive";
        case Inducement::AlwaysNegative: return "always-negative";
        case Inducement::Mixed: return "mixed";
    }
    return "?";
}

enum class Family : std::uint8_t { WinWin, Biased, SecondBest, Unfair, PdFamily, Cyclic, Indeterminate };

enum class Subfamily : std::uint8_t {
    Harmonious,
    StagHunt,
    Altruistic,
    AltruisticSelfServing,
    SelfServing,
    BattleOfSexes,
    SecondBest,
    Chicken,
    Winner,
    WinLose,
    Loser,
    PrisonersDilemma,
    Alibi,
    Tragic,
    Cyclic,
    Degenerate,
};

inline constexpr std::array<Family, 7> all_families = {Family::WinWin,   Family::Biased, Family::SecondBest,
                                                       Family::Unfair,   Family::PdFamily, Family::Cyclic,
                                                       Family::Indeterminate};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::WinWin: return "win-win";
        case Family::Biased: return "biased";
        case Family::SecondBest: return "second-best";
        case Family::Unfair: return "unfair";
        case Family::PdFamily: return "pd-family";
        case Family::Cyclic: return "cyclic";
        case Family::Indeterminate: return "indeterminate";
    }
    return "?";
}

inline const char* subfamily_name(Subfamily s) {
    switch (s) {
        case Subfamily::Harmonious: return "harmonious";
        case Subfamily::StagHunt: return "stag-hunt";
        case Subfamily::Altruistic: return "altruistic";
        case Subfamily::AltruisticSelfServing: return "altruistic-self-serving";
        case Subfamily::SelfServing: return "self-serving";
        case Subfamily::BattleOfSexes: return "battle-of-the-sexes";
        case Subfamily::SecondBest: return "second-best";
        case Subfamily::Chicken: return "chicken";
        case Subfamily::Winner: return "winner";
        case Subfamily::WinLose: return "win-lose";
        case Subfamily::Loser: return "loser";
        case Subfamily::PrisonersDilemma: return "prisoners-dilemma";
        case Subfamily::Alibi: return "alibi";
        case Subfamily::Tragic: return "tragic";
        case Subfamily::Cyclic: return "cyclic";
        case Subfamily::Degenerate: return "degenerate";
    }
    return "?";
}

inline Family family_of(Subfamily s) {
    switch (s) {
        case Subfamily::Harmonious:
        case Subfamily::StagHunt: return Family::WinWin;
        case Subfamily::Altruistic:
        case Subfamily::AltruisticSelfServing:
        case Subfamily::SelfServing:
        case Subfamily::BattleOfSexes: return Family::Biased;
        case Subfamily::SecondBest: return Family::SecondBest;
        case Subfamily::Chicken:
        case Subfamily::Winner:
        case Subfamily::WinLose:
        case Subfamily::Loser: return Family::Unfair;
        case Subfamily::PrisonersDilemma:
        case Subfamily::Alibi:
        case Subfamily::Tragic: return Family::PdFamily;
        case Subfamily::Cyclic: return Family::Cyclic;
        case Subfamily::Degenerate: return Family::Indeterminate;
    }
    return Family::Indeterminate;
}

// Table 1 row order.
inline constexpr std::array<Subfamily, 16> all_subfamilies = {
    Subfamily::Harmonious,    Subfamily::StagHunt,  Subfamily::Altruistic,      Subfamily::AltruisticSelfServing,
    Subfamily::SelfServing,   Subfamily::BattleOfSexes, Subfamily::SecondBest,  Subfamily::Chicken,
    Subfamily::Winner,        Subfamily::WinLose,   Subfamily::Loser,           Subfamily::PrisonersDilemma,
    Subfamily::Alibi,         Subfamily::Tragic,    Subfamily::Cyclic,          Subfamily::Degenerate};

inline int subfamily_rank(Subfamily s) {
    return static_cast<int>(std::find(all_subfamilies.begin(), all_subfamilies.end(), s) - all_subfamilies.begin());
}

inline std::optional<Family> parse_family(std::string_view s) {
    for (Family f : all_families)
        if (s == family_name(f)) return f;
    if (s == "winwin") return Family::WinWin;
    if (s == "pd") return Family::PdFamily;
    return std::nullopt;
}

inline std::optional<Subfamily> parse_subfamily(std::string_view s) {
    for (Subfamily f : all_subfamilies)
        if (s == subfamily_name(f)) return f;
    return std::nullopt;
}

using CellSet = std::vector<int>;

struct Classification {
    CellSet nash_strict;
    CellSet nash_weak;
    std::array<Dominance, 2> dominance;
    std::array<std::vector<int>, 2> maximin;
    CellSet pareto_optimal;
    CellSet mutually_pareto_optimal;
    std::array<bool, 2> degenerate{};
    bool fixed_rank_sum = false;
    std::array<Inducement, 2> inducement{};
    Family family = Family::Indeterminate;
    Subfamily subfamily = Subfamily::Degenerate;
};

// Own rank of a player when they pick `mine` and the opponent picks `theirs`.
inline int own(const Game& g, Player p, int mine, int theirs) {
    return p == Player::Row ? g.row[cell_index(mine, theirs)] : g.col[cell_index(theirs, mine)];
}
inline int cell_for(Player p, int mine, int theirs) {
    return p == Player::Row ? cell_index(mine, theirs) : cell_index(theirs, mine);
}
inline int strategy_of(Player p, int cell) { return p == Player::Row ? row_of(cell) : col_of(cell); }
inline Player other(Player p) { return p == Player::Row ? Player::Column : Player::Row; }

inline Dominance dominance(const Game& g, Player p) {
    for (int s = 0; s < 2; ++s) {
        int d0 = own(g, p, s, 0) - own(g, p, 1 - s, 0);
        int d1 = own(g, p, s, 1) - own(g, p, 1 - s, 1);
        if (d0 > 0 && d1 > 0) return {DominanceKind::Strict, s};
    }
    for (int s = 0; s < 2; ++s) {
        int d0 = own(g, p, s, 0) - own(g, p, 1 - s, 0);
        int d1 = own(g, p, s, 1) - own(g, p, 1 - s, 1);
        if (d0 >= 0 && d1 >= 0 && (d0 > 0 || d1 > 0)) return {DominanceKind::Weak, s};
    }
    return {};
}

inline bool is_degenerate(const Game& g, Player p) {
    return own(g, p, 0, 0) == own(g, p, 1, 0) && own(g, p, 0, 1) == own(g, p, 1, 1);
}

inline CellSet weak_nash(const Game& g) {
    CellSet out;
    for (int k = 0; k < 4; ++k) {
        int i = row_of(k), j = col_of(k);
        if (g.row[k] >= g.row[cell_index(1 - i, j)] && g.col[k] >= g.col[cell_index(i, 1 - j)]) out.push_back(k);
    }
    return out;
}

inline CellSet strict_nash(const Game& g) {
    CellSet out;
    for (int k = 0; k < 4; ++k) {
        int i = row_of(k), j = col_of(k);
        if (g.row[k] > g.row[cell_index(1 - i, j)] && g.col[k] > g.col[cell_index(i, 1 - j)]) out.push_back(k);
    }
    return out;
}

inline std::vector<int> maximin(const Game& g, Player p) {
    int best = -1;
    std::vector<int> out;
    for (int s = 0; s < 2; ++s) {
        int worst = std::min(own(g, p, s, 0), own(g, p, s, 1));
        if (worst > best) {
            best = worst;
            out = {s};
        } else if (worst == best) {
            out.push_back(s);
        }
    }
    return out;
}

inline CellSet pareto_optimal(const Game& g) {
    CellSet out;
    for (int k = 0; k < 4; ++k) {
        bool dominated = false;
        for (int m = 0; m < 4; ++m)
            if (g.row[m] >= g.row[k] && g.col[m] >= g.col[k] && (g.row[m] > g.row[k] || g.col[m] > g.col[k]))
                dominated = true;
        if (!dominated) out.push_back(k);
    }
    return out;
}

inline CellSet mutually_pareto_optimal(const Game& g) {
    CellSet out;
    for (int k = 0; k < 4; ++k) {
        bool dominated = false;
        for (int m = 0; m < 4; ++m)
            if (g.row[m] > g.row[k] && g.col[m] > g.col[k]) dominated = true;
        if (!dominated) out.push_back(k);
    }
    return out;
}

inline bool fixed_rank_sum(const Game& g) {
    int s = g.row[0] + g.col[0];
    for (int k = 1; k < 4; ++k)
        if (g.row[k] + g.col[k] != s) return false;
    return true;
}

// Sign of the other player's change over every switch that strictly improves
// the mover's own rank. No such switch, or a zero or mixed effect, is Mixed.
inline Inducement inducement(const Game& g, Player p) {
    bool pos = false, neg = false, flat = false, any = false;
    for (int theirs = 0; theirs < 2; ++theirs) {
        int a = own(g, p, 0, theirs), b = own(g, p, 1, theirs);
        if (a == b) continue;
        int lo = a < b ? 0 : 1;
        int from = cell_for(p, lo, theirs), to = cell_for(p, 1 - lo, theirs);
        const Pattern& o = g.of(other(p));
        int d = o[to] - o[from];
        any = true;
        if (d > 0) pos = true;
        else if (d < 0) neg = true;
        else flat = true;
    }
    if (any && pos && !neg && !flat) return Inducement::AlwaysPositive;
    if (any && neg && !pos && !flat) return Inducement::AlwaysNegative;
    return Inducement::Mixed;
}

namespace detail {

inline Family payoff_family(int a, int b) {
    int hi = std::max(a, b), lo = std::min(a, b);
    if (hi == 4 && lo == 4) return Family::WinWin;
    if (hi == 4 && lo == 3) return Family::Biased;
    if (hi == 3 && lo == 3) return Family::SecondBest;
    if (hi == 4) return Family::Unfair;
    return Family::PdFamily;
}

}  // namespace detail

inline Classification classify(const Game& g) {
    Classification c;
    c.nash_strict = strict_nash(g);
    c.nash_weak = weak_nash(g);
    c.pareto_optimal = pareto_optimal(g);
    c.mutually_pareto_optimal = mutually_pareto_optimal(g);
    c.fixed_rank_sum = fixed_rank_sum(g);
    for (Player p : {Player::Row, Player::Column}) {
        int i = static_cast<int>(p);
        c.dominance[i] = dominance(g, p);
        c.maximin[i] = maximin(g, p);
        c.degenerate[i] = is_degenerate(g, p);
        c.inducement[i] = inducement(g, p);
    }

    if (c.degenerate[0] || c.degenerate[1]) {
        c.subfamily = Subfamily::Degenerate;
    } else if (c.nash_weak.empty()) {
        c.subfamily = Subfamily::Cyclic;
    } else {
        // Best equilibrium: the first cell whose payoff pair ranks highest in family order.
        int k = c.nash_weak.front();
        for (int m : c.nash_weak)
            if (detail::payoff_family(g.row[m], g.col[m]) < detail::payoff_family(g.row[k], g.col[k])) k = m;
        int a = g.row[k], b = g.col[k];
        Family f = detail::payoff_family(a, b);
        bool many = c.nash_weak.size() > 1;
        bool rd = c.dominance[0].dominant(), cd = c.dominance[1].dominant();
        int dominant_gets = rd ? a : b;
        switch (f) {
            case Family::WinWin: c.subfamily = many ? Subfamily::StagHunt : Subfamily::Harmonious; break;
            case Family::Biased:
                c.subfamily = many         ? Subfamily::BattleOfSexes
                              : rd && cd   ? Subfamily::AltruisticSelfServing
                              : dominant_gets == 4 ? Subfamily::SelfServing
                                                   : Subfamily::Altruistic;
                break;
            case Family::SecondBest: c.subfamily = Subfamily::SecondBest; break;
            case Family::Unfair:
                c.subfamily = many         ? Subfamily::Chicken
                              : rd && cd   ? Subfamily::WinLose
                              : dominant_gets == 4 ? Subfamily::Winner
                                                   : Subfamily::Loser;
                break;
            default: {
                bool deficient = std::find(c.pareto_optimal.begin(), c.pareto_optimal.end(), k) ==
                                 c.pareto_optimal.end();
                c.subfamily = (a <= 2 && b <= 2) ? Subfamily::PrisonersDilemma
                              : deficient        ? Subfamily::Alibi
                                                 : Subfamily::Tragic;
            }
        }
    }
    c.family = family_of(c.subfamily);
    return c;
}

struct CensusRow {
    int symmetric = 0;
    int asymmetric = 0;
    int total() const { return symmetric + asymmetric; }
};

struct FamilyCensus {
    std::map<Subfamily, CensusRow> rows;

    CensusRow family(Family f) const {
        CensusRow out;
        for (auto& [s, r] : rows)
            if (family_of(s) == f) {
                out.symmetric += r.symmetric;
                out.asymmetric += r.asymmetric;
            }
        return out;
    }
    int total() const {
        int n = 0;
        for (auto& [s, r] : rows) n += r.total();
        return n;
    }
};

inline FamilyCensus census(const std::vector<Game>& universe) {
    FamilyCensus out;
    for (Subfamily s : all_subfamilies) out.rows[s] = {};
    for (const Game& g : universe) {
        CensusRow& r = out.rows[classify(g).subfamily];
        (is_symmetric(g) ? r.symmetric : r.asymmetric)++;
    }
    return out;
}

inline std::vector<Game> strict_universe() {
    std::vector<Game> out;
    for (int id : atlas().strict) out.push_back(atlas().games[id]);
    return out;
}

inline const std::vector<Game>& complete_universe() { return atlas().games; }

struct SpecialSets {
    std::vector<Game> fixed_rank_sum;
    std::vector<Game> pure_conflict;
    std::vector<Game> pure_cooperation;
    std::vector<Game> jekyll_hyde_type;
    std::vector<Game> pareto_deficient_equilibrium;
    std::vector<Game> ne_at_least_second_best;
};

inline SpecialSets special_sets(const std::vector<Game>& universe) {
    SpecialSets s;
    for (const Game& g : universe) {
        Classification c = classify(g);
        if (c.fixed_rank_sum) s.fixed_rank_sum.push_back(g);
        auto [ri, ci] = c.inducement;
        if (ri == Inducement::AlwaysNegative && ci == Inducement::AlwaysNegative) s.pure_conflict.push_back(g);
        if (ri == Inducement::AlwaysPositive && ci == Inducement::AlwaysPositive) s.pure_cooperation.push_back(g);
        if ((ri == Inducement::AlwaysPositive && ci == Inducement::AlwaysNegative) ||
            (ri == Inducement::AlwaysNegative && ci == Inducement::AlwaysPositive))
            s.jekyll_hyde_type.push_back(g);
        bool all_deficient = !c.nash_weak.empty();
        bool good = false;
        for (int k : c.nash_weak) {
            if (std::find(c.pareto_optimal.begin(), c.pareto_optimal.end(), k) != c.pareto_optimal.end())
                all_deficient = false;
            if (g.row[k] >= 3 && g.col[k] >= 3) good = true;
        }
        if (all_deficient) s.pareto_deficient_equilibrium.push_back(g);
        if (good) s.ne_at_least_second_best.push_back(g);
    }
    return s;
}

struct Rational {
    long num = 0;
    long den = 1;

    Rational() = default;
    Rational(long n, long d = 1) : num(n), den(d) {
        if (den < 0) num = -num, den = -den;
        long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) num /= g, den /= g;
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
    // Fixed-point decimal text; exact when the expansion terminates within `digits`.
    std::string decimal(int digits = 6) const {
        long n = num < 0 ? -num : num;
        std::string s = (num < 0 ? "-" : "") + std::to_string(n / den);
        long r = n % den;
        if (r == 0) return s;
        s += '.';
        for (int i = 0; i < digits && r != 0; ++i) {
            r *= 10;
            s += static_cast<char>('0' + r / den);
            r %= den;
        }
        return s;
    }
    friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
    friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
};

struct MixedEquilibrium {
    Rational row_up;     // probability Row plays up
    Rational col_left;   // probability Column plays left
    Rational row_value;  // expected rank for Row
    Rational col_value;
    bool cardinal_caveat = true;  // ranks are treated as cardinal values
};

// Interior mixed equilibrium from the two indifference conditions.
inline MixedEquilibrium mixed_equilibrium(const Game& g) {
    const Pattern& r = g.row;
    const Pattern& c = g.col;
    // Column's left probability q makes Row indifferent between up and down.
    long dr = (r[0] - r[2]) - (r[1] - r[3]);
    // Row's up probability p makes Column indifferent between left and right.
    long dc = (c[0] - c[1]) - (c[2] - c[3]);
    if (dr == 0 || dc == 0) throw no_interior_equilibrium("indifference system is singular");
    Rational q(r[3] - r[1], dr);
    Rational p(c[3] - c[2], dc);
    auto inside = [](Rational x) { return x.num > 0 && x.num < x.den; };
    if (!inside(p) || !inside(q)) throw no_interior_equilibrium("indifference point is not interior");
    Rational one(1);
    Rational vr = q * Rational(r[0]) + (one - q) * Rational(r[1]);
    Rational vc = p * Rational(c[0]) + (one - p) * Rational(c[2]);
    return {p, q, vr, vc, true};
}

// Draws n games of 8 independent uniform payoffs from a seeded mt19937_64 and
// tallies their canonical forms. Uniforms use the top 53 bits of each draw.
inline std::map<Game, long> sample_random_games(long n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::map<Game, long> freq;
    for (long i = 0; i < n; ++i) {
        std::array<double, 4> r{}, c{};
        for (double& x : r) x = uniform();
        for (double& x : c) x = uniform();
        ++freq[canonical(Game{normalize_payoffs(r), normalize_payoffs(c)})];
    }
    return freq;
}

}  // namespace gtopo
