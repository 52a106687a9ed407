#pragma once

#include <gtopo/core.hpp>

#include <map>
#include <set>
#include <sstream>

namespace gtopo {

enum class Equivalence : std::uint8_t { None, Interchange, InterchangePlusReflection };

inline const char* equivalence_name(Equivalence e) {
    switch (e) {
        case Equivalence::None: return "none";
        case Equivalence::Interchange: return "interchange";
        case Equivalence::InterchangePlusReflection: return "reflection";
    }
    return "?";
}

inline std::optional<Equivalence> parse_equivalence(std::string_view s) {
    if (s == "none") return Equivalence::None;
    if (s == "interchange") return Equivalence::Interchange;
    if (s == "reflection" || s == "interchange+reflection") return Equivalence::InterchangePlusReflection;
    return std::nullopt;
}

// All 75 player patterns, grouped by class in class order, ascending within a class.
inline const std::vector<Pattern>& all_patterns() {
    static const std::vector<Pattern> patterns = [] {
        std::vector<Pattern> out;
        for (TieClass c : all_tie_classes) {
            for (int code = 0; code < 625; ++code) {
                Ranks r{};
                int x = code;
                for (int k = 3; k >= 0; --k, x /= 5) r[k] = static_cast<std::uint8_t>(x % 5);
                if (class_of_ranks(r) == c) out.emplace_back(r);
            }
        }
        return out;
    }();
    return patterns;
}

inline std::vector<Pattern> patterns_of(TieClass c) {
    std::vector<Pattern> out;
    for (const Pattern& p : all_patterns())
        if (p.tie_class() == c) out.push_back(p);
    return out;
}

struct ClassFilter {
    TieClass row;
    TieClass col;
};

inline std::vector<Game> raw_games(std::optional<ClassFilter> filter = std::nullopt) {
    std::vector<Game> out;
    for (const Pattern& r : all_patterns()) {
        if (filter && r.tie_class() != filter->row) continue;
        for (const Pattern& c : all_patterns()) {
            if (filter && c.tie_class() != filter->col) continue;
            out.push_back({r, c});
        }
    }
    return out;
}

// Representative under the chosen group. For reflection the choice is the
// lesser of the interchange representatives of the game and its transpose.
inline Game representative(const Game& g, Equivalence e) {
    switch (e) {
        case Equivalence::None: return g;
        case Equivalence::Interchange: return canonical(g);
        case Equivalence::InterchangePlusReflection:
            return std::min(canonical(g), canonical(apply_transform(g, Transpose)));
    }
    return g;
}

// A filter on (row class, column class) is closed under the interchange group
// but not under reflection unless both classes agree; reflection counting with
// a filter therefore uses the filter and its mirror.
inline bool passes(const Game& g, std::optional<ClassFilter> f, Equivalence e) {
    if (!f) return true;
    TieClass r = g.row.tie_class(), c = g.col.tie_class();
    if (r == f->row && c == f->col) return true;
    return e == Equivalence::InterchangePlusReflection && r == f->col && c == f->row;
}

inline std::vector<Game> enumerate_games(std::optional<ClassFilter> filter = std::nullopt,
                                         Equivalence e = Equivalence::Interchange) {
    std::set<Game> reps;
    for (const Game& g : raw_games()) {
        if (!passes(g, filter, e)) continue;
        reps.insert(representative(g, e));
    }
    return {reps.begin(), reps.end()};
}

inline std::vector<Transform> group_elements(Equivalence e) {
    switch (e) {
        case Equivalence::None: return {Identity};
        case Equivalence::Interchange: return {interchange_group.begin(), interchange_group.end()};
        case Equivalence::InterchangePlusReflection: {
            auto g = full_group();
            return {g.begin(), g.end()};
        }
    }
    return {};
}

// Burnside: average number of fixed points over the group. No orbit is built.
inline long orbit_count_oracle(Equivalence e, std::optional<ClassFilter> filter = std::nullopt) {
    auto group = group_elements(e);
    long fixed = 0;
    for (const Transform& t : group)
        for (const Game& g : raw_games())
            if (passes(g, filter, e) && apply_transform(g, t) == g) ++fixed;
    return fixed / static_cast<long>(group.size());
}

struct SymmetricEntry {
    std::string code;
    Pattern pattern;
    Game game;          // canonical symmetric game
    std::string same_as;  // primary code of the listing entry naming the same game, if any
    std::string names;
};

// Listing of the symmetric games by class; within each class the order follows
// the symmetric table (D C B R M K then N U A O P H). Codes sharing a game point
// at the first code listed for it.
inline const std::vector<SymmetricEntry>& symmetric_listing() {
    static const std::vector<SymmetricEntry> listing = [] {
        struct Raw {
            const char* code;
            const char* pattern;
            const char* names;
        };
        static const Raw raw[] = {
            {"sd", "1324", "Prisoner's Dilemma"},
            {"sc", "2314", "Chicken"},
            {"sb", "3214", "Leader"},
            {"sr", "3124", "Hero"},
            {"sm", "2134", "Compromise"},
            {"sk", "1234", "Deadlock"},
            {"sn", "2413", "No Conflict"},
            {"su", "1423", "Stag Hunt"},
            {"sa", "1432", "Assurance"},
            {"so", "2431", "Coordination"},
            {"sp", "3421", "Peace"},
            {"sh", "3412", "Harmony"},
            {"ld", "1314", "Low Dilemma"},
            {"lb", "3114", "Low Battle"},
            {"lk", "1134", "Low Lock"},
            {"ln", "1413", "Low Concord"},
            {"lo", "1431", "Low Coordination"},
            {"lh", "3411", "Low Harmony"},
            {"mb", "3314", "Middle Battle"},
            {"mm", "3134", "Middle Compromise"},
            {"mk", "1334", "Midlock"},
            {"mu", "1433", "Middle Hunt"},
            {"mp", "3431", "Middle Peace"},
            {"mh", "3413", "Middle Harmony"},
            {"hd", "1424", "High Dilemma"},
            {"hc", "2414", "High Chicken"},
            {"hb", "4214", "High Battle"},
            {"hr", "4124", "High Hero"},
            {"hm", "2144", "High Compromise"},
            {"hk", "1244", "High Lock"},
            {"hn", "2414", "High Concord"},
            {"hu", "1424", "High Hunt"},
            {"ha", "1442", "High Assurance"},
            {"ho", "2441", "High Coordination"},
            {"hp", "4421", "High Peace"},
            {"hh", "4412", "High Harmony"},
            {"tk", "1444", "Triple Lock"},
            {"th", "4414", "Triple Harmony"},
            {"dd", "1414", "Double Dilemma"},
            {"db", "4114", "Double Battle"},
            {"dk", "1144", "Double Lock"},
            {"du", "1414", "Double Hunt"},
            {"do", "1441", "Double Coordination"},
            {"dh", "4411", "Double Harmony"},
            {"bd", "1114", "Basic Dilemma"},
            {"bh", "1411", "Basic Harmony"},
            {"ze", "0000", "Zero"},
        };
        std::vector<SymmetricEntry> out;
        for (const Raw& x : raw) {
            Pattern p = parse_pattern(x.pattern, "symmetric");
            Game g = canonical(Game{p, mirror(p)});
            std::string same;
            for (const SymmetricEntry& e : out)
                if (e.game == g) {
                    same = e.same_as.empty() ? e.code : e.same_as;
                    break;
                }
            out.push_back({x.code, p, g, same, x.names});
        }
        return out;
    }();
    return listing;
}

inline std::vector<SymmetricEntry> symmetric_catalog() {
    std::vector<SymmetricEntry> out;
    for (const SymmetricEntry& e : symmetric_listing())
        if (e.same_as.empty()) out.push_back(e);
    return out;
}

inline const SymmetricEntry* find_code(std::string_view code) {
    for (const SymmetricEntry& e : symmetric_listing())
        if (e.code == code) return &e;
    return nullptr;
}

struct Atlas {
    Equivalence equivalence = Equivalence::Interchange;
    std::vector<Game> games;
    std::map<Game, int> index;
    std::map<TieClass, std::vector<int>> by_row_class;
    std::vector<int> strict;
    std::vector<int> symmetric;

    int size() const { return static_cast<int>(games.size()); }

    std::optional<int> find(const Game& g) const {
        auto it = index.find(representative(g, equivalence));
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    int id_of(const Game& g) const {
        auto id = find(g);
        if (!id) throw error("game not in atlas: " + format_game(g));
        return *id;
    }
};

inline Atlas build_atlas(Equivalence e = Equivalence::Interchange) {
    Atlas a;
    a.equivalence = e;
    a.games = enumerate_games(std::nullopt, e);
    for (int i = 0; i < a.size(); ++i) {
        const Game& g = a.games[i];
        a.index[g] = i;
        a.by_row_class[g.row.tie_class()].push_back(i);
        if (g.strict()) a.strict.push_back(i);
        if (is_symmetric(g)) a.symmetric.push_back(i);
    }
    return a;
}

// The shared interchange atlas used by the other modules.
inline const Atlas& atlas() {
    static const Atlas a = build_atlas(Equivalence::Interchange);
    return a;
}

inline std::string class_pair(const Game& g) {
    return std::string(tie_class_name(g.row.tie_class())) + "-" + tie_class_name(g.col.tie_class());
}

}  // namespace gtopo
