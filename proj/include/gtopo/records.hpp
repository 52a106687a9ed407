#pragma once

#include <gtopo/chart.hpp>
#include <gtopo/classify.hpp>
#include <gtopo/naming.hpp>
#include <gtopo/topology.hpp>

#include <json.hpp>

namespace gtopo {

using json = nlohmann::ordered_json;

// Goals: "family:win-win", "subfamily:stag-hunt", "game:<encoding or name>",
// "layer:L3". A bare family name is accepted as a family goal.
inline Goal parse_goal(std::string_view text) {
    auto colon = text.find(':');
    std::string_view kind = colon == std::string_view::npos ? "family" : text.substr(0, colon);
    std::string_view arg = colon == std::string_view::npos ? text : text.substr(colon + 1);
    Goal g;
    if (kind == "family") {
        auto f = parse_family(arg);
        if (!f) throw parse_error("unknown family: " + std::string(arg));
        g.kind = Goal::Kind::Family;
        g.family = *f;
    } else if (kind == "subfamily") {
        auto s = parse_subfamily(arg);
        if (!s) throw parse_error("unknown subfamily: " + std::string(arg));
        g.kind = Goal::Kind::Subfamily;
        g.subfamily = *s;
    } else if (kind == "game") {
        auto x = resolve_game(arg);
        if (!x) throw unknown_code("unknown game: " + std::string(arg));
        g.kind = Goal::Kind::Game;
        g.game = *x;
    } else if (kind == "layer") {
        auto l = parse_layer(arg);
        if (!l) throw parse_error("unknown layer: " + std::string(arg));
        g.kind = Goal::Kind::Layer;
        g.layer = *l;
    } else {
        throw parse_error("unknown goal kind: " + std::string(kind));
    }
    return g;
}

inline json cells_json(const CellSet& cells) {
    json a = json::array();
    for (int c : cells) a.push_back(cell_name(c));
    return a;
}

inline json game_ref(const Game& g) {
    Game c = canonical(g);
    return {{"id", atlas().id_of(c)}, {"encoding", format_game(c)}, {"coordinate_name", name_of(c)}};
}

inline json classification_json(const Game& g) {
    Classification c = classify(g);
    auto dom = [](const Dominance& d, Player p) -> json {
        if (!d.dominant()) return nullptr;
        const char* s = p == Player::Row ? (d.strategy ? "down" : "up") : (d.strategy ? "right" : "left");
        return {{"kind", d.kind == DominanceKind::Strict ? "strict" : "weak"}, {"strategy", s}};
    };
    auto strategies = [](const std::vector<int>& v, Player p) {
        json a = json::array();
        for (int s : v) a.push_back(p == Player::Row ? (s ? "down" : "up") : (s ? "right" : "left"));
        return a;
    };
    json mixed = nullptr;
    try {
        MixedEquilibrium m = mixed_equilibrium(g);
        mixed = {{"row_up", m.row_up.decimal()},
                 {"column_left", m.col_left.decimal()},
                 {"row_value", m.row_value.decimal()},
                 {"column_value", m.col_value.decimal()},
                 {"cardinal_caveat", m.cardinal_caveat}};
    } catch (const no_interior_equilibrium&) {
    }
    json payoffs = json::array();
    for (int k = 0; k < 4; ++k) payoffs.push_back({{"cell", cell_name(k)}, {"row", g.row[k]}, {"column", g.col[k]}});
    return {
        {"family", family_name(c.family)},
        {"subfamily", subfamily_name(c.subfamily)},
        {"payoffs", payoffs},
        {"nash_weak", cells_json(c.nash_weak)},
        {"nash_strict", cells_json(c.nash_strict)},
        {"dominance", {{"row", dom(c.dominance[0], Player::Row)}, {"column", dom(c.dominance[1], Player::Column)}}},
        {"maximin",
         {{"row", strategies(c.maximin[0], Player::Row)}, {"column", strategies(c.maximin[1], Player::Column)}}},
        {"pareto_optimal", cells_json(c.pareto_optimal)},
        {"mutually_pareto_optimal", cells_json(c.mutually_pareto_optimal)},
        {"degenerate", {{"row", c.degenerate[0]}, {"column", c.degenerate[1]}}},
        {"fixed_rank_sum", c.fixed_rank_sum},
        {"inducement", {{"row", inducement_name(c.inducement[0])}, {"column", inducement_name(c.inducement[1])}}},
        {"mixed", mixed},
    };
}

inline json neighbors_json(const Game& g, const MoveSet& ms) {
    json a = json::array();
    for (auto& [m, h] : neighbors(g, ms)) {
        json n = game_ref(h);
        n["move"] = move_text(m);
        a.push_back(n);
    }
    return a;
}

inline json game_record(const Game& game, const MoveSet& ms = {}) {
    Game g = canonical(game);
    auto ls = layers_of(g);
    json layers = json::array();
    for (Layer l : ls) layers.push_back(layer_name(l));
    return {
        {"id", atlas().id_of(g)},
        {"encoding", format_game(g)},
        {"coordinate_name", name_of(g)},
        {"common_names", common_names(g)},
        {"sources", catalog_tags(g)},
        {"tie_classes", {tie_class_name(g.row.tie_class()), tie_class_name(g.col.tie_class())}},
        {"layer", ls.size() == 1 ? json(layer_name(ls.front())) : json(nullptr)},
        {"layers", layers},
        {"symmetric", is_symmetric(g)},
        {"classification", classification_json(g)},
        {"moves", move_set_text(ms)},
        {"neighbors", neighbors_json(g, ms)},
    };
}

inline json path_json(const Path& p, const Goal& goal, const MoveSet& ms, CostModel cm) {
    json steps = json::array();
    for (const PathStep& s : p.steps) {
        json j = game_ref(s.game);
        j["move"] = move_text(s.move);
        steps.push_back(j);
    }
    return {
        {"from", game_ref(p.start)},
        {"goal", goal_text(goal)},
        {"moves", move_set_text(ms)},
        {"costs", cm == CostModel::Uniform ? "uniform" : "graded"},
        {"length", p.steps.size()},
        {"cost", p.cost},
        {"steps", steps},
        {"end", game_ref(p.end())},
    };
}

inline json census_json(const std::vector<Game>& universe, const std::string& set) {
    FamilyCensus c = census(universe);
    json rows = json::array();
    for (Subfamily s : all_subfamilies) {
        const CensusRow& r = c.rows.at(s);
        rows.push_back({{"family", family_name(family_of(s))},
                        {"subfamily", subfamily_name(s)},
                        {"symmetric", r.symmetric},
                        {"asymmetric", r.asymmetric},
                        {"total", r.total()}});
    }
    json fams = json::array();
    for (Family f : all_families) {
        CensusRow r = c.family(f);
        fams.push_back(
            {{"family", family_name(f)}, {"symmetric", r.symmetric}, {"asymmetric", r.asymmetric}, {"total", r.total()}});
    }
    return {{"set", set}, {"total", c.total()}, {"families", fams}, {"rows", rows}};
}

inline const std::vector<Game>& census_set(std::string_view set) {
    static const std::vector<Game> strict = strict_universe();
    if (set == "strict") return strict;
    if (set == "complete") return complete_universe();
    throw parse_error("set must be strict or complete");
}

// Startup self-check on the embedded atlas.
inline void self_check() {
    const Atlas& a = atlas();
    if (a.size() != 1413 || a.strict.size() != 144 || symmetric_catalog().size() != 38)
        throw std::logic_error("atlas self-check failed");
}

}  // namespace gtopo
