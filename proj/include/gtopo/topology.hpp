#pragma once

#include <gtopo/classify.hpp>

#include <functional>
#include <queue>
#include <set>

namespace gtopo {

enum class MoveKind : std::uint8_t { Low12, Mid23, High34, X13, X24, X14, MakeTie, BreakTie };
enum class Level : std::uint8_t { Low, Mid, High };

inline const char* level_name(Level l) {
    switch (l) {
        case Level::Low: return "low";
        case Level::Mid: return "mid";
        case Level::High: return "high";
    }
    return "?";
}

struct SwapMove {
    Player player = Player::Row;
    MoveKind kind = MoveKind::Low12;
    Level level = Level::Low;  // tie moves only
    std::vector<int> target;   // break-tie only: cells moved to the upper part, ascending

    friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

inline bool operator<(const SwapMove& a, const SwapMove& b) {
    auto key = [](const SwapMove& m) {
        bool tie = m.kind == MoveKind::MakeTie || m.kind == MoveKind::BreakTie;
        return std::make_tuple(static_cast<int>(m.kind), tie ? static_cast<int>(m.level) : 0,
                                static_cast<int>(m.player), m.target);
    };
    return key(a) < key(b);
}

inline std::string move_text(const SwapMove& m) {
    std::string who = m.player == Player::Row ? "row" : "col";
    switch (m.kind) {
        case MoveKind::Low12: return who + ":low";
        case MoveKind::Mid23: return who + ":mid";
        case MoveKind::High34: return who + ":high";
        case MoveKind::X13: return who + ":x13";
        case MoveKind::X24: return who + ":x24";
        case MoveKind::X14: return who + ":x14";
        case MoveKind::MakeTie: return who + ":tie-" + level_name(m.level);
        case MoveKind::BreakTie: {
            std::string s = who + ":break-" + level_name(m.level) + ":";
            for (std::size_t i = 0; i < m.target.size(); ++i) s += (i ? "+" : "") + std::string(cell_name(m.target[i]));
            return s;
        }
    }
    return "?";
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline SwapMove parse_move(std::string_view text) {
    auto parts = split(text, ':');
    if (parts.size() < 2) throw parse_error("move must look like row:high or col:break-low:UL");
    SwapMove m;
    if (parts[0] == "row" || parts[0] == "r") m.player = Player::Row;
    else if (parts[0] == "col" || parts[0] == "column" || parts[0] == "c") m.player = Player::Column;
    else throw parse_error("unknown player in move: " + parts[0]);
    const std::string& k = parts[1];
    auto level = [&](std::string_view l) {
        if (l == "low") return Level::Low;
        if (l == "mid" || l == "middle") return Level::Mid;
        if (l == "high") return Level::High;
        throw parse_error("unknown tie level: " + std::string(l));
    };
    if (k == "low") m.kind = MoveKind::Low12;
    else if (k == "mid") m.kind = MoveKind::Mid23;
    else if (k == "high") m.kind = MoveKind::High34;
    else if (k == "x13") m.kind = MoveKind::X13;
    else if (k == "x24") m.kind = MoveKind::X24;
    else if (k == "x14") m.kind = MoveKind::X14;
    else if (k.rfind("tie-", 0) == 0) {
        m.kind = MoveKind::MakeTie;
        m.level = level(std::string_view(k).substr(4));
    } else if (k.rfind("break-", 0) == 0) {
        m.kind = MoveKind::BreakTie;
        m.level = level(std::string_view(k).substr(6));
        if (parts.size() < 3) throw parse_error("break-tie needs target cells, e.g. row:break-low:UL");
        for (const std::string& c : split(parts[2], '+')) {
            auto cell = parse_cell(c);
            if (!cell) throw parse_error("unknown cell: " + c);
            m.target.push_back(*cell);
        }
        std::sort(m.target.begin(), m.target.end());
    } else {
        throw parse_error("unknown move kind: " + k);
    }
    if (m.kind != MoveKind::BreakTie && parts.size() > 2) throw parse_error("unexpected move suffix");
    return m;
}

// Ranks exchanged by a rank swap.
inline std::pair<int, int> swap_ranks(MoveKind k) {
    switch (k) {
        case MoveKind::Low12: return {1, 2};
        case MoveKind::Mid23: return {2, 3};
        case MoveKind::High34: return {3, 4};
        case MoveKind::X13: return {1, 3};
        case MoveKind::X24: return {2, 4};
        case MoveKind::X14: return {1, 4};
        default: return {0, 0};
    }
}

namespace detail {

// Weak-order blocks of a pattern: cells grouped by rank, lowest first.
inline std::vector<std::vector<int>> blocks(const Pattern& p) {
    std::map<int, std::vector<int>> by;
    for (int k = 0; k < 4; ++k) by[p[k]].push_back(k);
    std::vector<std::vector<int>> out;
    for (auto& [r, cells] : by) out.push_back(cells);
    return out;
}

inline Pattern from_blocks(const std::vector<std::vector<int>>& bl) {
    std::vector<int> sizes;
    std::array<int, 4> block_of{};
    for (std::size_t b = 0; b < bl.size(); ++b) {
        sizes.push_back(static_cast<int>(bl[b].size()));
        for (int c : bl[b]) block_of[c] = static_cast<int>(b);
    }
    return Pattern(ranks_for_blocks(sizes, block_of));
}

// Index of the block holding sorted position pos (1-based).
inline int block_at(const std::vector<std::vector<int>>& bl, int pos) {
    int seen = 0;
    for (std::size_t b = 0; b < bl.size(); ++b) {
        seen += static_cast<int>(bl[b].size());
        if (pos <= seen) return static_cast<int>(b);
    }
    return -1;
}

inline int boundary(Level l) { return static_cast<int>(l) + 1; }

}  // namespace detail

// Pattern-level move; throws when the move does not apply.
inline Pattern apply_to_pattern(const Pattern& p, const SwapMove& m) {
    if (m.kind == MoveKind::MakeTie || m.kind == MoveKind::BreakTie) {
        auto bl = detail::blocks(p);
        int k = detail::boundary(m.level);
        int lo = detail::block_at(bl, k), hi = detail::block_at(bl, k + 1);
        if (m.kind == MoveKind::MakeTie) {
            if (lo == hi)
                throw move_not_applicable(std::string("ranks at the ") + level_name(m.level) +
                                          " level are already tied");
            bl[lo].insert(bl[lo].end(), bl[hi].begin(), bl[hi].end());
            bl.erase(bl.begin() + hi);
            return detail::from_blocks(bl);
        }
        if (lo != hi)
            throw move_not_applicable(std::string("no tie spans the ") + level_name(m.level) + " level");
        int before = 0;
        for (int b = 0; b < lo; ++b) before += static_cast<int>(bl[b].size());
        std::vector<int> block = bl[lo];
        int lower = k - before;
        int upper = static_cast<int>(block.size()) - lower;
        std::vector<int> target = m.target;
        std::sort(target.begin(), target.end());
        for (int c : target)
            if (std::find(block.begin(), block.end(), c) == block.end())
                throw invalid_target(std::string("cell ") + cell_name(c) + " is not in the tie");
        if (std::adjacent_find(target.begin(), target.end()) != target.end())
            throw invalid_target("target repeats a cell");
        std::vector<int> up;
        if (static_cast<int>(target.size()) == upper) {
            up = target;
        } else if (static_cast<int>(target.size()) == lower) {
            // A target of the lower part's size names the cells left behind.
            for (int c : block)
                if (std::find(target.begin(), target.end(), c) == target.end()) up.push_back(c);
        } else {
            throw invalid_target("target must name " + std::to_string(upper) + " cell(s) of the tie");
        }
        std::vector<int> down;
        for (int c : block)
            if (std::find(up.begin(), up.end(), c) == up.end()) down.push_back(c);
        bl[lo] = down;
        bl.insert(bl.begin() + lo + 1, up);
        return detail::from_blocks(bl);
    }
    auto [a, b] = swap_ranks(m.kind);
    int na = p.count(a), nb = p.count(b);
    if (na == 0 || nb == 0)
        throw move_not_applicable("rank " + std::to_string(na == 0 ? a : b) + " is not in the pattern");
    if (na != nb) throw move_not_applicable("ranks " + std::to_string(a) + " and " + std::to_string(b) +
                                            " cover different numbers of cells");
    Ranks r = p.r;
    for (auto& x : r) x = x == a ? b : x == b ? a : x;
    return Pattern(r);
}

// Applies the move in the game's given orientation and returns the canonical result.
inline Game apply_swap(const Game& g, const SwapMove& m) {
    Game out = g;
    out.of(m.player) = apply_to_pattern(g.of(m.player), m);
    return canonical(out);
}

inline Game make_tie(const Game& g, Player p, Level l) { return apply_swap(g, {p, MoveKind::MakeTie, l, {}}); }

inline Game break_tie(const Game& g, Player p, Level l, std::vector<int> target) {
    std::sort(target.begin(), target.end());
    return apply_swap(g, {p, MoveKind::BreakTie, l, target});
}

struct MoveSet {
    bool adjacent = true;
    bool nonadjacent = false;
    bool ties = false;  // make-tie and break-tie

    friend bool operator==(const MoveSet&, const MoveSet&) = default;
};

inline MoveSet parse_move_set(std::string_view s) {
    MoveSet m{false, false, false};
    for (const std::string& part : split(s, ',')) {
        if (part == "adjacent") m.adjacent = true;
        else if (part == "nonadjacent") m.nonadjacent = true;
        else if (part == "ties" || part == "half") m.ties = true;
        else if (part == "all") m = {true, true, true};
        else throw parse_error("unknown move set: " + part);
    }
    return m;
}

inline std::string move_set_text(const MoveSet& m) {
    std::vector<std::string> parts;
    if (m.adjacent) parts.push_back("adjacent");
    if (m.nonadjacent) parts.push_back("nonadjacent");
    if (m.ties) parts.push_back("ties");
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    return s;
}

// Every move the set could contain for this game, applicable or not, in move order.
inline std::vector<SwapMove> candidate_moves(const Game& g, const MoveSet& ms) {
    std::vector<SwapMove> out;
    auto add_kinds = [&](std::initializer_list<MoveKind> kinds) {
        for (MoveKind k : kinds)
            for (Player p : {Player::Row, Player::Column}) out.push_back({p, k, Level::Low, {}});
    };
    if (ms.adjacent) add_kinds({MoveKind::Low12, MoveKind::Mid23, MoveKind::High34});
    if (ms.nonadjacent) add_kinds({MoveKind::X13, MoveKind::X24, MoveKind::X14});
    if (ms.ties) {
        for (Level l : {Level::Low, Level::Mid, Level::High})
            for (Player p : {Player::Row, Player::Column}) out.push_back({p, MoveKind::MakeTie, l, {}});
        for (Level l : {Level::Low, Level::Mid, Level::High})
            for (Player p : {Player::Row, Player::Column}) {
                auto bl = detail::blocks(g.of(p));
                int k = detail::boundary(l);
                int lo = detail::block_at(bl, k);
                if (lo != detail::block_at(bl, k + 1)) continue;
                int before = 0;
                for (int b = 0; b < lo; ++b) before += static_cast<int>(bl[b].size());
                int upper = static_cast<int>(bl[lo].size()) - (k - before);
                const auto& block = bl[lo];
                int n = static_cast<int>(block.size());
                for (int mask = 0; mask < (1 << n); ++mask) {
                    if (__builtin_popcount(mask) != upper) continue;
                    std::vector<int> t;
                    for (int i = 0; i < n; ++i)
                        if (mask & (1 << i)) t.push_back(block[i]);
                    std::sort(t.begin(), t.end());
                    out.push_back({p, MoveKind::BreakTie, l, t});
                }
            }
    }
    std::stable_sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<SwapMove, Game>> neighbors(const Game& g, const MoveSet& ms = {}) {
    std::vector<std::pair<SwapMove, Game>> out;
    for (const SwapMove& m : candidate_moves(g, ms)) {
        try {
            out.emplace_back(m, apply_swap(g, m));
        } catch (const move_not_applicable&) {
        }
    }
    return out;
}

enum class Layer : std::uint8_t { L1_Discord = 1, L2_ColumnAligned = 2, L3_WinWin = 3, L4_RowAligned = 4 };

inline const char* layer_name(Layer l) {
    switch (l) {
        case Layer::L1_Discord: return "L1";
        case Layer::L2_ColumnAligned: return "L2";
        case Layer::L3_WinWin: return "L3";
        case Layer::L4_RowAligned: return "L4";
    }
    return "?";
}

inline std::optional<Layer> parse_layer(std::string_view s) {
    if (s.size() == 2 && (s[0] == 'L' || s[0] == 'l')) s = s.substr(1);
    if (s == "1") return Layer::L1_Discord;
    if (s == "2") return Layer::L2_ColumnAligned;
    if (s == "3") return Layer::L3_WinWin;
    if (s == "4") return Layer::L4_RowAligned;
    return std::nullopt;
}

inline Layer alignment(int row_top, int col_top) {
    if (row_top == col_top) return Layer::L3_WinWin;
    if (row_top + col_top == 3) return Layer::L1_Discord;
    if (col_of(row_top) == col_of(col_top)) return Layer::L2_ColumnAligned;
    return Layer::L4_RowAligned;
}

inline std::vector<int> top_cells(const Pattern& p) {
    int m = *std::max_element(p.r.begin(), p.r.end());
    std::vector<int> out;
    for (int k = 0; k < 4; ++k)
        if (p[k] == m) out.push_back(k);
    return out;
}

// Layers touched by the game: one for strict games, the set over all pairs of
// top cells for games with tied top ranks.
inline std::vector<Layer> layers_of(const Game& g) {
    std::set<Layer> s;
    for (int a : top_cells(g.row))
        for (int b : top_cells(g.col)) s.insert(alignment(a, b));
    return {s.begin(), s.end()};
}

inline Layer layer_of(const Game& g) {
    auto ls = layers_of(g);
    if (ls.size() != 1) throw error("game lies between layers: " + format_game(g));
    return ls.front();
}

// Closure under row and column 1-2 swaps.
inline std::vector<Game> tile_of(const Game& g) {
    std::set<Game> seen{canonical(g)};
    std::vector<Game> stack{canonical(g)};
    while (!stack.empty()) {
        Game x = stack.back();
        stack.pop_back();
        for (Player p : {Player::Row, Player::Column}) {
            try {
                Game y = apply_swap(x, {p, MoveKind::Low12, Level::Low, {}});
                if (seen.insert(y).second) stack.push_back(y);
            } catch (const move_not_applicable&) {
            }
        }
    }
    return {seen.begin(), seen.end()};
}

enum class LinkKind : std::uint8_t { Hotspot, Pipe, Simple };

inline const char* link_kind_name(LinkKind k) {
    switch (k) {
        case LinkKind::Hotspot: return "hotspot";
        case LinkKind::Pipe: return "pipe";
        case LinkKind::Simple: return "simple";
    }
    return "?";
}

struct HighEdge {
    Game from;
    Player player;
    Game to;
};

struct TileLink {
    LinkKind kind = LinkKind::Simple;
    std::vector<Game> tiles;  // least member of each tile, ascending
    std::vector<HighEdge> edges;
};

// High-swap links between the 36 strict tiles.
inline std::vector<TileLink> tile_links() {
    std::map<Game, Game> tile_key;
    std::vector<Game> keys;
    for (const Game& g : strict_universe()) {
        if (tile_key.count(g)) continue;
        auto t = tile_of(g);
        for (const Game& x : t) tile_key[x] = t.front();
        keys.push_back(t.front());
    }
    // Each tile sends all row-high swaps to one tile and all column-high swaps to one tile.
    std::map<Game, std::array<std::set<Game>, 2>> dest;
    std::vector<HighEdge> edges;
    for (const Game& g : strict_universe())
        for (Player p : {Player::Row, Player::Column}) {
            Game h = apply_swap(g, {p, MoveKind::High34, Level::Low, {}});
            dest[tile_key[g]][static_cast<int>(p)].insert(tile_key[h]);
            if (g < h) edges.push_back({g, p, h});
        }
    std::map<Game, int> group;
    std::vector<TileLink> links;
    auto single = [&](const Game& t, int p) -> std::optional<Game> {
        const auto& s = dest[t][p];
        if (s.size() != 1) return std::nullopt;
        return *s.begin();
    };
    for (const Game& t : keys) {
        if (group.count(t)) continue;
        auto r = single(t, 0), c = single(t, 1);
        TileLink link;
        if (r && c && *r == *c && single(*r, 0) == t && single(*r, 1) == t) {
            link.kind = LinkKind::Hotspot;
            link.tiles = {t, *r};
        } else if (r && c) {
            // Follow alternating row/column links and accept a 4-cycle over four layers.
            std::vector<Game> cyc{t};
            Game cur = t;
            int p = 0;
            bool ok = true;
            for (int step = 0; step < 4 && ok; ++step) {
                auto nx = single(cur, p);
                if (!nx) ok = false;
                else cur = *nx;
                p ^= 1;
                if (step < 3) cyc.push_back(cur);
            }
            std::set<Layer> ls;
            for (const Game& x : cyc) ls.insert(layer_of(x));
            std::set<Game> distinct(cyc.begin(), cyc.end());
            if (ok && cur == t && distinct.size() == 4 && ls.size() == 4) {
                link.kind = LinkKind::Pipe;
                link.tiles = cyc;
            } else {
                link.kind = LinkKind::Simple;
                link.tiles = {t};
            }
        } else {
            link.kind = LinkKind::Simple;
            link.tiles = {t};
        }
        std::sort(link.tiles.begin(), link.tiles.end());
        if (link.kind == LinkKind::Simple) continue;
        for (const Game& x : link.tiles) group[x] = static_cast<int>(links.size());
        links.push_back(link);
    }
    // Remaining tiles pair up as simple links edge by edge.
    std::map<std::pair<Game, Game>, int> simple;
    for (const HighEdge& e : edges) {
        Game a = tile_key[e.from], b = tile_key[e.to];
        auto ga = group.find(a), gb = group.find(b);
        if (ga != group.end() && gb != group.end() && ga->second == gb->second) {
            links[ga->second].edges.push_back(e);
            continue;
        }
        auto key = std::minmax(a, b);
        auto it = simple.find(key);
        if (it == simple.end()) {
            it = simple.emplace(key, static_cast<int>(links.size())).first;
            links.push_back({LinkKind::Simple, {key.first, key.second}, {}});
        }
        links[it->second].edges.push_back(e);
    }
    return links;
}

enum class CostModel : std::uint8_t { Uniform, Graded };

inline double move_cost(const SwapMove& m, CostModel c) {
    if (c == CostModel::Uniform) return 1.0;
    switch (m.kind) {
        case MoveKind::Low12: return 1;
        case MoveKind::Mid23: return 2;
        case MoveKind::High34: return 3;
        // A non-adjacent swap costs the chain of adjacent swaps that realizes it.
        case MoveKind::X13: return 4;
        case MoveKind::X24: return 7;
        case MoveKind::X14: return 9;
        case MoveKind::MakeTie:
        case MoveKind::BreakTie: return 0.5;
    }
    return 1;
}

inline std::optional<CostModel> parse_cost_model(std::string_view s) {
    if (s == "uniform") return CostModel::Uniform;
    if (s == "graded") return CostModel::Graded;
    return std::nullopt;
}

struct Goal {
    enum class Kind : std::uint8_t { Family, Subfamily, Game, Layer } kind = Kind::Family;
    Family family = Family::WinWin;
    Subfamily subfamily = Subfamily::Harmonious;
    gtopo::Game game;
    gtopo::Layer layer = Layer::L3_WinWin;

    bool operator()(const gtopo::Game& g) const {
        switch (kind) {
            case Kind::Family: return classify(g).family == family;
            case Kind::Subfamily: return classify(g).subfamily == subfamily;
            case Kind::Game: return canonical(g) == canonical(game);
            case Kind::Layer: {
                auto ls = layers_of(g);
                return ls.size() == 1 && ls.front() == layer;
            }
        }
        return false;
    }
};

inline std::string goal_text(const Goal& g) {
    switch (g.kind) {
        case Goal::Kind::Family: return std::string("family:") + family_name(g.family);
        case Goal::Kind::Subfamily: return std::string("subfamily:") + subfamily_name(g.subfamily);
        case Goal::Kind::Game: return "game:" + format_game(g.game);
        case Goal::Kind::Layer: return std::string("layer:") + layer_name(g.layer);
    }
    return "?";
}

struct PathStep {
    SwapMove move;
    Game game;
};

struct Path {
    Game start;
    std::vector<PathStep> steps;
    double cost = 0;

    const Game& end() const { return steps.empty() ? start : steps.back().game; }
};

// Uniform-cost search. Among cheapest paths the one ending on the goal game whose
// subfamily comes first in table order wins; remaining ties break on path
// length, then on the sequence of (move order, game encoding) pairs.
inline Path shortest_path(const Game& start, const Goal& goal, const MoveSet& ms = {},
                          CostModel cm = CostModel::Uniform) {
    struct Label {
        double cost;
        std::vector<std::pair<SwapMove, Game>> seq;
    };
    auto less = [](const Label& a, const Label& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        if (a.seq.size() != b.seq.size()) return a.seq.size() < b.seq.size();
        for (std::size_t i = 0; i < a.seq.size(); ++i) {
            if (a.seq[i].first < b.seq[i].first) return true;
            if (b.seq[i].first < a.seq[i].first) return false;
            if (a.seq[i].second != b.seq[i].second) return a.seq[i].second < b.seq[i].second;
        }
        return false;
    };
    Game s = canonical(start);
    std::map<Game, Label> best;
    std::set<Game> done;
    auto cmp = [&](const std::pair<Label, Game>& a, const std::pair<Label, Game>& b) { return less(b.first, a.first); };
    std::priority_queue<std::pair<Label, Game>, std::vector<std::pair<Label, Game>>, decltype(cmp)> pq(cmp);
    best[s] = {0, {}};
    pq.push({best[s], s});
    std::optional<std::pair<Label, Game>> found;
    int found_rank = 0;
    while (!pq.empty()) {
        auto [label, g] = pq.top();
        pq.pop();
        if (done.count(g)) continue;
        if (found && label.cost > found->first.cost) break;
        done.insert(g);
        if (goal(g)) {
            int rank = subfamily_rank(classify(g).subfamily);
            if (!found || rank < found_rank || (rank == found_rank && less(label, found->first))) {
                found = std::pair{label, g};
                found_rank = rank;
            }
            continue;
        }
        for (auto& [m, h] : neighbors(g, ms)) {
            if (done.count(h)) continue;
            Label next{label.cost + move_cost(m, cm), label.seq};
            next.seq.emplace_back(m, h);
            auto it = best.find(h);
            if (it == best.end() || less(next, it->second)) {
                best[h] = next;
                pq.push({next, h});
            }
        }
    }
    if (found) {
        Path p{s, {}, found->first.cost};
        for (auto& [m, h] : found->first.seq) p.steps.push_back({m, h});
        return p;
    }
    throw no_path("goal " + goal_text(goal) + " is unreachable from " + format_game(s), done.size());
}

// Replays a path's moves from its start; false when a step does not reproduce.
inline bool replay(const Path& p) {
    Game g = p.start;
    for (const PathStep& s : p.steps) {
        g = apply_swap(g, s.move);
        if (g != s.game) return false;
    }
    return true;
}

// Distance to the nearest goal game for every atlas game that can reach one.
inline std::map<Game, double> escape_map(const Goal& goal, const MoveSet& ms = {}, CostModel cm = CostModel::Uniform) {
    std::map<Game, std::vector<std::pair<Game, double>>> reverse;
    for (const Game& g : atlas().games)
        for (auto& [m, h] : neighbors(g, ms)) reverse[h].emplace_back(g, move_cost(m, cm));
    std::map<Game, double> dist;
    using Item = std::pair<double, Game>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    for (const Game& g : atlas().games)
        if (goal(g)) {
            dist[g] = 0;
            pq.push({0, g});
        }
    while (!pq.empty()) {
        auto [d, g] = pq.top();
        pq.pop();
        if (d > dist[g]) continue;
        for (auto& [f, w] : reverse[g]) {
            auto it = dist.find(f);
            if (it == dist.end() || d + w < it->second) {
                dist[f] = d + w;
                pq.push({d + w, f});
            }
        }
    }
    return dist;
}

}  // namespace gtopo
