#pragma once

#include <gtopo/classify.hpp>
#include <gtopo/naming.hpp>
#include <gtopo/topology.hpp>

#include <cstdio>

namespace gtopo {

enum class ChartKind : std::uint8_t { Strict, Complete };

inline const char* chart_kind_name(ChartKind k) { return k == ChartKind::Strict ? "strict" : "complete"; }

inline std::optional<ChartKind> parse_chart_kind(std::string_view s) {
    if (s == "strict") return ChartKind::Strict;
    if (s == "complete") return ChartKind::Complete;
    return std::nullopt;
}

struct ChartCell {
    int x = 0;
    int y = 0;
    int panel = 0;        // quadrant: 0 top-left, 1 top-right, 2 bottom-left, 3 bottom-right
    Game game;            // canonical game shown or referenced
    bool primary = true;  // false: an interchange duplicate drawn as a cross-reference
    bool symmetric_axis = false;
};

struct ChartLayout {
    ChartKind kind = ChartKind::Strict;
    int size = 0;  // the grid is size x size
    std::vector<ChartCell> cells;  // row-major, top row first
    std::vector<std::string> panel_labels;

    const ChartCell& at(int x, int y) const { return cells[static_cast<std::size_t>(y * size + x)]; }

    std::optional<std::pair<int, int>> position(const Game& g) const {
        Game c = canonical(g);
        for (const ChartCell& cell : cells)
            if (cell.primary && cell.game == c) return std::pair{cell.x, cell.y};
        return std::nullopt;
    }
};

namespace detail {

// Row patterns from the top of the display down. The column at x shows the
// mirror of the row pattern listed at size-1-x, so symmetric games sit on the
// diagonal x + y = size - 1 running from the bottom-left corner to the top-right.
inline ChartLayout grid_layout(ChartKind kind, const std::vector<Pattern>& rows, int split_x, int split_y) {
    ChartLayout out;
    out.kind = kind;
    out.size = static_cast<int>(rows.size());
    for (int y = 0; y < out.size; ++y)
        for (int x = 0; x < out.size; ++x) {
            ChartCell c;
            c.x = x;
            c.y = y;
            c.panel = (y < split_y ? 0 : 2) + (x < split_x ? 0 : 1);
            Game raw{rows[y], mirror(rows[out.size - 1 - x])};
            c.game = canonical(raw);
            c.primary = c.game == raw;
            c.symmetric_axis = x + y == out.size - 1;
            out.cells.push_back(c);
        }
    // A symmetric game's primary cell is its diagonal copy.
    std::map<Game, const ChartCell*> on_axis;
    for (const ChartCell& c : out.cells)
        if (c.symmetric_axis && is_symmetric(c.game)) on_axis.emplace(c.game, &c);
    for (ChartCell& c : out.cells)
        if (auto it = on_axis.find(c.game); it != on_axis.end()) c.primary = it->second == &c;
    return out;
}

inline std::vector<Pattern> patterns(std::initializer_list<const char*> codes) {
    std::vector<Pattern> out;
    for (const char* s : codes) out.push_back(parse_pattern(s, "chart"));
    return out;
}

}  // namespace detail

// Four 6x6 layer panels: L2 top-left, L1 top-right, L3 bottom-left, L4 bottom-right.
// Prisoner's Dilemma lands on the centre block of the assembled display.
inline ChartLayout layout_strict() {
    auto rows = detail::patterns({"2314", "3214", "3124", "2134", "1234", "1324",
                                  "1423", "1432", "2431", "3421", "3412", "2413"});
    ChartLayout l = detail::grid_layout(ChartKind::Strict, rows, 6, 6);
    l.panel_labels = {"L2", "L1", "L3", "L4"};
    return l;
}

// 46 x 46 class grid. The first 24 rows interlace strict, low-tie and middle-tie
// patterns so each tie game sits between the strict games it splits into; the
// two-rank and high-tie patterns follow, with the zero pattern last.
inline ChartLayout layout_complete() {
    auto rows = detail::patterns({
        "2314", "1314", "1324", "1334", "1234", "1134", "2134", "3134", "3124", "3114", "3214", "3314",
        "1423", "1433", "1432", "1431", "2431", "3431", "3421", "3411", "3412", "3413", "2413", "1413",
        "1424", "2414", "4214", "4124", "2144", "1244", "1442", "2441", "4421", "4412",
        "1444", "4144", "4414", "4441",
        "1414", "4114", "1144", "1441", "4411",
        "1114", "1411",
        "0000"});
    ChartLayout l = detail::grid_layout(ChartKind::Complete, rows, 22, 24);
    l.panel_labels = {"mixed", "strict-low-middle", "archetypal-high", "mixed"};
    return l;
}

inline ChartLayout layout(ChartKind k) { return k == ChartKind::Strict ? layout_strict() : layout_complete(); }

// Fixed style table.
struct FamilyStyle {
    Family family;
    const char* css_class;
    const char* fill;
};

inline constexpr std::array<FamilyStyle, 7> family_styles = {{
    {Family::WinWin, "fam-win-win", "#b8e186"},
    {Family::Biased, "fam-biased", "#92c5de"},
    {Family::SecondBest, "fam-second-best", "#e6f5d0"},
    {Family::Unfair, "fam-unfair", "#fdb863"},
    {Family::PdFamily, "fam-pd-family", "#f4a582"},
    {Family::Cyclic, "fam-cyclic", "#c2a5cf"},
    {Family::Indeterminate, "fam-indeterminate", "#d9d9d9"},
}};

inline const FamilyStyle& family_style(Family f) {
    for (const FamilyStyle& s : family_styles)
        if (s.family == f) return s;
    return family_styles.back();
}

namespace detail {

inline std::string xml_escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += ch;
        }
    }
    return out;
}

inline bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace detail

// Glyphs per outcome cell: circle = Nash equilibrium (filled when strict),
// cross = Pareto-deficient equilibrium, square = maximin outcome.
inline std::string render_svg(const ChartLayout& l) {
    constexpr int cell = 44, half = cell / 2, margin = 24, gap = 8;
    int split_x = l.kind == ChartKind::Strict ? 6 : 22;
    int split_y = l.kind == ChartKind::Strict ? 6 : 24;
    auto px = [&](int x) { return margin + x * cell + (x >= split_x ? gap : 0); };
    auto py = [&](int y) { return margin + y * cell + (y >= split_y ? gap : 0); };
    int width = px(l.size) + margin, height = py(l.size) + margin;

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
    s += "<style>\n";
    s += "text{font-family:monospace;font-size:8px}\n";
    s += ".cell rect.bg{stroke:#555;stroke-width:0.5}\n";
    s += ".xref rect.bg{fill:#ffffff;stroke:#bbb;stroke-width:0.5}\n";
    s += ".axis rect.bg{stroke:#000;stroke-width:1.5}\n";
    s += ".ne{fill:none;stroke:#000;stroke-width:0.8}\n.ne.strict{fill:#000;fill-opacity:0.15}\n";
    s += ".deficient{stroke:#b2182b;stroke-width:1}\n.maximin{fill:none;stroke:#2166ac;stroke-width:0.8}\n";
    for (const FamilyStyle& f : family_styles)
        s += std::string(".") + f.css_class + " rect.bg{fill:" + f.fill + "}\n";
    s += "</style>\n";
    s += "<title>" + std::string(chart_kind_name(l.kind)) + " chart</title>\n";

    for (std::size_t p = 0; p < l.panel_labels.size() && p < 4; ++p) {
        int lx = p % 2 ? px(split_x) : px(0);
        int ly = p / 2 ? py(l.size) + 14 : margin - 8;
        s += "<text class=\"panel\" x=\"" + std::to_string(lx) + "\" y=\"" + std::to_string(ly) + "\">" +
             detail::xml_escape(l.panel_labels[p]) + "</text>\n";
    }
    if (l.kind == ChartKind::Strict) {
        // Each layer panel is a torus: its left edge continues from its right edge, its top from its bottom.
        for (int p = 0; p < 4; ++p) {
            int x0 = px(p % 2 ? split_x : 0), y0 = py(p / 2 ? split_y : 0);
            s += "<text class=\"torus\" x=\"" + std::to_string(x0 + 6 * cell - 40) + "\" y=\"" +
                 std::to_string(y0 + 6 * cell + (p / 2 ? 14 : 6)) + "\">wraps</text>\n";
        }
    }

    for (const ChartCell& c : l.cells) {
        int x0 = px(c.x), y0 = py(c.y);
        std::string name = name_of(c.game);
        if (!c.primary) {
            s += "<g class=\"xref\" id=\"xref-" + std::to_string(c.x) + "-" + std::to_string(c.y) +
                 "\" data-ref=\"" + detail::xml_escape(name) + "\" transform=\"translate(" + std::to_string(x0) +
                 "," + std::to_string(y0) + ")\">";
            s += "<rect class=\"bg\" width=\"" + std::to_string(cell) + "\" height=\"" + std::to_string(cell) + "\"/>";
            s += "<text x=\"3\" y=\"25\">" + detail::xml_escape(name) + "</text></g>\n";
            continue;
        }
        Classification k = classify(c.game);
        std::string cls = std::string("cell ") + family_style(k.family).css_class + (c.symmetric_axis ? " axis" : "");
        s += "<g class=\"" + cls + "\" id=\"" + detail::xml_escape(name) + "\" data-encoding=\"" +
             format_game(c.game) + "\" transform=\"translate(" + std::to_string(x0) + "," + std::to_string(y0) + ")\">";
        s += "<rect class=\"bg\" width=\"" + std::to_string(cell) + "\" height=\"" + std::to_string(cell) + "\"/>";
        for (int k4 = 0; k4 < 4; ++k4) {
            int cx = col_of(k4) * half, cy = row_of(k4) * half;
            std::string cxs = std::to_string(cx + half / 2), cys = std::to_string(cy + half / 2);
            if (detail::contains(k.nash_weak, k4)) {
                bool strict = detail::contains(k.nash_strict, k4);
                s += "<circle class=\"ne" + std::string(strict ? " strict" : "") + "\" cx=\"" + cxs + "\" cy=\"" +
                     cys + "\" r=\"8\"/>";
                if (!detail::contains(k.pareto_optimal, k4))
                    s += "<path class=\"deficient\" d=\"M" + std::to_string(cx + 3) + " " + std::to_string(cy + 3) +
                         "l4 4\"/>";
            }
            if (detail::contains(k.maximin[0], row_of(k4)) && detail::contains(k.maximin[1], col_of(k4)))
                s += "<rect class=\"maximin\" x=\"" + std::to_string(cx + 2) + "\" y=\"" + std::to_string(cy + 2) +
                     "\" width=\"" + std::to_string(half - 4) + "\" height=\"" + std::to_string(half - 4) + "\"/>";
            s += "<text x=\"" + std::to_string(cx + 4) + "\" y=\"" + std::to_string(cy + 14) + "\">" +
                 std::to_string(c.game.row[k4]) + "," + std::to_string(c.game.col[k4]) + "</text>";
        }
        s += "</g>\n";
    }
    s += "</svg>\n";
    return s;
}

inline const char* edge_style(const SwapMove& m) {
    switch (m.kind) {
        case MoveKind::Low12: return "dotted";
        case MoveKind::Mid23: return "dashed";
        case MoveKind::High34: return "solid";
        case MoveKind::X13:
        case MoveKind::X24:
        case MoveKind::X14: return "bold";
        case MoveKind::MakeTie:
        case MoveKind::BreakTie: return "solid\", color=\"gray50";
    }
    return "solid";
}

inline const char* edge_level(const SwapMove& m) {
    switch (m.kind) {
        case MoveKind::Low12: return "low";
        case MoveKind::Mid23: return "mid";
        case MoveKind::High34: return "high";
        case MoveKind::X13: return "x13";
        case MoveKind::X24: return "x24";
        case MoveKind::X14: return "x14";
        case MoveKind::MakeTie:
        case MoveKind::BreakTie: return level_name(m.level);
    }
    return "?";
}

struct DotEdge {
    Game a;
    Game b;
    SwapMove move;  // the move from a to b
};

// One undirected edge per (unordered game pair, player, swap kind and level).
// Break-tie moves are folded into the make-tie edge they invert.
inline std::vector<DotEdge> chart_edges(const ChartLayout& l, const MoveSet& ms) {
    std::set<Game> scope;
    for (const ChartCell& c : l.cells)
        if (c.primary) scope.insert(c.game);
    std::set<std::tuple<Game, Game, int, int, int>> seen;
    std::vector<DotEdge> out;
    for (const Game& g : scope)
        for (auto& [m, h] : neighbors(g, ms)) {
            if (!scope.count(h) || h == g) continue;
            if (m.kind == MoveKind::BreakTie) continue;
            int kind = static_cast<int>(m.kind);
            int level = m.kind == MoveKind::MakeTie ? static_cast<int>(m.level) : 0;
            auto key = std::tuple{std::min(g, h), std::max(g, h), static_cast<int>(m.player), kind, level};
            if (m.kind != MoveKind::MakeTie) {
                if (!seen.insert(key).second) continue;
            } else {
                seen.insert(key);
            }
            out.push_back({g, h, m});
        }
    return out;
}

inline std::string render_dot(const ChartLayout& l, const MoveSet& ms = {}) {
    auto q = [](std::string_view s) {
        std::string o = "\"";
        for (char ch : s) {
            if (ch == '"') o += '\\';
            o += ch;
        }
        return o + "\"";
    };
    std::string s = std::string("graph ") + chart_kind_name(l.kind) + " {\n";
    s += "  node [shape=box, fontname=\"monospace\", style=filled];\n";
    for (const ChartCell& c : l.cells) {
        if (!c.primary) continue;
        Classification k = classify(c.game);
        char pos[64];
        std::snprintf(pos, sizeof pos, "%d,%d!", c.x, l.size - 1 - c.y);
        s += "  " + q(name_of(c.game)) + " [label=" + q(name_of(c.game) + "\\n" + format_game(c.game)) +
             ", pos=" + q(pos) + ", fillcolor=" + q(family_style(k.family).fill) + "];\n";
    }
    for (const DotEdge& e : chart_edges(l, ms))
        s += "  " + q(name_of(e.a)) + " -- " + q(name_of(e.b)) + " [style=\"" + edge_style(e.move) +
             "\", class=\"" + edge_level(e.move) + " " + player_name(e.move.player) + "\"];\n";
    s += "}\n";
    return s;
}

enum class ChartFormat : std::uint8_t { Svg, Dot };

inline std::optional<ChartFormat> parse_chart_format(std::string_view s) {
    if (s == "svg") return ChartFormat::Svg;
    if (s == "dot") return ChartFormat::Dot;
    return std::nullopt;
}

inline std::string render(const ChartLayout& l, ChartFormat f, const MoveSet& ms = {}) {
    return f == ChartFormat::Svg ? render_svg(l) : render_dot(l, ms);
}

}  // namespace gtopo
