#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gtopo {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : error {
    using error::error;
};
struct invalid_payoff : error {
    using error::error;
};
struct move_not_applicable : error {
    using error::error;
};
struct invalid_target : error {
    using error::error;
};
struct unknown_code : error {
    using error::error;
};
struct no_interior_equilibrium : error {
    using error::error;
};
struct no_path : error {
    std::size_t explored = 0;
    no_path(const std::string& what, std::size_t n) : error(what), explored(n) {}
};

// Cells are indexed 0..3 in the order UL, UR, DL, DR: index = 2 * row + column.
enum class Cell : std::uint8_t { UL, UR, DL, DR };

constexpr int cell_index(int row, int col) { return 2 * row + col; }
constexpr int row_of(int cell) { return cell >> 1; }
constexpr int col_of(int cell) { return cell & 1; }

inline const char* cell_name(int cell) {
    static constexpr const char* names[] = {"UL", "UR", "DL", "DR"};
    return names[cell & 3];
}

inline std::optional<int> parse_cell(std::string_view s) {
    for (int k = 0; k < 4; ++k)
        if (s == cell_name(k)) return k;
    return std::nullopt;
}

enum class Player : std::uint8_t { Row, Column };

inline const char* player_name(Player p) { return p == Player::Row ? "row" : "column"; }

enum class TieClass : std::uint8_t { Strict, Low, Middle, High, Triple, Double, Basic, Zero };

inline constexpr std::array<TieClass, 8> all_tie_classes = {
    TieClass::Strict, TieClass::Low,    TieClass::Middle, TieClass::High,
    TieClass::Triple, TieClass::Double, TieClass::Basic,  TieClass::Zero};

inline const char* tie_class_name(TieClass c) {
    switch (c) {
        case TieClass::Strict: return "strict";
        case TieClass::Low: return "low";
        case TieClass::Middle: return "middle";
        case TieClass::High: return "high";
        case TieClass::Triple: return "triple";
        case TieClass::Double: return "double";
        case TieClass::Basic: return "basic";
        case TieClass::Zero: return "zero";
    }
    return "?";
}

inline std::optional<TieClass> parse_tie_class(std::string_view s) {
    for (TieClass c : all_tie_classes)
        if (s == tie_class_name(c)) return c;
    if (s == "mid") return TieClass::Middle;
    return std::nullopt;
}

// Sorted rank multiset for each class.
inline std::array<std::uint8_t, 4> class_multiset(TieClass c) {
    switch (c) {
        case TieClass::Strict: return {1, 2, 3, 4};
        case TieClass::Low: return {1, 1, 3, 4};
        case TieClass::Middle: return {1, 3, 3, 4};
        case TieClass::High: return {1, 2, 4, 4};
        case TieClass::Triple: return {1, 4, 4, 4};
        case TieClass::Double: return {1, 1, 4, 4};
        case TieClass::Basic: return {1, 1, 1, 4};
        case TieClass::Zero: return {0, 0, 0, 0};
    }
    return {};
}

using Ranks = std::array<std::uint8_t, 4>;

inline std::optional<TieClass> class_of_ranks(const Ranks& r) {
    Ranks s = r;
    std::sort(s.begin(), s.end());
    for (TieClass c : all_tie_classes)
        if (class_multiset(c) == s) return c;
    return std::nullopt;
}

// Ranks assigned to a weak order given its block sizes, lowest block first.
// The lowest block gets 1, any higher block gets the highest position it occupies.
inline Ranks ranks_for_blocks(const std::vector<int>& sizes, const std::array<int, 4>& block_of) {
    if (sizes.size() == 1) return {0, 0, 0, 0};
    std::vector<std::uint8_t> value(sizes.size());
    int pos = 0;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        pos += sizes[b];
        value[b] = static_cast<std::uint8_t>(b == 0 ? 1 : pos);
    }
    Ranks r{};
    for (int k = 0; k < 4; ++k) r[k] = value[block_of[k]];
    return r;
}

struct Pattern {
    Ranks r{};

    Pattern() = default;
    explicit Pattern(const Ranks& ranks) : r(ranks) {
        if (!class_of_ranks(r)) throw parse_error("rank multiset is not a preference class");
    }

    std::uint8_t operator[](int cell) const { return r[cell]; }
    TieClass tie_class() const { return *class_of_ranks(r); }
    bool strict() const { return tie_class() == TieClass::Strict; }
    int count(int rank) const { return static_cast<int>(std::count(r.begin(), r.end(), rank)); }
    std::string str() const {
        std::string s(4, '0');
        for (int k = 0; k < 4; ++k) s[k] = static_cast<char>('0' + r[k]);
        return s;
    }

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

inline Pattern swap_rows(const Pattern& p) { return Pattern({p[2], p[3], p[0], p[1]}); }
inline Pattern swap_columns(const Pattern& p) { return Pattern({p[1], p[0], p[3], p[2]}); }
inline Pattern rotate180(const Pattern& p) { return Pattern({p[3], p[2], p[1], p[0]}); }
// Transposes the cell grid: UR and DL exchange.
inline Pattern transpose_cells(const Pattern& p) { return Pattern({p[0], p[2], p[1], p[3]}); }
// Column pattern of the symmetric game whose row pattern is p.
inline Pattern mirror(const Pattern& p) { return Pattern({p[3], p[1], p[2], p[0]}); }

struct Game {
    Pattern row;
    Pattern col;

    const Pattern& of(Player p) const { return p == Player::Row ? row : col; }
    Pattern& of(Player p) { return p == Player::Row ? row : col; }
    bool strict() const { return row.strict() && col.strict(); }

    friend bool operator==(const Game&, const Game&) = default;
    friend auto operator<=>(const Game&, const Game&) = default;
};

inline std::string format_game(const Game& g) { return g.row.str() + "/" + g.col.str(); }

inline Pattern parse_pattern(std::string_view s, const char* who) {
    if (s.size() != 4) throw parse_error(std::string(who) + " pattern must have 4 digits");
    Ranks r{};
    for (int k = 0; k < 4; ++k) {
        if (s[k] < '0' || s[k] > '4')
            throw parse_error(std::string(who) + " pattern has a rank outside 0-4");
        r[k] = static_cast<std::uint8_t>(s[k] - '0');
    }
    if (!class_of_ranks(r)) {
        Ranks sorted = r;
        std::sort(sorted.begin(), sorted.end());
        std::string m;
        for (int k = 0; k < 4; ++k) m += (k ? "," : "") + std::to_string(sorted[k]);
        throw parse_error(std::string(who) + " multiset {" + m + "} is not a preference class");
    }
    return Pattern(r);
}

inline Game parse_game(std::string_view text) {
    if (text.size() != 9 || text[4] != '/')
        throw parse_error("game must look like RRRR/CCCC");
    return Game{parse_pattern(text.substr(0, 4), "row"), parse_pattern(text.substr(5, 4), "column")};
}

// Maps real payoffs to ranks. Values are sorted and chained into one tie block
// whenever consecutive values differ by at most tol.
inline Pattern normalize_payoffs(const std::array<double, 4>& v, double tol = 0.0) {
    if (!(tol >= 0.0) || !std::isfinite(tol)) throw invalid_payoff("tolerance must be finite and >= 0");
    for (double x : v)
        if (!std::isfinite(x)) throw invalid_payoff("payoff is not finite");
    std::array<int, 4> order = {0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return v[a] < v[b]; });
    std::vector<int> sizes{1};
    std::array<int, 4> block_of{};
    for (int i = 1; i < 4; ++i) {
        if (v[order[i]] - v[order[i - 1]] > tol) sizes.push_back(0);
        ++sizes.back();
        block_of[order[i]] = static_cast<int>(sizes.size()) - 1;
    }
    return Pattern(ranks_for_blocks(sizes, block_of));
}

// Element of the order-8 group: optional row swap, then optional column swap,
// then optional transpose (player exchange).
struct Transform {
    bool rows = false;
    bool cols = false;
    bool transpose = false;

    friend bool operator==(const Transform&, const Transform&) = default;
};

inline constexpr Transform Identity{};
inline constexpr Transform SwapRows{true, false, false};
inline constexpr Transform SwapColumns{false, true, false};
inline constexpr Transform Rotate180{true, true, false};
inline constexpr Transform Transpose{false, false, true};

inline constexpr std::array<Transform, 4> interchange_group = {Identity, SwapColumns, SwapRows, Rotate180};

inline std::array<Transform, 8> full_group() {
    std::array<Transform, 8> g{};
    for (int i = 0; i < 8; ++i) g[i] = Transform{bool(i & 2), bool(i & 1), bool(i & 4)};
    return g;
}

inline std::string transform_name(const Transform& t) {
    std::string base = t.rows ? (t.cols ? "rotate180" : "swap-rows") : (t.cols ? "swap-columns" : "identity");
    if (!t.transpose) return base;
    return base == "identity" ? "transpose" : base + "+transpose";
}

inline Game apply_transform(const Game& g, const Transform& t) {
    Game out = g;
    if (t.rows) out = {swap_rows(out.row), swap_rows(out.col)};
    if (t.cols) out = {swap_columns(out.row), swap_columns(out.col)};
    if (t.transpose) out = {transpose_cells(out.col), transpose_cells(out.row)};
    return out;
}

// a after b.
inline Transform compose(const Transform& a, const Transform& b) {
    if (b.transpose) return {a.cols != b.rows, a.rows != b.cols, !a.transpose};
    return {a.rows != b.rows, a.cols != b.cols, a.transpose};
}

inline Transform inverse(const Transform& t) {
    for (const Transform& u : full_group())
        if (compose(u, t) == Identity) return u;
    return Identity;
}

// Number of violated placement conditions: Row's 4 in the right column, Column's 4 in the up row.
inline int placement_score(const Game& g) {
    bool row_ok = g.row[1] == 4 || g.row[3] == 4;
    bool col_ok = g.col[0] == 4 || g.col[1] == 4;
    return int(!row_ok) + int(!col_ok);
}

struct CanonicalKey {
    Game game;
    Transform applied;
};

// Representative of the interchange orbit: least (placement score, encoding).
inline CanonicalKey canonicalize(const Game& g) {
    CanonicalKey best{g, Identity};
    int best_score = placement_score(g);
    for (const Transform& t : interchange_group) {
        Game v = apply_transform(g, t);
        int s = placement_score(v);
        if (s < best_score || (s == best_score && v < best.game)) {
            best = {v, t};
            best_score = s;
        }
    }
    return best;
}

inline Game canonical(const Game& g) { return canonicalize(g).game; }

inline bool is_self_transposed(const Game& g) { return g.col == transpose_cells(g.row); }

inline bool is_symmetric(const Game& g) {
    for (const Transform& t : interchange_group)
        if (is_self_transposed(apply_transform(g, t))) return true;
    return false;
}

}  // namespace gtopo
