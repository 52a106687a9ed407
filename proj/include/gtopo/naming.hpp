#pragma once

#include <gtopo/atlas.hpp>
#include <gtopo/topology.hpp>
#include <gtopo/registry_data.hpp>

#include <cctype>
#include <fstream>

namespace gtopo {

struct CoordinateName {
    std::string row_code;
    std::string column_code;
    bool row_prime = false;  // code's pattern rotated a half turn
    bool column_prime = false;
    Transform variant;  // interchange variant of the canonical game that the codes describe

    std::string str() const {
        return row_code + (row_prime ? "'" : "") + "-" + column_code + (column_prime ? "'" : "");
    }
};

namespace detail {

inline Pattern code_row(const SymmetricEntry& e, bool prime) { return prime ? rotate180(e.pattern) : e.pattern; }
inline Pattern code_col(const SymmetricEntry& e, bool prime) { return mirror(code_row(e, prime)); }

inline const SymmetricEntry* row_match(const Pattern& p, bool prime) {
    for (const SymmetricEntry& e : symmetric_listing())
        if (code_row(e, prime) == p) return &e;
    return nullptr;
}

inline const SymmetricEntry* col_match(const Pattern& p, bool prime) {
    for (const SymmetricEntry& e : symmetric_listing())
        if (code_col(e, prime) == p) return &e;
    return nullptr;
}

}  // namespace detail

inline CoordinateName coordinate_name(const Game& game) {
    Game g = canonical(game);
    if (is_symmetric(g)) {
        for (const SymmetricEntry& e : symmetric_listing())
            if (e.same_as.empty() && e.game == g)
                for (const Transform& t : interchange_group)
                    if (apply_transform(g, t) == Game{e.pattern, mirror(e.pattern)})
                        return {e.code, e.code, false, false, t};
    }
    // Fewest primes first, then interchange variants in group order.
    for (int primes = 0; primes <= 2; ++primes)
        for (const Transform& t : interchange_group) {
            Game v = apply_transform(g, t);
            for (int mask = 0; mask < 4; ++mask) {
                bool rp = mask & 1, cp = mask & 2;
                if (int(rp) + int(cp) != primes) continue;
                const SymmetricEntry* r = detail::row_match(v.row, rp);
                const SymmetricEntry* c = detail::col_match(v.col, cp);
                if (r && c) return {r->code, c->code, rp, cp, t};
            }
        }
    throw error("no coordinate name for " + format_game(g));
}

inline std::string name_of(const Game& g) { return coordinate_name(g).str(); }

namespace detail {

inline const SymmetricEntry& resolve_code(std::string token, bool& prime) {
    prime = false;
    if (!token.empty() && token.back() == '\'') {
        prime = true;
        token.pop_back();
    }
    if (token.size() == 1 && std::isupper(static_cast<unsigned char>(token[0])))
        token = std::string("s") + static_cast<char>(std::tolower(static_cast<unsigned char>(token[0])));
    if (token == "se") token = "sr";
    if (token == "he") token = "hr";
    const SymmetricEntry* e = find_code(token);
    if (!e) throw unknown_code("unknown symmetric code: " + token);
    return *e;
}

}  // namespace detail

inline std::pair<std::string, std::string> split_name(std::string_view text) {
    auto dash = text.find('-');
    if (dash == std::string_view::npos) {
        std::string t(text);
        return {t, t};
    }
    if (text.find('-', dash + 1) != std::string_view::npos) throw unknown_code("malformed name: " + std::string(text));
    return {std::string(text.substr(0, dash)), std::string(text.substr(dash + 1))};
}

// Accepts "sd-sc", primed codes such as "tk'-th", a lone code such as "mb",
// and single upper-case strict letters such as "A-R".
inline Game parse_name(std::string_view text) {
    auto parts = split_name(text);
    bool rp = false, cp = false;
    const SymmetricEntry& r = detail::resolve_code(parts.first, rp);
    const SymmetricEntry& c = detail::resolve_code(parts.second, cp);
    return canonical(Game{detail::code_row(r, rp), detail::code_col(c, cp)});
}

struct CommonNameEntry {
    std::string coordinate;
    std::vector<std::string> names;
    std::vector<std::string> tags;
    Game game;
};

struct Registry {
    std::vector<CommonNameEntry> entries;

    std::vector<const CommonNameEntry*> lookup(const Game& g) const {
        Game c = canonical(g);
        std::vector<const CommonNameEntry*> out;
        for (const CommonNameEntry& e : entries)
            if (e.game == c) out.push_back(&e);
        return out;
    }

    // Case-insensitive; an entry whose first name matches wins over later aliases.
    std::optional<Game> find_name(std::string_view name) const {
        auto lower = [](std::string_view s) {
            std::string o(s);
            for (char& ch : o) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            return o;
        };
        std::string key = lower(name);
        for (const CommonNameEntry& e : entries)
            if (!e.names.empty() && lower(e.names.front()) == key) return e.game;
        for (const CommonNameEntry& e : entries)
            for (const std::string& n : e.names)
                if (lower(n) == key) return e.game;
        return std::nullopt;
    }
};

inline Registry parse_registry(std::string_view text) {
    Registry r;
    for (const std::string& line : split(text, '\n')) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() != 3) throw parse_error("registry line needs 3 tab-separated fields: " + line);
        CommonNameEntry e;
        e.coordinate = fields[0];
        for (const std::string& n : split(fields[1], '|'))
            if (!n.empty()) e.names.push_back(n);
        for (const std::string& t : split(fields[2], ' '))
            if (!t.empty()) e.tags.push_back(t);
        e.game = parse_name(e.coordinate);
        r.entries.push_back(std::move(e));
    }
    return r;
}

inline Registry load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open registry file " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_registry(text);
}

inline const Registry& registry() {
    static const Registry r = parse_registry(embedded_registry);
    return r;
}

inline std::vector<std::string> common_names(const Game& g) {
    std::vector<std::string> out;
    for (const CommonNameEntry* e : registry().lookup(g))
        for (const std::string& n : e->names)
            if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    return out;
}

inline std::vector<std::string> catalog_tags(const Game& g) {
    std::vector<std::string> out;
    for (const CommonNameEntry* e : registry().lookup(g))
        for (const std::string& t : e->tags)
            if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    return out;
}

// Resolves an atlas id, an encoding, a coordinate name or a common name.
inline std::optional<Game> resolve_game(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        if (text.size() > 6) return std::nullopt;
        int id = std::stoi(std::string(text));
        if (id < 0 || id >= atlas().size()) return std::nullopt;
        return atlas().games[id];
    }
    try {
        return canonical(parse_game(text));
    } catch (const parse_error&) {
    }
    try {
        return parse_name(text);
    } catch (const unknown_code&) {
    }
    return registry().find_name(text);
}

// Line-oriented atlas export: id, encoding, tie classes, coordinate name.
inline std::string export_atlas(const Atlas& a) {
    std::string out;
    for (int i = 0; i < a.size(); ++i) {
        const Game& g = a.games[i];
        out += std::to_string(i) + "\t" + format_game(g) + "\t" + class_pair(g) + "\t" + name_of(g) + "\n";
    }
    return out;
}

inline Atlas import_atlas(std::string_view text, Equivalence e = Equivalence::Interchange) {
    Atlas a;
    a.equivalence = e;
    for (const std::string& line : split(text, '\n')) {
        if (line.empty()) continue;
        auto f = split(line, '\t');
        if (f.size() != 4) throw parse_error("atlas line needs 4 fields: " + line);
        int id = std::stoi(f[0]);
        if (id != a.size()) throw parse_error("atlas ids must be dense and ascending");
        Game g = parse_game(f[1]);
        if (representative(g, e) != g) throw parse_error("atlas game is not canonical: " + f[1]);
        a.games.push_back(g);
        a.index[g] = id;
        a.by_row_class[g.row.tie_class()].push_back(id);
        if (g.strict()) a.strict.push_back(id);
        if (is_symmetric(g)) a.symmetric.push_back(id);
    }
    return a;
}

}  // namespace gtopo
