#pragma once

#include <gtopo/records.hpp>

#include <map>
#include <mutex>

namespace gtopo {

struct Request {
    std::string method;
    std::string path;
    std::map<std::string, std::string> query;
    std::string body;
};

struct Response {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

namespace detail {

inline Response json_response(int status, const json& j) { return {status, "application/json", j.dump()}; }

inline Response error_response(int status, const std::string& message) {
    return json_response(status, {{"error", message}});
}

inline std::string query_or(const Request& r, const std::string& key, const std::string& fallback) {
    auto it = r.query.find(key);
    return it == r.query.end() || it->second.empty() ? fallback : it->second;
}

inline std::string percent_decode(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '%' && i + 2 < s.size() && std::isxdigit(static_cast<unsigned char>(s[i + 1])) &&
            std::isxdigit(static_cast<unsigned char>(s[i + 2]))) {
            out += static_cast<char>(std::stoi(std::string(s.substr(i + 1, 2)), nullptr, 16));
            i += 2;
        } else {
            out += s[i];
        }
    }
    return out;
}

inline const std::string& cached_chart(ChartKind k) {
    static std::mutex m;
    static std::map<ChartKind, std::string> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, render_svg(layout(k))).first;
    return it->second;
}

// The game part of /api/games/... may itself contain '/' (an encoding), so the
// known suffixes are matched from the end.
inline std::pair<std::string, std::string> split_game_path(std::string_view rest) {
    for (std::string_view suffix : {"/neighbors", "/classification", "/apply"})
        if (rest.size() > suffix.size() && rest.substr(rest.size() - suffix.size()) == suffix)
            return {std::string(rest.substr(0, rest.size() - suffix.size())), std::string(suffix.substr(1))};
    return {std::string(rest), ""};
}

}  // namespace detail

// Pure request handler behind the HTTP server.
inline Response handle(const Request& req) {
    using namespace detail;
    try {
        const std::string prefix = "/api/games/";
        if (req.method == "GET" && req.path.rfind(prefix, 0) == 0) {
            auto [key, sub] = split_game_path(std::string_view(req.path).substr(prefix.size()));
            key = percent_decode(key);
            std::replace(key.begin(), key.end(), '.', '/');
            auto g = resolve_game(key);
            if (!g) return error_response(404, "unknown game: " + key);
            MoveSet ms = parse_move_set(query_or(req, "moves", "adjacent"));
            if (sub.empty()) return json_response(200, game_record(*g, ms));
            if (sub == "classification") {
                json j = game_ref(*g);
                j["classification"] = classification_json(*g);
                return json_response(200, j);
            }
            if (sub == "neighbors") {
                json j = game_ref(*g);
                j["moves"] = move_set_text(ms);
                j["neighbors"] = neighbors_json(*g, ms);
                return json_response(200, j);
            }
            auto it = req.query.find("move");
            if (it == req.query.end()) return error_response(400, "missing move parameter");
            SwapMove m = parse_move(it->second);
            try {
                json j = game_record(apply_swap(*g, m));
                j["applied"] = move_text(m);
                j["from"] = game_ref(*g);
                return json_response(200, j);
            } catch (const move_not_applicable& e) {
                return error_response(422, e.what());
            } catch (const invalid_target& e) {
                return error_response(400, e.what());
            }
        }
        if (req.method == "POST" && req.path == "/api/path") {
            json body = json::parse(req.body, nullptr, false);
            if (body.is_discarded() || !body.is_object()) return error_response(400, "body must be a JSON object");
            if (!body.contains("from") || !body["from"].is_string() || !body.contains("goal") ||
                !body["goal"].is_string())
                return error_response(400, "body needs string fields from and goal");
            auto from = resolve_game(body["from"].get<std::string>());
            if (!from) return error_response(404, "unknown game: " + body["from"].get<std::string>());
            Goal goal;
            try {
                goal = parse_goal(body["goal"].get<std::string>());
            } catch (const unknown_code& e) {
                return error_response(404, e.what());
            }
            MoveSet ms = parse_move_set(body.value("moves", std::string("adjacent")));
            auto cm = parse_cost_model(body.value("costs", std::string("uniform")));
            if (!cm) return error_response(400, "costs must be uniform or graded");
            try {
                return json_response(200, path_json(shortest_path(*from, goal, ms, *cm), goal, ms, *cm));
            } catch (const no_path& e) {
                return json_response(422, {{"error", e.what()}, {"explored", e.explored}});
            }
        }
        if (req.method == "GET" && req.path == "/api/census") {
            std::string set = query_or(req, "set", "strict");
            return json_response(200, census_json(census_set(set), set));
        }
        if (req.method == "GET" && req.path == "/api/chart.svg") {
            auto k = parse_chart_kind(query_or(req, "which", "strict"));
            if (!k) return error_response(400, "which must be strict or complete");
            return {200, "image/svg+xml", cached_chart(*k)};
        }
        return error_response(404, "no such endpoint: " + req.method + " " + req.path);
    } catch (const unknown_code& e) {
        return error_response(404, e.what());
    } catch (const error& e) {
        return error_response(400, e.what());
    }
}

}  // namespace gtopo
