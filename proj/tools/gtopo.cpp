#include <gtopo/gtopo.hpp>
#include <gtopo/http.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace gtopo;

namespace {

Game need_game(const std::string& text) {
    auto g = resolve_game(text);
    if (!g) throw unknown_code("unknown game or name: " + text);
    return *g;
}

std::string names_text(const Game& g) {
    std::string s;
    for (const std::string& n : common_names(g)) s += (s.empty() ? "" : ", ") + n;
    return s.empty() ? "-" : s;
}

std::string cells_text(const Game& g, const CellSet& cells) {
    if (cells.empty()) return "-";
    std::string s;
    for (int c : cells)
        s += (s.empty() ? "" : " ") + std::string(cell_name(c)) + "=(" + std::to_string(g.row[c]) + "," +
             std::to_string(g.col[c]) + ")";
    return s;
}

std::string dominance_text(const Dominance& d, Player p) {
    if (!d.dominant()) return "none";
    const char* s = p == Player::Row ? (d.strategy ? "down" : "up") : (d.strategy ? "right" : "left");
    return std::string(d.kind == DominanceKind::Strict ? "strict " : "weak ") + s;
}

void print_game_line(std::ostream& out, const Game& g) {
    out << atlas().id_of(g) << '\t' << format_game(g) << '\t' << name_of(g) << '\n';
}

void print_classification(std::ostream& out, const Game& g) {
    Classification c = classify(g);
    auto ls = layers_of(g);
    std::string layers;
    for (Layer l : ls) layers += (layers.empty() ? "" : ",") + std::string(layer_name(l));
    out << "id: " << atlas().id_of(g) << '\n';
    out << "encoding: " << format_game(g) << '\n';
    out << "name: " << name_of(g) << '\n';
    out << "common names: " << names_text(g) << '\n';
    out << "tie classes: " << class_pair(g) << '\n';
    out << "layer: " << layers << '\n';
    out << "symmetric: " << (is_symmetric(g) ? "yes" : "no") << '\n';
    out << "family: " << family_name(c.family) << '\n';
    out << "subfamily: " << subfamily_name(c.subfamily) << '\n';
    out << "nash: " << cells_text(g, c.nash_weak) << '\n';
    out << "strict nash: " << cells_text(g, c.nash_strict) << '\n';
    out << "dominance: row " << dominance_text(c.dominance[0], Player::Row) << "; column "
        << dominance_text(c.dominance[1], Player::Column) << '\n';
    out << "pareto optimal: " << cells_text(g, c.pareto_optimal) << '\n';
    out << "fixed rank sum: " << (c.fixed_rank_sum ? "yes" : "no") << '\n';
    out << "inducement: row " << inducement_name(c.inducement[0]) << "; column " << inducement_name(c.inducement[1])
        << '\n';
    try {
        MixedEquilibrium m = mixed_equilibrium(g);
        out << "mixed: up " << m.row_up.decimal() << ", left " << m.col_left.decimal() << ", values "
            << m.row_value.decimal() << "," << m.col_value.decimal() << " (ranks read as cardinal)\n";
    } catch (const no_interior_equilibrium&) {
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topology of 2x2 ordinal games"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "text or records (JSON lines)")->check(CLI::IsMember({"text", "records"}));

    std::string set = "strict";
    auto* census_cmd = app.add_subcommand("census", "family census");
    census_cmd->add_option("--set", set)->check(CLI::IsMember({"strict", "complete"}));

    std::string game_text, move_text_arg, moves = "adjacent", goal_text_arg, costs = "uniform";
    auto* classify_cmd = app.add_subcommand("classify", "classify a game");
    classify_cmd->add_option("game", game_text)->required();

    auto* neighbors_cmd = app.add_subcommand("neighbors", "games one move away");
    neighbors_cmd->add_option("game", game_text)->required();
    neighbors_cmd->add_option("--moves", moves, "adjacent,nonadjacent,ties or all");

    auto* swap_cmd = app.add_subcommand("swap", "apply one move");
    swap_cmd->add_option("game", game_text)->required();
    swap_cmd->add_option("move", move_text_arg, "e.g. row:high, col:tie-low, row:break-low:UL")->required();

    auto* path_cmd = app.add_subcommand("path", "shortest path to a goal");
    path_cmd->add_option("game", game_text)->required();
    path_cmd->add_option("--goal", goal_text_arg, "family:F, subfamily:S, game:G or layer:Ln")->required();
    path_cmd->add_option("--moves", moves);
    path_cmd->add_option("--costs", costs)->check(CLI::IsMember({"uniform", "graded"}));

    std::string class_filter, equiv = "interchange";
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list games");
    enumerate_cmd->add_option("--class", class_filter, "class or row-column class pair, e.g. strict or strict-low");
    enumerate_cmd->add_option("--equiv", equiv)->check(CLI::IsMember({"none", "interchange", "reflection"}));

    auto* name_cmd = app.add_subcommand("name", "coordinate name of a game");
    name_cmd->add_option("game", game_text)->required();

    std::string which = "strict", chart_format = "svg", output;
    auto* chart_cmd = app.add_subcommand("chart", "render a chart");
    chart_cmd->add_option("--which", which)->check(CLI::IsMember({"strict", "complete"}));
    chart_cmd->add_option("--format", chart_format)->check(CLI::IsMember({"svg", "dot"}));
    chart_cmd->add_option("--moves", moves, "move set drawn as DOT edges");
    chart_cmd->add_option("-o,--output", output);

    const char* env_port = std::getenv("PORT");
    int port = env_port ? std::atoi(env_port) : 8080;
    std::string host = "127.0.0.1";
    auto* serve_cmd = app.add_subcommand("serve", "run the HTTP/JSON service");
    serve_cmd->add_option("--port", port);
    serve_cmd->add_option("--host", host);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    bool records = format == "records";
    std::ostream& out = std::cout;
    try {
        if (census_cmd->parsed()) {
            json j = census_json(census_set(set), set);
            if (records) {
                for (const auto& row : j["rows"]) out << row.dump() << '\n';
            } else {
                out << "subfamily\tfamily\tsymmetric\tasymmetric\ttotal\n";
                for (const auto& row : j["rows"])
                    out << row["subfamily"].get<std::string>() << '\t' << row["family"].get<std::string>() << '\t'
                        << row["symmetric"] << '\t' << row["asymmetric"] << '\t' << row["total"] << '\n';
                for (const auto& f : j["families"])
                    out << "family " << f["family"].get<std::string>() << '\t' << f["symmetric"] << '\t'
                        << f["asymmetric"] << '\t' << f["total"] << '\n';
                out << "total\t" << j["total"] << '\n';
            }
        } else if (classify_cmd->parsed()) {
            Game g = need_game(game_text);
            if (records) out << game_record(g).dump() << '\n';
            else print_classification(out, g);
        } else if (neighbors_cmd->parsed()) {
            Game g = need_game(game_text);
            MoveSet ms = parse_move_set(moves);
            if (records) {
                for (const auto& n : neighbors_json(g, ms)) out << n.dump() << '\n';
            } else {
                for (auto& [m, h] : neighbors(g, ms))
                    out << move_text(m) << '\t' << format_game(h) << '\t' << name_of(h) << '\n';
            }
        } else if (swap_cmd->parsed()) {
            Game h = apply_swap(need_game(game_text), parse_move(move_text_arg));
            if (records) out << game_record(h).dump() << '\n';
            else print_game_line(out, h);
        } else if (path_cmd->parsed()) {
            Game g = need_game(game_text);
            Goal goal = parse_goal(goal_text_arg);
            MoveSet ms = parse_move_set(moves);
            CostModel cm = *parse_cost_model(costs);
            Path p = shortest_path(g, goal, ms, cm);
            if (records) {
                out << path_json(p, goal, ms, cm).dump() << '\n';
            } else {
                out << "0\tstart\t" << format_game(p.start) << '\t' << name_of(p.start) << '\n';
                for (std::size_t i = 0; i < p.steps.size(); ++i)
                    out << i + 1 << '\t' << move_text(p.steps[i].move) << '\t' << format_game(p.steps[i].game) << '\t'
                        << name_of(p.steps[i].game) << '\n';
                out << "cost\t" << p.cost << '\n';
            }
        } else if (enumerate_cmd->parsed()) {
            Equivalence e = *parse_equivalence(equiv);
            std::optional<ClassFilter> f;
            if (!class_filter.empty()) {
                auto [r, c] = split_name(class_filter);
                auto rc = parse_tie_class(r), cc = parse_tie_class(c);
                if (!rc || !cc) throw parse_error("unknown tie class in " + class_filter);
                f = ClassFilter{*rc, *cc};
            }
            auto games = enumerate_games(f, e);
            for (std::size_t i = 0; i < games.size(); ++i) {
                const Game& g = games[i];
                std::string name = e == Equivalence::None ? "-" : name_of(g);
                if (records)
                    out << json{{"index", i}, {"encoding", format_game(g)}, {"tie_classes", class_pair(g)},
                                {"coordinate_name", name}}
                               .dump()
                        << '\n';
                else
                    out << i << '\t' << format_game(g) << '\t' << class_pair(g) << '\t' << name << '\n';
            }
        } else if (name_cmd->parsed()) {
            Game g = need_game(game_text);
            if (records) out << game_ref(g).dump() << '\n';
            else out << name_of(g) << '\n';
        } else if (chart_cmd->parsed()) {
            std::string doc = render(layout(*parse_chart_kind(which)), *parse_chart_format(chart_format),
                                     parse_move_set(moves));
            if (output.empty()) {
                out << doc;
            } else {
                std::ofstream f(output, std::ios::binary);
                if (!f) throw error("cannot write " + output);
                f << doc;
            }
        } else if (serve_cmd->parsed()) {
            std::cerr << "listening on " << host << ":" << port << '\n';
            if (!serve(host, port)) {
                std::cerr << "cannot listen on " << host << ":" << port << '\n';
                return 2;
            }
        }
    } catch (const no_path& e) {
        std::cerr << "error: " << e.what() << " (explored " << e.explored << " games)\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
