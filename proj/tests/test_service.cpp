#include <gtopo/http.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <thread>

using namespace gtopo;

namespace {

Response get(const std::string& path, std::map<std::string, std::string> query = {}) {
    return handle({"GET", path, std::move(query), ""});
}

Response post_path(const json& body) { return handle({"POST", "/api/path", {}, body.dump()}); }

struct CliRun {
    int status;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(GTOPO_CLI) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> p(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p.get())) > 0) out.append(buf.data(), n);
    int rc = pclose(p.release());
    return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST(Service, GameRecordByName) {
    Response r = get("/api/games/sd-sd");
    ASSERT_EQ(r.status, 200);
    json j = json::parse(r.body);
    EXPECT_EQ(j["encoding"], "1324/4321");
    EXPECT_EQ(j["coordinate_name"], "sd-sd");
    EXPECT_EQ(j["common_names"][0], "Prisoner's Dilemma");
    EXPECT_EQ(j["layer"], "L1");
    EXPECT_EQ(j["classification"]["family"], "pd-family");
    EXPECT_EQ(j["neighbors"].size(), 6u);
    EXPECT_EQ(j["id"], atlas().id_of(parse_game("1324/4321")));
}

TEST(Service, GameKeyForms) {
    std::string want = get("/api/games/sd-sd").body;
    EXPECT_EQ(get("/api/games/1324/4321").body, want);
    EXPECT_EQ(get("/api/games/1324.4321").body, want);
    EXPECT_EQ(get("/api/games/Prisoner%27s%20Dilemma").body, want);
    EXPECT_EQ(get("/api/games/" + std::to_string(atlas().id_of(parse_game("1324/4321")))).body, want);
    EXPECT_EQ(get("/api/games/nonsense").status, 404);
}

TEST(Service, RecordsMatchLibrary) {
    for (const Game& g : atlas().games) {
        Response r = get("/api/games/" + name_of(g));
        ASSERT_EQ(r.status, 200) << name_of(g);
        EXPECT_EQ(r.body, game_record(g).dump());
        json back = json::parse(r.body);
        EXPECT_EQ(parse_game(back["encoding"].get<std::string>()), g);
        EXPECT_EQ(back["id"].get<int>(), atlas().id_of(g));
    }
}

TEST(Service, NeighborsAndClassification) {
    Response n = get("/api/games/sd-sd/neighbors", {{"moves", "all"}});
    ASSERT_EQ(n.status, 200);
    json j = json::parse(n.body);
    EXPECT_EQ(j["neighbors"].size(), neighbors(parse_game("1324/4321"), MoveSet{true, true, true}).size());
    EXPECT_EQ(get("/api/games/sd-sd/neighbors", {{"moves", "sideways"}}).status, 400);
    Response c = get("/api/games/sc-sc/classification");
    ASSERT_EQ(c.status, 200);
    json k = json::parse(c.body);
    EXPECT_EQ(k["classification"]["subfamily"], "chicken");
    EXPECT_EQ(k["classification"]["mixed"]["row_up"], "0.5");
}

TEST(Service, ApplyMove) {
    Response r = get("/api/games/sd-sd/apply", {{"move", "row:high"}});
    ASSERT_EQ(r.status, 200);
    EXPECT_EQ(json::parse(r.body)["coordinate_name"], "su-sd");
    EXPECT_EQ(get("/api/games/sd-sd/apply", {{"move", "row:break-low:UL"}}).status, 422);
    EXPECT_EQ(get("/api/games/sd-sd/apply", {{"move", "bogus"}}).status, 400);
    EXPECT_EQ(get("/api/games/sd-sd/apply").status, 400);
}

TEST(Service, PathFromChicken) {
    Response r = post_path({{"from", "sc-sc"}, {"goal", "family:win-win"}});
    ASSERT_EQ(r.status, 200);
    json j = json::parse(r.body);
    EXPECT_EQ(j["length"], 2);
    EXPECT_EQ(j["end"]["coordinate_name"], "sn-sn");
    EXPECT_EQ(common_names(parse_game(j["steps"][0]["encoding"].get<std::string>())).front(), "Hegemony");
    json pd = json::parse(post_path({{"from", "sd-sd"}, {"goal", "family:win-win"}}).body);
    EXPECT_EQ(pd["end"]["coordinate_name"], "su-su");
}

TEST(Service, PathErrors) {
    EXPECT_EQ(post_path({{"from", "nonsense"}, {"goal", "family:win-win"}}).status, 404);
    EXPECT_EQ(post_path({{"from", "sd-sd"}, {"goal", "family:nowhere"}}).status, 400);
    EXPECT_EQ(post_path({{"from", "sd-sd"}}).status, 400);
    EXPECT_EQ(handle({"POST", "/api/path", {}, "{not json"}).status, 400);
    Response r = post_path({{"from", "sd-sd"}, {"goal", "game:Low Dilemma"}, {"moves", "adjacent"}});
    EXPECT_EQ(r.status, 422);
    EXPECT_EQ(json::parse(r.body)["explored"], 144);
    EXPECT_EQ(post_path({{"from", "sd-sd"}, {"goal", "game:Low Dilemma"}, {"moves", "all"}}).status, 200);
}

TEST(Service, CensusAndChart) {
    json s = json::parse(get("/api/census", {{"set", "strict"}}).body);
    EXPECT_EQ(s["total"], 144);
    json c = json::parse(get("/api/census", {{"set", "complete"}}).body);
    EXPECT_EQ(c["total"], 1413);
    EXPECT_EQ(get("/api/census", {{"set", "half"}}).status, 400);
    Response svg = get("/api/chart.svg", {{"which", "strict"}});
    EXPECT_EQ(svg.status, 200);
    EXPECT_EQ(svg.content_type, "image/svg+xml");
    EXPECT_EQ(svg.body, render_svg(layout_strict()));
    EXPECT_EQ(get("/api/chart.svg", {{"which", "round"}}).status, 400);
    EXPECT_EQ(get("/api/nowhere").status, 404);
}

TEST(Service, IdenticalQueriesGiveIdenticalContent) {
    EXPECT_EQ(get("/api/games/mu-ld").body, get("/api/games/mu-ld").body);
    EXPECT_EQ(post_path({{"from", "sd-sd"}, {"goal", "layer:L3"}, {"costs", "graded"}}).body,
              post_path({{"from", "sd-sd"}, {"goal", "layer:L3"}, {"costs", "graded"}}).body);
}

TEST(Service, RealHttpRoundTrip) {
    httplib::Server server;
    install_routes(server);
    int port = server.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port, 0);
    std::thread t([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    httplib::Client client("127.0.0.1", port);
    auto r = client.Get("/api/games/sd-sd");
    ASSERT_TRUE(r);
    EXPECT_EQ(r->status, 200);
    EXPECT_EQ(r->body, game_record(parse_game("1324/4321")).dump());
    auto n = client.Get("/api/games/nonsense");
    ASSERT_TRUE(n);
    EXPECT_EQ(n->status, 404);
    auto p = client.Post("/api/path", R"({"from":"sc-sc","goal":"family:win-win"})", "application/json");
    ASSERT_TRUE(p);
    EXPECT_EQ(p->status, 200);
    EXPECT_EQ(json::parse(p->body)["length"], 2);
    auto q = client.Get("/api/games/sd-sd/neighbors?moves=ties");
    ASSERT_TRUE(q);
    EXPECT_EQ(json::parse(q->body)["moves"], "ties");
    server.stop();
    t.join();
}

TEST(Service, SelfCheckPasses) { EXPECT_NO_THROW(self_check()); }

TEST(Cli, RecordsMatchLibrary) {
    CliRun r = run_cli("--format records classify 1324/4321");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, game_record(parse_game("1324/4321")).dump() + "\n");
    CliRun n = run_cli("--format records neighbors sd-sd --moves all");
    EXPECT_EQ(n.out.empty(), false);
    std::string want;
    for (const auto& x : neighbors_json(parse_game("1324/4321"), MoveSet{true, true, true})) want += x.dump() + "\n";
    EXPECT_EQ(n.out, want);
    CliRun p = run_cli("--format records path sc-sc --goal family:win-win");
    Goal g = parse_goal("family:win-win");
    EXPECT_EQ(p.out, path_json(shortest_path(parse_game("2314/4312"), g), g, MoveSet{}, CostModel::Uniform).dump() + "\n");
}

TEST(Cli, TextOutputs) {
    CliRun c = run_cli("classify 1324/4321");
    EXPECT_NE(c.out.find("family: pd-family"), std::string::npos);
    EXPECT_NE(run_cli("classify Chicken").out.find("mixed: up 0.5, left 0.5, values 2.5,2.5"), std::string::npos);
    EXPECT_NE(c.out.find("nash: DL=(2,2)"), std::string::npos);
    EXPECT_NE(c.out.find("dominance: row strict down; column strict left"), std::string::npos);
    EXPECT_NE(c.out.find("name: sd-sd"), std::string::npos);
    EXPECT_NE(c.out.find("Prisoner's Dilemma"), std::string::npos);
    CliRun census = run_cli("census --set strict");
    EXPECT_NE(census.out.find("total\t144"), std::string::npos);
    CliRun path = run_cli("path 1324/4321 --goal family:win-win");
    EXPECT_NE(path.out.find("2\tcol:high\t1423/3421\tsu-su"), std::string::npos);
    EXPECT_EQ(run_cli("name 1324/4321").out, "sd-sd\n");
    EXPECT_EQ(run_cli("swap sd-sd row:high").out, std::to_string(atlas().id_of(parse_game("1423/4321"))) + "\t1423/4321\tsu-sd\n");
    CliRun e = run_cli("enumerate --class strict-strict");
    EXPECT_EQ(std::count(e.out.begin(), e.out.end(), '\n'), 144);
    CliRun r = run_cli("enumerate --class strict --equiv reflection");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 78);
    CliRun dot = run_cli("chart --which strict --format dot");
    EXPECT_EQ(dot.out, render_dot(layout_strict()));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("classify nonsense").status, 2);
    EXPECT_EQ(run_cli("swap sd-sd row:sideways").status, 2);
    EXPECT_EQ(run_cli("path sd-sd --goal game:ld-ld").status, 2);
    EXPECT_EQ(run_cli("frobnicate").status, 2);
    EXPECT_EQ(run_cli("name sd-sd").status, 0);
}
