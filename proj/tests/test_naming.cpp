#include <gtopo/naming.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace gtopo;

TEST(Naming, RoundTripOverCompleteSet) {
    std::set<std::string> names;
    for (const Game& g : atlas().games) {
        std::string n = name_of(g);
        EXPECT_EQ(parse_name(n), g) << n;
        names.insert(n);
    }
    EXPECT_EQ(names.size(), 1413u);
}

TEST(Naming, NamesDescribeAnInterchangeVariant) {
    for (const Game& g : atlas().games) {
        CoordinateName c = coordinate_name(g);
        const SymmetricEntry* r = find_code(c.row_code);
        const SymmetricEntry* k = find_code(c.column_code);
        ASSERT_TRUE(r && k);
        Pattern rp = c.row_prime ? rotate180(r->pattern) : r->pattern;
        Pattern cp = mirror(c.column_prime ? rotate180(k->pattern) : k->pattern);
        EXPECT_EQ(apply_transform(g, c.variant), (Game{rp, cp})) << c.str();
    }
}

TEST(Naming, StrictGamesNeedNoPrimes) {
    for (int id : atlas().strict) {
        CoordinateName c = coordinate_name(atlas().games[id]);
        EXPECT_FALSE(c.row_prime || c.column_prime) << c.str();
    }
}

TEST(Naming, KnownNames) {
    EXPECT_EQ(parse_name("sd-sd"), parse_game("1324/4321"));
    EXPECT_EQ(name_of(parse_game("1324/4321")), "sd-sd");
    EXPECT_EQ(name_of(parse_game("1324/4311")), "sd-ld");
    EXPECT_EQ(name_of(parse_game("1314/4311")), "ld-ld");
    EXPECT_EQ(parse_name("A-R"), parse_name("sa-sr"));
    EXPECT_EQ(parse_name("se-sd"), parse_name("sr-sd"));
    EXPECT_EQ(parse_name("mb"), parse_name("mb-mb"));
    EXPECT_EQ(parse_name("he-he"), parse_name("hr-hr"));
    EXPECT_THROW(parse_name("zz-sd"), unknown_code);
    EXPECT_THROW(parse_name("sd-sd-sd"), unknown_code);
}

TEST(Naming, SymmetricGamesUseTheirPrimaryCode) {
    for (const SymmetricEntry& e : symmetric_catalog()) EXPECT_EQ(name_of(e.game), e.code + "-" + e.code);
    for (const SymmetricEntry& e : symmetric_listing())
        if (!e.same_as.empty()) EXPECT_EQ(parse_name(e.code + "-" + e.code), parse_name(e.same_as));
}

TEST(Naming, ResolveAcceptsEveryForm) {
    Game pd = parse_game("1324/4321");
    EXPECT_EQ(resolve_game("1324/4321"), pd);
    EXPECT_EQ(resolve_game("3142/3412"), pd);
    EXPECT_EQ(resolve_game("sd-sd"), pd);
    EXPECT_EQ(resolve_game("prisoner's dilemma"), pd);
    EXPECT_EQ(resolve_game(std::to_string(atlas().id_of(pd))), pd);
    EXPECT_EQ(resolve_game("Coordination"), parse_name("so-so"));
    EXPECT_EQ(resolve_game("Battle of the Sexes"), parse_name("sb-sb"));
    EXPECT_FALSE(resolve_game("nonsense"));
    EXPECT_FALSE(resolve_game("99999"));
}

TEST(Naming, RegistryFileMatchesEmbeddedCopy) {
    std::ifstream in(GTOPO_DATA_DIR "/registry.tsv");
    ASSERT_TRUE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), std::string(embedded_registry));
    Registry r = load_registry(GTOPO_DATA_DIR "/registry.tsv");
    EXPECT_EQ(r.entries.size(), registry().entries.size());
}

TEST(Naming, RegistryEntriesResolve) {
    std::set<std::string> coords;
    for (const CommonNameEntry& e : registry().entries) {
        EXPECT_TRUE(coords.insert(e.coordinate).second) << "duplicate " << e.coordinate;
        EXPECT_EQ(name_of(e.game), e.coordinate);
        EXPECT_FALSE(e.names.empty());
    }
    EXPECT_EQ(common_names(parse_game("1324/4321")), std::vector<std::string>{"Prisoner's Dilemma"});
    EXPECT_TRUE(common_names(parse_game("1423/3421")).front() == "Stag Hunt");
}

TEST(Naming, AtlasExportImportRoundTrip) {
    std::string text = export_atlas(atlas());
    Atlas b = import_atlas(text);
    EXPECT_EQ(b.games, atlas().games);
    EXPECT_EQ(b.strict, atlas().strict);
    EXPECT_EQ(export_atlas(b), text);
    EXPECT_THROW(import_atlas("0\t1324/4321\tstrict-strict\tsd-sd\n2\t2314/4312\tstrict-strict\tsc-sc\n"), parse_error);
    EXPECT_THROW(import_atlas("0\t3142/3412\tstrict-strict\tsd-sd\n"), parse_error);
}
