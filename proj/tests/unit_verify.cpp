#include <doctest.h>

#include <json.hpp>

#include "spectragraft/families.hpp"
#include "spectragraft/spectral.hpp"
#include "spectragraft/tree_enum.hpp"
#include "spectragraft/verify.hpp"

using namespace spectragraft;

namespace {

nlohmann::json strip_elapsed(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    for (auto& entry : j["claims"])
        entry.erase("elapsed_ms");
    return j;
}

} // namespace

TEST_CASE("find_extremal fixtures") {
    ExtremalResult singleton = find_extremal({7, TreeClass::non_caterpillar, Direction::min});
    CHECK_FALSE(singleton.vacuous);
    CHECK(singleton.class_size == 1);
    CHECK(singleton.code == canonical_code(make_broom(7, 0, {1, 1, 1})));
    CHECK_FALSE(singleton.margin.has_value());

    ExtremalResult vac = find_extremal({6, TreeClass::non_caterpillar, Direction::min});
    CHECK(vac.vacuous);
    CHECK(vac.class_size == 0);

    ExtremalResult min10 = find_extremal({10, TreeClass::non_caterpillar, Direction::min}, 2);
    CHECK(min10.code == canonical_code(make_broom(10, 3, {1, 1, 1})));
    CHECK(min10.ties.empty());

    ExtremalResult max10 = find_extremal({10, TreeClass::non_caterpillar, Direction::max}, 2);
    CHECK(max10.code == canonical_code(make_spider(10, {2, 2, 5})));

    CHECK_THROWS_AS(find_extremal({0, TreeClass::all, Direction::min}), error);
    CHECK_THROWS_AS(find_extremal({enumeration_cap() + 1, TreeClass::all, Direction::min}), error);
}

TEST_CASE("claim catalog and validation") {
    CHECK(claim_catalog().size() == 12);
    CHECK(is_valid_claim("2.5"));
    CHECK(is_valid_claim("3.6"));
    CHECK_FALSE(is_valid_claim("4.1"));
    RunOptions opts;
    CHECK_THROWS_AS(run_claim("bogus", opts), error);
    opts.jobs = 0;
    CHECK_THROWS_AS(run_claim("2.5", opts), error);
}

TEST_CASE("theorem claims verify on small ranges") {
    RunOptions opts;
    opts.n_max = 9;

    auto entries25 = run_claim("2.5", opts);
    REQUIRE(entries25.size() == 3); // n = 7, 8, 9
    for (const auto& e : entries25) {
        CHECK(e.status == "verified");
        CHECK(e.extremal_code == e.expected_code);
        CHECK(e.ties.empty());
    }
    CHECK(entries25[0].class_size == 1);
    CHECK_FALSE(entries25[0].margin.has_value());
    CHECK(entries25[1].margin.value() > 1.0);

    auto entries26 = run_claim("2.6", opts);
    REQUIRE(entries26.size() == 2); // n = 8, 9
    for (const auto& e : entries26)
        CHECK(e.status == "verified");

    auto entries34 = run_claim("3.4", opts);
    for (const auto& e : entries34) {
        CHECK(e.status == "verified");
        CHECK(e.expected_code == canonical_code(make_spider(e.n, {2, 2, e.n - 5})));
    }

    auto entries36 = run_claim("3.6", opts);
    REQUIRE(entries36.size() == 2);
    CHECK(entries36[0].n == 8); // coinciding candidates at n = 8
    CHECK(entries36[0].status == "verified");
    CHECK(entries36[1].status == "verified");

    auto entries35 = run_claim("3.5", opts);
    for (const auto& e : entries35)
        CHECK(e.status == "verified");
}

TEST_CASE("claim 3.3 records the realized double-broom parameters") {
    RunOptions opts;
    opts.n_min = 9;
    opts.n_max = 9;
    auto entries = run_claim("3.3", opts);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].status == "verified");
    CHECK(entries[0].realized.has_value());
    // The maximizer over non-starlike trees of order 9 is T(9,4;2,2).
    CHECK(*entries[0].realized == "t1=2,t2=2");
    CHECK(entries[0].extremal_code == canonical_code(make_double_broom(9, 4, 2, 2)));
}

TEST_CASE("lemma sweeps verify on small ranges") {
    RunOptions opts;
    opts.n_max = 7;

    for (const char* id : {"2.1", "3.1", "3.2"}) {
        auto entries = run_claim(id, opts);
        for (const auto& e : entries) {
            INFO(id << " n=" << e.n);
            CHECK((e.status == "verified" || e.status == "vacuous"));
            if (e.status == "verified")
                CHECK(e.margin.value() > 0.0);
        }
    }

    // Order 2 and 3 trees admit no eligible c-transform configuration; P_4
    // brings the first one (stars alone stay vacuous but P_4 does not).
    auto e21 = run_claim("2.1", opts);
    CHECK(e21[0].n == 2);
    CHECK(e21[0].status == "vacuous");
    CHECK(e21[1].status == "vacuous");
    CHECK(e21[2].status == "verified");
}

TEST_CASE("sweeps above their exhaustive range sample deterministically") {
    RunOptions opts;
    opts.n_min = 10;
    opts.n_max = 10;
    opts.jobs = 2;

    auto e21 = run_claim("2.1", opts); // exhaustive cap is 9
    REQUIRE(e21.size() == 1);
    CHECK(e21[0].status == "verified");
    CHECK(e21[0].class_size > 0);
    CHECK(e21[0].class_size <= 2000);

    RunOptions opts9;
    opts9.n_min = 9;
    opts9.n_max = 9;
    auto e31 = run_claim("3.1", opts9); // exhaustive cap is 8
    REQUIRE(e31.size() == 1);
    CHECK(e31[0].status == "verified");
    CHECK(e31[0].class_size <= 2000);

    auto again = run_claim("3.1", opts9);
    CHECK(again[0].class_size == e31[0].class_size);
    CHECK(again[0].margin == e31[0].margin);
}

TEST_CASE("claim 3.3 handles its singleton order") {
    RunOptions opts;
    opts.n_min = 6;
    opts.n_max = 6;
    auto entries = run_claim("3.3", opts); // the only non-starlike tree of order 6
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].class_size == 1);
    CHECK(entries[0].status == "verified");
    CHECK(entries[0].realized == "t1=2,t2=2");
}

TEST_CASE("family inequality hypothesis filters") {
    RunOptions opts;
    opts.n_min = 9;
    opts.n_max = 9;

    auto e22 = run_claim("2.2", opts);
    REQUIRE(e22.size() == 1);
    CHECK(e22[0].status == "verified");
    // Tuples of n1<=n2<=n3 summing with n0 to 5 and max > 1:
    // (0,1,1,3) (0,1,2,2) (1,1,1,2) -> 3 tuples; (2,1,1,1) is filtered out.
    CHECK(e22[0].class_size == 3);

    auto e24 = run_claim("2.4", opts);
    REQUIRE(e24.size() == 1);
    CHECK(e24[0].status == "verified");
    // n1+n2+n3 > 4: (0,1,1,3) (0,1,2,2) -> 2 tuples.
    CHECK(e24[0].class_size == 2);
}

TEST_CASE("invariant sweep runs clean") {
    RunOptions opts;
    opts.n_min = 3;
    opts.n_max = 8;
    auto entries = run_claim("2.3", opts);
    REQUIRE(entries.size() == 6);
    for (const auto& e : entries) {
        CHECK(e.status == "verified");
        CHECK(e.margin.value() > 0.0);
    }
    // 100 random vectors per tree at these orders, plus the deterministic checks.
    CHECK(entries[0].class_size >= 100);
}

TEST_CASE("range resolution") {
    RunOptions opts;
    opts.n_min = 2;
    opts.n_max = 8;
    auto entries = run_claim("2.5", opts); // clipped to the hypothesis minimum 7
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].n == 7);
    CHECK(entries[1].n == 8);

    RunOptions bad;
    bad.n_max = 5;
    CHECK_THROWS_AS(run_claim("2.5", bad), error); // empty range for a single claim

    RunOptions all_small;
    all_small.n_max = 7;
    auto all_entries = run_claim("all", all_small); // claims below their minimum just drop out
    for (const auto& e : all_entries)
        CHECK(e.n <= 7);

    RunOptions over;
    over.n_max = enumeration_cap() + 1;
    CHECK_THROWS_AS(run_claim("2.5", over), error);
}

TEST_CASE("reports are deterministic and jobs-independent") {
    RunOptions opts;
    opts.n_max = 8;
    ReportMeta meta{"all", -1, 8, opts.seed};

    auto first = run_claim("all", opts);
    std::string json1 = report_json(first, meta);
    auto second = run_claim("all", opts);
    std::string json2 = report_json(second, meta);
    CHECK(strip_elapsed(json1) == strip_elapsed(json2));

    RunOptions parallel = opts;
    parallel.jobs = 4;
    auto third = run_claim("all", parallel);
    std::string json3 = report_json(third, meta);
    CHECK(strip_elapsed(json1) == strip_elapsed(json3));

    // Byte-identical apart from elapsed fields.
    CHECK(strip_elapsed(json1).dump(2) == strip_elapsed(json3).dump(2));
}

TEST_CASE("report JSON carries the documented fields") {
    RunOptions opts;
    opts.n_min = 7;
    opts.n_max = 8;
    auto entries = run_claim("2.5", opts);
    auto j = nlohmann::json::parse(report_json(entries, ReportMeta{"2.5", 7, 8, opts.seed}));
    CHECK(j["claim"] == "2.5");
    CHECK(j["n_min"] == 7);
    CHECK(j["n_max"] == 8);
    REQUIRE(j["claims"].is_array());
    for (const auto& e : j["claims"]) {
        CHECK(e.contains("claim"));
        CHECK(e.contains("n"));
        CHECK(e.contains("class_size"));
        CHECK(e.contains("status"));
        CHECK(e.contains("extremal_code"));
        CHECK(e.contains("expected_code"));
        CHECK(e.contains("rho_extremal"));
        CHECK(e.contains("margin"));
        CHECK(e.contains("ties"));
        CHECK(e.contains("elapsed_ms"));
        CHECK(e.contains("definition"));
    }
    CHECK(j["summary"]["verified"] == 2);
    CHECK(j["summary"]["exit_code"] == 0);
}

TEST_CASE("counterexample entries replay through the parser") {
    // Fabricated entry: the machinery around counterexamples must round-trip
    // the edge list even though the claims themselves hold.
    ClaimEntry e;
    e.claim = "2.5";
    e.n = 7;
    e.class_size = 1;
    e.status = "counterexample";
    e.extremal_code = canonical_code(make_path(7));
    e.expected_code = canonical_code(make_broom(7, 0, {1, 1, 1}));
    e.rho_extremal = spectral_radius(make_path(7)).rho;
    e.counterexample = write_edge_list_inline(make_path(7));
    e.counterexample_detail = "fabricated for the round-trip test";
    std::string json = report_json({e}, ReportMeta{"2.5", 7, 7, 0});
    auto j = nlohmann::json::parse(json);
    REQUIRE(j["claims"].size() == 1);
    Graph replay = parse_edge_list_inline(j["claims"][0]["counterexample"].get<std::string>());
    CHECK(spectral_radius(replay).rho == doctest::Approx(*e.rho_extremal).epsilon(1e-12));
    CHECK(j["summary"]["exit_code"] == 1);
    CHECK(exit_code_for({e}) == 1);

    ClaimEntry tied = e;
    tied.status = "tied";
    tied.counterexample.reset();
    CHECK(exit_code_for({tied}) == 3);
    tied.status = "vacuous";
    CHECK(exit_code_for({tied}) == 0);
}

TEST_CASE("CSV summary lines up with the JSON report") {
    RunOptions opts;
    opts.n_min = 7;
    opts.n_max = 9;
    auto entries = run_claim("2.5", opts);
    std::string json = report_json(entries, ReportMeta{"2.5", 7, 9, opts.seed});
    std::string csv = report_csv_from_json(json);
    CHECK(csv.rfind("claim,n,class_size,status,extremal_code,expected_code,rho_extremal,margin,ties,"
                    "elapsed_ms\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4); // header + 3 rows
    CHECK(csv.find("2.5,7,1,verified") != std::string::npos);

    CHECK_THROWS_AS(report_csv_from_json("not json"), error);
    CHECK_THROWS_AS(report_csv_from_json("{}"), error);
}

TEST_CASE("tree filters for enumeration") {
    auto all = parse_tree_filter("all");
    auto nc = parse_tree_filter("non-caterpillar");
    auto ns = parse_tree_filter("non-starlike");
    auto inter = parse_tree_filter("intersection");
    auto p4 = parse_tree_filter("pendants=4");
    long c_all = 0, c_nc = 0, c_ns = 0, c_inter = 0, c_p4 = 0;
    for (const Graph& t : enumerate_trees(8)) {
        c_all += all(t);
        c_nc += nc(t);
        c_ns += ns(t);
        c_inter += inter(t);
        c_p4 += p4(t);
    }
    CHECK(c_all == 23);
    CHECK(c_nc == 3);
    CHECK(c_ns == 11);
    CHECK(c_inter == 1);
    CHECK(c_p4 == 8);

    CHECK_THROWS_AS(parse_tree_filter("bogus"), error);
    CHECK_THROWS_AS(parse_tree_filter("pendants=x"), error);
}
