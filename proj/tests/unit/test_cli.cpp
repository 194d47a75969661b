#include "support.hpp"

#include "genus2/checks.hpp"
#include "genus2/expr.hpp"
#include "genus2/golden.hpp"
#include "genus2/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

using namespace genus2;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("genus2_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("report json round trip, timings only on request") {
    VerificationReport r{"gm.x", Status::fail, 12.5, Json{{"difference", "t2"}}, "somewhere", "detail"};
    Json j = r.to_json();
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(r.to_json(true).at("elapsed_ms") == 12.5);
    VerificationReport back = VerificationReport::from_json(r.to_json(true));
    CHECK(back.id == r.id);
    CHECK(back.status == Status::fail);
    CHECK(back.residual == r.residual);
    CHECK(back.to_json() == j);
}

TEST_CASE("failing checks always carry a residual") {
    CheckConfig cfg;
    CheckContext ctx(cfg);
    CheckSpec spec{"x.y", "x", 0, "anchor", {}, [](const CheckContext&) { return Outcome{false, "no", std::nullopt}; }};
    VerificationReport r = run_check(spec, ctx);
    CHECK(r.status == Status::fail);
    CHECK(r.residual.has_value());
    CheckSpec boom{"x.z", "x", 0, "anchor", {}, [](const CheckContext&) -> Outcome { throw AlgebraError("bad"); }};
    CHECK(run_check(boom, ctx).status == Status::fail);
    CHECK(run_check(boom, ctx).residual.has_value());
}

TEST_CASE("emit is deterministic") {
    auto id = RFMatrix::identity(2, make_table({"t"}));
    CHECK(emit(id, Format::json) == emit(id, Format::json));
    CHECK(rfmatrix_from_json(Json::parse(emit(id, Format::json))) == id);
    CHECK(latex(id) == "\\left(\\begin{matrix}\n1 & 0 \\\\\n0 & 1\n\\end{matrix}\\right)");
}

TEST_CASE("latex follows the printed conventions") {
    auto vt = t_table();
    RatFunc t2(MPoly::variable(vt, "t2")), t4(MPoly::variable(vt, "t4"));
    CHECK(latex(RatFunc(vt, frac(-2, 3)) * t2.pow(2)) == "-\\frac{2t_{2}^{2}}{3}");
    CHECK(latex(t2 / (t4 * Rational(3))) == "\\frac{t_{2}}{3t_{4}}");
    CHECK(latex(t2 - t4) == "t_{2}-t_{4}");
    CHECK(latex(RatFunc(MPoly::variable(frame_table(), "s11"))) == "s_{11}");
    CHECK(latex(RatFunc(vt)) == "0");
    CHECK(parse_format("latex") == Format::latex);
    CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("transcriptions parse into golden entries") {
    std::string text =
        "# a small example\n"
        "@vars t\n"
        "@item f ratfunc\n"
        "t2^2 - ((1)/(3))*t5\n"
        "@item m matrix 2 2\n"
        "1 & t2\n"
        "# inline note\n"
        "0 & -1\n"
        "@vars none\n"
        "@item words text\n"
        "A = B\n";
    GoldenEntry e = parse_transcription(text, "demo");
    CHECK(e.anchor == "a small example");
    CHECK(e.notes == std::vector<std::string>{"inline note"});
    auto vt = t_table();
    CHECK(e.ratfunc("f") == RatFunc(MPoly::variable(vt, "t2").pow(2) - MPoly::variable(vt, "t5").scaled(frac(1, 3))));
    CHECK(e.matrix("m")(0, 1) == RatFunc(MPoly::variable(vt, "t2")));
    CHECK(e.text("words") == std::vector<std::string>{"A = B"});
    CHECK_THROWS_AS(e.item("nope"), GoldenMissing);
    CHECK_THROWS_AS(parse_transcription("@item m matrix 2 2\n1 & 2\n", "bad"), ParseError);
    CHECK_THROWS_AS(parse_transcription("@vars nowhere\n", "bad"), ParseError);
}

TEST_CASE("golden store: save, load, byte-identical re-serialisation") {
    fs::path dir = scratch("store");
    GoldenStore store(dir);
    GoldenEntry e = parse_transcription("# demo\n@vars t\n@item f ratfunc\nt2/t3\n", "demo");
    store.save(e);
    CHECK(store.has("demo"));
    CHECK(store.ids() == std::vector<std::string>{"demo"});
    CHECK(store.roundtrip("demo"));
    CHECK(store.load("demo").to_json() == e.to_json());
    CHECK_THROWS_AS(store.load("absent"), GoldenMissing);
    // a non-canonical file is detected
    std::ofstream(store.path("demo"), std::ios::app) << " ";
    CHECK_FALSE(store.roundtrip("demo"));
    fs::remove_all(dir);
}

TEST_CASE("committed golden files are canonical") {
    GoldenStore store;
    REQUIRE_FALSE(store.ids().empty());
    for (const auto& id : store.ids()) {
        INFO(id);
        CHECK(store.roundtrip(id));
    }
}

TEST_CASE("config files") {
    fs::path dir = scratch("config");
    std::ofstream(dir / "ok.json") << R"({"only": ["monodromy"], "seed": 9, "golden_dir": "g", "order": 14})";
    CheckConfig c = CheckConfig::from_file(dir / "ok.json");
    CHECK(c.only == std::vector<std::string>{"monodromy"});
    CHECK(c.seed == 9);
    CHECK(c.golden_dir == dir / "g");
    CHECK(c.order == 14);
    std::ofstream(dir / "typo.json") << R"({"seeds": 3})";
    CHECK_THROWS_AS(CheckConfig::from_file(dir / "typo.json"), ConfigError);
    std::ofstream(dir / "bad.json") << R"({"only": ["nothing-here"]})";
    CHECK_THROWS_AS(CheckConfig::from_file(dir / "bad.json"), ConfigError);
    std::ofstream(dir / "broken.json") << "{";
    CHECK_THROWS_AS(CheckConfig::from_file(dir / "broken.json"), ConfigError);
    CHECK_THROWS_AS(CheckConfig::from_file(dir / "missing.json"), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("registry is in dependency order with unique ids") {
    const auto& reg = check_registry();
    const auto& groups = check_groups();
    std::size_t gi = 0;
    std::set<std::string> ids;
    for (const auto& c : reg) {
        CHECK(ids.insert(c.id).second);
        while (gi < groups.size() && groups[gi] != c.group) ++gi;
        CHECK(gi < groups.size());
        CHECK(c.id.rfind(c.group + ".", 0) == 0);
        CHECK(c.criterion >= 1);
        CHECK(c.criterion <= 8);
    }
    std::size_t mono = 0;
    for (const auto& c : reg) mono += selected(c, {"monodromy"});
    CHECK(mono == 5);
}

TEST_CASE("run_all skips checks whose golden file is missing") {
    CheckConfig cfg;
    cfg.golden_dir = scratch("empty");
    cfg.only = {"monodromy.relations", "monodromy.abcd5"};
    auto reports = run_all(cfg);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].status == Status::pass);  // abcd5 needs no golden data
    CHECK(reports[1].status == Status::skipped);
    CHECK(exit_code(reports) == 1);
    fs::remove_all(cfg.golden_dir);
}

TEST_CASE("connection cache is reused") {
    fs::path dir = scratch("cache");
    auto fam = HyperellipticFamily::quintic();
    ConnectionMatrix a = cached_connection(fam, dir);
    REQUIRE(fs::exists(dir / (fam.hash() + ".json")));
    ConnectionMatrix b = cached_connection(fam, dir);
    for (int m = 2; m <= 5; ++m) CHECK(a[m] == b[m]);
    fs::remove_all(dir);
}
