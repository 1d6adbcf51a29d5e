#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "complexes.hpp"
#include "raag/formats.hpp"

using raag::Json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    Json report() const { return Json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
    std::string cmd = "'" RAAGKIT_PATH "'";
    for (const auto& a : args) cmd += " '" + a + "'";
    cmd += " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto dir = std::filesystem::temp_directory_path() / "raagkit_cli_test";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

const std::string kEast0 = R"({"period":"a"})";
const std::string kEast1 = R"({"base":"b","period":"a"})";
const std::string kNorth = R"({"period":"b"})";

} // namespace

TEST_CASE("documented command examples") {
    auto z2 = write_temp("z2.json", R"({"vertices":["a","b"],"edges":[["a","b"]]})");
    auto len = run({"len", "--graph", z2, "--word", "a a b b b"});
    CHECK(len.code == 0);
    CHECK(len.report()["result"] == 5);

    auto seq = write_temp("seq.json", R"([{"label":"a","base":"1"},{"label":"b","base":"a"}])");
    auto orbit = run({"orbit-equiv", "--graph", "z2", "--seq1", seq, "--seq2", seq});
    CHECK(orbit.code == 0);
    CHECK(orbit.report()["result"]["witness"] == "1");

    auto sep = run({"separators", "--graph", "z2", "--ray1", kEast0, "--ray2", kEast1});
    CHECK(sep.code == 0);
    CHECK(sep.report()["result"]["hyperplanes"].size() == 1);
}

TEST_CASE("reports carry config and digest, and are deterministic") {
    auto a = run({"dist", "--graph", "p3", "--from", "a", "--to", "c b"});
    auto b = run({"dist", "--graph", "p3", "--from", "a", "--to", "c b"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto r = a.report();
    std::vector<std::string> keys;
    for (const auto& [k, v] : r.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "config", "graph", "result"});
    CHECK(r["graph"] == raag::graph_digest(*raag::fixtures::path3()));
    CHECK(r["config"]["horizon"] == 64);

    auto cfg = write_temp("cfg.json", R"({"horizon": 16})");
    CHECK(run({"--config", cfg, "len", "--graph", "f2", "--word", "a"}).report()["config"]["horizon"] == 16);
    CHECK(run({"len", "--config", cfg, "--graph", "f2", "--word", "a"}).report()["config"]["horizon"] == 16);
}

TEST_CASE("exit codes") {
    CHECK(run({"len", "--graph", "z2", "--word", "q"}).code == 3);
    CHECK(run({"len", "--graph", "{oops", "--word", "a"}).code == 3);
    CHECK(run({"bogus"}).code == 3);
    CHECK(run({"len", "--graph", "z2"}).code == 3);
    CHECK(run({"ray-vertex", "--graph", "f2", "--ray", R"({"period":"a b a^-1"})", "--k", "4"}).code == 1);
    CHECK(run({"crossing-graph", "--complex", write_temp("mob.json", raag::to_json(complexes::mobius()).dump())}).code == 1);
    auto north = run({"separators", "--graph", "z2", "--ray1", kEast0, "--ray2", kNorth});
    CHECK(north.code == 2);
    CHECK(north.report()["result"]["exact"] == false);
    auto cfg = write_temp("bad.json", R"({"horizon": 0})");
    CHECK(run({"--config", cfg, "len", "--graph", "z2", "--word", "a"}).code == 3);
    auto fn = write_temp("fa.json", R"([{"period":[{"label":"a","base":"1"}]}])");
    auto fb = write_temp("fb.json", R"([{"preperiod":[{"label":"b","base":"1"}],"period":[{"label":"a","base":"a b"}]}])");
    auto far = run({"fn-equiv", "--graph", "f2", "--alpha", fn, "--beta",
                    write_temp("fc.json", R"([{"period":[{"label":"a","base":"b b b b b b b b"}]}])")});
    CHECK(far.code == 2);
    CHECK(far.report()["result"]["verdict"] == "none-within-radius");
    CHECK(run({"fn-equiv", "--graph", "f2", "--alpha", fn, "--beta", fb}).code == 0);
}

TEST_CASE("every command runs") {
    auto p3cx = write_temp("p3cx.json", raag::to_json(raag::fixtures::path3()->salvetti_complex()).dump());
    auto ann = write_temp("ann.json", raag::to_json(complexes::annulus()).dump());
    auto hseq = write_temp("hseq.json", R"([{"label":"a","base":"1"},{"label":"c","base":"b"}])");
    auto per = write_temp("per.json", R"({"period":[{"label":"a","base":"1"}]})");
    auto sym_u = write_temp("u.json", R"({"period":["x","y"]})");
    auto sym_w = write_temp("w.json", R"({"preperiod":["y"],"period":["x","y"]})");
    auto alpha = write_temp("alpha.json", R"([{"period":[{"label":"a","base":"1"}]}])");
    auto beta = write_temp("beta.json", R"([{"period":[{"label":"a","base":"b"}]}])");
    auto rays = write_temp("rays.json", R"([{"period":"a"},{"base":"b","period":"a"},{"period":"b"}])");
    const std::string coset_a = R"({"base":"1","generators":["a"]})";
    const std::string coset_b = R"({"base":"b b","generators":["a"]})";
    std::vector<std::vector<std::string>> calls{
        {"nf", "--graph", "p3", "--word", "c b a"},
        {"mul", "--graph", "p3", "--left", "a", "--right", "b"},
        {"len", "--graph", "p3", "--word", "a c"},
        {"dist", "--graph", "p3", "--from", "a", "--to", "c"},
        {"median", "--graph", "z2", "--a", "1", "--b", "a a", "--c", "a b"},
        {"gate", "--graph", "z2", "--point", "a a b b b", "--coset", coset_a},
        {"gate-pair", "--graph", "z2", "--coset-a", coset_a, "--coset-b", coset_b},
        {"hp-of-edge", "--graph", "z2", "--at", "b", "--letter", "a"},
        {"duals", "--graph", "f2", "--from", "1", "--to", "a b"},
        {"cross", "--graph", "z2", "--h1", R"({"label":"a","base":"1"})", "--h2", R"({"label":"b","base":"1"})"},
        {"contact-ball", "--graph", "f2", "--center", "1", "--radius", "1"},
        {"invariant", "--graph", "p3", "--seq", hseq},
        {"orbit-equiv", "--graph", "p3", "--seq1", hseq, "--seq2", hseq},
        {"act", "--graph", "p3", "--element", "c", "--seq", hseq},
        {"tail-equiv", "--u", sym_u, "--w", sym_w},
        {"tail-equiv", "--graph", "f2", "--u", per, "--w", per},
        {"fn-equiv", "--graph", "f2", "--alpha", alpha, "--beta", beta},
        {"ray-vertex", "--graph", "f2", "--ray", R"({"base":"b","period":"a"})", "--k", "2"},
        {"ray-classes", "--graph", "z2", "--ray", R"({"base":"b","period":"a b"})"},
        {"spectrum", "--graph", "z2", "--ray", kEast0, "--at", "a", "--label", "a", "--k", "2"},
        {"order-check", "--graph", "z2", "--ray", kEast0, "--x", "1", "--y", "b b b", "--label", "a", "--k", "5"},
        {"separators", "--graph", "z2", "--ray1", kEast0, "--ray2", kEast1},
        {"roller-adjacent", "--graph", "z2", "--ray1", kEast0, "--ray2", kEast1},
        {"check-special", "--complex", p3cx},
        {"crossing-graph", "--complex", p3cx},
        {"salvetti-map", "--complex", ann},
        {"pi1-embed", "--complex", ann},
        {"develop", "--complex", p3cx, "--path", R"([["a",1],["b",1],["a",-1],["b",-1]])"},
        {"convexity-probe", "--complex", ann, "--radius", "2"},
        {"gromov-product", "--graph", "f2", "--x", "a a", "--y", "a b"},
        {"delta", "--graph", "f2", "--center", "1", "--radius", "2"},
        {"boundary-equal", "--graph", "f2", "--ray1", kEast0, "--ray2", kEast1},
        {"fiber-sample", "--graph", "f2", "--rays", rays},
    };
    std::set<std::string> seen;
    std::vector<Json> results;
    for (const auto& c : calls) {
        auto r = run(c);
        INFO(c.front());
        CHECK(r.code == 0);
        if (r.code == 0) results.push_back(r.report()["result"]);
        seen.insert(c.front());
    }
    CHECK(seen.size() == 32);
    REQUIRE(results.size() == calls.size());
    CHECK(results[0] == "b c a");
    CHECK(results[4] == "a");
    CHECK(results[5]["gate"] == "a a");
    CHECK(results[14]["n"] == 0);
    CHECK(results[14]["m"] == 1);
    CHECK(results[16]["witness"] == "b");
    CHECK(results[17] == "b a a");
    CHECK(results[22] == "adjacent");
    CHECK(results[24]["edges"] == Json::parse(R"([["a","b"],["b","c"]])"));
    CHECK(results[27] == "1");
    CHECK(results[28] == true);
    CHECK(results[29] == "1");
    CHECK(results[30]["ballDelta"] == "0");
    CHECK(results[31]["verdict"] == "distinct");
    CHECK(results[32]["classes"].size() == 3);
}
