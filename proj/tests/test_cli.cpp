#include "doctest.h"

#include <cstdio>
#include <sys/wait.h>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(KLRTOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    int status = pclose(f);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("resolve emits the expected complex shapes") {
    auto r = run("resolve --a 1 --b 1 --m 2");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["levels"].size() == 3);
    CHECK(j["levels"][0][0]["idem"] == json({{1, 2}, {2, 2}}));
    CHECK(j["levels"][1][0]["idem"] == json({{1, 1}, {2, 2}, {1, 1}}));
    CHECK(j["levels"][2][0]["idem"] == json({{2, 2}, {1, 2}}));
    CHECK(j["boundaries"].size() == 2);
    for (auto& mat : j["boundaries"])
        for (auto& e : mat) CHECK(e["element"].get<std::string>() != "");

    CHECK(json::parse(run("resolve --a 1 --b 1 --m 1").out)["levels"].size() ==
          2);
    CHECK(json::parse(run("resolve --pi \"[[2,2],1],[[1,1],1]\"").out)["levels"]
              .size() == 1);
}

TEST_CASE("char emits the graded character") {
    auto r = run("char --a 1 --b 1 --m 1 --cutoff 8");
    REQUIRE(r.code == 0);
    json want = json::array();
    for (int d = 0; d <= 8; d += 2)
        want.push_back({{"word", {1, 2}}, {"degree", d}, {"dim", 1}});
    CHECK(json::parse(r.out) == want);
}

TEST_CASE("ext emits integral tables and rejects weight mismatch") {
    auto r = run("ext --pi \"[[1,2],1]\" --sigma \"[[1,2],1]\" --ring Z "
                 "--cutoff 8");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.size() == 5);
    for (int k = 0; k < 5; ++k) {
        CHECK(j[k]["n"] == 0);
        CHECK(j[k]["degree"] == 2 * k);
        CHECK(j[k]["rank"] == 1);
        CHECK(j[k]["torsion"] == json::array());
    }
    CHECK(run("ext --pi \"[[1,1],1]\" --sigma \"[[2,2],1]\"").code == 2);
}

TEST_CASE("verify passes on a small complex and on the identity suite") {
    auto r = run("verify --a 1 --b 1 --m 2 --cutoff 8");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    bool saw_homology = false;
    for (auto& rep : j) {
        CHECK(rep["status"] == "pass");
        CHECK(rep["witnesses"] == json::array());
        if (rep["check"] == "homology") saw_homology = true;
    }
    CHECK(saw_homology);

    auto l = run("verify --suite lemmas --max-d 4");
    CHECK(l.code == 0);
    CHECK(json::parse(l.out).size() == 18);
}

TEST_CASE("identical configuration gives identical bytes") {
    auto a = run("resolve --a 1 --b 2 --m 1");
    auto b = run("resolve --a 1 --b 2 --m 1");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("bogus").code == 2);
    CHECK(run("resolve").code == 2);
    CHECK(run("resolve --a 1").code == 2);
    CHECK(run("resolve --pi \"[[1,1],1],[[2,2],1]\"").code == 2);
    CHECK(run("ext --pi \"[[1,2],1]\" --sigma \"[[1,2],1]\" --ring X").code ==
          2);
    CHECK(run("verify --a 1 --b 1 --m 1 --ring Fp --p 1").code == 2);
}
