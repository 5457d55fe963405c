#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "charp/json_io.hpp"

using namespace charp;
using nlohmann::json;

namespace {

std::string cli() {
    const char* p = std::getenv("CHARP_CLI");
    REQUIRE_MESSAGE(p != nullptr, "CHARP_CLI must point at the charp binary");
    return p;
}

int run(const std::string& args) {
    std::string cmd = cli() + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/charp_cli_test_") + name;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

}  // namespace

TEST_CASE("line command exit codes") {
    std::string out = tmp_path("line.json");
    CHECK(run("line --nagata 2 3 --out " + out) == 0);
    json cert = read_json(out);
    CHECK(verify_line_certificate(line_certificate_from_json(cert)).ok);

    // verifying the emitted certificate (report field is ignored by the parser)
    CHECK(run("line --verify " + out) == 0);

    // p = q invalid input
    CHECK(run("line --nagata 3 3") == 2);
    // missing mode
    CHECK(run("line") == 2);

    // tampered certificate: exit 1
    cert["P"] = cert["Q"];
    std::string tampered = tmp_path("tampered.json");
    std::ofstream(tampered) << cert.dump();
    CHECK(run("line --verify " + tampered) == 1);

    // malformed JSON: exit 2
    std::string bad = tmp_path("bad.json");
    std::ofstream(bad) << "{not json";
    CHECK(run("line --verify " + bad) == 2);
}

TEST_CASE("variety command") {
    std::string out = tmp_path("variety.json");
    CHECK(run("variety --nagata 2 3 --m 2 --r 2,3 --out " + out) == 0);
    PresPtr A = presentation_from_json(read_json(out));
    CHECK(A->m() == 2);
    CHECK(A->r() == std::vector<std::int64_t>{2, 3});

    // validate a round-tripped presentation file
    CHECK(run("variety " + out) == 0);

    // r_i = 1 violates the hypothesis: exit 2
    CHECK(run("variety --nagata 2 3 --m 1 --r 1") == 2);
}

TEST_CASE("gr command") {
    std::string pres = tmp_path("pres.json");
    REQUIRE(run("variety --nagata 2 3 --m 2 --r 2,2 --out " + pres) == 0);
    std::string out = tmp_path("gr.json");
    CHECK(run("gr " + pres + " --weights -1,0 --out " + out) == 0);
    // x-free F: the graded presentation equals the input
    CHECK(*presentation_from_json(read_json(out)) == *presentation_from_json(read_json(pres)));
}

TEST_CASE("expmap command") {
    std::string pres = tmp_path("pres1.json");
    REQUIRE(run("variety --nagata 2 3 --m 1 --r 2 --out " + pres) == 0);
    std::string out = tmp_path("phi1.json");
    CHECK(run("expmap " + pres + " --phi1 --out " + out) == 0);
    json j = read_json(out);
    CHECK(j["report"]["ok"] == true);
    CHECK(j["report"]["nontrivial"] == true);

    // re-verify through the file interface
    std::string stripped = tmp_path("phi1_map.json");
    json map_only = {{"presentation", j["presentation"]}, {"u", j["u"]}, {"images", j["images"]}};
    std::ofstream(stripped) << map_only.dump();
    CHECK(run("expmap --verify " + stripped) == 0);

    // a broken map fails verification with exit 1
    json broken = map_only;
    broken["images"]["T"] = broken["images"]["Z"];
    std::string bad = tmp_path("phibad.json");
    std::ofstream(bad) << broken.dump();
    CHECK(run("expmap --verify " + bad) == 1);

    // no mode selected
    CHECK(run("expmap " + pres) == 2);
}

TEST_CASE("trace command") {
    std::string pres = tmp_path("pres2.json");
    REQUIRE(run("variety --nagata 3 2 --m 2 --r 2,2 --out " + pres) == 0);
    CHECK(run("trace " + pres + " --weights -1,0 --weights -1,-1 --lambda 2") == 0);
    // lambda = 0 degenerates the fiber
    CHECK(run("trace " + pres + " --lambda 0") == 2);
}

TEST_CASE("stable-iso command") {
    std::string pres = tmp_path("pres3.json");
    std::string cert = tmp_path("line3.json");
    REQUIRE(run("variety --nagata 2 3 --m 1 --r 2 --out " + pres) == 0);
    REQUIRE(run("line --nagata 2 3 --out " + cert) == 0);
    std::string out = tmp_path("iso.json");
    CHECK(run("stable-iso " + pres + " " + cert + " --out " + out) == 0);
    CHECK(read_json(out)["roundtrip_verified"] == true);
}

TEST_CASE("counterexample command exit codes and config") {
    CHECK(run("counterexample 2 3 1 --r 1") == 2);

    std::string out1 = tmp_path("ce1.json");
    std::string out2 = tmp_path("ce2.json");
    CHECK(run("counterexample 2 3 1 --r 2 --seed 5 --out " + out1) == 0);

    // config file supplies the seed; flags absent
    std::string cfg = tmp_path("cfg.json");
    std::ofstream(cfg) << R"({"seed": 5})";
    CHECK(run("counterexample 2 3 1 --r 2 --config " + cfg + " --out " + out2) == 0);
    CHECK(read_json(out1) == read_json(out2));
}
