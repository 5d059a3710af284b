// end-to-end runs of the installed binary; golden files freeze the exact
// byte output of every stable subcommand

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fixture(const std::string& name) {
    return std::string(REEBOP_FIXTURE_DIR) + "/" + name;
}

std::string golden(const std::string& name) {
    return slurp(std::string(REEBOP_GOLDEN_DIR) + "/" + name);
}

std::string tmp_name(const char* tag) {
    static int counter = 0;
    return "/tmp/reebop_cli_" + std::to_string(::getpid()) + "_" + tag + "_" +
           std::to_string(counter++);
}

RunResult run(const std::vector<std::string>& args) {
    std::string cmd = "'" REEBOP_CLI_PATH "'";
    for (const std::string& a : args) cmd += " '" + a + "'";
    const std::string out_path = tmp_name("out"), err_path = tmp_name("err");
    cmd += " > " + out_path + " 2> " + err_path;
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = rc == -1 ? -1 : WEXITSTATUS(rc);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("golden byte-for-byte outputs") {
        struct Row {
            std::vector<std::string> args;
            const char* file;
            int exit_code;
        };
        const Row rows[] = {
            {{"oracle", "--builtin", "lens:5", "--degree", "1"}, "oracle_lens5_h1.json", 0},
            {{"oracle", "--complex", fixture("complex_torus.json")}, "oracle_torus.json", 0},
            {{"snf", "--matrix", fixture("matrix_2460.json")}, "snf_2460.json", 0},
            {{"canon", "--relations", fixture("matrix_2460.json")}, "canon_2460.json", 0},
            {{"check", "--target", fixture("target_cor1.json")}, "check_cor1.json", 2},
            {{"check", "--target", fixture("target_thm6.json"), "--thm5",
              fixture("partition_thm6.json"), "--thm6", fixture("thm6_family.json")},
             "check_thm6_full.json",
             0},
            {{"plan", "--target", fixture("target_thm2.json"), "--strategy", "thm2",
              "--carrier", "L(7)"},
             "plan_thm2.json",
             0},
            {{"plan", "--target", fixture("target_thm4.json"), "--strategy", "search"},
             "plan_search_thm4.json",
             0},
            {{"plan", "--target", fixture("target_z2.json"), "--strategy", "search",
              "--catalog", fixture("catalog_lens7.json")},
             "search_exhausted.json",
             2},
            {{"bubble", "--plan", fixture("plan_mixed.json")}, "bubble_mixed.json", 0},
            {{"infer", "--state", fixture("state5.json"), "--source-dim", "7"},
             "infer_state5.json",
             0},
            {{"catalog", "list", "--catalog", fixture("catalog_lens7.json"), "--format",
              "table"},
             "catalog_lens7.txt",
             0},
        };
        for (const Row& row : rows) {
            CAPTURE(row.file);
            const RunResult r = run(row.args);
            CHECK(r.exit_code == row.exit_code);
            CHECK(r.out == golden(row.file));
        }
    }

    TEST_CASE("plan output feeds bubble unchanged") {
        const struct {
            const char* target;
            std::vector<std::string> extra;
        } cases[] = {
            {"target_thm2.json", {"--strategy", "thm2", "--carrier", "L(7)"}},
            {"target_thm4.json", {"--strategy", "search"}},
            {"target_free.json", {"--strategy", "prop3"}},
            {"target_free4.json", {"--strategy", "prop4"}},
        };
        for (const auto& c : cases) {
            CAPTURE(c.target);
            std::vector<std::string> args = {"plan", "--target", fixture(c.target)};
            args.insert(args.end(), c.extra.begin(), c.extra.end());
            const RunResult planned = run(args);
            REQUIRE(planned.exit_code == 0);

            const std::string plan_path = tmp_name("plan") + ".json";
            std::ofstream(plan_path) << planned.out;
            const RunResult bubbled = run({"bubble", "--plan", plan_path});
            std::remove(plan_path.c_str());
            REQUIRE(bubbled.exit_code == 0);

            const json delta = json::parse(bubbled.out).at("delta");
            const json target = json::parse(slurp(fixture(c.target)));
            CHECK(delta == target);
        }
    }

    TEST_CASE("catalog add writes a loadable catalog") {
        const std::string out_path = tmp_name("catalog") + ".json";
        const RunResult added =
            run({"catalog", "add", "--catalog", fixture("catalog_lens7.json"), "--builtin",
                 "lens:11", "--out", out_path});
        REQUIRE(added.exit_code == 0);

        const RunResult listed =
            run({"catalog", "list", "--catalog", out_path, "--format", "table"});
        CHECK(listed.exit_code == 0);
        CHECK(listed.out.find("L(11)") != std::string::npos);

        const RunResult validated = run({"catalog", "validate", "--catalog", out_path});
        CHECK(validated.exit_code == 0);
        std::remove(out_path.c_str());
    }

    TEST_CASE("catalog validate flags a law violation without aborting") {
        const RunResult r =
            run({"catalog", "validate", "--profile", fixture("bad_profile.json")});
        CHECK(r.exit_code == 2);
        const json doc = json::parse(r.out);
        REQUIRE(doc.at("profiles").size() == 1);
        CHECK(doc["profiles"][0]["valid"] == json(false));
        CHECK(doc["profiles"][0]["name"] == json("bogus"));
    }

    TEST_CASE("verdict-driven exit codes") {
        // Unverifiable (and nothing worse) is 3
        const RunResult r3 = run({"check", "--target", fixture("target_thm6.json"),
                                  "--thm6", fixture("thm6_family.json"), "--order-bound",
                                  "1"});
        CHECK(r3.exit_code == 3);
        CHECK(json::parse(r3.out)["verdicts"][0]["status"] == json("Unverifiable"));

        // a clean target with no extra checks is 0 and says so in table form
        const RunResult r0 = run({"check", "--target", fixture("target_thm2.json"),
                                  "--format", "table"});
        CHECK(r0.exit_code == 0);
        CHECK(r0.out == "Consistent: no rule rejects the target\n");

        // Infeasible rules render one table row each
        const RunResult r2 = run({"check", "--target", fixture("target_cor1.json"),
                                  "--format", "table"});
        CHECK(r2.exit_code == 2);
        CHECK(r2.out.rfind("Infeasible [cor1]", 0) == 0);
    }

    TEST_CASE("usage and parse failures exit 1 on stderr") {
        const RunResult syntax = run({"check", "--target", fixture("bad_syntax.json")});
        CHECK(syntax.exit_code == 1);
        CHECK(syntax.out.empty());
        CHECK(syntax.err.find("bad_syntax.json:3") != std::string::npos);

        const RunResult missing = run({"check", "--target", "/tmp/reebop_no_such.json"});
        CHECK(missing.exit_code == 1);
        CHECK(missing.err.find("cannot open file") != std::string::npos);

        const RunResult neither = run({"canon"});
        CHECK(neither.exit_code == 1);
        CHECK(neither.err.find("exactly one of --group, --relations") != std::string::npos);

        const RunResult strategy = run({"plan", "--target", fixture("target_free.json"),
                                        "--strategy", "sideways"});
        CHECK(strategy.exit_code == 1);
        CHECK(strategy.err.find("unknown strategy") != std::string::npos);

        const RunResult carrierless = run({"plan", "--target", fixture("target_thm2.json"),
                                           "--strategy", "thm2"});
        CHECK(carrierless.exit_code == 1);
        CHECK(carrierless.err.find("exactly one --carrier") != std::string::npos);

        const RunResult flag = run({"oracle", "--bogus"});
        CHECK(flag.exit_code == 1);

        const RunResult help = run({"--help"});
        CHECK(help.exit_code == 0);
        CHECK(help.out.find("plan") != std::string::npos);
        CHECK(help.out.find("bubble") != std::string::npos);
    }
}
