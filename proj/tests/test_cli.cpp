#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

/// Run the CLI binary with the given arguments, capturing stdout (stderr is
/// folded in) and the exit code.
CliResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string command = env + " " + std::string(EDV_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    REQUIRE(file.good());
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("cli basic queries") {
    CHECK(run_cli("edv \"CP(7,4)^2\"").output == "(5,1,0)\n");
    CHECK(run_cli("compare \"S(5)\" \"P(5)\"").output == "StrictlyLess (witness k=2)\n");
    CHECK(run_cli("index wiener \"CP(7,4)^2\"").output == "40\n");
    CHECK(run_cli("index hyperwiener-edge \"P(4)\"").output == "22\n");
    CHECK(run_cli("index hyperwiener-pairwise \"P(4)\"").output == "15\n");

    const CliResult mu = run_cli("mu \"P(4)\"");
    CHECK(mu.exit_code == 0);
    CHECK(mu.output == "0 1 1 3 1\n1 2 2 2 2\n2 3 3 1 1\n");
}

TEST_CASE("cli construct and file round trip") {
    const CliResult out = run_cli("construct \"CP(7; 2,0,2)\"");
    REQUIRE(out.exit_code == 0);
    const std::string path = std::string(P_tmpdir) + "/edv_cli_roundtrip.edges";
    {
        std::ofstream file(path);
        file << out.output;
    }
    const CliResult back = run_cli("edv @" + path);
    CHECK(back.exit_code == 0);
    CHECK(back.output == run_cli("edv \"CP(7; 2,0,2)\"").output);
    std::remove(path.c_str());
}

TEST_CASE("cli enumerate respects the cap") {
    const CliResult ok = run_cli("enumerate all:7");
    CHECK(ok.exit_code == 0);
    int lines = 0;
    for (char c : ok.output) lines += c == '\n';
    CHECK(lines == 11);

    const CliResult capped = run_cli("enumerate all:30");
    CHECK(capped.exit_code == 2);
    CHECK(capped.output.find("cap exceeded") != std::string::npos);

    const CliResult raised = run_cli("--cap 17 enumerate cat:17:3");
    CHECK(raised.exit_code == 0);
}

TEST_CASE("cli verify") {
    const CliResult table = run_cli("verify Table-4");
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("PASS") != std::string::npos);

    const CliResult json_report = run_cli("--format json verify Thm-6.2 --n-max 10");
    CHECK(json_report.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(json_report.output);
    CHECK(j["claim_id"] == "Thm-6.2");
    CHECK(j["failures"].empty());
    CHECK(j["checked"] == j["passed"]);

    const CliResult unknown = run_cli("verify Thm-1.1");
    CHECK(unknown.exit_code == 2);

    const CliResult over_cap = run_cli("verify Thm-4.1 --n-max 30");
    CHECK(over_cap.exit_code == 2);
    CHECK(over_cap.output.find("cap exceeded") != std::string::npos);
}

TEST_CASE("cli table4 csv matches the golden file byte for byte") {
    const CliResult csv = run_cli("--format csv table4");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output == read_file(std::string(EDV_TEST_DIR) + "/golden/table4.csv"));
}

TEST_CASE("cli equiv-pairs") {
    const CliResult none = run_cli("equiv-pairs 4");
    CHECK(none.exit_code == 0);
    CHECK(none.output == "0 pair(s)\n");

    const CliResult csv = run_cli("--format csv equiv-pairs 7");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("\"(4,1,1)\"") != std::string::npos);
}

TEST_CASE("cli config precedence: flags > env > config file") {
    const std::string config_path = std::string(P_tmpdir) + "/edv_cli_config.cfg";
    {
        std::ofstream file(config_path);
        file << "# test config\nformat=csv\ncap=16\n";
    }
    // config file alone
    CHECK(run_cli("--config " + config_path + " edv \"P(5)\"").output.substr(0, 4) == "i,r_");
    // environment overrides the config file
    CHECK(run_cli("--config " + config_path + " edv \"P(5)\"", "EDV_FORMAT=text").output ==
          "(2,2)\n");
    // flag overrides the environment
    const nlohmann::json j = nlohmann::json::parse(
        run_cli("--config " + config_path + " --format json edv \"P(5)\"", "EDV_FORMAT=text").output);
    CHECK(j["vector"] == "(2,2)");
    // environment cap applies
    CHECK(run_cli("enumerate diam:17:16", "EDV_CAP=17").exit_code == 0);
    std::remove(config_path.c_str());
}

TEST_CASE("cli parse errors exit with code 2") {
    CHECK(run_cli("edv \"Q(5)\"").exit_code == 2);
    CHECK(run_cli("edv \"CP(6; 1,2)\"").exit_code == 2);  // composition sums wrong
    CHECK(run_cli("index zagreb \"P(5)\"").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("--format yaml edv \"P(5)\"").exit_code == 2);
}
