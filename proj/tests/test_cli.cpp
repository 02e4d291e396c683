#include <doctest.h>

#include <schreier/io.hpp>
#include <schreier/recurrence.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace schreier;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI under test (path from SCHREIER_CLI) through the shell.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const char* binary = std::getenv("SCHREIER_CLI");
    REQUIRE_MESSAGE(binary != nullptr, "SCHREIER_CLI must point at the built binary");
    const std::string command = env_prefix + "'" + binary + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t read = 0;
    while ((read = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, read);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("count prints single terms with the documented exit codes") {
    auto fib = run_cli("count --p 1 --n 7 --method closed");
    CHECK(fib.exit_code == 0);
    CHECK(fib.output == "13\n");

    auto pq = run_cli("count --p 1 --q 2 --n 9 --method enum");
    CHECK(pq.exit_code == 0);
    CHECK(pq.output == "20\n");

    // defaults to the closed form
    CHECK(run_cli("count --p 1 --n 7").output == "13\n");
    CHECK(run_cli("count --p 1 --n 7 --method rec").output == "13\n");

    CHECK(run_cli("count --p 2 --q 2 --n 5 --method closed").exit_code == 2);
    CHECK(run_cli("count --p 2 --q 2 --n 5 --method rec").exit_code == 2);
    CHECK(run_cli("count --p 2 --q 2 --n 5 --method enum").exit_code == 0);
    CHECK(run_cli("count --p 1 --n 0").exit_code == 2);
    CHECK(run_cli("count --p 1 --n 5 --method guess").exit_code == 2);
    CHECK(run_cli("count --n 5").exit_code == 2); // --p is required

    CHECK(run_cli("count --p 1 --n 50 --method enum").exit_code == 3);
    auto raised = run_cli("count --p 4 --n 50 --method enum --ceiling 50");
    CHECK(raised.exit_code == 0);
    CHECK(raised.output == "209365\n"); // agrees with the closed form at p=4

}

TEST_CASE("the ceiling can come from the environment") {
    CHECK(run_cli("count --p 1 --n 12 --method enum",
                  "SCHREIER_ORACLE_CEILING=10 ")
              .exit_code == 3);
    // the flag wins over the environment
    auto flagged = run_cli("count --p 1 --n 12 --method enum --ceiling 12",
                           "SCHREIER_ORACLE_CEILING=10 ");
    CHECK(flagged.exit_code == 0);
    CHECK(flagged.output == "144\n");
    CHECK(run_cli("count --p 1 --n 2 --method enum", "SCHREIER_ORACLE_CEILING=bogus ")
              .exit_code == 2);
}

TEST_CASE("table emits the pinned formats") {
    auto bfile = run_cli("table --p 1 --max-n 5 --format bfile");
    CHECK(bfile.exit_code == 0);
    CHECK(bfile.output ==
          "# p=1 method=recurrence-uncoupled\n1 1\n2 1\n3 2\n4 3\n5 5\n");

    auto csv = run_cli("table --p 2 --max-n 4 --format csv --method enum");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output ==
          "n,value,method\n1,0,enumeration\n2,1,enumeration\n3,1,enumeration\n"
          "4,1,enumeration\n");

    auto json_run = run_cli("table --p 1 --q 2 --max-n 4 --format json");
    CHECK(json_run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json_run.output);
    CHECK(parsed["values"] == nlohmann::json({"0", "1", "1", "3"}));
    CHECK(parsed["method"] == "recurrence-coupled");

    // deterministic bytes for fixed flags
    CHECK(run_cli("table --p 1 --q 2 --max-n 4 --format json").output == json_run.output);

    CHECK(run_cli("table --p 1 --max-n 45 --method enum").exit_code == 3);
    CHECK(run_cli("table --p 1 --max-n 45 --method closed").exit_code == 0);
}

TEST_CASE("table output parses back through the library") {
    auto bfile = run_cli("table --p 2 --q 3 --max-n 8 --format bfile");
    REQUIRE(bfile.exit_code == 0);
    const auto parsed = parse_bfile(bfile.output);
    CHECK(parsed == seq_order_pq_coupled(2, 3, 8));
}

TEST_CASE("verify passes for healthy parameter sets") {
    auto p_only = run_cli("verify --p 1 --max-n 14");
    CHECK(p_only.exit_code == 0);
    CHECK(p_only.output.find("RESULT: PASS") != std::string::npos);

    auto pq = run_cli("verify --p 1 --q 2 --max-n 14");
    CHECK(pq.exit_code == 0);
    CHECK(pq.output.find("RESULT: PASS") != std::string::npos);
    CHECK(pq.output.find("uncoupled recurrence identity") != std::string::npos);

    CHECK(run_cli("verify --p 3 --q 2 --max-n 10").exit_code == 2);
    CHECK(run_cli("verify --p 1 --max-n 60").exit_code == 3); // above the ceiling
}

TEST_CASE("detect reports the recovered recurrence") {
    auto fib = run_cli("detect --p 1 --prefix-len 12 --max-order 4");
    CHECK(fib.exit_code == 0);
    CHECK(fib.output.find("detected-order: 2\n") != std::string::npos);
    CHECK(fib.output.find("coefficients: 1 1\n") != std::string::npos);
    CHECK(fib.output.find("family-recurrence-annihilates: true\n") != std::string::npos);

    auto p2 = run_cli("detect --p 2 --prefix-len 14 --max-order 5");
    CHECK(p2.output.find("detected-order: 3\n") != std::string::npos);
    CHECK(p2.output.find("coefficients: 1 0 1\n") != std::string::npos);

    auto pq = run_cli("detect --p 1 --q 2 --prefix-len 40 --max-order 8");
    CHECK(pq.output.find("detected-order: 6\n") != std::string::npos);
    CHECK(pq.output.find("characteristic: 1 -2 1 -2 2 0 1\n") != std::string::npos);
    CHECK(pq.output.find("family-recurrence-annihilates: true\n") != std::string::npos);

    CHECK(run_cli("detect --p 1 --prefix-len 2 --max-order 3").exit_code == 2);
}

TEST_CASE("bench prints a csv timing grid") {
    auto bench = run_cli("bench --p 2 --max-n 30");
    CHECK(bench.exit_code == 0);
    std::istringstream lines(bench.output);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "n_from,n_to,enum_ms,closed_ms,rec_ms");
    int rows = 0;
    bool saw_flag = false;
    while (std::getline(lines, line)) {
        if (line.rfind("# rec_fastest=", 0) == 0) {
            saw_flag = true;
            continue;
        }
        ++rows;
    }
    CHECK(rows == 10);
    CHECK(saw_flag);

    auto single = run_cli("bench --p 1 --max-n 1");
    std::istringstream single_lines(single.output);
    int data_rows = 0;
    while (std::getline(single_lines, line)) {
        if (!line.empty() && line.front() != '#' && line.rfind("n_from", 0) != 0) ++data_rows;
    }
    CHECK(data_rows == 1);

    // beyond the ceiling the enumeration column goes blank
    auto capped = run_cli("bench --p 1 --q 2 --max-n 200 --ceiling 20");
    std::istringstream capped_lines(capped.output);
    REQUIRE(std::getline(capped_lines, line));
    CHECK(line == "n_from,n_to,enum_ms,closed_ms,coupled_ms,uncoupled_ms");
    bool saw_blank_enum = false;
    while (std::getline(capped_lines, line)) {
        if (line.rfind("181,200,,", 0) == 0) saw_blank_enum = true;
    }
    CHECK(saw_blank_enum);
}

TEST_CASE("--out writes the same bytes atomically") {
    const auto dir = std::filesystem::temp_directory_path() / "schreier_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "table.bfile").string();

    auto to_stdout = run_cli("table --p 1 --max-n 6 --format bfile");
    auto to_file = run_cli("table --p 1 --max-n 6 --format bfile --out '" + path + "'");
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.output.empty());

    std::ifstream file(path, std::ios::binary);
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str() == to_stdout.output);
    CHECK(!std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("help mentions every subcommand and exits cleanly") {
    auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
    for (const char* name : {"count", "table", "verify", "detect", "bench"}) {
        CHECK(help.output.find(name) != std::string::npos);
    }
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}
