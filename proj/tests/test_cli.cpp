#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef CMLEF_CLI_PATH
#error "CMLEF_CLI_PATH must point at the built binary"
#endif

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(CMLEF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof(buffer), pipe))
        result.out.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("cmlef-test-" + name);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

}  // namespace

TEST_CASE("verify passes on a small genus and reports suites") {
    const CliResult result = run_cli("verify --g 2");
    CHECK(result.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(result.out);
    CHECK(doc["all_pass"] == true);
    CHECK(doc["g"] == 2);
    CHECK(doc["suites"].size() == 7);
}

TEST_CASE("verify output is byte-identical across runs") {
    const CliResult first = run_cli("verify --factors 1,1 --seed 42");
    const CliResult second = run_cli("verify --factors 1,1 --seed 42");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(nlohmann::json::parse(first.out)["seed"] == 42);
}

TEST_CASE("verify fails with a degenerate zeta") {
    const CliResult result = run_cli("verify --g 2 --zeta-degenerate");
    CHECK(result.exit_code == 1);
    const nlohmann::json doc = nlohmann::json::parse(result.out);
    CHECK(doc["all_pass"] == false);
    CHECK(doc["suites"][0]["name"] == "hard-lefschetz");
    CHECK(doc["suites"][0]["status"] == "fail");
}

TEST_CASE("usage errors exit with 64") {
    CHECK(run_cli("verify").exit_code == 64);
    CHECK(run_cli("verify --g 0").exit_code == 64);
    CHECK(run_cli("verify --g 9").exit_code == 64);
    CHECK(run_cli("verify --g 2 --factors 1,1").exit_code == 64);
    CHECK(run_cli("nonsense").exit_code == 64);
    CHECK(run_cli("descend --g 1").exit_code == 64);  // missing --type
}

TEST_CASE("certify, check, and tamper detection through the files") {
    const auto cert_path = temp_file("cert-1-2.json");
    const CliResult certify =
        run_cli("certify --factors 1,2 --out " + cert_path.string());
    CHECK(certify.exit_code == 0);

    const CliResult check = run_cli("check --config " + cert_path.string());
    CHECK(check.exit_code == 0);
    CHECK(nlohmann::json::parse(check.out)["status"] == "confirmed");

    // Tamper with one trace byte on disk.
    std::ifstream in(cert_path);
    nlohmann::json doc;
    in >> doc;
    in.close();
    std::string trace = doc["records"][3]["trace"].get<std::string>();
    trace[0] = trace[0] == '1' ? '2' : '1';
    doc["records"][3]["trace"] = trace;
    const auto tampered_path = temp_file("cert-tampered.json");
    write_file(tampered_path, doc.dump(2));
    const CliResult tampered = run_cli("check --config " + tampered_path.string());
    CHECK(tampered.exit_code == 1);
    const nlohmann::json tampered_doc = nlohmann::json::parse(tampered.out);
    CHECK(tampered_doc["status"] == "mismatch");
    CHECK(tampered_doc["record_index"] == 3);

    // Truncated file: parse error.
    const auto truncated_path = temp_file("cert-truncated.json");
    write_file(truncated_path, doc.dump(2).substr(0, 40));
    const CliResult truncated = run_cli("check --config " + truncated_path.string());
    CHECK(truncated.exit_code == 2);
    CHECK(nlohmann::json::parse(truncated.out)["status"] == "malformed");
}

TEST_CASE("certificates are byte-identical across runs") {
    const CliResult first = run_cli("certify --factors 1,1");
    const CliResult second = run_cli("certify --factors 1,1");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(nlohmann::json::parse(first.out)["records"].size() == 16);
}

TEST_CASE("certify withholds the verdict on degenerate zeta") {
    const CliResult result = run_cli("certify --g 2 --zeta-degenerate");
    CHECK(result.exit_code == 2);
    const nlohmann::json doc = nlohmann::json::parse(result.out);
    CHECK(doc["verdict"].is_null());
    CHECK(doc["zero_components"].size() == 1);
}

TEST_CASE("certify accepts a model document with frobenius data") {
    const auto config_path = temp_file("model.json");
    write_file(config_path, R"({
      "factors": [1],
      "frobenius": {"q": "4", "values": {"w[1.1]": "2", "w[1.1]^bar": "2"}},
      "zeta": {"w[1.1]": "1", "w[1.1]^bar": "-1"}
    })");
    CHECK(run_cli("certify --config " + config_path.string()).exit_code == 0);

    const auto bad_path = temp_file("model-bad.json");
    write_file(bad_path, R"({
      "factors": [1],
      "frobenius": {"q": "5", "values": {"w[1.1]": "2", "w[1.1]^bar": "2"}}
    })");
    CHECK(run_cli("certify --config " + bad_path.string()).exit_code == 2);

    const auto unknown_key_path = temp_file("model-unknown.json");
    write_file(unknown_key_path, R"({"factors": [1], "mystery": 3})");
    CHECK(run_cli("certify --config " + unknown_key_path.string()).exit_code == 2);
}

TEST_CASE("custom zeta files drive certification and verification") {
    const auto zeta_path = temp_file("zeta.json");
    write_file(zeta_path, R"({"w[1.1]": "2", "w[1.2]": "3",
                              "w[1.1]^bar": "-2", "w[1.2]^bar": "-3"})");
    const auto cert_path = temp_file("cert-weighted.json");
    CHECK(run_cli("certify --g 2 --zeta " + zeta_path.string() + " --out " +
                  cert_path.string()).exit_code == 0);
    CHECK(run_cli("check --config " + cert_path.string()).exit_code == 0);
    CHECK(run_cli("verify --g 2 --zeta " + zeta_path.string()).exit_code == 0);

    // A non-skew map is rejected as input.
    const auto bad_zeta = temp_file("zeta-bad.json");
    write_file(bad_zeta, R"({"w[1.1]": "2", "w[1.2]": "3",
                             "w[1.1]^bar": "2", "w[1.2]^bar": "-3"})");
    CHECK(run_cli("certify --g 2 --zeta " + bad_zeta.string()).exit_code == 2);
}

TEST_CASE("descend reports the chain for a ledger type") {
    const CliResult result =
        run_cli("descend --factors 2 --type w[1.1]*w[1.2]*w[1.1]^bar*w[1.2]^bar");
    CHECK(result.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(result.out);
    CHECK(doc["k"] == 2);
    CHECK(doc["in_ledger"] == true);
    CHECK(doc["chain"].size() == 3);
    CHECK(doc["chain"][2] == "1");
    CHECK(doc["I0"].empty());
    CHECK(doc["J0"].empty());
}

TEST_CASE("density command on table and permutation specs") {
    const auto z4_path = temp_file("z4.json");
    write_file(z4_path, R"json({"perm_generators": ["(1 2 3 4)"], "c": "(1 3)(2 4)"})json");
    const CliResult z4 = run_cli("density --config " + z4_path.string());
    CHECK(z4.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(z4.out);
    CHECK(doc["density"] == "3/4");
    CHECK(doc["quotient_ok"] == true);

    const auto bad_path = temp_file("z4-bad-c.json");
    write_file(bad_path, R"json({"perm_generators": ["(1 2 3 4)"], "c": "(1 2 3 4)"})json");
    CHECK(run_cli("density --config " + bad_path.string()).exit_code == 2);

    CHECK(run_cli("density --config /nonexistent.json").exit_code == 2);
}

TEST_CASE("text format renders the same content") {
    const CliResult text = run_cli("verify --g 1 --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("suite hard-lefschetz: pass") != std::string::npos);
    CHECK(text.out.find("all suites: pass") != std::string::npos);
}
