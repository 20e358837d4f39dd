#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using json = nlohmann::json;

#ifndef THETAFOCK_CLI_PATH
#error "THETAFOCK_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

// minimal structural validator: covers the subset of JSON Schema the
// published schemas use (type, required, properties, items, min/maxItems)
bool conforms(const json& value, const json& schema, const std::string& schema_dir) {
    if (schema.contains("$ref")) {
        std::ifstream in(schema_dir + "/" + schema["$ref"].get<std::string>());
        REQUIRE(in.good());
        return conforms(value, json::parse(in), schema_dir);
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        if (t == "object" && !value.is_object()) return false;
        if (t == "array" && !value.is_array()) return false;
        if (t == "number" && !value.is_number()) return false;
        if (t == "integer" && !value.is_number_integer()) return false;
        if (t == "boolean" && !value.is_boolean()) return false;
        if (t == "string" && !value.is_string()) return false;
    }
    if (schema.contains("required")) {
        for (const auto& key : schema["required"]) {
            if (!value.contains(key.get<std::string>())) return false;
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (value.contains(key) && !conforms(value[key], sub, schema_dir)) return false;
        }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>()) return false;
        if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>()) return false;
        if (schema.contains("items")) {
            for (const auto& item : value) {
                if (!conforms(item, schema["items"], schema_dir)) return false;
            }
        }
    }
    return true;
}

bool validates_against(const json& value, const std::string& schema_name) {
    const std::string dir = THETAFOCK_SCHEMA_DIR;
    std::ifstream in(dir + "/" + schema_name);
    REQUIRE(in.good());
    return conforms(value, json::parse(in), dir);
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + std::string(THETAFOCK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("kernel eval emits the documented JSON") {
    auto r = run_cli("kernel eval --lattice 1,0,0,1 --nu pi --chi weierstrass "
                     "--z 0.2,0.1 --w 0.3,-0.2 --eps 1e-12");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    REQUIRE(j.contains("value"));
    REQUIRE(j["value"].is_array());
    CHECK(j["value"].size() == 2);
    CHECK(j.contains("tail_bound"));
    CHECK(j.contains("shells_used"));
    CHECK(j["lattice"].contains("omega1"));
    CHECK(std::abs(j["value"][0].get<double>() - 0.4726893621370953) < 1e-10);
    CHECK(std::abs(j["value"][1].get<double>() - 0.8061268393628706) < 1e-10);
}

TEST_CASE("byte-identical stdout for identical argv") {
    const std::string args = "kernel eval --z 0.37,-0.12 --w 0.05,0.41 --nu 2pi";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);
}

TEST_CASE("sumtable single value formatting") {
    auto r = run_cli("coeffs sumtable --t 1");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "0.000000000000\n");
    auto r2 = run_cli("coeffs sumtable --t 2");
    CHECK(r2.stdout_text == "0.819687299820\n");
}

TEST_CASE("sumtable csv range") {
    auto r = run_cli("coeffs sumtable --t-min 1 --t-max 2 --t-step 0.5 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.rfind("t,value\n", 0) == 0);
    int lines = 0;
    for (char c : r.stdout_text)
        if (c == '\n') ++lines;
    CHECK(lines == 4); // header + 3 rows
}

TEST_CASE("zeros count reports the dimension") {
    auto r = run_cli("zeros count --lattice 1,0,0,1 --nu 2pi --chi weierstrass --w 0.3,0.2");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(j["count"].get<int>() == 2);
    CHECK(j["dimension"].get<int>() == 2);
}

TEST_CASE("elliptic mu on the square lattice") {
    auto r = run_cli("elliptic mu --lattice 1,0,0,1");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(std::abs(j["mu"][0].get<double>()) < 1e-10);
    CHECK(std::abs(j["mu"][1].get<double>()) < 1e-10);
    CHECK(std::abs(j["nu"].get<double>() - M_PI) < 1e-12);
}

TEST_CASE("theta identity subcommand") {
    auto r = run_cli("elliptic theta-identity --nu-text pi");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(std::abs(j["split_sum_combination"].get<double>()) < 1e-12);
    CHECK(j["printed_residual"].get<double>() > 0.1);
}

TEST_CASE("coeffs one json") {
    auto r = run_cli("coeffs one --nu pi --m 0 --n 0");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(std::abs(j["value"][0].get<double>()) < 1e-12);
    CHECK(j["abs_mass"].get<double>() > 1.0);
}

TEST_CASE("lattice json input form") {
    auto r = run_cli(R"(coeffs one --lattice-json {\"omega1\":[1,0],\"omega2\":[0,1]} --nu pi)");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(std::abs(j["value"][0].get<double>()) < 1e-12);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("kernel eval --z nonsense").exit_code == 2);
    CHECK(run_cli("nonexistent-subcommand").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("numerical domain errors exit 1 with the module's error name") {
    auto r = run_cli("coeffs one --nu 1.5pi");
    CHECK(r.exit_code == 1);
}

TEST_CASE("JSON outputs validate against the published schemas") {
    auto kernel = run_cli("kernel eval --z 0.2,0.1 --w 0.3,-0.2 --nu pi");
    CHECK(validates_against(json::parse(kernel.stdout_text), "sum_result.schema.json"));

    auto one = run_cli("coeffs one --nu 2pi --m 1 --n 1");
    CHECK(validates_against(json::parse(one.stdout_text), "sum_result.schema.json"));

    auto count = run_cli("zeros count --nu 2pi --w 0.3,0.2");
    CHECK(validates_against(json::parse(count.stdout_text), "zeros_count.schema.json"));

    auto locate = run_cli("zeros locate --nu 2pi --w 0.3,0.2 --grid 16");
    CHECK(validates_against(json::parse(locate.stdout_text), "zeros_locate.schema.json"));

    auto xi = run_cli("zeros xi --nu pi --wgrid 4 --zgrid 4");
    CHECK(validates_against(json::parse(xi.stdout_text), "zeros_xi.schema.json"));

    auto mu = run_cli("elliptic mu --lattice 1,0,0.3,1.1");
    CHECK(validates_against(json::parse(mu.stdout_text), "elliptic_mu.schema.json"));

    auto theta = run_cli("elliptic theta-identity --nu 1.0");
    CHECK(validates_against(json::parse(theta.stdout_text), "theta_identity.schema.json"));

    auto table = run_cli("coeffs table --nu pi --degree 3");
    CHECK(validates_against(json::parse(table.stdout_text), "coeffs_table.schema.json"));

    auto parity = run_cli("coeffs parity --nu pi --degree 3");
    CHECK(validates_against(json::parse(parity.stdout_text), "coeffs_parity.schema.json"));

    auto sumtable = run_cli("coeffs sumtable --t-min 1 --t-max 2 --t-step 0.5");
    CHECK(validates_against(json::parse(sumtable.stdout_text), "sumtable.schema.json"));

    auto series = run_cli("kernel series --z 0.2,0.1 --w 0.1,0.1 --nu pi --M 16 --N 16");
    CHECK(validates_against(json::parse(series.stdout_text), "kernel_series.schema.json"));

    auto scaling = run_cli("coeffs scaling --nu 2pi --lambda 0,2 --m 1 --n 1");
    CHECK(validates_against(json::parse(scaling.stdout_text), "residual.schema.json"));

    auto reproduce = run_cli("kernel reproduce --m 0 --z 0.25,0.25 --nu pi --quad-n 16");
    CHECK(validates_against(json::parse(reproduce.stdout_text), "residual.schema.json"));
}

TEST_CASE("shell cap override via the environment") {
    RunResult r = run_cli("kernel eval --z 5,5 --w 4,4 --nu pi",
                          "THETA_KERNEL_SHELL_CAP=3 ");
    CHECK(r.exit_code == 1); // NoConvergence surfaces with exit 1
    RunResult ok = run_cli("kernel eval --z 5,5 --w 4,4 --nu pi",
                           "THETA_KERNEL_SHELL_CAP=120 ");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("verify all passes, exits zero, stdout is timing-free") {
    RunResult r = run_cli("verify all");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("PASS") != std::string::npos);
    CHECK(r.stdout_text.find("FAIL") == std::string::npos);
    RunResult again = run_cli("verify all");
    CHECK(r.stdout_text == again.stdout_text);
}

TEST_CASE("pi-literal nu parsing matches the decimal form") {
    auto a = run_cli("coeffs one --nu 2pi --m 1 --n 1");
    auto b = run_cli("coeffs one --nu 6.283185307179586 --m 1 --n 1");
    CHECK(a.exit_code == 0);
    json ja = json::parse(a.stdout_text), jb = json::parse(b.stdout_text);
    CHECK(std::abs(ja["value"][0].get<double>() - jb["value"][0].get<double>()) < 1e-9);
}
