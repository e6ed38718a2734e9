#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "gspin/errors.hpp"
#include "gspin/group.hpp"
#include "gspin/suites.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void apply_mode(gspin::RunConfig& cfg, const std::string& mode) {
    using gspin::Mode;
    if (mode == "automatic") {
        cfg.verify.mode = Mode::automatic;
    } else if (mode == "exhaustive") {
        cfg.verify.mode = Mode::exhaustive;
    } else if (mode == "sampled") {
        cfg.verify.mode = Mode::sampled;
    } else if (mode.rfind("sampled:", 0) == 0) {
        cfg.verify.mode = Mode::sampled;
        cfg.verify.seed = std::strtoull(mode.c_str() + 8, nullptr, 10);
    } else {
        throw gspin::ConfigError("unknown mode '" + mode +
                                 "' (use automatic, exhaustive, sampled or sampled:SEED)");
    }
}

std::vector<gspin::RunConfig> read_instance_file(const std::string& path,
                                                 const gspin::RunConfig& defaults) {
    std::ifstream f(path);
    if (!f) throw gspin::ConfigError("cannot read instance file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw gspin::ConfigError("instance file '" + path + "': " + e.what());
    }
    if (!doc.is_object() || !doc.contains("instances") || !doc["instances"].is_array()) {
        throw gspin::ConfigError("instance file '" + path + "' needs an 'instances' array");
    }
    std::vector<gspin::RunConfig> out;
    for (const auto& entry : doc["instances"]) {
        gspin::RunConfig cfg = defaults;
        try {
            cfg.name = entry.at("name").get<std::string>();
            cfg.group = entry.at("group").get<std::string>();
            cfg.subgroup = entry.at("subgroup").get<std::string>();
            auto window = entry.at("window");
            if (!window.is_array() || window.size() != 2) {
                throw gspin::ConfigError("instance '" + cfg.name + "' needs window [lo, hi]");
            }
            cfg.window_lo = window[0].get<int>();
            cfg.window_hi = window[1].get<int>();
            auto suites = entry.at("suites").get<std::vector<std::string>>();
            cfg.suites = suites == std::vector<std::string>{"all"} ? std::vector<std::string>{}
                                                                   : std::move(suites);
            if (entry.contains("mode")) apply_mode(cfg, entry["mode"].get<std::string>());
            if (entry.contains("samples")) cfg.verify.samples = entry["samples"].get<std::uint64_t>();
            if (entry.contains("seed")) cfg.verify.seed = entry["seed"].get<std::uint64_t>();
        } catch (const nlohmann::json::exception& e) {
            throw gspin::ConfigError("instance file '" + path + "': " + e.what());
        }
        out.push_back(std::move(cfg));
    }
    if (out.empty()) throw gspin::ConfigError("instance file '" + path + "' lists no instances");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of group-pair spin chain algebras"};
    app.require_subcommand(1);

    gspin::RunConfig cfg;
    if (const char* e = std::getenv("GSPIN_MAX_BASIS")) {
        cfg.max_basis = std::strtoull(e, nullptr, 10);
    }
    if (const char* e = std::getenv("GSPIN_MAX_GROUP_ORDER")) {
        cfg.max_group_order = std::atoi(e);
    }

    std::vector<int> window{0, 1};
    std::string mode = "automatic";
    std::string suites_csv = "all";
    std::string out_path;
    std::string format = "json";
    bool serial = false;

    auto* verify = app.add_subcommand("verify", "build one instance and run verification suites");
    verify->add_option("--group", cfg.group,
                       "cyclic:N | dihedral:N | symmetric:N | quaternion | file:PATH");
    verify->add_option("--subgroup", cfg.subgroup,
                       "comma-separated generator indices, 'all', or 'e'");
    verify->add_option("--window", window, "integer site window lo,hi")->expected(2)->delimiter(',');
    verify->add_option("--suites", suites_csv, "comma-separated suite list, or 'all'");
    verify->add_option("--mode", mode, "automatic | exhaustive | sampled[:SEED]");
    verify->add_option("--samples", cfg.verify.samples, "tuples drawn per sampled law");
    verify->add_option("--seed", cfg.verify.seed, "base seed for sampled laws");
    verify->add_option("--max-basis", cfg.max_basis, "largest allowed basis size");
    verify->add_option("--name", cfg.name, "instance label echoed in the report");
    verify->add_option("--out", out_path, "write the report to this file instead of stdout");
    verify->add_option("--format", format, "json | markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    verify->add_flag("--serial", serial, "disable parallel law checking");

    std::string matrix_path;
    std::string matrix_out_dir;
    auto* matrix =
        app.add_subcommand("matrix", "run every instance listed in a JSON instance file");
    matrix->add_option("file", matrix_path, "instance file, e.g. config/default_instances.json")
        ->required();
    matrix->add_option("--out-dir", matrix_out_dir, "write one <name>.json report per instance");
    matrix->add_flag("--serial", serial, "disable parallel law checking");

    std::string cayley_path;
    auto* ingest =
        app.add_subcommand("ingest-group", "validate a Cayley table file and describe the group");
    ingest->add_option("file", cayley_path, "table file: order, rows, optional names line")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*ingest) {
            gspin::FiniteGroup g = gspin::read_cayley_file(cayley_path);
            std::cout << "order: " << g.order() << "\n";
            std::cout << "identity: " << g.name(g.identity()) << "\n";
            std::cout << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n";
            std::cout << "elements:";
            for (gspin::Elem a = 0; a < g.order(); ++a) std::cout << " " << g.name(a);
            std::cout << "\n";
            return 0;
        }

        if (*matrix) {
            cfg.verify.parallel = !serial;
            bool all_pass = true;
            for (auto& inst : read_instance_file(matrix_path, cfg)) {
                auto report = gspin::run_suites(inst);
                bool ok = report.pass();
                all_pass = all_pass && ok;
                std::cout << inst.name << ": " << (ok ? "pass" : "FAIL") << "\n";
                if (!matrix_out_dir.empty()) {
                    std::string path = matrix_out_dir + "/" + inst.name + ".json";
                    std::ofstream f(path);
                    if (!f) throw gspin::ConfigError("cannot write to '" + path + "'");
                    f << gspin::report_json(report);
                }
            }
            return all_pass ? 0 : 1;
        }

        cfg.window_lo = window[0];
        cfg.window_hi = window[1];
        cfg.suites = suites_csv == "all" ? std::vector<std::string>{} : split_csv(suites_csv);
        apply_mode(cfg, mode);
        cfg.verify.parallel = !serial;

        auto report = gspin::run_suites(cfg);
        std::string text =
            format == "json" ? gspin::report_json(report) : gspin::report_markdown(report);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path);
            if (!f) throw gspin::ConfigError("cannot write to '" + out_path + "'");
            f << text;
        }
        for (const auto& s : report.suites) {
            std::cerr << s.suite << ": " << (s.pass() ? "pass" : "FAIL") << "\n";
        }
        return report.pass() ? 0 : 1;
    } catch (const gspin::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const gspin::ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const gspin::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    }
}
