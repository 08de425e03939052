#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "katal/harness.hpp"
#include "katal/runtime.hpp"

namespace {

std::vector<uint8_t> read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string& s = buffer.str();
    return {s.begin(), s.end()};
}

void write_bytes(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

katal::Runtime load_state(const std::string& path) {
    katal::Runtime rt;
    katal::register_builtin_templates(rt);
    rt.restore_state(katal::Runtime::decode_state(read_bytes(path)));
    return rt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"katal scenario harness"};
    app.require_subcommand(1);

    std::string scenario_path, golden_path, out_dir, state_path, object_id;

    CLI::App* run = app.add_subcommand("run", "run a scenario file");
    run->add_option("scenario", scenario_path, "scenario JSON file")->required();
    run->add_option("--golden", golden_path, "golden cash-flow log to compare against");
    run->add_option("--out", out_dir, "directory for the log and final state");

    CLI::App* digest = app.add_subcommand("digest", "print the digest of a state file");
    digest->add_option("state", state_path, "canonical state file")->required();

    CLI::App* inspect = app.add_subcommand("inspect", "print one object from a state file");
    inspect->add_option("state", state_path, "canonical state file")->required();
    inspect->add_option("--id", object_id, "object ID")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const katal::harness::ScenarioResult result =
                katal::harness::run_scenario_file(scenario_path);
            for (const std::string& error : result.errors) std::cerr << error << "\n";
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                const std::filesystem::path base = std::filesystem::path(out_dir) / result.name;
                std::ofstream log(base.string() + ".csv", std::ios::binary);
                log << result.csv;
                write_bytes(base.string() + ".state", result.state);
            }
            std::cout << result.digest << "\n";
            if (!golden_path.empty()) {
                const std::vector<uint8_t> golden = read_bytes(golden_path);
                if (std::string(golden.begin(), golden.end()) != result.csv) {
                    std::cerr << "cash-flow log differs from " << golden_path << "\n";
                    return 1;
                }
            }
        } else if (*digest) {
            std::cout << load_state(state_path).state_digest() << "\n";
        } else if (*inspect) {
            const katal::Runtime rt = load_state(state_path);
            if (!rt.super_check(object_id)) {
                std::cerr << "no object " << object_id << "\n";
                return 1;
            }
            const katal::ObjectRecord& record = rt.object(object_id);
            katal::Value::Map out;
            out["id"] = katal::Value(record.id);
            out["template"] = katal::Value(record.code.template_name);
            out["version"] = katal::Value(record.code.version);
            out["storage"] = record.storage;
            std::cout << katal::harness::value_to_json_text(katal::Value(std::move(out)))
                      << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
