#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "katal/crypto.hpp"
#include "katal/extrinsic.hpp"
#include "katal/harness.hpp"
#include "katal/objects.hpp"

namespace katal::harness {

namespace {

using nlohmann::json;

Fixed fix_field(const json& j, const char* key) {
    return Fixed::parse(j.at(key).get<std::string>());
}

Value args_value(const json& j) { return value_from_json_text(j.dump()); }

Value build_call(const json& entry, uint64_t /*height*/) {
    Value::Map call;
    if (entry.contains("oracle_update")) {
        const json& u = entry.at("oracle_update");
        const ObjectId oracle_id = u.at("oracle").get<std::string>();
        const Value value = args_value(u.at("value"));
        const uint64_t timestamp = u.at("timestamp").get<uint64_t>();
        Value::Map a;
        a["value"] = value;
        a["timestamp"] = Value(timestamp);
        a["proof"] = Value(crypto::test_sig_prove(
            u.at("feed_secret").get<std::string>(),
            objects::oracle::update_message(oracle_id, value, timestamp)));
        if (u.contains("receiving_id"))
            a["receiving_id"] = Value(u.at("receiving_id").get<std::string>());
        call["id"] = Value(oracle_id);
        call["function"] = Value("update");
        call["args"] = Value(std::move(a));
    } else {
        call["id"] = Value(entry.at("to").get<std::string>());
        call["function"] = Value(entry.at("function").get<std::string>());
        call["args"] = entry.contains("args") ? args_value(entry.at("args")) : Value(Value::Map{});
    }
    return Value(std::move(call));
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

static ScenarioResult run_scenarios_impl(const json& j) {
    ScenarioResult result;
    result.name = j.value("name", "scenario");

    const json& g = j.at("genesis");
    GenesisConfig genesis;
    ChainParams params;
    std::map<ObjectId, std::string> secrets;

    genesis.dictator = g.value("dictator", "");
    genesis.block_subsidy = g.contains("subsidy") ? fix_field(g, "subsidy") : Fixed::zero();
    genesis.validator_set_size = g.value("set_size", uint64_t{0});
    params.epoch_blocks = g.value("epoch_blocks", uint64_t{10});
    params.slot_seconds = g.value("slot_seconds", uint64_t{6});
    params.initial_seed_hex = g.value("seed", "");
    if (g.contains("accounts")) {
        for (const json& a : g.at("accounts")) {
            const ObjectId id = a.at("id").get<std::string>();
            const std::string secret = a.at("secret").get<std::string>();
            secrets[id] = secret;
            genesis.accounts.push_back(
                {id, "test-sig", Value(crypto::test_sig_parameters(secret))});
        }
    }
    if (g.contains("balances"))
        for (const json& b : g.at("balances"))
            genesis.balances.push_back({b.at("owner").get<std::string>(), fix_field(b, "amount")});
    if (g.contains("validators")) {
        for (const json& v : g.at("validators")) {
            const ObjectId id = v.at("id").get<std::string>();
            const std::string secret = v.at("secret").get<std::string>();
            secrets[id] = secret;
            genesis.validators.push_back({id, fix_field(v, "deposit"),
                                          crypto::test_sig_parameters(secret),
                                          v.value("active", true)});
        }
    }

    Chain chain(genesis, params);

    std::map<uint64_t, const json*> blocks;
    uint64_t run_until = j.value("run_until", uint64_t{0});
    if (j.contains("blocks")) {
        for (const json& b : j.at("blocks")) {
            const uint64_t height = b.at("height").get<uint64_t>();
            blocks[height] = &b;
            if (height > run_until) run_until = height;
        }
    }

    std::ostringstream csv;
    csv << "height,contract,event,payer,payee,issuance,asset,amount\n";

    for (uint64_t height = 1; height <= run_until; ++height) {
        std::vector<Value> txs;
        std::vector<ObjectId> slashes;
        auto it = blocks.find(height);
        if (it != blocks.end()) {
            const json& b = *it->second;
            if (b.contains("slashes"))
                for (const json& s : b.at("slashes")) slashes.push_back(s.get<std::string>());
            if (b.contains("transactions")) {
                if (chain.is_macro(height))
                    result.errors.push_back("block " + std::to_string(height) +
                                            ": transactions ignored in macro block");
                for (const json& entry : b.at("transactions")) {
                    Transaction tx;
                    for (const json& s : entry.at("signers"))
                        tx.auth_ids.push_back(s.get<std::string>());
                    tx.nonce = entry.at("nonce").get<uint64_t>();
                    if (entry.contains("window")) {
                        tx.window_start = entry.at("window").at(0).get<uint64_t>();
                        tx.window_end = entry.at("window").at(1).get<uint64_t>();
                    } else {
                        tx.window_start = height;
                        tx.window_end = height + 10;
                    }
                    for (const json& call : entry.at("calls")) {
                        const Value v = build_call(call, height);
                        tx.calls.push_back({v.at("id").as_str(), v.at("function").as_str(),
                                            v.at("args")});
                    }
                    const std::vector<uint8_t> message = tx.signing_message();
                    for (const ObjectId& signer : tx.auth_ids) {
                        auto secret = secrets.find(signer);
                        if (secret == secrets.end())
                            throw KatalError(ErrorCode::BadParameters,
                                             "no secret for signer " + signer);
                        tx.signatures.push_back(
                            crypto::test_sig_prove(secret->second, message));
                    }
                    txs.push_back(tx.to_value());
                }
            }
        }

        const ExecutionReport report = chain.apply_block(txs, slashes);
        for (size_t i = 0; i < report.extrinsics.size(); ++i) {
            if (!report.extrinsics[i].ok)
                result.errors.push_back("block " + std::to_string(height) + " extrinsic " +
                                        std::to_string(i) + ": " + report.extrinsics[i].error);
        }
        for (const CashFlowRecord& flow : report.cash_flows) {
            csv << flow.height << ',' << csv_escape(flow.contract) << ','
                << csv_escape(flow.event_type) << ',' << csv_escape(flow.payer) << ','
                << csv_escape(flow.payee) << ',' << csv_escape(flow.issuance) << ','
                << csv_escape(flow.asset) << ',' << flow.amount.to_string() << '\n';
        }
    }

    result.csv = csv.str();
    result.state = chain.runtime().canonical_state();
    result.digest = chain.runtime().state_digest();
    return result;
}

ScenarioResult run_scenario_text(const std::string& json_text) {
    try {
        return run_scenarios_impl(json::parse(json_text));
    } catch (const json::exception& e) {
        throw KatalError(ErrorCode::BadParameters, std::string("scenario JSON: ") + e.what());
    }
}

ScenarioResult run_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw KatalError(ErrorCode::BadParameters, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return run_scenario_text(buffer.str());
}

}  // namespace katal::harness
