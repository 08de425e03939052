#pragma once

#include <string>
#include <vector>

#include "katal/genesis.hpp"
#include "katal/runtime.hpp"
#include "katal/value.hpp"

// Block production and scenario replay around the runtime. Everything here is
// deterministic: the same scenario file always yields the same digest and the
// same cash-flow log.

namespace katal::harness {

struct ChainParams {
    uint64_t epoch_blocks = 10;  // micro blocks between macro blocks
    uint64_t slot_seconds = 6;
    std::string initial_seed_hex;  // hash-chained forward at each macro block
};

// Drives one chain: numbers blocks from 1, derives block time as
// height * slot_seconds, and frames every block with the inherent sequence
// [timestamp, slash*, seed (macro only), transactions (micro only), reward].
// The reward recipient rotates round-robin through the active validator set.
class Chain {
public:
    Chain(const GenesisConfig& genesis, ChainParams params);

    Runtime& runtime() { return rt_; }
    const Runtime& runtime() const { return rt_; }
    uint64_t height() const { return height_; }
    uint64_t time_at(uint64_t height) const { return height * params_.slot_seconds; }
    // Every (epoch_blocks + 1)-th block is a macro block.
    bool is_macro(uint64_t height) const {
        return height % (params_.epoch_blocks + 1) == 0;
    }

    ExecutionReport apply_block(const std::vector<Value>& transactions,
                                const std::vector<ObjectId>& slashes = {});

private:
    Runtime rt_;
    ChainParams params_;
    uint64_t height_ = 0;
    std::vector<uint8_t> seed_;
};

struct ScenarioResult {
    std::string name;
    std::string digest;               // final state digest
    std::vector<uint8_t> state;       // final canonical state
    std::string csv;                  // cash-flow log
    std::vector<std::string> errors;  // "block H extrinsic I: message"
};

// Runs a scenario given as JSON text. Scenario schema:
//   name, genesis {dictator, subsidy, set_size, epoch_blocks, slot_seconds,
//   seed, accounts [{id, secret}], balances [{owner, amount}],
//   validators [{id, deposit, secret, active}]},
//   blocks [{height, slashes [id], transactions [{signers, nonce, window?,
//   calls [{to, function, args} | {oracle_update: {...}}]}]}],
//   run_until.
// Transactions are signed with test-sig from the listed secrets. In args,
// {"$fix": "1.5"} denotes a fixed-point number and {"$testsig_key": "s"}
// expands to the test-sig parameters derived from secret s.
ScenarioResult run_scenario_text(const std::string& json_text);
ScenarioResult run_scenario_file(const std::string& path);

// JSON bridge used by the CLI; same conventions as scenario args.
std::string value_to_json_text(const Value& v, int indent = 2);
Value value_from_json_text(const std::string& text);

}  // namespace katal::harness
