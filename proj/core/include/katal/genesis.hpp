#pragma once

#include <string>
#include <vector>

#include "katal/fixed.hpp"
#include "katal/runtime.hpp"
#include "katal/value.hpp"

namespace katal {

struct GenesisAccount {
    ObjectId id;
    std::string method;  // "test-sig" or "ed25519"
    Value parameters;    // hex key material for the method
};

struct GenesisBalance {
    ObjectId owner;
    Fixed amount;  // native asset
};

struct GenesisValidator {
    ObjectId id;
    Fixed deposit;
    std::string validating_key;  // test-sig parameters, hex
    bool active = true;
};

struct GenesisConfig {
    ObjectId dictator;
    Fixed block_subsidy;
    uint64_t validator_set_size = 0;
    std::vector<GenesisAccount> accounts;
    std::vector<GenesisBalance> balances;
    std::vector<GenesisValidator> validators;
};

// Bootstraps the kernel objects, the native issuance and the configured
// accounts/balances/validators into an empty runtime, then designates the
// dock as the input object. Validator deposits are minted into the consensus
// object's escrow.
void apply_genesis(Runtime& rt, const GenesisConfig& config);

}  // namespace katal
