#pragma once

#include <string>
#include <vector>

#include "katal/crypto.hpp"
#include "katal/extrinsic.hpp"
#include "katal/genesis.hpp"
#include "katal/runtime.hpp"

// Shared test fixtures: a runtime bootstrapped with three funded accounts
// signed by well-known test-sig secrets.

namespace testutil {

using namespace katal;

inline std::string secret_of(const std::string& account) { return account + "-secret"; }

inline GenesisConfig default_genesis() {
    GenesisConfig g;
    g.dictator = "gov";
    for (const char* name : {"alice", "bob", "charlie", "gov"})
        g.accounts.push_back(
            {name, "test-sig", Value(crypto::test_sig_parameters(secret_of(name)))});
    g.balances.push_back({"alice", Fixed(1000)});
    g.balances.push_back({"bob", Fixed(1000)});
    g.balances.push_back({"charlie", Fixed(1000)});
    return g;
}

inline Runtime make_runtime(const GenesisConfig& genesis = default_genesis()) {
    Runtime rt;
    register_builtin_templates(rt);
    apply_genesis(rt, genesis);
    return rt;
}

// A signed single-call transaction from one account.
inline Value signed_tx(const std::vector<ObjectId>& signers, uint64_t nonce,
                       const std::vector<FunctionCall>& calls, uint64_t window_start = 1,
                       uint64_t window_end = 1000) {
    Transaction tx;
    tx.auth_ids = signers;
    tx.calls = calls;
    tx.nonce = nonce;
    tx.window_start = window_start;
    tx.window_end = window_end;
    const std::vector<uint8_t> message = tx.signing_message();
    for (const ObjectId& signer : signers)
        tx.signatures.push_back(crypto::test_sig_prove(secret_of(signer), message));
    return tx.to_value();
}

// Runs one block's worth of extrinsics at the given height with a leading
// timestamp inherent (time = height * 6).
inline ExecutionReport run_block(Runtime& rt, uint64_t height, std::vector<Value> extrinsics,
                                 uint64_t slot_seconds = 6) {
    rt.set_block_context(height, height * slot_seconds, false);
    std::vector<Value> all;
    all.push_back(Inherent::timestamp(height, height * slot_seconds).to_value());
    for (Value& e : extrinsics) all.push_back(std::move(e));
    return rt.run_extrinsics(all);
}

}  // namespace testutil
