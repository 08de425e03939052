#include "katal/genesis.hpp"
#include "katal/kernel.hpp"
#include "katal/objects.hpp"

namespace katal {

void apply_genesis(Runtime& rt, const GenesisConfig& config) {
    namespace k = kernel;
    rt.super_create(ids::kSuper, {"super_object", 1}, k::super_object::initial_storage());
    rt.super_create(ids::kDock, {"dock", 1}, k::dock::initial_storage());
    rt.super_create(ids::kAuth, {"authentication", 1}, k::auth::initial_storage());
    rt.super_create(ids::kSchedule, {"schedule", 1}, k::schedule::initial_storage());
    rt.super_create(ids::kInstantiation, {"instantiation", 1}, k::instantiation::initial_storage());
    rt.super_create(ids::kGovernance, {"governance", 1},
                    k::governance::initial_storage(config.dictator));
    rt.super_create(ids::kConsensus, {"consensus", 1},
                    k::consensus::initial_storage(config.block_subsidy,
                                                  config.validator_set_size));

    // The native issuance only honors mint/burn requests from consensus.
    Value::Map policy;
    policy["mode"] = Value("ids");
    Value::List allowed;
    allowed.emplace_back(ids::kConsensus);
    policy["ids"] = Value(std::move(allowed));
    rt.super_create(ids::kNativeIssuance, {"issuance", 1},
                    objects::issuance::initial_storage(Value(std::move(policy))));

    rt.super_set_input(ids::kDock);

    for (const GenesisAccount& account : config.accounts) {
        rt.super_create(account.id, {"account", 1}, Value(Value::Map{}));
        k::auth::add_key(rt, account.id, account.method, account.parameters);
    }
    for (const GenesisBalance& balance : config.balances)
        objects::issuance::mint(rt, ids::kNativeIssuance, balance.owner, kNativeAsset,
                                balance.amount);
    for (const GenesisValidator& validator : config.validators) {
        objects::issuance::mint(rt, ids::kNativeIssuance, ids::kConsensus, kNativeAsset,
                                validator.deposit);
        k::consensus::register_validator(rt, validator.id, validator.deposit,
                                         validator.validating_key, validator.active);
    }
}

}  // namespace katal
