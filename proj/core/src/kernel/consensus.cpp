#include "event_args.hpp"
#include "katal/crypto.hpp"
#include "katal/kernel.hpp"
#include "katal/objects.hpp"

namespace katal::kernel::consensus {

namespace {

constexpr const char* kActive = "active";
constexpr const char* kInactive = "inactive";

Value& storage(Runtime& rt) { return rt.storage(ids::kConsensus); }
Value& registry(Runtime& rt) { return storage(rt).as_map().at("registry"); }

void require_inherent(const Event& event, const char* what) {
    if (!inherent_origin(event))
        throw KatalError(ErrorCode::ForbiddenOrigin, std::string(what) + " is inherent-only");
}

void require_owner(const Event& event, const ObjectId& id, const char* what) {
    if (event.from(ids::kDock) && !authorized(event, id))
        throw KatalError(ErrorCode::Unauthorized, std::string(what) + " requires " + id);
}

Value make_entry(Fixed deposit, const Value& key, const char* status) {
    Value::Map e;
    e["deposit"] = Value(deposit);
    e["key"] = key;
    e["status"] = Value(status);
    return Value(std::move(e));
}

// Deterministic deposit-weighted sampling without replacement: hash
// (seed || round) to a uniform integer, reduce modulo the total remaining
// deposit and walk the sorted-ID cumulative deposit table.
std::vector<ObjectId> sample_validators(const std::vector<ValidatorEntry>& candidates,
                                        const std::vector<uint8_t>& seed, uint64_t count) {
    struct Remaining {
        ObjectId id;
        unsigned __int128 weight;
    };
    std::vector<Remaining> pool;
    for (const auto& c : candidates)
        pool.push_back({c.id, static_cast<unsigned __int128>(c.deposit.raw())});

    std::vector<ObjectId> selected;
    for (uint64_t round = 0; round < count && !pool.empty(); ++round) {
        unsigned __int128 total = 0;
        for (const auto& p : pool) total += p.weight;
        std::vector<uint8_t> preimage = seed;
        for (int shift = 56; shift >= 0; shift -= 8)
            preimage.push_back(static_cast<uint8_t>(round >> shift));
        const crypto::Digest32 digest = crypto::sha256(preimage);
        unsigned __int128 u = 0;
        for (int i = 0; i < 16; ++i) u = (u << 8) | digest[i];
        u %= total;
        size_t pick = 0;
        unsigned __int128 cumulative = 0;
        for (size_t i = 0; i < pool.size(); ++i) {
            cumulative += pool[i].weight;
            if (u < cumulative) {
                pick = i;
                break;
            }
        }
        selected.push_back(pool[pick].id);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return selected;
}

}  // namespace

Value initial_storage(Fixed block_subsidy, uint64_t validator_set_size) {
    Value::Map m;
    m["registry"] = Value(Value::Map{});
    m["subsidy"] = Value(block_subsidy);
    m["pot"] = Value(Fixed::zero());
    m["set_size"] = Value(validator_set_size);
    return Value(std::move(m));
}

std::vector<ValidatorEntry> validator_registry(Runtime& rt) {
    std::vector<ValidatorEntry> out;
    for (const auto& [id, entry] : registry(rt).as_map())
        out.push_back({id, entry.at("deposit").as_fix(), entry.at("key").at("parameters").as_str(),
                       entry.at("status").as_str() == kActive});
    return out;
}

std::vector<ObjectId> active_validators(Runtime& rt) {
    std::vector<ObjectId> out;
    for (const auto& [id, entry] : registry(rt).as_map())
        if (entry.at("status").as_str() == kActive) out.push_back(id);
    return out;
}

void register_validator(Runtime& rt, const ObjectId& id, Fixed deposit, std::string key,
                        bool active) {
    Value::Map k;
    k["method"] = Value("test-sig");
    k["parameters"] = Value(std::move(key));
    registry(rt).set(id, make_entry(deposit, Value(std::move(k)), active ? kActive : kInactive));
}

std::map<std::string, HandlerFn> handlers() {
    std::map<std::string, HandlerFn> fns;
    fns["stake"] = [](Runtime& rt, const Event& event) {
        const Value& a = args(event);
        const ObjectId id = a.at("id").as_str();
        require_owner(event, id, "stake");
        const Fixed amount = a.at("amount").as_fix();
        if (registry(rt).has(id)) throw KatalError(ErrorCode::DuplicateValidator, id);
        if (objects::issuance::balance(rt, ids::kNativeIssuance, id, kNativeAsset) < amount)
            throw KatalError(ErrorCode::InsufficientFunds, id);
        objects::issuance::transfer(rt, ids::kNativeIssuance, id, ids::kConsensus, kNativeAsset,
                                    amount);
        // New validators stay inactive until the next change_validators.
        registry(rt).set(id, make_entry(amount, a.at("validating_key"), kInactive));
    };
    fns["restake"] = [](Runtime& rt, const Event& event) {
        const Value& a = args(event);
        const ObjectId id = a.at("id").as_str();
        Value& reg = registry(rt);
        if (!reg.has(id)) throw KatalError(ErrorCode::UnknownValidator, id);
        // The rotation proof is checked against the current validating key.
        const Value& key = reg.at(id).at("key");
        Value::Map signed_payload;
        signed_payload["id"] = Value(id);
        signed_payload["new_key"] = a.at("new_validating_key");
        if (!crypto::method_verify(key.at("method").as_str(),
                                   Value(std::move(signed_payload)).encode(),
                                   key.at("parameters").as_str(), a.at("signature").as_str()))
            throw KatalError(ErrorCode::Unauthorized, "restake signature invalid");
        Value entry = reg.at(id);
        entry.set("key", a.at("new_validating_key"));
        reg.set(id, std::move(entry));
    };
    fns["unstake"] = [](Runtime& rt, const Event& event) {
        const Value& a = args(event);
        const ObjectId id = a.at("id").as_str();
        require_owner(event, id, "unstake");
        Value& reg = registry(rt);
        if (!reg.has(id)) throw KatalError(ErrorCode::UnknownValidator, id);
        const Fixed deposit = reg.at(id).at("deposit").as_fix();
        reg.erase(id);
        objects::issuance::transfer(rt, ids::kNativeIssuance, ids::kConsensus, id, kNativeAsset,
                                    deposit);
    };
    fns["fee"] = [](Runtime& rt, const Event& event) {
        const Value& a = args(event);
        const ObjectId id = a.at("id").as_str();
        require_owner(event, id, "fee");
        const Fixed amount = a.at("amount").as_fix();
        if (objects::issuance::balance(rt, ids::kNativeIssuance, id, kNativeAsset) < amount)
            throw KatalError(ErrorCode::InsufficientFunds, id);
        objects::issuance::transfer(rt, ids::kNativeIssuance, id, ids::kConsensus, kNativeAsset,
                                    amount);
        Value& st = storage(rt);
        st.set("pot", Value(st.at("pot").as_fix() + amount));
    };
    fns["slash"] = [](Runtime& rt, const Event& event) {
        require_inherent(event, "slash");
        const ObjectId id = args(event).at("id").as_str();
        Value& reg = registry(rt);
        if (!reg.has(id)) throw KatalError(ErrorCode::UnknownValidator, id);
        const Fixed deposit = reg.at(id).at("deposit").as_fix();
        reg.erase(id);

        std::vector<std::pair<ObjectId, Fixed>> recipients;
        for (const auto& [vid, entry] : reg.as_map())
            if (entry.at("status").as_str() == kActive) recipients.emplace_back(vid, Fixed(1));
        if (recipients.empty()) {
            // Nobody to redistribute to; the funds stay with the consensus
            // object as part of the reward pot.
            Value& st = storage(rt);
            st.set("pot", Value(st.at("pot").as_fix() + deposit));
            return;
        }
        for (const auto& [vid, share] : largest_remainder_split(deposit, recipients)) {
            Value entry = reg.at(vid);
            entry.set("deposit", Value(entry.at("deposit").as_fix() + share));
            reg.set(vid, std::move(entry));
        }
    };
    fns["reward"] = [](Runtime& rt, const Event& event) {
        require_inherent(event, "reward");
        const ObjectId id = args(event).at("id").as_str();
        Value& st = storage(rt);
        const Fixed subsidy = st.at("subsidy").as_fix();
        const Fixed pot = st.at("pot").as_fix();
        if (!subsidy.is_zero())
            objects::issuance::mint(rt, ids::kNativeIssuance, id, kNativeAsset, subsidy);
        if (!pot.is_zero())
            objects::issuance::transfer(rt, ids::kNativeIssuance, ids::kConsensus, id,
                                        kNativeAsset, pot);
        st.set("pot", Value(Fixed::zero()));
    };
    fns["change_validators"] = [](Runtime& rt, const Event& event) {
        require_inherent(event, "change_validators");
        const std::vector<uint8_t> seed = crypto::hex_decode(args(event).at("seed").as_str());
        std::vector<ValidatorEntry> candidates = validator_registry(rt);
        if (candidates.empty()) throw KatalError(ErrorCode::NoCandidates, "empty registry");
        const uint64_t set_size = storage(rt).at("set_size").as_uint64();
        std::vector<ObjectId> selected = sample_validators(candidates, seed, set_size);

        Value& reg = registry(rt);
        for (const auto& c : candidates) {
            const bool active =
                std::find(selected.begin(), selected.end(), c.id) != selected.end();
            Value entry = reg.at(c.id);
            entry.set("status", Value(active ? kActive : kInactive));
            reg.set(c.id, std::move(entry));
        }
    };
    return fns;
}

}  // namespace katal::kernel::consensus
