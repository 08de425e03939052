#include "../kernel/event_args.hpp"
#include "katal/kernel.hpp"
#include "katal/objects.hpp"

namespace katal::objects::issuance {

namespace {

using kernel::args;
using kernel::authorized;
using kernel::registry_key;

Value& ledger(Runtime& rt, const ObjectId& issuance_id) {
    return rt.storage(issuance_id).as_map().at("ledger");
}

Value& supply_map(Runtime& rt, const ObjectId& issuance_id) {
    return rt.storage(issuance_id).as_map().at("supply");
}

void set_balance(Runtime& rt, const ObjectId& issuance_id, const ObjectId& owner,
                 const AssetId& asset, Fixed amount) {
    Value& l = ledger(rt, issuance_id);
    const std::string key = registry_key(owner, asset);
    if (amount.is_zero())
        l.erase(key);  // absent key == zero, keeps the encoding canonical
    else
        l.set(key, Value(amount));
}

void check_amount(Runtime& rt, const ObjectId& issuance_id, const AssetId& asset, Fixed amount) {
    if (amount <= Fixed::zero()) throw KatalError(ErrorCode::BadAmount, amount.to_string());
    const Value& indivisible = rt.storage(issuance_id).at("indivisible");
    if (indivisible.has(asset) && !amount.is_whole())
        throw KatalError(ErrorCode::BadAmount, "asset " + asset + " is indivisible");
}

// Mint/burn policy: NONE | a predetermined ID set | SCHEDULED.
bool policy_allows(Runtime& rt, const ObjectId& issuance_id, const Event& event) {
    const Value& policy = rt.storage(issuance_id).at("policy");
    const std::string& mode = policy.at("mode").as_str();
    if (mode == "none") return false;
    if (mode == "scheduled") return event.from(ids::kSchedule);
    if (mode == "ids") {
        for (const Value& id : policy.at("ids").as_list()) {
            if (event.from(id.as_str())) return true;
            if (event.from(ids::kDock) && authorized(event, id.as_str())) return true;
        }
        return false;
    }
    throw KatalError(ErrorCode::BadParameters, "unknown issuance policy " + mode);
}

}  // namespace

Value initial_storage(Value policy) {
    Value::Map m;
    m["ledger"] = Value(Value::Map{});
    m["supply"] = Value(Value::Map{});
    m["indivisible"] = Value(Value::Map{});
    m["policy"] = std::move(policy);
    return Value(std::move(m));
}

Fixed balance(Runtime& rt, const ObjectId& issuance_id, const ObjectId& owner,
              const AssetId& asset) {
    const Value& entry = ledger(rt, issuance_id).get(registry_key(owner, asset));
    return entry.is_null() ? Fixed::zero() : entry.as_fix();
}

Fixed supply(Runtime& rt, const ObjectId& issuance_id, const AssetId& asset) {
    const Value& entry = supply_map(rt, issuance_id).get(asset);
    return entry.is_null() ? Fixed::zero() : entry.as_fix();
}

void transfer(Runtime& rt, const ObjectId& issuance_id, const ObjectId& owner,
              const ObjectId& destination, const AssetId& asset, Fixed amount) {
    check_amount(rt, issuance_id, asset, amount);
    if (!rt.super_check(destination))
        throw KatalError(ErrorCode::UnknownDestination, destination);
    const Fixed from_balance = balance(rt, issuance_id, owner, asset);
    if (from_balance < amount)
        throw KatalError(ErrorCode::InsufficientFunds,
                         owner + " holds " + from_balance.to_string() + " " + asset);
    set_balance(rt, issuance_id, owner, asset, from_balance - amount);
    set_balance(rt, issuance_id, destination, asset,
                balance(rt, issuance_id, destination, asset) + amount);
}

void mint(Runtime& rt, const ObjectId& issuance_id, const ObjectId& owner, const AssetId& asset,
          Fixed amount) {
    check_amount(rt, issuance_id, asset, amount);
    set_balance(rt, issuance_id, owner, asset, balance(rt, issuance_id, owner, asset) + amount);
    supply_map(rt, issuance_id).set(asset, Value(supply(rt, issuance_id, asset) + amount));
}

void burn(Runtime& rt, const ObjectId& issuance_id, const ObjectId& owner, const AssetId& asset,
          Fixed amount) {
    check_amount(rt, issuance_id, asset, amount);
    const Fixed held = balance(rt, issuance_id, owner, asset);
    if (held < amount)
        throw KatalError(ErrorCode::InsufficientFunds,
                         owner + " holds " + held.to_string() + " " + asset);
    set_balance(rt, issuance_id, owner, asset, held - amount);
    supply_map(rt, issuance_id).set(asset, Value(supply(rt, issuance_id, asset) - amount));
}

void set_indivisible(Runtime& rt, const ObjectId& issuance_id, const AssetId& asset) {
    rt.storage(issuance_id).as_map().at("indivisible").set(asset, Value(true));
}

std::map<std::string, HandlerFn> handlers() {
    std::map<std::string, HandlerFn> fns;
    fns["mint"] = [](Runtime& rt, const Event& event) {
        if (!policy_allows(rt, event.id_to, event))
            throw KatalError(ErrorCode::Unauthorized, "mint denied by policy");
        const Value& a = args(event);
        mint(rt, event.id_to, a.at("owner_id").as_str(), a.at("asset_id").as_str(),
             a.at("amount").as_fix());
    };
    fns["burn"] = [](Runtime& rt, const Event& event) {
        if (!policy_allows(rt, event.id_to, event))
            throw KatalError(ErrorCode::Unauthorized, "burn denied by policy");
        const Value& a = args(event);
        burn(rt, event.id_to, a.at("owner_id").as_str(), a.at("asset_id").as_str(),
             a.at("amount").as_fix());
    };
    fns["transfer"] = [](Runtime& rt, const Event& event) {
        const Value& a = args(event);
        const ObjectId owner = a.at("owner_id").as_str();
        if (event.from(ids::kDock) && !authorized(event, owner))
            throw KatalError(ErrorCode::Unauthorized, "transfer requires " + owner);
        transfer(rt, event.id_to, owner, a.at("destination_id").as_str(),
                 a.at("asset_id").as_str(), a.at("amount").as_fix());
    };
    fns["check"] = [](Runtime& rt, const Event& event) {
        if (event.from(ids::kDock))
            throw KatalError(ErrorCode::ForbiddenOrigin, "check rejects dock calls");
        const Value& a = args(event);
        balance(rt, event.id_to, a.at("owner_id").as_str(), a.at("asset_id").as_str());
    };
    fns["self_destruct"] = [](Runtime& rt, const Event& event) {
        if (!policy_allows(rt, event.id_to, event))
            throw KatalError(ErrorCode::Unauthorized, "self_destruct denied by policy");
        kernel::schedule::delete_entries_for(rt, event.id_to);
        rt.super_delete(event.id_to);
    };
    return fns;
}

}  // namespace katal::objects::issuance
