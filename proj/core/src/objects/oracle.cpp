#include "../kernel/event_args.hpp"
#include "katal/crypto.hpp"
#include "katal/kernel.hpp"
#include "katal/objects.hpp"

namespace katal::objects::oracle {

namespace {

using kernel::args;
using kernel::authorized;

bool admin_allowed(Runtime& rt, const ObjectId& oracle_id, const Event& event) {
    const Value& admins = rt.storage(oracle_id).at("admins");
    if (event.from(ids::kSchedule)) return true;
    if (admins.as_list().empty()) return true;
    for (const Value& admin : admins.as_list()) {
        if (event.from(admin.as_str())) return true;
        if (event.from(ids::kDock) && authorized(event, admin.as_str())) return true;
    }
    return false;
}

}  // namespace

Value initial_storage(std::string feed_key_hex, std::vector<ObjectId> admins,
                      uint64_t staleness_seconds) {
    Value::Map m;
    m["feed_key"] = Value(std::move(feed_key_hex));
    m["feed_method"] = Value("test-sig");
    Value::List admin_list;
    for (auto& a : admins) admin_list.emplace_back(std::move(a));
    m["admins"] = Value(std::move(admin_list));
    m["staleness"] = Value(staleness_seconds);
    m["open"] = Value(false);
    m["has_data"] = Value(false);
    m["value"] = Value();
    m["timestamp"] = Value(uint64_t{0});
    m["reward"] = Value();
    return Value(std::move(m));
}

Feed fetch(Runtime& rt, const ObjectId& oracle_id) {
    const Value& st = rt.storage(oracle_id);
    if (!st.at("has_data").as_bool()) throw KatalError(ErrorCode::EmptyFeed, oracle_id);
    return {st.at("value"), st.at("timestamp").as_uint64()};
}

uint64_t staleness_bound(Runtime& rt, const ObjectId& oracle_id) {
    return rt.storage(oracle_id).at("staleness").as_uint64();
}

std::vector<uint8_t> update_message(const ObjectId& oracle_id, const Value& value,
                                    uint64_t timestamp) {
    Value::Map m;
    m["oracle"] = Value(oracle_id);
    m["value"] = value;
    m["timestamp"] = Value(timestamp);
    return Value(std::move(m)).encode();
}

std::map<std::string, HandlerFn> handlers() {
    std::map<std::string, HandlerFn> fns;
    fns["request"] = [](Runtime& rt, const Event& event) {
        if (!admin_allowed(rt, event.id_to, event))
            throw KatalError(ErrorCode::Unauthorized, "request denied");
        rt.storage(event.id_to).set("open", Value(true));
    };
    fns["update"] = [](Runtime& rt, const Event& event) {
        Value& st = rt.storage(event.id_to);
        if (!st.at("open").as_bool())
            throw KatalError(ErrorCode::FeedClosed, "no pending request on " + event.id_to);
        const Value& a = args(event);
        const Value& value = a.at("value");
        const uint64_t timestamp = a.at("timestamp").as_uint64();
        if (!crypto::method_verify(st.at("feed_method").as_str(),
                                   update_message(event.id_to, value, timestamp),
                                   st.at("feed_key").as_str(), a.at("proof").as_str()))
            throw KatalError(ErrorCode::BadProof, "feed-key signature invalid");
        if (st.at("has_data").as_bool() && timestamp < st.at("timestamp").as_uint64())
            throw KatalError(ErrorCode::StaleTimestamp, std::to_string(timestamp));
        st.set("value", value);
        st.set("timestamp", Value(timestamp));
        st.set("has_data", Value(true));
        st.set("open", Value(false));
        const Value& reward = st.at("reward");
        if (!reward.is_null() && a.has("receiving_id")) {
            // The oracle object itself must be funded at the issuance object.
            issuance::transfer(rt, reward.at("issuance_id").as_str(), event.id_to,
                               a.at("receiving_id").as_str(), reward.at("asset_id").as_str(),
                               reward.at("amount").as_fix());
        }
    };
    fns["fetch"] = [](Runtime& rt, const Event& event) { fetch(rt, event.id_to); };
    fns["set_reward"] = [](Runtime& rt, const Event& event) {
        if (!admin_allowed(rt, event.id_to, event))
            throw KatalError(ErrorCode::Unauthorized, "set_reward denied");
        const Value& a = args(event);
        const Fixed amount = a.at("amount").as_fix();
        if (amount.is_zero()) {
            rt.storage(event.id_to).set("reward", Value());  // zero disables the reward
            return;
        }
        Value::Map reward;
        reward["issuance_id"] = a.at("issuance_id");
        reward["asset_id"] = a.at("asset_id");
        reward["amount"] = Value(amount);
        rt.storage(event.id_to).set("reward", Value(std::move(reward)));
    };
    fns["self_destruct"] = [](Runtime& rt, const Event& event) {
        if (!admin_allowed(rt, event.id_to, event))
            throw KatalError(ErrorCode::Unauthorized, "self_destruct denied");
        kernel::schedule::delete_entries_for(rt, event.id_to);
        rt.super_delete(event.id_to);
    };
    return fns;
}

}  // namespace katal::objects::oracle
