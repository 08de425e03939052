#include "event_args.hpp"
#include "katal/extrinsic.hpp"
#include "katal/kernel.hpp"

namespace katal::kernel::dock {

namespace {

Value& replay_set(Runtime& rt) { return rt.storage(ids::kDock).as_map().at("replay"); }

void prune_replay_set(Runtime& rt, uint64_t height) {
    Value& replay = replay_set(rt);
    Value::Map& m = replay.as_map();
    for (auto it = m.begin(); it != m.end();) {
        if (it->second.as_uint64() < height)
            it = m.erase(it);
        else
            ++it;
    }
}

void handle_transaction(Runtime& rt, const Value& extrinsic) {
    Transaction tx = Transaction::from_value(extrinsic);
    const uint64_t height = rt.height();
    if (height < tx.window_start || height > tx.window_end)
        throw KatalError(ErrorCode::WindowExpired,
                         "block " + std::to_string(height) + " outside window [" +
                             std::to_string(tx.window_start) + ", " +
                             std::to_string(tx.window_end) + "]");

    Value& replay = replay_set(rt);
    for (const ObjectId& id : tx.auth_ids) {
        if (replay.has(registry_key(id, std::to_string(tx.nonce))))
            throw KatalError(ErrorCode::ReplayDetected,
                            id + " nonce " + std::to_string(tx.nonce));
    }

    std::vector<auth::VerifyItem> items;
    const std::vector<uint8_t> message = tx.signing_message();
    for (size_t i = 0; i < tx.auth_ids.size(); ++i)
        items.push_back({message, tx.auth_ids[i], tx.signatures[i]});
    if (!auth::verify(rt, items))
        throw KatalError(ErrorCode::BadSignature, "transaction signature check failed");

    // Retain (auth_id, nonce) until the window's end block passes.
    for (const ObjectId& id : tx.auth_ids)
        replay.set(registry_key(id, std::to_string(tx.nonce)), Value(tx.window_end));

    for (const FunctionCall& call : tx.calls)
        rt.enqueue(kPriorityUser, call.id_to, call.call_function, ids::kDock, tx.auth_ids,
                   wrap_args(call.user_parameters));
}

void handle_inherent(Runtime& rt, const Value& extrinsic, const std::string& type) {
    if (type == "timestamp") {
        const uint64_t block_number = extrinsic.at("block_number").as_uint64();
        const uint64_t time = extrinsic.at("time").as_uint64();
        prune_replay_set(rt, block_number);
        Value::Map a;
        a["block_number"] = Value(block_number);
        a["timestamp"] = Value(time);
        rt.enqueue(kPriorityKernel, ids::kSchedule, "init", ids::kDock, {},
                   wrap_inherent_args(Value(std::move(a))));
    } else if (type == "slash") {
        Value::Map a;
        a["id"] = extrinsic.at("id");
        rt.enqueue(kPriorityKernel, ids::kConsensus, "slash", ids::kDock, {},
                   wrap_inherent_args(Value(std::move(a))));
    } else if (type == "seed") {
        // Only forwarded in macro blocks, otherwise ignored.
        if (!rt.macro_block()) return;
        Value::Map a;
        a["seed"] = extrinsic.at("seed");
        rt.enqueue(kPriorityKernel, ids::kConsensus, "change_validators", ids::kDock, {},
                   wrap_inherent_args(Value(std::move(a))));
    } else if (type == "reward") {
        Value::Map a;
        a["id"] = extrinsic.at("id");
        rt.enqueue(kPriorityKernel, ids::kConsensus, "reward", ids::kDock, {},
                   wrap_inherent_args(Value(std::move(a))));
    } else {
        throw KatalError(ErrorCode::MalformedExtrinsic, "unknown extrinsic type " + type);
    }
}

}  // namespace

Value initial_storage() {
    Value::Map m;
    m["replay"] = Value(Value::Map{});
    return Value(std::move(m));
}

std::map<std::string, HandlerFn> handlers() {
    std::map<std::string, HandlerFn> fns;
    fns["input"] = [](Runtime& rt, const Event& event) {
        if (!event.external())
            throw KatalError(ErrorCode::ForbiddenOrigin, "dock input is extrinsic-only");
        if (!event.params.is_map() || !event.params.has("type"))
            throw KatalError(ErrorCode::MalformedExtrinsic, "missing extrinsic type");
        const std::string& type = event.params.at("type").as_str();
        if (type == "transaction")
            handle_transaction(rt, event.params);
        else
            handle_inherent(rt, event.params, type);
    };
    return fns;
}

}  // namespace katal::kernel::dock
