#include "katal/extrinsic.hpp"

#include "katal/errors.hpp"

namespace katal {

namespace {

Value unsigned_payload(const Transaction& tx) {
    Value::List auth;
    for (const auto& id : tx.auth_ids) auth.emplace_back(id);
    Value::List calls;
    for (const auto& call : tx.calls) {
        Value::Map c;
        c["to"] = Value(call.id_to);
        c["function"] = Value(call.call_function);
        c["args"] = call.user_parameters;
        calls.emplace_back(std::move(c));
    }
    Value::Map m;
    m["auth_ids"] = Value(std::move(auth));
    m["calls"] = Value(std::move(calls));
    m["window"] = Value(Value::List{Value(tx.window_start), Value(tx.window_end)});
    m["nonce"] = Value(tx.nonce);
    return Value(std::move(m));
}

}  // namespace

Value Transaction::to_value() const {
    Value v = unsigned_payload(*this);
    v.set("type", Value("transaction"));
    Value::List sigs;
    for (const auto& s : signatures) sigs.emplace_back(s);
    v.set("signatures", Value(std::move(sigs)));
    return v;
}

Transaction Transaction::from_value(const Value& v) {
    try {
        Transaction tx;
        for (const auto& id : v.at("auth_ids").as_list()) tx.auth_ids.push_back(id.as_str());
        for (const auto& call : v.at("calls").as_list()) {
            FunctionCall fc;
            fc.id_to = call.at("to").as_str();
            fc.call_function = call.at("function").as_str();
            fc.user_parameters = call.get("args");
            if (fc.id_to.empty())
                throw KatalError(ErrorCode::MalformedExtrinsic, "empty call destination");
            tx.calls.push_back(std::move(fc));
        }
        const auto& window = v.at("window").as_list();
        if (window.size() != 2) throw KatalError(ErrorCode::MalformedExtrinsic, "bad window");
        tx.window_start = window[0].as_uint64();
        tx.window_end = window[1].as_uint64();
        tx.nonce = v.at("nonce").as_uint64();
        for (const auto& s : v.at("signatures").as_list()) tx.signatures.push_back(s.as_str());
        if (tx.window_start > tx.window_end)
            throw KatalError(ErrorCode::MalformedExtrinsic, "window start after end");
        if (tx.signatures.size() != tx.auth_ids.size())
            throw KatalError(ErrorCode::MalformedExtrinsic, "signature count mismatch");
        return tx;
    } catch (const KatalError& e) {
        if (e.code() == ErrorCode::MalformedExtrinsic) throw;
        throw KatalError(ErrorCode::MalformedExtrinsic, e.what());
    }
}

std::vector<uint8_t> Transaction::signing_message() const { return unsigned_payload(*this).encode(); }

Value Inherent::to_value() const {
    Value::Map m;
    switch (kind) {
        case Kind::Timestamp:
            m["type"] = Value("timestamp");
            m["time"] = Value(time);
            m["block_number"] = Value(block_number);
            break;
        case Kind::Slash:
            m["type"] = Value("slash");
            m["id"] = Value(id);
            break;
        case Kind::Seed:
            m["type"] = Value("seed");
            m["seed"] = Value(seed_hex);
            break;
        case Kind::Reward:
            m["type"] = Value("reward");
            m["id"] = Value(id);
            break;
    }
    return Value(std::move(m));
}

Inherent Inherent::timestamp(uint64_t block_number, uint64_t time) {
    Inherent i;
    i.kind = Kind::Timestamp;
    i.block_number = block_number;
    i.time = time;
    return i;
}

Inherent Inherent::slash(ObjectId id) {
    Inherent i;
    i.kind = Kind::Slash;
    i.id = std::move(id);
    return i;
}

Inherent Inherent::seed(std::string seed_hex) {
    Inherent i;
    i.kind = Kind::Seed;
    i.seed_hex = std::move(seed_hex);
    return i;
}

Inherent Inherent::reward(ObjectId id) {
    Inherent i;
    i.kind = Kind::Reward;
    i.id = std::move(id);
    return i;
}

Value extrinsic_to_value(const Extrinsic& extrinsic) {
    return std::visit([](const auto& e) { return e.to_value(); }, extrinsic);
}

}  // namespace katal
