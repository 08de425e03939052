#include "event_args.hpp"
#include "katal/crypto.hpp"
#include "katal/kernel.hpp"

namespace katal::kernel {

std::string registry_key(const std::string& a, const std::string& b) {
    return a + '\x1f' + b;
}

namespace auth {

namespace {

Value& registry(Runtime& rt) { return rt.storage(ids::kAuth).as_map().at("registry"); }

}  // namespace

Value initial_storage() {
    Value::Map m;
    m["registry"] = Value(Value::Map{});
    return Value(std::move(m));
}

bool verify(Runtime& rt, const std::vector<VerifyItem>& items) {
    const Value& reg = registry(rt);
    for (const VerifyItem& item : items) {
        if (!reg.has(item.id)) return false;
        const Value& entry = reg.at(item.id);
        const std::string& method = entry.at("method").as_str();
        const std::string& params = entry.at("parameters").as_str();
        if (!crypto::method_verify(method, item.message, params, item.proof)) return false;
    }
    return true;
}

void add_key(Runtime& rt, const ObjectId& id, const std::string& method, Value parameters) {
    if (!crypto::method_known(method))
        throw KatalError(ErrorCode::BadParameters, "unknown authentication method " + method);
    Value& reg = registry(rt);
    if (reg.has(id)) throw KatalError(ErrorCode::DuplicateKey, id);
    Value::Map entry;
    entry["method"] = Value(method);
    entry["parameters"] = std::move(parameters);
    reg.set(id, Value(std::move(entry)));
}

void delete_key(Runtime& rt, const ObjectId& id) {
    Value& reg = registry(rt);
    if (!reg.has(id)) throw KatalError(ErrorCode::UnknownKey, id);
    reg.erase(id);
}

bool has_key(Runtime& rt, const ObjectId& id) { return registry(rt).has(id); }

std::map<std::string, HandlerFn> handlers() {
    std::map<std::string, HandlerFn> fns;
    fns["add_key"] = [](Runtime& rt, const Event& event) {
        if (event.from(ids::kDock))
            throw KatalError(ErrorCode::ForbiddenOrigin, "add_key rejects dock calls");
        const Value& a = args(event);
        add_key(rt, a.at("id").as_str(), a.at("method").as_str(), a.at("parameters"));
    };
    fns["change_key"] = [](Runtime& rt, const Event& event) {
        const Value& a = args(event);
        const ObjectId id = a.at("id").as_str();
        if (event.from(ids::kDock) && !authorized(event, id))
            throw KatalError(ErrorCode::Unauthorized, "change_key needs the key owner");
        Value& reg = registry(rt);
        if (!reg.has(id)) throw KatalError(ErrorCode::UnknownKey, id);
        const std::string& method = a.at("method").as_str();
        if (!crypto::method_known(method))
            throw KatalError(ErrorCode::BadParameters, "unknown authentication method " + method);
        Value::Map entry;
        entry["method"] = Value(method);
        entry["parameters"] = a.at("parameters");
        reg.set(id, Value(std::move(entry)));
    };
    fns["delete_key"] = [](Runtime& rt, const Event& event) {
        const Value& a = args(event);
        const ObjectId id = a.at("id").as_str();
        if (event.from(ids::kDock) && !authorized(event, id))
            throw KatalError(ErrorCode::Unauthorized, "delete_key needs the key owner");
        delete_key(rt, id);
    };
    return fns;
}

}  // namespace auth
}  // namespace katal::kernel
