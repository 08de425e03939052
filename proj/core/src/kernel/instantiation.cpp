#include "event_args.hpp"
#include "katal/kernel.hpp"
#include "katal/objects.hpp"

namespace katal::kernel::instantiation {

Value initial_storage() { return Value(Value::Map{}); }

void instantiate(Runtime& rt, const std::string& template_id, const Value& parameters) {
    const ObjectId id = parameters.at("id").as_str();
    if (template_id == "account") {
        rt.super_create(id, {"account", 1}, Value(Value::Map{}));
        auth::add_key(rt, id, parameters.at("method").as_str(), parameters.at("parameters"));
    } else if (template_id == "issuance") {
        Value policy = parameters.has("policy") ? parameters.at("policy") : [] {
            Value::Map p;
            p["mode"] = Value("none");
            return Value(std::move(p));
        }();
        rt.super_create(id, {"issuance", 1}, objects::issuance::initial_storage(std::move(policy)));
        if (parameters.has("assets")) {
            for (const Value& asset : parameters.at("assets").as_list()) {
                if (asset.has("divisible") && !asset.at("divisible").as_bool())
                    objects::issuance::set_indivisible(rt, id, asset.at("asset_id").as_str());
            }
        }
    } else if (template_id == "oracle") {
        std::vector<ObjectId> admins;
        if (parameters.has("admins"))
            for (const Value& a : parameters.at("admins").as_list()) admins.push_back(a.as_str());
        const uint64_t staleness = parameters.has("staleness")
                                       ? parameters.at("staleness").as_uint64()
                                       : UINT64_MAX;
        rt.super_create(id, {"oracle", 1},
                        objects::oracle::initial_storage(parameters.at("feed_key").as_str(),
                                                         std::move(admins), staleness));
        if (parameters.has("request_schedule"))
            schedule::add_entry(rt, id, "request", parameters.at("request_schedule"));
    } else if (template_id == "contract") {
        objects::contract::instantiate(rt, parameters);
    } else {
        throw KatalError(ErrorCode::UnknownTemplate, template_id);
    }
}

std::map<std::string, HandlerFn> handlers() {
    std::map<std::string, HandlerFn> fns;
    fns["create"] = [](Runtime& rt, const Event& event) {
        const Value& requests = args(event).at("requests");
        // All-or-nothing: every requested ID must be available and outside
        // the reserved namespace before anything is created.
        for (const Value& request : requests.as_list()) {
            const ObjectId id = request.at("parameters").at("id").as_str();
            if (in_reserved_namespace(id)) throw KatalError(ErrorCode::ReservedNamespace, id);
            if (rt.super_check(id)) throw KatalError(ErrorCode::IdTaken, id);
        }
        for (const Value& request : requests.as_list())
            instantiate(rt, request.at("template_id").as_str(), request.at("parameters"));
    };
    return fns;
}

}  // namespace katal::kernel::instantiation
