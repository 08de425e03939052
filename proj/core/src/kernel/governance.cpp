#include "event_args.hpp"
#include "katal/kernel.hpp"

namespace katal::kernel::governance {

Value initial_storage(const ObjectId& dictator_id) {
    Value::Map m;
    m["dictator"] = Value(dictator_id);
    return Value(std::move(m));
}

std::map<std::string, HandlerFn> handlers() {
    std::map<std::string, HandlerFn> fns;
    // Dictatorship variant: one genesis-fixed ID has full access to the
    // entire state, including the super object.
    fns["transmit"] = [](Runtime& rt, const Event& event) {
        const ObjectId& dictator = rt.storage(ids::kGovernance).at("dictator").as_str();
        if (!authorized(event, dictator))
            throw KatalError(ErrorCode::Unauthorized, "transmit requires the dictator");
        const Value& a = args(event);
        rt.enqueue(kPriorityKernel, a.at("id_call").as_str(), a.at("function").as_str(),
                   ids::kGovernance, event.auth_ids, wrap_args(a.get("params")));
    };
    return fns;
}

}  // namespace katal::kernel::governance
