#include "event_args.hpp"
#include "katal/kernel.hpp"

namespace katal::kernel::super_object {

namespace {

// Only governance- or instantiation-originated events may reach the super
// object through dispatch.
void check_privileged(const Event& event) {
    if (!event.from(ids::kGovernance) && !event.from(ids::kInstantiation))
        throw KatalError(ErrorCode::ForbiddenOrigin, "super object access denied");
}

CodeHandle code_from_args(const Value& a) {
    CodeHandle code;
    code.template_name = a.at("template").as_str();
    code.version = a.has("version") ? a.at("version").as_uint64() : 1;
    return code;
}

}  // namespace

std::map<std::string, HandlerFn> handlers() {
    std::map<std::string, HandlerFn> fns;
    fns["create"] = [](Runtime& rt, const Event& event) {
        check_privileged(event);
        const Value& a = args(event);
        rt.super_create(a.at("id").as_str(), code_from_args(a), a.get("storage"));
    };
    fns["delete"] = [](Runtime& rt, const Event& event) {
        check_privileged(event);
        rt.super_delete(args(event).at("id").as_str());
    };
    fns["change_id"] = [](Runtime& rt, const Event& event) {
        check_privileged(event);
        const Value& a = args(event);
        rt.super_change_id(a.at("id").as_str(), a.at("new_id").as_str());
    };
    fns["change_code"] = [](Runtime& rt, const Event& event) {
        check_privileged(event);
        const Value& a = args(event);
        rt.super_change_code(a.at("id").as_str(), code_from_args(a));
    };
    fns["change_storage"] = [](Runtime& rt, const Event& event) {
        check_privileged(event);
        const Value& a = args(event);
        rt.super_change_storage(a.at("id").as_str(), a.at("storage"));
    };
    fns["set_input"] = [](Runtime& rt, const Event& event) {
        check_privileged(event);
        rt.super_set_input(args(event).at("id").as_str());
    };
    return fns;
}

Value initial_storage() { return Value(Value::Map{}); }

}  // namespace katal::kernel::super_object
