#include "../kernel/event_args.hpp"
#include "katal/kernel.hpp"
#include "katal/objects.hpp"

namespace katal::objects::account {

std::map<std::string, HandlerFn> handlers() {
    std::map<std::string, HandlerFn> fns;
    // Accounts are just an ID; everything else lives in other objects.
    fns["self_destruct"] = [](Runtime& rt, const Event& event) {
        if (event.from(ids::kDock) && !kernel::authorized(event, event.id_to))
            throw KatalError(ErrorCode::Unauthorized, "self_destruct requires " + event.id_to);
        if (kernel::auth::has_key(rt, event.id_to)) kernel::auth::delete_key(rt, event.id_to);
        kernel::schedule::delete_entries_for(rt, event.id_to);
        rt.super_delete(event.id_to);
    };
    return fns;
}

}  // namespace katal::objects::account
