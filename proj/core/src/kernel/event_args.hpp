#pragma once

#include <algorithm>

#include "katal/errors.hpp"
#include "katal/event.hpp"

namespace katal::kernel {

inline const Value& args(const Event& event) {
    if (!event.params.is_map())
        throw KatalError(ErrorCode::BadParameters, "event parameters must be a map");
    return event.params.at("args");
}

inline Value wrap_args(Value args) {
    Value::Map m;
    m["args"] = std::move(args);
    return Value(std::move(m));
}

inline Value wrap_inherent_args(Value args) {
    Value::Map m;
    m["inherent"] = Value(true);
    m["args"] = std::move(args);
    return Value(std::move(m));
}

// True only for events the dock derived from an inherent. The flag lives in
// dock-built parameters, so no transaction or object call can forge it.
inline bool inherent_origin(const Event& event) {
    return event.from(ids::kDock) && event.params.is_map() &&
           event.params.get("inherent") == Value(true);
}

inline bool authorized(const Event& event, const ObjectId& id) {
    return std::find(event.auth_ids.begin(), event.auth_ids.end(), id) != event.auth_ids.end();
}

}  // namespace katal::kernel
