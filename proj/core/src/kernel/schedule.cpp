#include "event_args.hpp"
#include "katal/kernel.hpp"

namespace katal::kernel::schedule {

namespace {

Value& storage(Runtime& rt) { return rt.storage(ids::kSchedule); }

bool condition_matches(const Value& cond, uint64_t block, uint64_t time, uint64_t last_time,
                       bool first_init) {
    const std::string& kind = cond.at("kind").as_str();
    if (kind == "at_block") return block == cond.at("n").as_uint64();
    if (kind == "every_n_blocks") {
        const uint64_t n = cond.at("n").as_uint64();
        return block % n == cond.at("phase").as_uint64() % n;
    }
    if (kind == "at_time") {
        const uint64_t t = cond.at("t").as_uint64();
        return t <= time && (first_init || last_time < t);
    }
    if (kind == "every_interval") {
        const uint64_t seconds = cond.at("seconds").as_uint64();
        const uint64_t anchor = cond.at("anchor").as_uint64();
        if (time < anchor) return false;
        const uint64_t cur = (time - anchor) / seconds;
        if (first_init || last_time < anchor) return true;
        return cur > (last_time - anchor) / seconds;
    }
    throw KatalError(ErrorCode::BadParameters, "unknown condition kind " + kind);
}

void validate_condition(const Value& cond) {
    const std::string& kind = cond.at("kind").as_str();
    if (kind == "at_block") {
        cond.at("n").as_uint64();
    } else if (kind == "every_n_blocks") {
        if (cond.at("n").as_uint64() < 1)
            throw KatalError(ErrorCode::BadParameters, "period must be >= 1 block");
        cond.at("phase").as_uint64();
    } else if (kind == "at_time") {
        cond.at("t").as_uint64();
    } else if (kind == "every_interval") {
        if (cond.at("seconds").as_uint64() < 1)
            throw KatalError(ErrorCode::BadParameters, "interval must be >= 1 second");
        cond.at("anchor").as_uint64();
    } else {
        throw KatalError(ErrorCode::BadParameters, "unknown condition kind " + kind);
    }
}

}  // namespace

Value initial_storage() {
    Value::Map m;
    m["registry"] = Value(Value::Map{});
    m["initialized"] = Value(false);
    m["last_block"] = Value(uint64_t{0});
    m["last_time"] = Value(uint64_t{0});
    return Value(std::move(m));
}

void add_entry(Runtime& rt, const ObjectId& id, const std::string& function, Value condition) {
    validate_condition(condition);
    Value& reg = storage(rt).as_map().at("registry");
    const std::string key = registry_key(id, function);
    if (reg.has(key)) throw KatalError(ErrorCode::DuplicateKey, id + "." + function);
    reg.set(key, std::move(condition));
}

void delete_entry(Runtime& rt, const ObjectId& id, const std::string& function) {
    Value& reg = storage(rt).as_map().at("registry");
    const std::string key = registry_key(id, function);
    if (!reg.has(key)) throw KatalError(ErrorCode::UnknownKey, id + "." + function);
    reg.erase(key);
}

void delete_entries_for(Runtime& rt, const ObjectId& id) {
    Value::Map& reg = storage(rt).as_map().at("registry").as_map();
    const std::string prefix = id + '\x1f';
    for (auto it = reg.lower_bound(prefix); it != reg.end() && it->first.rfind(prefix, 0) == 0;)
        it = reg.erase(it);
}

bool has_entry(Runtime& rt, const ObjectId& id, const std::string& function) {
    return storage(rt).at("registry").has(registry_key(id, function));
}

std::map<std::string, HandlerFn> handlers() {
    std::map<std::string, HandlerFn> fns;
    fns["init"] = [](Runtime& rt, const Event& event) {
        if (!inherent_origin(event))
            throw KatalError(ErrorCode::ForbiddenOrigin, "schedule init is inherent-only");
        const Value& a = args(event);
        const uint64_t block = a.at("block_number").as_uint64();
        const uint64_t time = a.at("timestamp").as_uint64();

        Value& st = storage(rt);
        const bool first_init = !st.at("initialized").as_bool();
        const uint64_t last_time = st.at("last_time").as_uint64();

        // Deterministic trigger order: sorted (id, function) keys.
        struct Triggered {
            ObjectId id;
            std::string function;
        };
        std::vector<Triggered> triggered;
        for (const auto& [key, cond] : st.at("registry").as_map()) {
            if (!condition_matches(cond, block, time, last_time, first_init)) continue;
            const size_t sep = key.find('\x1f');
            triggered.push_back({key.substr(0, sep), key.substr(sep + 1)});
        }
        st.set("initialized", Value(true));
        st.set("last_block", Value(block));
        st.set("last_time", Value(time));

        for (const Triggered& t : triggered) {
            Value::Map params;
            params["block_number"] = Value(block);
            params["timestamp"] = Value(time);
            rt.enqueue(kPriorityUser, t.id, t.function, ids::kSchedule, {},
                       wrap_args(Value(std::move(params))));
        }
    };
    fns["add_key"] = [](Runtime& rt, const Event& event) {
        if (event.from(ids::kDock))
            throw KatalError(ErrorCode::ForbiddenOrigin, "schedule add_key rejects dock calls");
        const Value& a = args(event);
        add_entry(rt, a.at("id").as_str(), a.at("function").as_str(), a.at("condition"));
    };
    fns["delete_key"] = [](Runtime& rt, const Event& event) {
        if (event.from(ids::kDock))
            throw KatalError(ErrorCode::ForbiddenOrigin, "schedule delete_key rejects dock calls");
        const Value& a = args(event);
        delete_entry(rt, a.at("id").as_str(), a.at("function").as_str());
    };
    return fns;
}

}  // namespace katal::kernel::schedule
