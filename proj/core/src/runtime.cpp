#include "katal/runtime.hpp"

#include <algorithm>

#include "katal/crypto.hpp"

namespace katal {

namespace {

std::string registry_key(const CodeHandle& code) {
    return code.template_name + "/v" + std::to_string(code.version);
}

// Max-heap ordering: higher priority first, lower seq first on ties.
bool heap_less(const Event& a, const Event& b) {
    if (a.priority != b.priority) return a.priority < b.priority;
    return a.seq > b.seq;
}

}  // namespace

void Runtime::register_template(const std::string& name, uint64_t version,
                                std::map<std::string, HandlerFn> functions) {
    templates_[registry_key({name, version})] = std::move(functions);
}

bool Runtime::template_known(const CodeHandle& code) const {
    return templates_.count(registry_key(code)) != 0;
}

void Runtime::super_create(const ObjectId& id, CodeHandle code, Value storage) {
    if (id.empty() || id.size() > 256)
        throw KatalError(ErrorCode::BadParameters, "object ID must be 1..256 bytes");
    if (state_.objects.count(id)) throw KatalError(ErrorCode::DuplicateId, id);
    if (!template_known(code)) throw KatalError(ErrorCode::UnknownTemplate, code.template_name);
    state_.objects[id] = ObjectRecord{id, std::move(code), std::move(storage)};
}

void Runtime::super_delete(const ObjectId& id) {
    if (!state_.objects.erase(id)) throw KatalError(ErrorCode::UnknownId, id);
}

bool Runtime::super_check(const ObjectId& id) const { return state_.objects.count(id) != 0; }

const ObjectRecord& Runtime::super_request(const ObjectId& id) const { return object(id); }

void Runtime::super_change_id(const ObjectId& id, const ObjectId& new_id) {
    if (new_id.empty() || new_id.size() > 256)
        throw KatalError(ErrorCode::BadParameters, "object ID must be 1..256 bytes");
    auto it = state_.objects.find(id);
    if (it == state_.objects.end()) throw KatalError(ErrorCode::UnknownId, id);
    if (state_.objects.count(new_id)) throw KatalError(ErrorCode::DuplicateId, new_id);
    ObjectRecord record = std::move(it->second);
    state_.objects.erase(it);
    record.id = new_id;
    state_.objects[new_id] = std::move(record);
    if (state_.input_object == id) state_.input_object = new_id;
}

void Runtime::super_change_code(const ObjectId& id, CodeHandle code) {
    if (!template_known(code)) throw KatalError(ErrorCode::UnknownTemplate, code.template_name);
    object(id).code = std::move(code);
}

void Runtime::super_change_storage(const ObjectId& id, Value storage) {
    object(id).storage = std::move(storage);
}

void Runtime::super_set_input(const ObjectId& id) {
    if (!state_.objects.count(id)) throw KatalError(ErrorCode::UnknownId, id);
    state_.input_object = id;
}

ObjectRecord& Runtime::object(const ObjectId& id) {
    auto it = state_.objects.find(id);
    if (it == state_.objects.end()) throw KatalError(ErrorCode::UnknownId, id);
    return it->second;
}

const ObjectRecord& Runtime::object(const ObjectId& id) const {
    auto it = state_.objects.find(id);
    if (it == state_.objects.end()) throw KatalError(ErrorCode::UnknownId, id);
    return it->second;
}

void Runtime::enqueue(int64_t priority, ObjectId id_to, std::string function,
                      std::optional<ObjectId> id_from, std::vector<ObjectId> auth_ids,
                      Value params) {
    Event event;
    event.priority = priority;
    event.seq = state_.seq_counter++;
    event.id_to = std::move(id_to);
    event.function = std::move(function);
    event.id_from = std::move(id_from);
    event.auth_ids = std::move(auth_ids);
    event.params = std::move(params);
    state_.queue.push_back(std::move(event));
    std::push_heap(state_.queue.begin(), state_.queue.end(), heap_less);
}

Event Runtime::pop_event() {
    std::pop_heap(state_.queue.begin(), state_.queue.end(), heap_less);
    Event event = std::move(state_.queue.back());
    state_.queue.pop_back();
    return event;
}

void Runtime::dispatch(const Event& event) {
    const ObjectRecord& record = object(event.id_to);
    auto tmpl = templates_.find(registry_key(record.code));
    if (tmpl == templates_.end())
        throw KatalError(ErrorCode::UnknownTemplate, record.code.template_name);
    auto fn = tmpl->second.find(event.function);
    if (fn == tmpl->second.end())
        throw KatalError(ErrorCode::BadParameters,
                         "no function '" + event.function + "' on " + event.id_to);
    fn->second(*this, event);
}

ExecutionReport Runtime::run_extrinsics(const std::vector<Value>& extrinsics) {
    ExecutionReport report;
    for (const Value& extrinsic : extrinsics) {
        // Snapshot for per-extrinsic atomicity.
        std::map<ObjectId, ObjectRecord> objects_snapshot = state_.objects;
        ObjectId input_snapshot = state_.input_object;
        state_.seq_counter = 0;
        pending_flows_.clear();

        ExtrinsicResult result;
        try {
            enqueue(kPriorityUser, state_.input_object, "input", std::nullopt, {}, extrinsic);
            while (!state_.queue.empty()) dispatch(pop_event());
            for (auto& flow : pending_flows_) report.cash_flows.push_back(std::move(flow));
        } catch (const KatalError& e) {
            state_.objects = std::move(objects_snapshot);
            state_.input_object = std::move(input_snapshot);
            state_.queue.clear();
            result.ok = false;
            result.error = e.what();
        }
        pending_flows_.clear();
        report.extrinsics.push_back(std::move(result));
    }
    state_.seq_counter = 0;
    return report;
}

void Runtime::set_block_context(uint64_t height, uint64_t timestamp, bool macro) {
    height_ = height;
    timestamp_ = timestamp;
    macro_ = macro;
}

void Runtime::record_cash_flow(CashFlowRecord record) {
    record.height = height_;
    pending_flows_.push_back(std::move(record));
}

std::vector<uint8_t> Runtime::canonical_state() const {
    Value::Map objects;
    for (const auto& [id, record] : state_.objects) {
        Value::Map entry;
        entry["template"] = Value(record.code.template_name);
        entry["version"] = Value(record.code.version);
        entry["storage"] = record.storage;
        objects[id] = Value(std::move(entry));
    }
    Value::Map root;
    root["input"] = Value(state_.input_object);
    root["objects"] = Value(std::move(objects));
    return Value(std::move(root)).encode();
}

std::string Runtime::state_digest() const {
    return crypto::hex_encode(crypto::sha256(canonical_state()));
}

WorldState Runtime::decode_state(const std::vector<uint8_t>& bytes) {
    Value root = Value::decode(bytes);
    WorldState state;
    state.input_object = root.at("input").as_str();
    for (const auto& [id, entry] : root.at("objects").as_map()) {
        ObjectRecord record;
        record.id = id;
        record.code.template_name = entry.at("template").as_str();
        record.code.version = entry.at("version").as_uint64();
        record.storage = entry.at("storage");
        state.objects[id] = std::move(record);
    }
    return state;
}

}  // namespace katal
