#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "katal/errors.hpp"
#include "katal/event.hpp"
#include "katal/fixed.hpp"
#include "katal/value.hpp"

namespace katal {

// The set of all objects plus the event queue. This is the entire
// blockchain state; copying it is how the runtime snapshots for rollback.
struct WorldState {
    std::map<ObjectId, ObjectRecord> objects;
    ObjectId input_object;
    std::vector<Event> queue;  // max-heap by (priority, -seq)
    uint64_t seq_counter = 0;
};

struct CashFlowRecord {
    uint64_t height = 0;
    ObjectId contract;
    std::string event_type;
    ObjectId payer;
    ObjectId payee;
    ObjectId issuance;
    std::string asset;
    Fixed amount;
};

struct ExtrinsicResult {
    bool ok = true;
    std::string error;
};

struct ExecutionReport {
    std::vector<ExtrinsicResult> extrinsics;
    std::vector<CashFlowRecord> cash_flows;

    size_t failures() const {
        size_t n = 0;
        for (const auto& r : extrinsics)
            if (!r.ok) ++n;
        return n;
    }
};

class Runtime;

using HandlerFn = std::function<void(Runtime&, const Event&)>;

class Runtime {
public:
    Runtime() = default;

    WorldState& state() { return state_; }
    const WorldState& state() const { return state_; }

    // ---- handler registry -------------------------------------------------
    void register_template(const std::string& name, uint64_t version,
                           std::map<std::string, HandlerFn> functions);
    bool template_known(const CodeHandle& code) const;

    // ---- super-object interface -------------------------------------------
    // These are the privileged mutation paths. Origin policy (only
    // governance- or instantiation-originated events may reach them through
    // dispatch) is enforced by the XTL_Super handler, not here; kernel code
    // and genesis bootstrap call them directly.
    void super_create(const ObjectId& id, CodeHandle code, Value storage);
    void super_delete(const ObjectId& id);
    bool super_check(const ObjectId& id) const;
    const ObjectRecord& super_request(const ObjectId& id) const;
    void super_change_id(const ObjectId& id, const ObjectId& new_id);
    void super_change_code(const ObjectId& id, CodeHandle code);
    void super_change_storage(const ObjectId& id, Value storage);
    void super_set_input(const ObjectId& id);

    // Storage access for handlers. Throws UnknownId.
    ObjectRecord& object(const ObjectId& id);
    const ObjectRecord& object(const ObjectId& id) const;
    Value& storage(const ObjectId& id) { return object(id).storage; }

    // ---- event queue ------------------------------------------------------
    // Dequeue order is highest priority first, FIFO among equal priorities.
    void enqueue(int64_t priority, ObjectId id_to, std::string function,
                 std::optional<ObjectId> id_from, std::vector<ObjectId> auth_ids, Value params);
    bool queue_empty() const { return state_.queue.empty(); }

    // ---- state transition -------------------------------------------------
    // Wraps each extrinsic as an event to the input object and drains the
    // queue. Each extrinsic's cascade applies atomically: any handler error
    // rolls the whole cascade back and processing continues with the next
    // extrinsic. Never throws for per-extrinsic failures.
    ExecutionReport run_extrinsics(const std::vector<Value>& extrinsics);

    // Block context, set by the harness before run_extrinsics.
    void set_block_context(uint64_t height, uint64_t timestamp, bool macro);
    uint64_t height() const { return height_; }
    uint64_t timestamp() const { return timestamp_; }
    bool macro_block() const { return macro_; }

    // Cash flows recorded by contract handlers; committed with the cascade.
    void record_cash_flow(CashFlowRecord record);

    // ---- canonical serialization ------------------------------------------
    // Deterministic byte encoding of the object map (sorted by ObjectId) and
    // the input-object designation. The queue is empty between extrinsics
    // and is not part of the encoding.
    std::vector<uint8_t> canonical_state() const;
    std::string state_digest() const;  // hex sha256 of canonical_state()
    static WorldState decode_state(const std::vector<uint8_t>& bytes);
    void restore_state(WorldState state) { state_ = std::move(state); }

private:
    void dispatch(const Event& event);
    Event pop_event();

    WorldState state_;
    std::map<std::string, std::map<std::string, HandlerFn>> templates_;  // "name/vN" -> fns
    uint64_t height_ = 0;
    uint64_t timestamp_ = 0;
    bool macro_ = false;
    std::vector<CashFlowRecord> pending_flows_;
};

// Registers the handler code of every built-in template (kernel objects and
// the four user-object templates).
void register_builtin_templates(Runtime& rt);

}  // namespace katal
