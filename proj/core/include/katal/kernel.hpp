#pragma once

#include <map>
#include <string>
#include <vector>

#include "katal/fixed.hpp"
#include "katal/runtime.hpp"
#include "katal/value.hpp"

// The seven kernel objects. Each provides its dispatch table plus direct
// helpers for kernel-internal (synchronous) use. Event parameter convention:
// every event carries a map with the call arguments under "args"; events the
// dock derives from inherents additionally carry "inherent": true, which no
// other origin can produce.

namespace katal::kernel {

// Composite registry keys: (a, b) -> "a\x1fb", preserving tuple sort order.
std::string registry_key(const std::string& a, const std::string& b);

namespace super_object {
std::map<std::string, HandlerFn> handlers();
Value initial_storage();
}  // namespace super_object

namespace dock {
std::map<std::string, HandlerFn> handlers();
Value initial_storage();
}  // namespace dock

namespace auth {
std::map<std::string, HandlerFn> handlers();
Value initial_storage();

struct VerifyItem {
    std::vector<uint8_t> message;
    ObjectId id;
    std::string proof;
};
// True iff every proof validates under the registry entry for its ID.
bool verify(Runtime& rt, const std::vector<VerifyItem>& items);
void add_key(Runtime& rt, const ObjectId& id, const std::string& method, Value parameters);
void delete_key(Runtime& rt, const ObjectId& id);
bool has_key(Runtime& rt, const ObjectId& id);
}  // namespace auth

namespace schedule {
std::map<std::string, HandlerFn> handlers();
Value initial_storage();

// Condition values are maps:
//   {kind: "at_block", n}            triggers at block n
//   {kind: "every_n_blocks", n, phase}   triggers when block % n == phase
//   {kind: "at_time", t}             triggers on the first block with time >= t
//   {kind: "every_interval", seconds, anchor}   interval boundaries after anchor
void add_entry(Runtime& rt, const ObjectId& id, const std::string& function, Value condition);
void delete_entry(Runtime& rt, const ObjectId& id, const std::string& function);
void delete_entries_for(Runtime& rt, const ObjectId& id);
bool has_entry(Runtime& rt, const ObjectId& id, const std::string& function);
}  // namespace schedule

namespace instantiation {
std::map<std::string, HandlerFn> handlers();
Value initial_storage();

// Instantiates one template; used by the create handler and by genesis.
// Performs the template's side registrations (auth entries, schedules).
void instantiate(Runtime& rt, const std::string& template_id, const Value& parameters);
}  // namespace instantiation

namespace governance {
std::map<std::string, HandlerFn> handlers();
Value initial_storage(const ObjectId& dictator_id);
}  // namespace governance

namespace consensus {
std::map<std::string, HandlerFn> handlers();
Value initial_storage(Fixed block_subsidy, uint64_t validator_set_size);

struct ValidatorEntry {
    ObjectId id;
    Fixed deposit;
    std::string validating_key;
    bool active = false;
};
std::vector<ValidatorEntry> validator_registry(Runtime& rt);
std::vector<ObjectId> active_validators(Runtime& rt);
void register_validator(Runtime& rt, const ObjectId& id, Fixed deposit, std::string key,
                        bool active);  // genesis only
}  // namespace consensus

}  // namespace katal::kernel
