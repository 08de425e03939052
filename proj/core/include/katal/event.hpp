#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "katal/value.hpp"

namespace katal {

// Object IDs are arbitrary byte strings, compared byte-exact. IDs starting
// with "XTL" are reserved for kernel objects.
using ObjectId = std::string;

inline bool in_reserved_namespace(const ObjectId& id) { return id.rfind("XTL", 0) == 0; }

// Well-known kernel object IDs.
namespace ids {
inline constexpr const char* kSuper = "XTL_Super";
inline constexpr const char* kDock = "XTL_Dock";
inline constexpr const char* kAuth = "XTL_Authentication";
inline constexpr const char* kSchedule = "XTL_Schedule";
inline constexpr const char* kInstantiation = "XTL_Instantiation";
inline constexpr const char* kGovernance = "XTL_Governance";
inline constexpr const char* kConsensus = "XTL_Consensus";
inline constexpr const char* kNativeIssuance = "XTL";
}  // namespace ids

inline constexpr const char* kNativeAsset = "XTL";

// Event priorities. The dock emits user-facing events at the base priority;
// kernel-internal events may preempt.
inline constexpr int64_t kPriorityUser = 0;
inline constexpr int64_t kPriorityKernel = 100;

struct CodeHandle {
    std::string template_name;
    uint64_t version = 1;

    friend bool operator==(const CodeHandle&, const CodeHandle&) = default;
};

struct ObjectRecord {
    ObjectId id;
    CodeHandle code;
    Value storage;
};

// An asynchronous function call. id_from is empty for extrinsics entering
// through the input object (the EXTERNAL origin).
struct Event {
    int64_t priority = 0;
    uint64_t seq = 0;
    ObjectId id_to;
    std::string function;
    std::optional<ObjectId> id_from;
    std::vector<ObjectId> auth_ids;
    Value params;

    bool external() const { return !id_from.has_value(); }
    bool from(const ObjectId& id) const { return id_from && *id_from == id; }
};

}  // namespace katal
