#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "katal/event.hpp"
#include "katal/value.hpp"

namespace katal {

struct FunctionCall {
    ObjectId id_to;
    std::string call_function;
    Value user_parameters;  // arbitrary structured arguments
};

// A signed bundle of function calls. Only accepted inside its block window,
// and the (auth_id, nonce) pair prevents replays within that window.
struct Transaction {
    std::vector<ObjectId> auth_ids;
    std::vector<FunctionCall> calls;
    uint64_t window_start = 0;
    uint64_t window_end = 0;
    uint64_t nonce = 0;
    std::vector<std::string> signatures;  // one proof per auth_id

    Value to_value() const;
    static Transaction from_value(const Value& v);  // throws MalformedExtrinsic

    // The signed payload: canonical serialization of
    // (auth_ids, calls, window, nonce).
    std::vector<uint8_t> signing_message() const;
};

struct Inherent {
    enum class Kind { Timestamp, Slash, Seed, Reward };
    Kind kind = Kind::Timestamp;
    uint64_t time = 0;          // Timestamp
    uint64_t block_number = 0;  // Timestamp
    ObjectId id;                // Slash / Reward
    std::string seed_hex;       // Seed

    Value to_value() const;

    static Inherent timestamp(uint64_t block_number, uint64_t time);
    static Inherent slash(ObjectId id);
    static Inherent seed(std::string seed_hex);
    static Inherent reward(ObjectId id);
};

using Extrinsic = std::variant<Transaction, Inherent>;

Value extrinsic_to_value(const Extrinsic& extrinsic);

}  // namespace katal
