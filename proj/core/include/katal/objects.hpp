#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "katal/fixed.hpp"
#include "katal/runtime.hpp"
#include "katal/value.hpp"

// The four user-object templates: account, issuance, oracle and the
// contract shell hosting the cash-flow engine.

namespace katal::objects {

using AssetId = std::string;

namespace account {
std::map<std::string, HandlerFn> handlers();
}

namespace issuance {
std::map<std::string, HandlerFn> handlers();

// Policy map: {mode: "none" | "ids" | "scheduled", ids: [..]}
Value initial_storage(Value policy);

Fixed balance(Runtime& rt, const ObjectId& issuance_id, const ObjectId& owner,
              const AssetId& asset);
Fixed supply(Runtime& rt, const ObjectId& issuance_id, const AssetId& asset);

// Direct ledger mutations, origin policy already decided by the caller.
void transfer(Runtime& rt, const ObjectId& issuance_id, const ObjectId& owner,
              const ObjectId& destination, const AssetId& asset, Fixed amount);
void mint(Runtime& rt, const ObjectId& issuance_id, const ObjectId& owner, const AssetId& asset,
          Fixed amount);
void burn(Runtime& rt, const ObjectId& issuance_id, const ObjectId& owner, const AssetId& asset,
          Fixed amount);
void set_indivisible(Runtime& rt, const ObjectId& issuance_id, const AssetId& asset);
}  // namespace issuance

namespace oracle {
std::map<std::string, HandlerFn> handlers();
Value initial_storage(std::string feed_key_hex, std::vector<ObjectId> admins,
                      uint64_t staleness_seconds);

struct Feed {
    Value value;
    uint64_t timestamp = 0;
};
// Latest accepted feed; throws EmptyFeed before the first update.
Feed fetch(Runtime& rt, const ObjectId& oracle_id);
uint64_t staleness_bound(Runtime& rt, const ObjectId& oracle_id);

// The signed payload for feed updates: canonical (oracle_id, value, timestamp).
std::vector<uint8_t> update_message(const ObjectId& oracle_id, const Value& value,
                                    uint64_t timestamp);
}  // namespace oracle

namespace contract {
std::map<std::string, HandlerFn> handlers();

// Creates a contract object: validates attributes, initializes ownership
// (each position starts at 1.0 with its initial owner), generates the event
// schedule and registers the per-block tick with the schedule object.
// parameters: {id, template, attrs}.
void instantiate(Runtime& rt, const Value& parameters);

enum class Position { Creator, Counterparty };
const char* position_name(Position p);

Fixed share_of(Runtime& rt, const ObjectId& contract_id, Position position,
               const ObjectId& owner);
// Holders of one position, sorted by owner ID, zero shares omitted.
std::vector<std::pair<ObjectId, Fixed>> position_holders(Runtime& rt,
                                                         const ObjectId& contract_id,
                                                         Position position);

// A cash-flow endpoint: either one contract position (split pro-rata across
// its holders) or a single concrete object.
struct Endpoint {
    std::optional<Position> position;
    ObjectId account;  // used when position is empty

    static Endpoint pos(Position p) { return {p, {}}; }
    static Endpoint external(ObjectId id) { return {std::nullopt, std::move(id)}; }
};

// Splits `total` pro-rata across both endpoints by largest-remainder rounding
// and emits one transfer per (payer, payee) pairing in sorted order. Debits
// and credits each sum exactly to `total`. Throws PayerDefault (before any
// transfer) if a payer lacks funds. Records a CashFlowRecord per transfer.
void execute_cashflow(Runtime& rt, const ObjectId& contract_id, const std::string& event_type,
                      Endpoint from, Endpoint to, const ObjectId& issuance_id,
                      const AssetId& asset, Fixed total);

// True iff every payer of the flow could cover its largest-remainder debit.
bool cashflow_funded(Runtime& rt, const ObjectId& contract_id, Endpoint from,
                     const ObjectId& issuance_id, const AssetId& asset, Fixed total);
}  // namespace contract

}  // namespace katal::objects
