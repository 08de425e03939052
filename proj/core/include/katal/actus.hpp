#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "katal/event.hpp"
#include "katal/fixed.hpp"
#include "katal/value.hpp"

// The algorithmic contract engine. Everything in this header is a pure
// function of its inputs: attributes are immutable after creation, variables
// are mutated only through state_transition, and observations are snapshots
// handed in by the orchestrating contract object.

namespace katal::actus {

enum class Template { Annuity, FxSpot, Collateral, Margining, Future, OptionEuropean };

Template template_from_name(const std::string& name);  // throws BadAttributes
const char* template_name(Template t);

enum class EventType {
    InitialExchange,
    Payment,
    MarginCall,
    Settlement,
    Maturity,
    Default,
    Exercise,
    Terminate,
};

EventType event_type_from_name(const std::string& name);
const char* event_type_name(EventType t);

// EXERCISE/TERMINATE are external-only; PAYMENT/MARGIN_CALL/SETTLEMENT/
// MATURITY are scheduled-only.
bool external_only(EventType t);

enum class Status { Performing, Defaulted, Matured };
const char* status_name(Status s);
Status status_from_name(const std::string& name);

struct Attributes {
    Template tmpl = Template::Annuity;
    ObjectId creator;       // initial owner of the creator position
    ObjectId counterparty;  // initial owner of the counterparty position
    ObjectId currency_issuance;
    std::string currency_asset;
    Fixed notional;  // principal for annuities, contract size otherwise
    Fixed rate;      // per-annum
    uint64_t start = 0;
    uint64_t maturity = 0;
    uint64_t period = 0;  // seconds between periodic events

    // Template-specific fields.
    Fixed strike;                     // option
    Fixed premium;                    // option: paid buyer -> seller at start
    Fixed entry_price;                // future
    ObjectId oracle_id;               // risk-factor source
    uint64_t staleness = UINT64_MAX;  // max oracle age in seconds
    Fixed margin_fraction;            // margining
    Fixed initial_margin;             // margining
    ObjectId child_contract_id;       // margining/collateral child observer
    ObjectId margin_creator_id;       // future: settlement routing
    ObjectId margin_counterparty_id;  // future: settlement routing
    ObjectId collateral_issuance;     // collateral
    std::string collateral_asset;
    Fixed collateral_amount;
    ObjectId asset2_issuance;  // fx: second leg
    std::string asset2_asset;
    Fixed amount1, amount2;  // fx: leg sizes (amount1 in the primary currency)
    bool transferable_creator = true;
    bool transferable_counterparty = true;
    bool destroy_on_terminal = false;

    Value to_value() const;
    static Attributes from_value(const Value& v);  // throws BadAttributes
};

struct Variables {
    Fixed outstanding;  // remaining principal (annuity)
    Fixed accrued;      // interest accrued in the running period
    uint64_t last_event_time = 0;
    Fixed marked_price;   // latest marked price (future/option/margining)
    Fixed margin_balance;  // last reconciled escrow balance (margining)
    Status status = Status::Performing;
    bool pending_default = false;

    Value to_value() const;
    static Variables from_value(const Value& v);
};

struct ContractEvent {
    enum class Origin { Scheduled, External };
    EventType type = EventType::InitialExchange;
    uint64_t scheduled_time = 0;
    Origin origin = Origin::Scheduled;
};

struct ChildSnapshot {
    Template tmpl = Template::Future;
    Status status = Status::Performing;
    Fixed marked_price;
    Fixed entry_price;
    Fixed notional;
};

struct Observation {
    std::optional<std::pair<Fixed, uint64_t>> risk_factor;  // oracle (value, timestamp)
    std::optional<ChildSnapshot> child;
    std::optional<Fixed> escrow_balance;  // contract's own holding in its currency
};

// The deterministic, time-sorted contract event schedule.
std::vector<ContractEvent> generate_schedule(const Attributes& attrs);  // throws BadAttributes

// Which observations an event needs.
bool needs_oracle(const Attributes& attrs, EventType type);
bool needs_child(const Attributes& attrs, EventType type);
bool needs_escrow(const Attributes& attrs, EventType type);

// Signed cash flow in the contract currency; positive = creator pays
// counterparty. Throws MissingObservation / WrongEventForTemplate.
Fixed payoff(const Attributes& attrs, const Variables& vars, const ContractEvent& event,
             const Observation& obs);

Variables state_transition(const Attributes& attrs, const Variables& vars,
                           const ContractEvent& event, const Observation& obs);

// Per-period simple compounding: rate_per_period = annual_rate * period / year.
inline constexpr uint64_t kSecondsPerYear = 31'536'000;  // 365 days
Fixed period_rate(Fixed annual_rate, uint64_t period_seconds);

// The fixed annuity installment A = P*r / (1 - (1+r)^-n); P/n when r == 0.
Fixed annuity_installment(Fixed principal, Fixed rate_per_period, uint64_t periods);

// Number of annuity payments implied by the schedule attributes.
uint64_t annuity_periods(const Attributes& attrs);

}  // namespace katal::actus
