#include <algorithm>

#include "../kernel/event_args.hpp"
#include "katal/actus.hpp"
#include "katal/kernel.hpp"
#include "katal/objects.hpp"

namespace katal::objects::contract {

namespace {

using kernel::args;
using kernel::authorized;
namespace ac = katal::actus;

const char* kCreatorKey = "creator";
const char* kCounterpartyKey = "counterparty";

Value& ownership(Runtime& rt, const ObjectId& contract_id, Position position) {
    return rt.storage(contract_id)
        .as_map()
        .at("ownership")
        .as_map()
        .at(position == Position::Creator ? kCreatorKey : kCounterpartyKey);
}

ac::Attributes load_attrs(Runtime& rt, const ObjectId& id) {
    return ac::Attributes::from_value(rt.storage(id).at("attrs"));
}

ac::Variables load_vars(Runtime& rt, const ObjectId& id) {
    return ac::Variables::from_value(rt.storage(id).at("vars"));
}

void store_vars(Runtime& rt, const ObjectId& id, const ac::Variables& vars) {
    rt.storage(id).set("vars", vars.to_value());
}

Position parse_position(const std::string& name) {
    if (name == "CREATOR") return Position::Creator;
    if (name == "COUNTERPARTY") return Position::Counterparty;
    throw KatalError(ErrorCode::BadParameters, "unknown position " + name);
}

bool holder_authorized(Runtime& rt, const Event& event, const ObjectId& contract_id,
                       Position position) {
    for (const auto& [owner, share] : position_holders(rt, contract_id, position))
        if (authorized(event, owner)) return true;
    return false;
}

// ---- observation ----------------------------------------------------------

ac::Observation observe(Runtime& rt, const ObjectId& contract_id, const ac::Attributes& attrs,
                        ac::EventType type, uint64_t now) {
    ac::Observation obs;
    if (ac::needs_oracle(attrs, type)) {
        if (!rt.super_check(attrs.oracle_id))
            throw KatalError(ErrorCode::UnknownSource, attrs.oracle_id);
        oracle::Feed feed = oracle::fetch(rt, attrs.oracle_id);
        if (attrs.staleness != UINT64_MAX && now > feed.timestamp &&
            now - feed.timestamp > attrs.staleness)
            throw KatalError(ErrorCode::StaleData, attrs.oracle_id);
        obs.risk_factor = {feed.value.as_fix(), feed.timestamp};
    }
    if (ac::needs_child(attrs, type)) {
        if (!rt.super_check(attrs.child_contract_id))
            throw KatalError(ErrorCode::UnknownSource, attrs.child_contract_id);
        const ac::Attributes child_attrs = load_attrs(rt, attrs.child_contract_id);
        const ac::Variables child_vars = load_vars(rt, attrs.child_contract_id);
        obs.child = ac::ChildSnapshot{child_attrs.tmpl, child_vars.status,
                                      child_vars.marked_price, child_attrs.entry_price,
                                      child_attrs.notional};
    }
    if (ac::needs_escrow(attrs, type))
        obs.escrow_balance =
            issuance::balance(rt, attrs.currency_issuance, contract_id, attrs.currency_asset);
    return obs;
}

// ---- cash-flow routing ----------------------------------------------------

struct Flow {
    Endpoint from;
    Endpoint to;
    ObjectId issuance_id;
    AssetId asset;
    Fixed amount;
    bool lazy_default = false;  // unfunded -> pending default instead of throwing
};

Endpoint margin_or_position(const ObjectId& margin_id, Position fallback) {
    return margin_id.empty() ? Endpoint::pos(fallback) : Endpoint::external(margin_id);
}

// Maps the signed payoff to concrete transfer legs for this template/event.
std::vector<Flow> route_flows(const ObjectId& contract_id, const ac::Attributes& attrs,
                              ac::EventType type, Fixed pay) {
    std::vector<Flow> flows;
    const Endpoint creator = Endpoint::pos(Position::Creator);
    const Endpoint counterparty = Endpoint::pos(Position::Counterparty);
    const Endpoint escrow = Endpoint::external(contract_id);
    switch (attrs.tmpl) {
        case ac::Template::Annuity:
            if (type == ac::EventType::InitialExchange)
                flows.push_back({counterparty, creator, attrs.currency_issuance,
                                 attrs.currency_asset, -pay});
            else if (type == ac::EventType::Payment)
                flows.push_back({creator, counterparty, attrs.currency_issuance,
                                 attrs.currency_asset, pay, /*lazy_default=*/true});
            break;
        case ac::Template::FxSpot:
            if (type == ac::EventType::Settlement) {
                flows.push_back({creator, counterparty, attrs.currency_issuance,
                                 attrs.currency_asset, pay, /*lazy_default=*/true});
                flows.push_back({counterparty, creator, attrs.asset2_issuance, attrs.asset2_asset,
                                 attrs.amount2, /*lazy_default=*/true});
            }
            break;
        case ac::Template::Collateral:
            if (type == ac::EventType::InitialExchange)
                flows.push_back({creator, escrow, attrs.collateral_issuance,
                                 attrs.collateral_asset, pay});
            else if (type == ac::EventType::Default)
                flows.push_back({escrow, counterparty, attrs.collateral_issuance,
                                 attrs.collateral_asset, pay});
            else if (type == ac::EventType::Maturity || type == ac::EventType::Terminate)
                flows.push_back({escrow, creator, attrs.collateral_issuance,
                                 attrs.collateral_asset, -pay});
            break;
        case ac::Template::Margining:
            if (type == ac::EventType::InitialExchange)
                flows.push_back({creator, escrow, attrs.currency_issuance, attrs.currency_asset,
                                 pay});
            else if (type == ac::EventType::MarginCall) {
                if (pay > Fixed::zero())
                    flows.push_back({creator, escrow, attrs.currency_issuance,
                                     attrs.currency_asset, pay, /*lazy_default=*/true});
                else if (pay < Fixed::zero())
                    flows.push_back({escrow, creator, attrs.currency_issuance,
                                     attrs.currency_asset, -pay});
            } else if (type == ac::EventType::Maturity || type == ac::EventType::Terminate) {
                if (!pay.is_zero())
                    flows.push_back({escrow, creator, attrs.currency_issuance,
                                     attrs.currency_asset, -pay});
            } else if (type == ac::EventType::Default) {
                if (!pay.is_zero())
                    flows.push_back({escrow, counterparty, attrs.currency_issuance,
                                     attrs.currency_asset, pay});
            }
            break;
        case ac::Template::Future:
            if (type == ac::EventType::Settlement && !pay.is_zero()) {
                const Endpoint long_side =
                    margin_or_position(attrs.margin_creator_id, Position::Creator);
                const Endpoint short_side =
                    margin_or_position(attrs.margin_counterparty_id, Position::Counterparty);
                if (pay > Fixed::zero())
                    flows.push_back({long_side, short_side, attrs.currency_issuance,
                                     attrs.currency_asset, pay});
                else
                    flows.push_back({short_side, long_side, attrs.currency_issuance,
                                     attrs.currency_asset, -pay});
            }
            break;
        case ac::Template::OptionEuropean:
            if (type == ac::EventType::InitialExchange) {
                if (!pay.is_zero())
                    flows.push_back({creator, counterparty, attrs.currency_issuance,
                                     attrs.currency_asset, pay});
            } else if ((type == ac::EventType::Maturity || type == ac::EventType::Exercise) &&
                       pay < Fixed::zero()) {
                const Endpoint seller =
                    margin_or_position(attrs.margin_counterparty_id, Position::Counterparty);
                flows.push_back({seller, creator, attrs.currency_issuance, attrs.currency_asset,
                                 -pay});
            }
            break;
    }
    return flows;
}

// Runs observe -> payoff -> cash flow -> state transition for one event.
// A lazily-defaulting flow that cannot be funded consumes the event and
// raises the pending-default flag; the DEFAULT event fires on the next
// scheduled dispatch.
void process_event(Runtime& rt, const ObjectId& contract_id, const ac::ContractEvent& event) {
    const ac::Attributes attrs = load_attrs(rt, contract_id);
    ac::Variables vars = load_vars(rt, contract_id);
    if (vars.status != ac::Status::Performing) return;

    const ac::Observation obs =
        observe(rt, contract_id, attrs, event.type, event.scheduled_time);
    const Fixed pay = ac::payoff(attrs, vars, event, obs);
    const std::vector<Flow> flows = route_flows(contract_id, attrs, event.type, pay);

    bool lazy = false;
    for (const Flow& flow : flows) {
        if (flow.amount.is_zero()) continue;
        if (!cashflow_funded(rt, contract_id, flow.from, flow.issuance_id, flow.asset,
                             flow.amount)) {
            if (flow.lazy_default)
                lazy = true;
            else
                throw KatalError(ErrorCode::PayerDefault,
                                 contract_id + " " + ac::event_type_name(event.type));
        }
    }
    if (lazy) {
        vars.pending_default = true;
        store_vars(rt, contract_id, vars);
        return;
    }
    for (const Flow& flow : flows) {
        if (flow.amount.is_zero()) continue;
        execute_cashflow(rt, contract_id, ac::event_type_name(event.type), flow.from, flow.to,
                         flow.issuance_id, flow.asset, flow.amount);
    }
    vars = ac::state_transition(attrs, vars, event, obs);
    store_vars(rt, contract_id, vars);

    if (vars.status != ac::Status::Performing && attrs.destroy_on_terminal) {
        kernel::schedule::delete_entries_for(rt, contract_id);
        rt.super_delete(contract_id);
    }
}

}  // namespace

const char* position_name(Position p) {
    return p == Position::Creator ? "CREATOR" : "COUNTERPARTY";
}

Fixed share_of(Runtime& rt, const ObjectId& contract_id, Position position,
               const ObjectId& owner) {
    const Value& entry = ownership(rt, contract_id, position).get(owner);
    return entry.is_null() ? Fixed::zero() : entry.as_fix();
}

std::vector<std::pair<ObjectId, Fixed>> position_holders(Runtime& rt, const ObjectId& contract_id,
                                                         Position position) {
    std::vector<std::pair<ObjectId, Fixed>> out;
    for (const auto& [owner, share] : ownership(rt, contract_id, position).as_map())
        if (!share.as_fix().is_zero()) out.emplace_back(owner, share.as_fix());
    return out;
}

void instantiate(Runtime& rt, const Value& parameters) {
    const ObjectId id = parameters.at("id").as_str();
    const ac::Attributes attrs = ac::Attributes::from_value(parameters.at("attrs"));
    const std::vector<ac::ContractEvent> schedule = ac::generate_schedule(attrs);

    Value::List pending;
    for (const ac::ContractEvent& event : schedule) {
        Value::Map e;
        e["type"] = Value(ac::event_type_name(event.type));
        e["time"] = Value(event.scheduled_time);
        pending.emplace_back(std::move(e));
    }
    Value::Map creator_shares, counterparty_shares;
    creator_shares[attrs.creator] = Value(Fixed::one());
    counterparty_shares[attrs.counterparty] = Value(Fixed::one());
    Value::Map own;
    own[kCreatorKey] = Value(std::move(creator_shares));
    own[kCounterpartyKey] = Value(std::move(counterparty_shares));

    Value::Map storage;
    storage["attrs"] = attrs.to_value();
    storage["vars"] = ac::Variables{}.to_value();
    storage["pending"] = Value(std::move(pending));
    storage["ownership"] = Value(std::move(own));
    rt.super_create(id, {"contract", 1}, Value(std::move(storage)));

    // The per-block tick drives the contract's own event queue.
    Value::Map cond;
    cond["kind"] = Value("every_n_blocks");
    cond["n"] = Value(uint64_t{1});
    cond["phase"] = Value(uint64_t{0});
    kernel::schedule::add_entry(rt, id, "on_time", Value(std::move(cond)));
}

bool cashflow_funded(Runtime& rt, const ObjectId& contract_id, Endpoint from,
                     const ObjectId& issuance_id, const AssetId& asset, Fixed total) {
    if (!rt.super_check(issuance_id)) throw KatalError(ErrorCode::UnknownIssuance, issuance_id);
    std::vector<std::pair<ObjectId, Fixed>> payers =
        from.position ? position_holders(rt, contract_id, *from.position)
                      : std::vector<std::pair<ObjectId, Fixed>>{{from.account, Fixed::one()}};
    for (const auto& [payer, debit] : largest_remainder_split(total, payers))
        if (issuance::balance(rt, issuance_id, payer, asset) < debit) return false;
    return true;
}

void execute_cashflow(Runtime& rt, const ObjectId& contract_id, const std::string& event_type,
                      Endpoint from, Endpoint to, const ObjectId& issuance_id,
                      const AssetId& asset, Fixed total) {
    if (total.is_zero()) return;
    if (total.is_negative()) throw KatalError(ErrorCode::BadAmount, "negative cash flow");
    if (!rt.super_check(issuance_id)) throw KatalError(ErrorCode::UnknownIssuance, issuance_id);

    auto endpoint_holders = [&](const Endpoint& e) {
        return e.position ? position_holders(rt, contract_id, *e.position)
                          : std::vector<std::pair<ObjectId, Fixed>>{{e.account, Fixed::one()}};
    };
    // Pro-rata split on each side; debits and credits both sum to `total`.
    std::vector<std::pair<ObjectId, Fixed>> debits =
        largest_remainder_split(total, endpoint_holders(from));
    std::vector<std::pair<ObjectId, Fixed>> credits =
        largest_remainder_split(total, endpoint_holders(to));

    if (!cashflow_funded(rt, contract_id, from, issuance_id, asset, total))
        throw KatalError(ErrorCode::PayerDefault, contract_id + " " + event_type);

    // One transfer per (payer, payee) pairing, walked in sorted order.
    size_t i = 0, j = 0;
    Fixed remaining_debit = debits.empty() ? Fixed::zero() : debits[0].second;
    Fixed remaining_credit = credits.empty() ? Fixed::zero() : credits[0].second;
    while (i < debits.size() && j < credits.size()) {
        const Fixed amount = std::min(remaining_debit, remaining_credit);
        if (!amount.is_zero()) {
            issuance::transfer(rt, issuance_id, debits[i].first, credits[j].first, asset, amount);
            CashFlowRecord record;
            record.contract = contract_id;
            record.event_type = event_type;
            record.payer = debits[i].first;
            record.payee = credits[j].first;
            record.issuance = issuance_id;
            record.asset = asset;
            record.amount = amount;
            rt.record_cash_flow(std::move(record));
        }
        remaining_debit -= amount;
        remaining_credit -= amount;
        if (remaining_debit.is_zero() && ++i < debits.size()) remaining_debit = debits[i].second;
        if (remaining_credit.is_zero() && ++j < credits.size())
            remaining_credit = credits[j].second;
    }
}

std::map<std::string, HandlerFn> handlers() {
    std::map<std::string, HandlerFn> fns;
    fns["on_time"] = [](Runtime& rt, const Event& event) {
        if (!event.from(ids::kSchedule))
            throw KatalError(ErrorCode::ForbiddenOrigin, "on_time is schedule-only");
        const uint64_t now = args(event).at("timestamp").as_uint64();
        const ObjectId id = event.id_to;

        ac::Variables vars = load_vars(rt, id);
        if (vars.status != ac::Status::Performing) return;

        // A pending default fires before anything else and ends the contract.
        if (vars.pending_default) {
            process_event(rt, id, {ac::EventType::Default, now,
                                   ac::ContractEvent::Origin::Scheduled});
            return;
        }

        // Child watch: a collateral contract seizes when its child defaults.
        const ac::Attributes attrs = load_attrs(rt, id);
        if (attrs.tmpl == ac::Template::Collateral && !attrs.child_contract_id.empty() &&
            rt.super_check(attrs.child_contract_id)) {
            if (load_vars(rt, attrs.child_contract_id).status == ac::Status::Defaulted) {
                process_event(rt, id, {ac::EventType::Default, now,
                                       ac::ContractEvent::Origin::Scheduled});
                return;
            }
        }

        // Process every due event, oldest first.
        while (rt.super_check(id)) {
            Value& pending = rt.storage(id).as_map().at("pending");
            Value::List& list = pending.as_list();
            if (list.empty() || list.front().at("time").as_uint64() > now) break;
            const ac::ContractEvent due{ac::event_type_from_name(list.front().at("type").as_str()),
                                        list.front().at("time").as_uint64(),
                                        ac::ContractEvent::Origin::Scheduled};
            list.erase(list.begin());
            process_event(rt, id, due);
            if (!rt.super_check(id) || load_vars(rt, id).status != ac::Status::Performing ||
                load_vars(rt, id).pending_default)
                break;
        }
    };
    fns["event"] = [](Runtime& rt, const Event& event) {
        const Value& a = args(event);
        const ac::EventType type = ac::event_type_from_name(a.at("type").as_str());
        if (!ac::external_only(type))
            throw KatalError(ErrorCode::WrongEventForTemplate,
                             std::string(ac::event_type_name(type)) + " is scheduled-only");
        const ObjectId id = event.id_to;
        if (event.from(ids::kDock)) {
            if (!holder_authorized(rt, event, id, Position::Creator) &&
                !(type == ac::EventType::Terminate &&
                  holder_authorized(rt, event, id, Position::Counterparty)))
                throw KatalError(ErrorCode::Unauthorized,
                                 "contract event requires a position holder");
            if (type == ac::EventType::Terminate &&
                (!holder_authorized(rt, event, id, Position::Creator) ||
                 !holder_authorized(rt, event, id, Position::Counterparty)))
                throw KatalError(ErrorCode::Unauthorized, "terminate requires both positions");
        }
        process_event(rt, id, {type, rt.timestamp(), ac::ContractEvent::Origin::External});
    };
    fns["transfer"] = [](Runtime& rt, const Event& event) {
        const Value& a = args(event);
        const ObjectId owner = a.at("owner_id").as_str();
        const ObjectId destination = a.at("destination_id").as_str();
        const Position position = parse_position(a.at("position").as_str());
        const Fixed amount = a.at("amount").as_fix();
        const ObjectId id = event.id_to;

        const ac::Attributes attrs = load_attrs(rt, id);
        const bool transferable = position == Position::Creator
                                      ? attrs.transferable_creator
                                      : attrs.transferable_counterparty;
        if (!transferable)
            throw KatalError(ErrorCode::NotTransferable, position_name(position));
        // Ownership transfer requires authorization of both parties.
        if (event.from(ids::kDock) &&
            (!authorized(event, owner) || !authorized(event, destination)))
            throw KatalError(ErrorCode::Unauthorized, "both owner and destination must sign");
        if (amount <= Fixed::zero()) throw KatalError(ErrorCode::BadAmount, amount.to_string());

        Value& shares = ownership(rt, id, position);
        const Fixed held = share_of(rt, id, position, owner);
        if (held < amount) throw KatalError(ErrorCode::InsufficientShares, owner);
        const Fixed rest = held - amount;
        if (rest.is_zero())
            shares.erase(owner);
        else
            shares.set(owner, Value(rest));
        shares.set(destination, Value(share_of(rt, id, position, destination) + amount));
    };
    fns["check"] = [](Runtime& rt, const Event& event) {
        if (event.from(ids::kDock))
            throw KatalError(ErrorCode::ForbiddenOrigin, "check rejects dock calls");
        const Value& a = args(event);
        share_of(rt, event.id_to, parse_position(a.at("position").as_str()),
                 a.at("owner_id").as_str());
    };
    fns["self_destruct"] = [](Runtime& rt, const Event& event) {
        // Only a terminal contract event or the schedule may tear down a
        // contract object.
        if (!event.from(event.id_to) && !event.from(ids::kSchedule))
            throw KatalError(ErrorCode::Unauthorized, "contract self_destruct denied");
        if (load_vars(rt, event.id_to).status == ac::Status::Performing)
            throw KatalError(ErrorCode::Unauthorized, "contract still performing");
        kernel::schedule::delete_entries_for(rt, event.id_to);
        rt.super_delete(event.id_to);
    };
    return fns;
}

}  // namespace katal::objects::contract
