#include "katal/actus.hpp"
#include "katal/errors.hpp"

namespace katal::actus {

namespace {

struct TemplateName {
    Template tmpl;
    const char* name;
};
constexpr TemplateName kTemplates[] = {
    {Template::Annuity, "ANNUITY"},       {Template::FxSpot, "FX_SPOT"},
    {Template::Collateral, "COLLATERAL"}, {Template::Margining, "MARGINING"},
    {Template::Future, "FUTURE"},         {Template::OptionEuropean, "OPTION_EUROPEAN"},
};

struct EventName {
    EventType type;
    const char* name;
};
constexpr EventName kEvents[] = {
    {EventType::InitialExchange, "INITIAL_EXCHANGE"},
    {EventType::Payment, "PAYMENT"},
    {EventType::MarginCall, "MARGIN_CALL"},
    {EventType::Settlement, "SETTLEMENT"},
    {EventType::Maturity, "MATURITY"},
    {EventType::Default, "DEFAULT"},
    {EventType::Exercise, "EXERCISE"},
    {EventType::Terminate, "TERMINATE"},
};

}  // namespace

Template template_from_name(const std::string& name) {
    for (const auto& t : kTemplates)
        if (name == t.name) return t.tmpl;
    throw KatalError(ErrorCode::BadAttributes, "unknown contract template " + name);
}

const char* template_name(Template t) {
    for (const auto& entry : kTemplates)
        if (entry.tmpl == t) return entry.name;
    return "?";
}

EventType event_type_from_name(const std::string& name) {
    for (const auto& e : kEvents)
        if (name == e.name) return e.type;
    throw KatalError(ErrorCode::BadParameters, "unknown contract event " + name);
}

const char* event_type_name(EventType t) {
    for (const auto& entry : kEvents)
        if (entry.type == t) return entry.name;
    return "?";
}

bool external_only(EventType t) {
    return t == EventType::Exercise || t == EventType::Terminate;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Performing: return "PERFORMING";
        case Status::Defaulted: return "DEFAULTED";
        case Status::Matured: return "MATURED";
    }
    return "?";
}

Status status_from_name(const std::string& name) {
    if (name == "PERFORMING") return Status::Performing;
    if (name == "DEFAULTED") return Status::Defaulted;
    if (name == "MATURED") return Status::Matured;
    throw KatalError(ErrorCode::BadParameters, "unknown status " + name);
}

Value Attributes::to_value() const {
    Value::Map m;
    m["template"] = Value(template_name(tmpl));
    m["creator"] = Value(creator);
    m["counterparty"] = Value(counterparty);
    m["currency_issuance"] = Value(currency_issuance);
    m["currency_asset"] = Value(currency_asset);
    m["notional"] = Value(notional);
    m["rate"] = Value(rate);
    m["start"] = Value(start);
    m["maturity"] = Value(maturity);
    m["period"] = Value(period);
    m["strike"] = Value(strike);
    m["premium"] = Value(premium);
    m["entry_price"] = Value(entry_price);
    m["oracle_id"] = Value(oracle_id);
    m["staleness"] = Value(staleness);
    m["margin_fraction"] = Value(margin_fraction);
    m["initial_margin"] = Value(initial_margin);
    m["child_contract_id"] = Value(child_contract_id);
    m["margin_creator_id"] = Value(margin_creator_id);
    m["margin_counterparty_id"] = Value(margin_counterparty_id);
    m["collateral_issuance"] = Value(collateral_issuance);
    m["collateral_asset"] = Value(collateral_asset);
    m["collateral_amount"] = Value(collateral_amount);
    m["asset2_issuance"] = Value(asset2_issuance);
    m["asset2_asset"] = Value(asset2_asset);
    m["amount1"] = Value(amount1);
    m["amount2"] = Value(amount2);
    m["transferable_creator"] = Value(transferable_creator);
    m["transferable_counterparty"] = Value(transferable_counterparty);
    m["destroy_on_terminal"] = Value(destroy_on_terminal);
    return Value(std::move(m));
}

Attributes Attributes::from_value(const Value& v) {
    try {
        Attributes a;
        a.tmpl = template_from_name(v.at("template").as_str());
        a.creator = v.at("creator").as_str();
        a.counterparty = v.at("counterparty").as_str();
        a.currency_issuance = v.get("currency_issuance").is_null()
                                  ? ObjectId{}
                                  : v.at("currency_issuance").as_str();
        a.currency_asset =
            v.get("currency_asset").is_null() ? std::string{} : v.at("currency_asset").as_str();
        auto fix = [&](const char* key) {
            return v.get(key).is_null() ? Fixed::zero() : v.at(key).as_fix();
        };
        auto str = [&](const char* key) {
            return v.get(key).is_null() ? std::string{} : v.at(key).as_str();
        };
        auto num = [&](const char* key, uint64_t dflt) {
            return v.get(key).is_null() ? dflt : v.at(key).as_uint64();
        };
        auto flag = [&](const char* key, bool dflt) {
            return v.get(key).is_null() ? dflt : v.at(key).as_bool();
        };
        a.notional = fix("notional");
        a.rate = fix("rate");
        a.start = num("start", 0);
        a.maturity = num("maturity", 0);
        a.period = num("period", 0);
        a.strike = fix("strike");
        a.premium = fix("premium");
        a.entry_price = fix("entry_price");
        a.oracle_id = str("oracle_id");
        a.staleness = num("staleness", UINT64_MAX);
        a.margin_fraction = fix("margin_fraction");
        a.initial_margin = fix("initial_margin");
        a.child_contract_id = str("child_contract_id");
        a.margin_creator_id = str("margin_creator_id");
        a.margin_counterparty_id = str("margin_counterparty_id");
        a.collateral_issuance = str("collateral_issuance");
        a.collateral_asset = str("collateral_asset");
        a.collateral_amount = fix("collateral_amount");
        a.asset2_issuance = str("asset2_issuance");
        a.asset2_asset = str("asset2_asset");
        a.amount1 = fix("amount1");
        a.amount2 = fix("amount2");
        a.transferable_creator = flag("transferable_creator", true);
        a.transferable_counterparty = flag("transferable_counterparty", true);
        a.destroy_on_terminal = flag("destroy_on_terminal", false);
        return a;
    } catch (const KatalError& e) {
        if (e.code() == ErrorCode::BadAttributes) throw;
        throw KatalError(ErrorCode::BadAttributes, e.what());
    }
}

Value Variables::to_value() const {
    Value::Map m;
    m["outstanding"] = Value(outstanding);
    m["accrued"] = Value(accrued);
    m["last_event_time"] = Value(last_event_time);
    m["marked_price"] = Value(marked_price);
    m["margin_balance"] = Value(margin_balance);
    m["status"] = Value(status_name(status));
    m["pending_default"] = Value(pending_default);
    return Value(std::move(m));
}

Variables Variables::from_value(const Value& v) {
    Variables vars;
    vars.outstanding = v.at("outstanding").as_fix();
    vars.accrued = v.at("accrued").as_fix();
    vars.last_event_time = v.at("last_event_time").as_uint64();
    vars.marked_price = v.at("marked_price").as_fix();
    vars.margin_balance = v.at("margin_balance").as_fix();
    vars.status = status_from_name(v.at("status").as_str());
    vars.pending_default = v.at("pending_default").as_bool();
    return vars;
}

}  // namespace katal::actus
