#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "katal/actus.hpp"
#include "katal/kernel.hpp"
#include "katal/objects.hpp"

using namespace katal;
namespace ac = katal::actus;
namespace ct = katal::objects::contract;
using testutil::make_runtime;
using testutil::run_block;
using testutil::signed_tx;

namespace {

Value annuity_attrs(Fixed notional, Fixed rate, uint64_t start, uint64_t period, uint64_t n) {
    Value::Map a;
    a["template"] = Value("ANNUITY");
    a["creator"] = Value("bob");
    a["counterparty"] = Value("alice");
    a["currency_issuance"] = Value(ids::kNativeIssuance);
    a["currency_asset"] = Value(kNativeAsset);
    a["notional"] = Value(notional);
    a["rate"] = Value(rate);
    a["start"] = Value(start);
    a["period"] = Value(period);
    a["maturity"] = Value(start + n * period);
    return Value(std::move(a));
}

Runtime runtime_with_note() {
    Runtime rt = make_runtime();
    Value::Map params;
    params["id"] = Value("note");
    params["attrs"] = annuity_attrs(Fixed(100), Fixed::zero(), 600, 6, 10);
    ct::instantiate(rt, Value(std::move(params)));
    return rt;
}

}  // namespace

TEST_CASE("instantiation seeds full ownership and a schedule tick") {
    Runtime rt = runtime_with_note();
    CHECK(ct::share_of(rt, "note", ct::Position::Creator, "bob") == Fixed::one());
    CHECK(ct::share_of(rt, "note", ct::Position::Counterparty, "alice") == Fixed::one());
    CHECK(kernel::schedule::has_entry(rt, "note", "on_time"));
    // 1 IE + 10 payments + maturity
    CHECK(rt.storage("note").at("pending").as_list().size() == 12);
}

TEST_CASE("ownership transfer needs both signatures and keeps shares at unity") {
    Runtime rt = runtime_with_note();
    Value::Map t;
    t["owner_id"] = Value("bob");
    t["destination_id"] = Value("charlie");
    t["position"] = Value("CREATOR");
    t["amount"] = Value(Fixed::parse("0.3"));

    const Value solo = signed_tx({"bob"}, 1, {{"note", "transfer", Value(t)}});
    ExecutionReport report = run_block(rt, 1, {solo});
    CHECK(!report.extrinsics[1].ok);
    CHECK(report.extrinsics[1].error.find("Unauthorized") != std::string::npos);

    const Value both = signed_tx({"bob", "charlie"}, 2, {{"note", "transfer", Value(t)}});
    report = run_block(rt, 2, {both});
    CHECK(report.extrinsics[1].ok);
    CHECK(ct::share_of(rt, "note", ct::Position::Creator, "bob") == Fixed::parse("0.7"));
    CHECK(ct::share_of(rt, "note", ct::Position::Creator, "charlie") == Fixed::parse("0.3"));

    Fixed sum;
    for (const auto& [owner, share] : ct::position_holders(rt, "note", ct::Position::Creator))
        sum += share;
    CHECK(sum == Fixed::one());

    // More than held.
    t["amount"] = Value(Fixed(2));
    const Value over = signed_tx({"bob", "charlie"}, 3, {{"note", "transfer", Value(t)}});
    report = run_block(rt, 3, {over});
    CHECK(!report.extrinsics[1].ok);
    CHECK(report.extrinsics[1].error.find("InsufficientShares") != std::string::npos);
}

TEST_CASE("non-transferable positions refuse transfer") {
    Runtime rt = make_runtime();
    Value attrs = annuity_attrs(Fixed(100), Fixed::zero(), 600, 6, 10);
    attrs.set("transferable_creator", Value(false));
    Value::Map params;
    params["id"] = Value("locked");
    params["attrs"] = attrs;
    ct::instantiate(rt, Value(std::move(params)));

    Value::Map t;
    t["owner_id"] = Value("bob");
    t["destination_id"] = Value("charlie");
    t["position"] = Value("CREATOR");
    t["amount"] = Value(Fixed::parse("0.5"));
    const Value tx = signed_tx({"bob", "charlie"}, 1, {{"locked", "transfer", Value(t)}});
    const ExecutionReport report = run_block(rt, 1, {tx});
    CHECK(!report.extrinsics[1].ok);
    CHECK(report.extrinsics[1].error.find("NotTransferable") != std::string::npos);
}

TEST_CASE("contract check rejects dock calls") {
    Runtime rt = runtime_with_note();
    Value::Map c;
    c["owner_id"] = Value("bob");
    c["position"] = Value("CREATOR");
    const Value tx = signed_tx({"bob"}, 1, {{"note", "check", Value(std::move(c))}});
    const ExecutionReport report = run_block(rt, 1, {tx});
    CHECK(!report.extrinsics[1].ok);
    CHECK(report.extrinsics[1].error.find("ForbiddenOrigin") != std::string::npos);
}

TEST_CASE("execute_cashflow splits pro-rata with exact totals") {
    Runtime rt = runtime_with_note();
    // creator: bob 1/3, charlie 2/3 (via direct storage edit for precision)
    Value& shares = rt.storage("note").as_map().at("ownership").as_map().at("creator");
    shares.as_map().clear();
    shares.set("bob", Value(Fixed::div(Fixed(1), Fixed(3))));
    shares.set("charlie", Value(Fixed::one() - Fixed::div(Fixed(1), Fixed(3))));

    rt.set_block_context(1, 6, false);
    const Fixed total = Fixed(100);
    ct::execute_cashflow(rt, "note", "TEST", ct::Endpoint::pos(ct::Position::Creator),
                         ct::Endpoint::external("alice"), ids::kNativeIssuance, kNativeAsset,
                         total);
    const Fixed bob_paid =
        Fixed(1000) - objects::issuance::balance(rt, ids::kNativeIssuance, "bob", kNativeAsset);
    const Fixed charlie_paid =
        Fixed(1000) -
        objects::issuance::balance(rt, ids::kNativeIssuance, "charlie", kNativeAsset);
    CHECK(bob_paid + charlie_paid == total);
    CHECK(objects::issuance::balance(rt, ids::kNativeIssuance, "alice", kNativeAsset) ==
          Fixed(1100));
    // 100 * 0.333333333333333333 is exact, so no remainder unit is needed.
    CHECK(bob_paid == Fixed::parse("33.3333333333333333"));
}

TEST_CASE("execute_cashflow refuses when any payer is short") {
    Runtime rt = runtime_with_note();
    rt.set_block_context(1, 6, false);
    CHECK_THROWS_AS(
        ct::execute_cashflow(rt, "note", "TEST", ct::Endpoint::pos(ct::Position::Creator),
                             ct::Endpoint::external("alice"), ids::kNativeIssuance, kNativeAsset,
                             Fixed(5000)),
        KatalError);
    // Nothing moved.
    CHECK(objects::issuance::balance(rt, ids::kNativeIssuance, "alice", kNativeAsset) ==
          Fixed(1000));
}

// ---- pure engine -----------------------------------------------------------

TEST_CASE("generate_schedule shapes per template") {
    ac::Attributes a;
    a.tmpl = ac::Template::Annuity;
    a.creator = "bob";
    a.counterparty = "alice";
    a.notional = Fixed(100);
    a.start = 600;
    a.period = 6;
    a.maturity = 660;
    auto sched = ac::generate_schedule(a);
    REQUIRE(sched.size() == 12);
    CHECK(sched.front().type == ac::EventType::InitialExchange);
    CHECK(sched.back().type == ac::EventType::Maturity);
    for (size_t i = 1; i + 1 < sched.size(); ++i) {
        CHECK(sched[i].type == ac::EventType::Payment);
        CHECK(sched[i].scheduled_time == 600 + 6 * i);
    }

    a.maturity = 659;  // misaligned
    CHECK_THROWS_AS(ac::generate_schedule(a), KatalError);

    a.tmpl = ac::Template::FxSpot;
    a.maturity = 660;
    sched = ac::generate_schedule(a);
    REQUIRE(sched.size() == 1);
    CHECK(sched[0].type == ac::EventType::Settlement);
}

TEST_CASE("annuity installments amortize to exactly zero") {
    ac::Attributes a;
    a.tmpl = ac::Template::Annuity;
    a.notional = Fixed(1000);
    a.rate = Fixed::parse("0.05");
    a.start = 0;
    a.period = 2628000;
    a.maturity = 12 * a.period;

    ac::Variables vars;
    ac::Observation obs;
    vars = ac::state_transition(a, vars, {ac::EventType::InitialExchange, 0, {}}, obs);
    CHECK(vars.outstanding == Fixed(1000));
    Fixed total_paid;
    for (uint64_t k = 1; k <= 12; ++k) {
        const ac::ContractEvent ev{ac::EventType::Payment, k * a.period, {}};
        total_paid += ac::payoff(a, vars, ev, obs);
        vars = ac::state_transition(a, vars, ev, obs);
    }
    CHECK(vars.outstanding == Fixed::zero());
    CHECK(total_paid > Fixed(1000));  // interest was charged
}

TEST_CASE("zero-rate annuity splits the principal evenly") {
    CHECK(ac::annuity_installment(Fixed(100), Fixed::zero(), 8) == Fixed::parse("12.5"));
}

TEST_CASE("future payoff is the signed entry-settle gap") {
    ac::Attributes a;
    a.tmpl = ac::Template::Future;
    a.notional = Fixed(2);
    a.entry_price = Fixed(100);
    a.start = 0;
    a.period = 6;
    a.maturity = 60;
    ac::Variables vars;
    ac::Observation obs;
    obs.risk_factor = {Fixed(93), 60};
    CHECK(ac::payoff(a, vars, {ac::EventType::Settlement, 60, {}}, obs) == Fixed(14));
    obs.risk_factor = {Fixed(104), 60};
    CHECK(ac::payoff(a, vars, {ac::EventType::Settlement, 60, {}}, obs) == Fixed(-8));
}

TEST_CASE("option payoff is -max(S-K,0)*notional plus the upfront premium") {
    ac::Attributes a;
    a.tmpl = ac::Template::OptionEuropean;
    a.notional = Fixed(3);
    a.strike = Fixed(100);
    a.premium = Fixed(5);
    a.start = 0;
    a.maturity = 60;
    ac::Variables vars;
    ac::Observation obs;
    CHECK(ac::payoff(a, vars, {ac::EventType::InitialExchange, 0, {}}, obs) == Fixed(5));
    obs.risk_factor = {Fixed(120), 60};
    CHECK(ac::payoff(a, vars, {ac::EventType::Maturity, 60, {}}, obs) == Fixed(-60));
    obs.risk_factor = {Fixed(80), 60};
    CHECK(ac::payoff(a, vars, {ac::EventType::Maturity, 60, {}}, obs) == Fixed::zero());
}

TEST_CASE("margin call tops up or releases against the observed escrow") {
    ac::Attributes a;
    a.tmpl = ac::Template::Margining;
    a.notional = Fixed(1);
    a.initial_margin = Fixed(10);
    a.margin_fraction = Fixed::parse("0.2");
    a.start = 0;
    a.period = 6;
    a.maturity = 60;
    ac::Variables vars;
    ac::Observation obs;
    obs.risk_factor = {Fixed(30), 6};
    obs.escrow_balance = Fixed(10);
    // required = 10 + 0.2*30 = 16, escrow 10 -> top up 6
    CHECK(ac::payoff(a, vars, {ac::EventType::MarginCall, 6, {}}, obs) == Fixed(6));
    obs.escrow_balance = Fixed(20);
    CHECK(ac::payoff(a, vars, {ac::EventType::MarginCall, 6, {}}, obs) == Fixed(-4));
}

TEST_CASE("events outside a template are rejected") {
    ac::Attributes a;
    a.tmpl = ac::Template::FxSpot;
    a.maturity = 60;
    ac::Variables vars;
    ac::Observation obs;
    CHECK_THROWS_AS(ac::payoff(a, vars, {ac::EventType::MarginCall, 6, {}}, obs), KatalError);
}

TEST_CASE("external events require a position holder; terminate needs both") {
    Runtime rt = runtime_with_note();
    Value::Map e;
    e["type"] = Value("TERMINATE");
    const Value outsider = signed_tx({"charlie"}, 1, {{"note", "event", Value(e)}});
    ExecutionReport report = run_block(rt, 1, {outsider});
    CHECK(!report.extrinsics[1].ok);

    const Value one_side = signed_tx({"bob"}, 1, {{"note", "event", Value(e)}});
    report = run_block(rt, 2, {one_side});
    CHECK(!report.extrinsics[1].ok);

    const Value both = signed_tx({"bob", "alice"}, 2, {{"note", "event", Value(e)}});
    report = run_block(rt, 3, {both});
    CHECK(report.extrinsics[1].ok);
    CHECK(ac::Variables::from_value(rt.storage("note").at("vars")).status ==
          ac::Status::Matured);

    // Scheduled-only events cannot be injected externally.
    e["type"] = Value("PAYMENT");
    const Value inject = signed_tx({"bob", "alice"}, 3, {{"note", "event", Value(e)}});
    report = run_block(rt, 4, {inject});
    CHECK(!report.extrinsics[1].ok);
    CHECK(report.extrinsics[1].error.find("WrongEventForTemplate") != std::string::npos);
}
