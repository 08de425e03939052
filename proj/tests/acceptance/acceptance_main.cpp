// Acceptance suite: one pass/fail line per criterion. Expected values are
// computed by independent reference implementations (plain-integer decimal
// arithmetic, a naive sampler, a flat ledger model), never by the code under
// test.

#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "../unit/helpers.hpp"
#include "katal/actus.hpp"
#include "katal/harness.hpp"
#include "katal/kernel.hpp"
#include "katal/objects.hpp"

using namespace katal;
namespace ct = katal::objects::contract;
using testutil::make_runtime;
using testutil::run_block;
using testutil::signed_tx;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    if (!ok) ++g_failures;
}

std::string scenario(const char* name) {
    return std::string(SCENARIO_DIR) + "/" + name + ".json";
}

// ---- independent decimal arithmetic (10^-18 units, half away from zero) ----

using bigint = boost::multiprecision::int256_t;
const bigint kUnit = bigint("1000000000000000000");

bigint ref_mul(const bigint& a, const bigint& b) {
    const bigint p = a * b;
    const bigint q = p >= 0 ? (p + kUnit / 2) / kUnit : (p - kUnit / 2) / kUnit;
    return q;
}

bigint ref_div(const bigint& a, const bigint& b) {
    const bigint p = a * kUnit;
    const bigint q = p >= 0 == (b >= 0) ? (p + b / 2) / b : (p - b / 2) / b;
    return q;
}

std::string ref_render(bigint v) {
    std::string sign;
    if (v < 0) {
        sign = "-";
        v = -v;
    }
    const bigint whole = v / kUnit;
    bigint frac = v % kUnit;
    std::string out = sign + whole.str();
    if (frac != 0) {
        std::string digits = frac.str();
        digits.insert(0, 18 - digits.size(), '0');
        while (digits.back() == '0') digits.pop_back();
        out += "." + digits;
    }
    return out;
}

// ---- 1: tokenization worked example ---------------------------------------

void criterion_1() {
    const harness::ScenarioResult result = harness::run_scenario_file(scenario("tokenization"));
    const std::string expected =
        "height,contract,event,payer,payee,issuance,asset,amount\n"
        "5,note,INITIAL_EXCHANGE,charlie,alice,usd,USD,20\n"
        "5,note,INITIAL_EXCHANGE,charlie,bob,usd,USD,80\n"
        "6,note,PAYMENT,alice,charlie,usd,USD,20\n"
        "6,note,PAYMENT,bob,charlie,usd,USD,80\n";
    const bool ok = result.csv == expected && result.errors.empty();
    report(1, "tokenized 0.2/0.8 position routes 100 as exactly 20+80 both ways", ok,
           ok ? "log byte-exact" : "log mismatch");
}

// ---- 2: fx atomicity fuzz --------------------------------------------------

void criterion_2() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int64_t> amount_dist(1, 1000);
    int settled = 0, defaulted = 0, violations = 0;
    const int rounds = 1000;
    for (int i = 0; i < rounds; ++i) {
        const Fixed a1 = Fixed(amount_dist(rng));
        const Fixed a2 = Fixed(amount_dist(rng));
        std::uniform_int_distribution<int64_t> bal1(0, 3 * a1.raw() / Fixed::kScale / 2);
        std::uniform_int_distribution<int64_t> bal2(0, 3 * a2.raw() / Fixed::kScale / 2);
        const Fixed alice_usd = Fixed(bal1(rng));
        const Fixed bob_eur = Fixed(bal2(rng));

        GenesisConfig genesis = testutil::default_genesis();
        genesis.balances.clear();
        Runtime rt = make_runtime(genesis);
        Value::Map open;
        open["mode"] = Value("none");
        rt.super_create("usd", {"issuance", 1},
                        objects::issuance::initial_storage(Value(open)));
        rt.super_create("eur", {"issuance", 1},
                        objects::issuance::initial_storage(Value(open)));
        if (!alice_usd.is_zero()) objects::issuance::mint(rt, "usd", "alice", "USD", alice_usd);
        if (!bob_eur.is_zero()) objects::issuance::mint(rt, "eur", "bob", "EUR", bob_eur);

        Value::Map attrs;
        attrs["template"] = Value("FX_SPOT");
        attrs["creator"] = Value("alice");
        attrs["counterparty"] = Value("bob");
        attrs["currency_issuance"] = Value("usd");
        attrs["currency_asset"] = Value("USD");
        attrs["amount1"] = Value(a1);
        attrs["asset2_issuance"] = Value("eur");
        attrs["asset2_asset"] = Value("EUR");
        attrs["amount2"] = Value(a2);
        attrs["maturity"] = Value(uint64_t{12});
        Value::Map params;
        params["id"] = Value("swap");
        params["attrs"] = Value(std::move(attrs));
        ct::instantiate(rt, Value(std::move(params)));

        for (uint64_t h = 1; h <= 3; ++h) run_block(rt, h, {});

        const bool expect_settle = alice_usd >= a1 && bob_eur >= a2;
        const Fixed alice_usd_after = objects::issuance::balance(rt, "usd", "alice", "USD");
        const Fixed bob_usd_after = objects::issuance::balance(rt, "usd", "bob", "USD");
        const Fixed bob_eur_after = objects::issuance::balance(rt, "eur", "bob", "EUR");
        const Fixed alice_eur_after = objects::issuance::balance(rt, "eur", "alice", "EUR");
        bool good;
        if (expect_settle) {
            ++settled;
            good = alice_usd_after == alice_usd - a1 && bob_usd_after == a1 &&
                   bob_eur_after == bob_eur - a2 && alice_eur_after == a2;
        } else {
            ++defaulted;
            // Neither leg may move, not even the funded one.
            good = alice_usd_after == alice_usd && bob_usd_after == Fixed::zero() &&
                   bob_eur_after == bob_eur && alice_eur_after == Fixed::zero();
        }
        if (!good) ++violations;
    }
    const bool ok = violations == 0 && settled > 0 && defaulted > 0;
    report(2, "fx settlement is atomic across fuzzed funding levels", ok,
           std::to_string(rounds) + " scenarios, " + std::to_string(settled) + " settled, " +
               std::to_string(defaulted) + " defaulted, " + std::to_string(violations) +
               " atomicity violations");
}

// ---- 3: ledger conservation fuzz -------------------------------------------

void criterion_3() {
    std::mt19937_64 rng(11);
    const std::vector<std::string> owners = {"alice", "bob", "charlie"};
    const std::vector<std::string> assets = {"AAA", "BBB"};
    const std::vector<std::string> issuances = {"led0", "led1", "led2"};
    std::uniform_int_distribution<int> op_dist(0, 2), owner_dist(0, 2), asset_dist(0, 1),
        iss_dist(0, 2);
    std::uniform_int_distribution<long long> amount_dist(-5, 300);

    const int sequences = 10000;
    int mismatches = 0, checked_ops = 0;
    for (int seq = 0; seq < sequences && mismatches == 0; ++seq) {
        Runtime rt = make_runtime();
        Value::Map open;
        open["mode"] = Value("none");
        for (const auto& id : issuances)
            rt.super_create(id, {"issuance", 1},
                            objects::issuance::initial_storage(Value(open)));

        // Flat reference ledger: (issuance, owner, asset) -> units.
        std::map<std::string, long long> model;
        std::map<std::string, long long> model_supply;

        std::uniform_int_distribution<int> len_dist(3, 12);
        const int len = len_dist(rng);
        for (int step = 0; step < len; ++step) {
            const std::string iss = issuances[static_cast<size_t>(iss_dist(rng))];
            const std::string owner = owners[static_cast<size_t>(owner_dist(rng))];
            const std::string asset = assets[static_cast<size_t>(asset_dist(rng))];
            const long long amount = amount_dist(rng);
            const int op = op_dist(rng);
            const std::string key = iss + "/" + owner + "/" + asset;

            bool expect_ok;
            std::string dest_key;
            std::string dest;
            if (op == 2) {
                dest = owners[static_cast<size_t>(owner_dist(rng))];
                dest_key = iss + "/" + dest + "/" + asset;
            }
            if (amount <= 0)
                expect_ok = false;
            else if (op == 0)
                expect_ok = true;
            else
                expect_ok = model[key] >= amount;

            bool ok = true;
            try {
                if (op == 0)
                    objects::issuance::mint(rt, iss, owner, asset, Fixed(amount));
                else if (op == 1)
                    objects::issuance::burn(rt, iss, owner, asset, Fixed(amount));
                else
                    objects::issuance::transfer(rt, iss, owner, dest, asset, Fixed(amount));
            } catch (const KatalError&) {
                ok = false;
            }
            ++checked_ops;
            if (ok != expect_ok) {
                ++mismatches;
                break;
            }
            if (ok) {
                if (op == 0) {
                    model[key] += amount;
                    model_supply[iss + "/" + asset] += amount;
                } else if (op == 1) {
                    model[key] -= amount;
                    model_supply[iss + "/" + asset] -= amount;
                } else {
                    model[key] -= amount;
                    model[dest_key] += amount;
                }
            }
        }
        // Supply equals the sum of balances, which never go negative.
        for (const auto& iss : issuances) {
            for (const auto& asset : assets) {
                Fixed sum;
                for (const auto& owner : owners) {
                    const Fixed b = objects::issuance::balance(rt, iss, owner, asset);
                    if (b.is_negative()) ++mismatches;
                    sum += b;
                }
                if (sum != objects::issuance::supply(rt, iss, asset)) ++mismatches;
                if (sum != Fixed(model_supply[iss + "/" + asset])) ++mismatches;
            }
        }
    }
    const bool ok = mismatches == 0;
    report(3, "issuance ledgers conserve supply and stay non-negative", ok,
           std::to_string(sequences) + " sequences over 3 issuances, " +
               std::to_string(checked_ops) + " ops, " + std::to_string(mismatches) +
               " divergences from the flat reference ledger");
}

// ---- 4: loan log vs brute-force amortization oracle ------------------------

void criterion_4() {
    // Reference amortization in raw integer decimals, independent of Fixed.
    const bigint principal = bigint(1000) * kUnit;
    const bigint rate = ref_div(bigint("50000000000000000"), bigint(12) * kUnit);  // 0.05 / 12
    const int n = 12;
    bigint compound = kUnit;
    for (int i = 0; i < n; ++i) compound = ref_mul(compound, kUnit + rate);
    const bigint installment =
        ref_div(ref_mul(ref_mul(principal, rate), compound), compound - kUnit);

    std::vector<std::string> payments;
    bigint outstanding = principal;
    for (int k = 1; k <= n; ++k) {
        const bigint interest = ref_mul(outstanding, rate);
        if (k == n) {
            payments.push_back(ref_render(outstanding + interest));
            outstanding = 0;
        } else {
            payments.push_back(ref_render(installment));
            outstanding -= installment - interest;
        }
    }

    std::string happy =
        "height,contract,event,payer,payee,issuance,asset,amount\n"
        "2,coll,INITIAL_EXCHANGE,bob,coll,prop,DEED,1\n"
        "2,loan,INITIAL_EXCHANGE,alice,bob,XTL,XTL,1000\n";
    for (int k = 1; k <= n; ++k)
        happy += std::to_string(2 + k) + ",loan,PAYMENT,bob,alice,XTL,XTL," +
                 payments[static_cast<size_t>(k - 1)] + "\n";
    happy += "17,coll,MATURITY,coll,bob,prop,DEED,1\n";

    // The default branch funds only 11 payments: bob starts with 1005 total.
    std::string dflt =
        "height,contract,event,payer,payee,issuance,asset,amount\n"
        "2,coll,INITIAL_EXCHANGE,bob,coll,prop,DEED,1\n"
        "2,loan,INITIAL_EXCHANGE,alice,bob,XTL,XTL,1000\n";
    int paid = 0;
    // Pay while funds cover each due amount (the final installment differs).
    {
        bigint funds = bigint(1005) * kUnit;
        bigint out = principal;
        for (int k = 1; k <= n; ++k) {
            const bigint interest = ref_mul(out, rate);
            const bigint due = (k == n) ? out + interest : installment;
            if (funds < due) break;
            funds -= due;
            out -= due - interest;
            dflt += std::to_string(2 + k) + ",loan,PAYMENT,bob,alice,XTL,XTL," + ref_render(due) +
                    "\n";
            ++paid;
        }
    }
    dflt += "16,coll,DEFAULT,coll,alice,prop,DEED,1\n";

    const harness::ScenarioResult happy_run = harness::run_scenario_file(scenario("loan_happy"));
    const harness::ScenarioResult dflt_run = harness::run_scenario_file(scenario("loan_default"));
    const bool ok = happy_run.csv == happy && dflt_run.csv == dflt && happy_run.errors.empty() &&
                    dflt_run.errors.empty();
    report(4, "loan cash-flow logs match the brute-force amortization oracle byte-exact", ok,
           "P=1000, 12 monthly periods at 5% p.a.; default branch pays " + std::to_string(paid) +
               " installments");
}

// ---- 5: futures zero-sum ---------------------------------------------------

void criterion_5() {
    const harness::ScenarioResult result = harness::run_scenario_file(scenario("futures"));
    Runtime rt;
    register_builtin_templates(rt);
    rt.restore_state(Runtime::decode_state(result.state));

    auto usd = [&](const ObjectId& owner) {
        return objects::issuance::balance(rt, "usd", owner, "USD");
    };
    // Entry 100, final mark 93, notional 2: the long (alice) pays 14.
    const Fixed expected_transfer = Fixed((100 - 93) * 2);
    // Count the oracle updates declared in the scenario itself.
    int updates = 0;
    {
        std::ifstream in(scenario("futures"));
        std::string line;
        while (std::getline(in, line))
            if (line.find("oracle_update") != std::string::npos) ++updates;
    }
    const bool ok = updates >= 20 && result.errors.empty() &&
                    usd("alice") == Fixed(500) - expected_transfer &&
                    usd("bob") == Fixed(500) + expected_transfer &&
                    usd("mA") == Fixed::zero() && usd("mB") == Fixed::zero() &&
                    usd("fut") == Fixed::zero() &&
                    usd("alice") + usd("bob") == Fixed(1000);
    report(5, "futures with margin accounts settle zero-sum", ok,
           std::to_string(updates) + " oracle updates; net transfer " +
               expected_transfer.to_string() + " USD long->short, escrows emptied");
}

// ---- 6: option payoff over random paths ------------------------------------

void criterion_6() {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int64_t> strike_dist(50, 150), notional_dist(1, 5),
        premium_dist(0, 10), price_dist(20, 250);
    const int rounds = 100;
    int violations = 0, exercised = 0;
    for (int i = 0; i < rounds; ++i) {
        const Fixed strike = Fixed(strike_dist(rng));
        const Fixed notional = Fixed(notional_dist(rng));
        const Fixed premium = Fixed(premium_dist(rng));
        const Fixed final_price = Fixed(price_dist(rng));

        Runtime rt = make_runtime();
        Value::Map open;
        open["mode"] = Value("none");
        rt.super_create("usd", {"issuance", 1},
                        objects::issuance::initial_storage(Value(open)));
        objects::issuance::mint(rt, "usd", "alice", "USD", Fixed(100));
        objects::issuance::mint(rt, "usd", "bob", "USD", Fixed(5000));
        rt.super_create("px", {"oracle", 1},
                        objects::oracle::initial_storage(crypto::test_sig_parameters("feed"), {},
                                                         UINT64_MAX));
        Value& feed = rt.storage("px");
        feed.set("has_data", Value(true));
        feed.set("value", Value(final_price));
        feed.set("timestamp", Value(uint64_t{6}));

        Value::Map attrs;
        attrs["template"] = Value("OPTION_EUROPEAN");
        attrs["creator"] = Value("alice");
        attrs["counterparty"] = Value("bob");
        attrs["currency_issuance"] = Value("usd");
        attrs["currency_asset"] = Value("USD");
        attrs["notional"] = Value(notional);
        attrs["strike"] = Value(strike);
        attrs["premium"] = Value(premium);
        attrs["oracle_id"] = Value("px");
        attrs["start"] = Value(uint64_t{6});
        attrs["maturity"] = Value(uint64_t{12});
        Value::Map params;
        params["id"] = Value("opt");
        params["attrs"] = Value(std::move(attrs));
        ct::instantiate(rt, Value(std::move(params)));

        for (uint64_t h = 1; h <= 2; ++h) run_block(rt, h, {});

        // Independent expectation.
        const Fixed gain = final_price - strike;
        const Fixed payout = gain > Fixed::zero() ? Fixed::mul(gain, notional) : Fixed::zero();
        if (!payout.is_zero()) ++exercised;
        const Fixed alice_after = objects::issuance::balance(rt, "usd", "alice", "USD");
        const Fixed bob_after = objects::issuance::balance(rt, "usd", "bob", "USD");
        const Fixed buyer_delta = alice_after - Fixed(100);
        if (buyer_delta != payout - premium) ++violations;
        if (payout.is_negative()) ++violations;  // buyer payout is never negative
        if (bob_after != Fixed(5000) + premium - payout) ++violations;
    }
    const bool ok = violations == 0 && exercised > 0 && exercised < rounds;
    report(6, "option pays max(S-K,0)*notional and the buyer's payout is never negative", ok,
           std::to_string(rounds) + " random paths, " + std::to_string(exercised) +
               " in the money, " + std::to_string(violations) + " violations");
}

// ---- 7: determinism --------------------------------------------------------

void criterion_7() {
    bool ok = true;
    for (const char* name : {"loan_default", "futures"}) {
        const harness::ScenarioResult first = harness::run_scenario_file(scenario(name));
        for (int i = 0; i < 2; ++i) {
            const harness::ScenarioResult again = harness::run_scenario_file(scenario(name));
            ok = ok && again.digest == first.digest && again.csv == first.csv &&
                 again.state == first.state;
        }
    }
    report(7, "3 runs of each scenario give identical digests, logs and states", ok,
           ok ? "byte-identical" : "runs diverged");
}

// ---- 8: kernel rules -------------------------------------------------------

std::vector<ObjectId> reference_sampler(std::vector<std::pair<ObjectId, Fixed>> pool,
                                        const std::vector<uint8_t>& seed, uint64_t count) {
    // Naive re-implementation: deposit-weighted, without replacement,
    // u = first 16 bytes of sha256(seed || round_be64) mod remaining total.
    std::vector<ObjectId> out;
    for (uint64_t round = 0; round < count && !pool.empty(); ++round) {
        unsigned __int128 total = 0;
        for (const auto& [id, dep] : pool) total += static_cast<unsigned __int128>(dep.raw());
        std::vector<uint8_t> preimage = seed;
        for (int shift = 56; shift >= 0; shift -= 8)
            preimage.push_back(static_cast<uint8_t>(round >> shift));
        const crypto::Digest32 digest = crypto::sha256(preimage);
        unsigned __int128 u = 0;
        for (int i = 0; i < 16; ++i) u = (u << 8) | digest[i];
        u %= total;
        size_t pick = 0;
        unsigned __int128 cumulative = 0;
        for (size_t i = 0; i < pool.size(); ++i) {
            cumulative += static_cast<unsigned __int128>(pool[i].second.raw());
            if (u < cumulative) {
                pick = i;
                break;
            }
        }
        out.push_back(pool[pick].first);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void criterion_8() {
    std::vector<std::string> problems;

    // Window [2000, 2050].
    {
        Value::Map a;
        a["owner_id"] = Value("alice");
        a["destination_id"] = Value("bob");
        a["asset_id"] = Value(kNativeAsset);
        a["amount"] = Value(Fixed(1));
        const Value tx = signed_tx({"alice"}, 1,
                                   {{ids::kNativeIssuance, "transfer", Value(std::move(a))}},
                                   2000, 2050);
        for (const auto& [height, expect_ok] :
             std::vector<std::pair<uint64_t, bool>>{{1999, false}, {2000, true}, {2050, true},
                                                    {2051, false}}) {
            Runtime rt = make_runtime();
            const ExecutionReport r = run_block(rt, height, {tx});
            if (r.extrinsics[1].ok != expect_ok)
                problems.push_back("window@" + std::to_string(height));
        }
    }
    // Replay.
    {
        Runtime rt = make_runtime();
        Value::Map a;
        a["owner_id"] = Value("alice");
        a["destination_id"] = Value("bob");
        a["asset_id"] = Value(kNativeAsset);
        a["amount"] = Value(Fixed(1));
        const Value tx = signed_tx({"alice"}, 9,
                                   {{ids::kNativeIssuance, "transfer", Value(std::move(a))}});
        const ExecutionReport r = run_block(rt, 1, {tx, tx});
        if (!(r.extrinsics[1].ok && !r.extrinsics[2].ok &&
              r.extrinsics[2].error.find("ReplayDetected") != std::string::npos))
            problems.push_back("replay");
    }
    // Reserved namespace.
    {
        Runtime rt = make_runtime();
        Value::Map p;
        p["id"] = Value("XTL_x");
        p["method"] = Value("test-sig");
        p["parameters"] = Value(crypto::test_sig_parameters("x"));
        Value::Map req;
        req["template_id"] = Value("account");
        req["parameters"] = Value(std::move(p));
        Value::Map args;
        args["requests"] = Value(Value::List{Value(std::move(req))});
        const Value tx =
            signed_tx({"alice"}, 1, {{ids::kInstantiation, "create", Value(std::move(args))}});
        const ExecutionReport r = run_block(rt, 1, {tx});
        if (r.extrinsics[1].ok ||
            r.extrinsics[1].error.find("ReservedNamespace") == std::string::npos ||
            rt.super_check("XTL_x"))
            problems.push_back("reserved namespace");
    }
    // Slash 90 -> 45/45.
    {
        GenesisConfig genesis = testutil::default_genesis();
        genesis.validators = {{"bad", Fixed(90), crypto::test_sig_parameters("b"), true},
                             {"v2", Fixed(10), crypto::test_sig_parameters("2"), true},
                             {"v3", Fixed(10), crypto::test_sig_parameters("3"), true}};
        Runtime rt = make_runtime(genesis);
        rt.set_block_context(1, 6, false);
        rt.run_extrinsics(
            {Inherent::timestamp(1, 6).to_value(), Inherent::slash("bad").to_value()});
        const auto registry = kernel::consensus::validator_registry(rt);
        if (!(registry.size() == 2 && registry[0].deposit == Fixed(55) &&
              registry[1].deposit == Fixed(55)))
            problems.push_back("slash 90->45/45");
    }
    // Validator selection vs the naive reference sampler.
    {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<int> n_dist(3, 8);
        std::uniform_int_distribution<int64_t> dep_dist(1, 500);
        for (int round = 0; round < 50; ++round) {
            GenesisConfig genesis = testutil::default_genesis();
            const int n = n_dist(rng);
            std::vector<std::pair<ObjectId, Fixed>> pool;
            for (int i = 0; i < n; ++i) {
                const ObjectId id = "val" + std::to_string(i);
                const Fixed dep = Fixed(dep_dist(rng));
                pool.emplace_back(id, dep);
                genesis.validators.push_back(
                    {id, dep, crypto::test_sig_parameters(id), false});
            }
            std::uniform_int_distribution<uint64_t> size_dist(1, static_cast<uint64_t>(n));
            genesis.validator_set_size = size_dist(rng);
            Runtime rt = make_runtime(genesis);

            std::vector<uint8_t> seed(32);
            for (auto& b : seed) b = static_cast<uint8_t>(rng());
            rt.set_block_context(1, 6, true);
            rt.run_extrinsics({Inherent::timestamp(1, 6).to_value(),
                               Inherent::seed(crypto::hex_encode(seed)).to_value()});
            std::vector<ObjectId> active = kernel::consensus::active_validators(rt);
            std::sort(active.begin(), active.end());
            if (active != reference_sampler(pool, seed, genesis.validator_set_size)) {
                problems.push_back("sampler round " + std::to_string(round));
                break;
            }
        }
    }

    std::string detail = "window [2000,2050], replay, XTL_x rejection, slash, 50 sampler draws";
    for (const auto& p : problems) detail += "; FAILED " + p;
    report(8, "kernel rules hold", problems.empty(), detail);
}

// ---- 9: annuity closure ----------------------------------------------------

void criterion_9() {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int64_t> p_dist(1, 1'000'000);
    std::uniform_int_distribution<int> r_dist(0, 2000);   // 0 .. 20.00% in bps
    std::uniform_int_distribution<int> n_dist(1, 120);
    const int rounds = 500;
    int violations = 0;
    for (int i = 0; i < rounds; ++i) {
        katal::actus::Attributes a;
        a.tmpl = katal::actus::Template::Annuity;
        a.notional = Fixed(p_dist(rng));
        a.rate = Fixed::div(Fixed(r_dist(rng)), Fixed(10000));
        a.start = 0;
        a.period = 2628000;
        a.maturity = static_cast<uint64_t>(n_dist(rng)) * a.period;

        katal::actus::Variables vars;
        katal::actus::Observation obs;
        vars = katal::actus::state_transition(
            a, vars, {katal::actus::EventType::InitialExchange, 0, {}}, obs);
        Fixed total;
        const uint64_t n = a.maturity / a.period;
        for (uint64_t k = 1; k <= n; ++k) {
            const katal::actus::ContractEvent ev{katal::actus::EventType::Payment, k * a.period,
                                                 {}};
            const Fixed pay = katal::actus::payoff(a, vars, ev, obs);
            if (pay.is_negative()) ++violations;
            total += pay;
            vars = katal::actus::state_transition(a, vars, ev, obs);
        }
        if (vars.outstanding != Fixed::zero()) ++violations;
        if (total < a.notional && !a.rate.is_zero()) ++violations;
    }
    report(9, "annuities amortize to exactly zero outstanding", violations == 0,
           std::to_string(rounds) + " random (P, r, n) with n up to 120 periods, " +
               std::to_string(violations) + " closure violations");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
