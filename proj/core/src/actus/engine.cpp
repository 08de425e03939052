#include "katal/actus.hpp"
#include "katal/errors.hpp"

namespace katal::actus {

namespace {

bool event_in_template(Template tmpl, EventType type) {
    if (type == EventType::Terminate) return true;
    switch (tmpl) {
        case Template::Annuity:
            return type == EventType::InitialExchange || type == EventType::Payment ||
                   type == EventType::Maturity || type == EventType::Default;
        case Template::FxSpot:
            return type == EventType::Settlement || type == EventType::Default;
        case Template::Collateral:
            return type == EventType::InitialExchange || type == EventType::Default ||
                   type == EventType::Maturity;
        case Template::Margining:
            return type == EventType::InitialExchange || type == EventType::MarginCall ||
                   type == EventType::Maturity || type == EventType::Default;
        case Template::Future:
            return type == EventType::InitialExchange || type == EventType::Payment ||
                   type == EventType::Settlement;
        case Template::OptionEuropean:
            return type == EventType::InitialExchange || type == EventType::Payment ||
                   type == EventType::Maturity || type == EventType::Exercise;
    }
    return false;
}

void require_event(const Attributes& attrs, EventType type) {
    if (!event_in_template(attrs.tmpl, type))
        throw KatalError(ErrorCode::WrongEventForTemplate,
                         std::string(event_type_name(type)) + " on " + template_name(attrs.tmpl));
}

Fixed oracle_price(const Observation& obs) {
    if (!obs.risk_factor) throw KatalError(ErrorCode::MissingObservation, "oracle value");
    return obs.risk_factor->first;
}

Fixed escrow(const Observation& obs) {
    if (!obs.escrow_balance) throw KatalError(ErrorCode::MissingObservation, "escrow balance");
    return *obs.escrow_balance;
}

const ChildSnapshot& child(const Observation& obs) {
    if (!obs.child) throw KatalError(ErrorCode::MissingObservation, "child contract");
    return *obs.child;
}

// Required margin: base margin plus fraction of the absolute exposure, taken
// from the child contract's mark when there is one, else from the oracle.
Fixed required_margin(const Attributes& attrs, const Observation& obs) {
    Fixed exposure;
    if (!attrs.child_contract_id.empty()) {
        const ChildSnapshot& c = child(obs);
        exposure = Fixed::mul((c.marked_price - c.entry_price).abs(), c.notional);
    } else {
        exposure = Fixed::mul(oracle_price(obs).abs(), attrs.notional);
    }
    return attrs.initial_margin + Fixed::mul(attrs.margin_fraction, exposure);
}

void check_periodic(const Attributes& attrs) {
    if (attrs.maturity <= attrs.start)
        throw KatalError(ErrorCode::BadAttributes, "maturity must be after start");
    if (attrs.period == 0) throw KatalError(ErrorCode::BadAttributes, "period must be positive");
}

}  // namespace

Fixed period_rate(Fixed annual_rate, uint64_t period_seconds) {
    return Fixed::div(Fixed::mul(annual_rate, Fixed(static_cast<int64_t>(period_seconds))),
                      Fixed(static_cast<int64_t>(kSecondsPerYear)));
}

Fixed annuity_installment(Fixed principal, Fixed rate_per_period, uint64_t periods) {
    if (periods == 0) throw KatalError(ErrorCode::BadAttributes, "zero annuity periods");
    if (rate_per_period.is_zero())
        return Fixed::div(principal, Fixed(static_cast<int64_t>(periods)));
    Fixed compound = Fixed::one();
    const Fixed growth = Fixed::one() + rate_per_period;
    for (uint64_t i = 0; i < periods; ++i) compound = Fixed::mul(compound, growth);
    // A = P * r * (1+r)^n / ((1+r)^n - 1)
    return Fixed::div(Fixed::mul(Fixed::mul(principal, rate_per_period), compound),
                      compound - Fixed::one());
}

uint64_t annuity_periods(const Attributes& attrs) {
    check_periodic(attrs);
    if ((attrs.maturity - attrs.start) % attrs.period != 0)
        throw KatalError(ErrorCode::BadAttributes, "maturity not aligned to the payment period");
    return (attrs.maturity - attrs.start) / attrs.period;
}

std::vector<ContractEvent> generate_schedule(const Attributes& attrs) {
    std::vector<ContractEvent> events;
    auto scheduled = [&](EventType type, uint64_t time) {
        events.push_back({type, time, ContractEvent::Origin::Scheduled});
    };
    switch (attrs.tmpl) {
        case Template::Annuity: {
            const uint64_t n = annuity_periods(attrs);
            scheduled(EventType::InitialExchange, attrs.start);
            for (uint64_t k = 1; k <= n; ++k)
                scheduled(EventType::Payment, attrs.start + k * attrs.period);
            scheduled(EventType::Maturity, attrs.maturity);
            break;
        }
        case Template::FxSpot:
            if (attrs.maturity == 0)
                throw KatalError(ErrorCode::BadAttributes, "missing settlement time");
            scheduled(EventType::Settlement, attrs.maturity);
            break;
        case Template::Collateral:
            if (attrs.maturity <= attrs.start)
                throw KatalError(ErrorCode::BadAttributes, "maturity must be after start");
            scheduled(EventType::InitialExchange, attrs.start);
            scheduled(EventType::Maturity, attrs.maturity);
            break;
        case Template::Margining: {
            check_periodic(attrs);
            scheduled(EventType::InitialExchange, attrs.start);
            for (uint64_t t = attrs.start + attrs.period; t < attrs.maturity; t += attrs.period)
                scheduled(EventType::MarginCall, t);
            scheduled(EventType::Maturity, attrs.maturity);
            break;
        }
        case Template::Future: {
            check_periodic(attrs);
            scheduled(EventType::InitialExchange, attrs.start);
            for (uint64_t t = attrs.start + attrs.period; t < attrs.maturity; t += attrs.period)
                scheduled(EventType::Payment, t);
            scheduled(EventType::Settlement, attrs.maturity);
            break;
        }
        case Template::OptionEuropean: {
            if (attrs.maturity <= attrs.start)
                throw KatalError(ErrorCode::BadAttributes, "maturity must be after start");
            scheduled(EventType::InitialExchange, attrs.start);
            if (attrs.period > 0)
                for (uint64_t t = attrs.start + attrs.period; t < attrs.maturity;
                     t += attrs.period)
                    scheduled(EventType::Payment, t);
            scheduled(EventType::Maturity, attrs.maturity);
            break;
        }
    }
    return events;
}

bool needs_oracle(const Attributes& attrs, EventType type) {
    switch (attrs.tmpl) {
        case Template::Future:
            return type == EventType::Payment || type == EventType::Settlement;
        case Template::OptionEuropean:
            return type == EventType::Payment || type == EventType::Maturity ||
                   type == EventType::Exercise;
        case Template::Margining:
            return type == EventType::MarginCall && attrs.child_contract_id.empty();
        default:
            return false;
    }
}

bool needs_child(const Attributes& attrs, EventType type) {
    if (attrs.child_contract_id.empty()) return false;
    if (attrs.tmpl == Template::Margining) return type == EventType::MarginCall;
    return false;
}

bool needs_escrow(const Attributes& attrs, EventType type) {
    if (attrs.tmpl != Template::Margining) return false;
    return type == EventType::MarginCall || type == EventType::Maturity ||
           type == EventType::Default || type == EventType::Terminate;
}

Fixed payoff(const Attributes& attrs, const Variables& vars, const ContractEvent& event,
             const Observation& obs) {
    require_event(attrs, event.type);
    switch (attrs.tmpl) {
        case Template::Annuity:
            switch (event.type) {
                case EventType::InitialExchange:
                    // Lender (counterparty) advances the principal.
                    return -attrs.notional;
                case EventType::Payment: {
                    const Fixed r = period_rate(attrs.rate, attrs.period);
                    const Fixed interest = Fixed::mul(vars.outstanding, r);
                    if (event.scheduled_time >= attrs.maturity)
                        return vars.outstanding + interest;  // final installment closes out
                    return annuity_installment(attrs.notional, r, annuity_periods(attrs));
                }
                default:
                    return Fixed::zero();
            }
        case Template::FxSpot:
            // Primary leg only; the orchestrator settles the counter-leg
            // from the attributes in the same atomic cascade.
            return event.type == EventType::Settlement ? attrs.amount1 : Fixed::zero();
        case Template::Collateral:
            switch (event.type) {
                case EventType::InitialExchange: return attrs.collateral_amount;  // into escrow
                case EventType::Default: return attrs.collateral_amount;          // to the lender
                case EventType::Maturity:
                case EventType::Terminate: return -attrs.collateral_amount;       // returned
                default: return Fixed::zero();
            }
        case Template::Margining:
            switch (event.type) {
                case EventType::InitialExchange: return attrs.initial_margin;
                case EventType::MarginCall:
                    // Positive: the party tops the escrow up; negative: excess
                    // margin flows back out.
                    return required_margin(attrs, obs) - escrow(obs);
                case EventType::Maturity:
                case EventType::Terminate: return -escrow(obs);
                case EventType::Default: return escrow(obs);
                default: return Fixed::zero();
            }
        case Template::Future:
            if (event.type == EventType::Settlement) {
                // Long (creator) gains when the settle price exceeds entry.
                const Fixed settle = oracle_price(obs);
                return Fixed::mul(attrs.entry_price - settle, attrs.notional);
            }
            return Fixed::zero();
        case Template::OptionEuropean:
            switch (event.type) {
                case EventType::InitialExchange: return attrs.premium;  // buyer pays the premium
                case EventType::Maturity:
                case EventType::Exercise: {
                    const Fixed gain = oracle_price(obs) - attrs.strike;
                    if (gain <= Fixed::zero()) return Fixed::zero();
                    return -Fixed::mul(gain, attrs.notional);  // seller pays the buyer
                }
                default:
                    return Fixed::zero();
            }
    }
    return Fixed::zero();
}

Variables state_transition(const Attributes& attrs, const Variables& vars,
                           const ContractEvent& event, const Observation& obs) {
    require_event(attrs, event.type);
    Variables next = vars;
    next.last_event_time = event.scheduled_time;
    switch (event.type) {
        case EventType::InitialExchange:
            if (attrs.tmpl == Template::Annuity) next.outstanding = attrs.notional;
            if (attrs.tmpl == Template::Future) next.marked_price = attrs.entry_price;
            if (attrs.tmpl == Template::Margining) next.margin_balance = attrs.initial_margin;
            break;
        case EventType::Payment:
            if (attrs.tmpl == Template::Annuity) {
                const Fixed r = period_rate(attrs.rate, attrs.period);
                const Fixed interest = Fixed::mul(vars.outstanding, r);
                const Fixed installment = payoff(attrs, vars, event, obs);
                next.outstanding = vars.outstanding - (installment - interest);
                next.accrued = Fixed::zero();
            } else {
                next.marked_price = oracle_price(obs);  // future/option mark
            }
            break;
        case EventType::MarginCall:
            next.margin_balance = required_margin(attrs, obs);
            break;
        case EventType::Settlement:
            if (attrs.tmpl == Template::Future) next.marked_price = oracle_price(obs);
            next.status = Status::Matured;
            break;
        case EventType::Maturity:
        case EventType::Exercise:
        case EventType::Terminate:
            next.status = Status::Matured;
            if (attrs.tmpl == Template::Margining) next.margin_balance = Fixed::zero();
            break;
        case EventType::Default:
            next.status = Status::Defaulted;
            next.pending_default = false;
            if (attrs.tmpl == Template::Margining) next.margin_balance = Fixed::zero();
            break;
    }
    return next;
}

}  // namespace katal::actus
