#include "katal/fixed.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <numeric>

#include "katal/errors.hpp"

namespace katal {

namespace mp = boost::multiprecision;
using int256 = mp::int256_t;

namespace {

int256 to256(Fixed::rep v) { return int256(v); }

Fixed::rep from256(const int256& v) {
    static const int256 lo = -(int256(1) << 127);
    static const int256 hi = (int256(1) << 127) - 1;
    if (v < lo || v > hi) throw KatalError(ErrorCode::BadAmount, "fixed-point overflow");
    return static_cast<Fixed::rep>(v);
}

// Rounded division, half away from zero.
int256 div_round(const int256& num, const int256& den) {
    int256 q = num / den;
    int256 r = num % den;
    if (r != 0) {
        int256 twice = mp::abs(r) * 2;
        if (twice >= mp::abs(den)) q += (num < 0) == (den < 0) ? 1 : -1;
    }
    return q;
}

}  // namespace

Fixed Fixed::parse(const std::string& text) {
    if (text.empty()) throw KatalError(ErrorCode::BadAmount, "empty decimal");
    size_t pos = 0;
    bool neg = false;
    if (text[0] == '-') {
        neg = true;
        pos = 1;
    }
    if (pos >= text.size()) throw KatalError(ErrorCode::BadAmount, "malformed decimal: " + text);
    int256 whole = 0;
    bool any_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        whole = whole * 10 + (text[pos] - '0');
        any_digit = true;
        ++pos;
    }
    int256 frac = 0;
    if (pos < text.size()) {
        if (text[pos] != '.' || !any_digit)
            throw KatalError(ErrorCode::BadAmount, "malformed decimal: " + text);
        ++pos;
        int digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            frac = frac * 10 + (text[pos] - '0');
            ++digits;
            any_digit = true;
            ++pos;
        }
        if (pos != text.size() || digits == 0 || digits > 18)
            throw KatalError(ErrorCode::BadAmount, "malformed decimal: " + text);
        for (int i = digits; i < 18; ++i) frac *= 10;
    }
    if (!any_digit) throw KatalError(ErrorCode::BadAmount, "malformed decimal: " + text);
    int256 raw = whole * kScale + frac;
    if (neg) raw = -raw;
    return from_raw(from256(raw));
}

std::string Fixed::to_string() const {
    int256 v = to256(raw_);
    bool neg = v < 0;
    if (neg) v = -v;
    int256 whole = v / kScale;
    int256 frac = v % kScale;
    std::string out;
    if (neg) out += '-';
    out += whole.str();
    if (frac != 0) {
        std::string f = frac.str();
        f.insert(f.begin(), 18 - f.size(), '0');
        while (f.back() == '0') f.pop_back();
        out += '.';
        out += f;
    }
    return out;
}

Fixed Fixed::mul(Fixed a, Fixed b) {
    return from_raw(from256(div_round(to256(a.raw_) * to256(b.raw_), int256(kScale))));
}

Fixed Fixed::div(Fixed a, Fixed b) {
    if (b.raw_ == 0) throw KatalError(ErrorCode::BadAmount, "division by zero");
    return from_raw(from256(div_round(to256(a.raw_) * int256(kScale), to256(b.raw_))));
}

std::vector<std::pair<std::string, Fixed>> largest_remainder_split(
    Fixed total, const std::vector<std::pair<std::string, Fixed>>& weights) {
    if (total.is_negative()) throw KatalError(ErrorCode::BadAmount, "negative split total");
    int256 sum = 0;
    for (const auto& [key, w] : weights) {
        if (w.is_negative()) throw KatalError(ErrorCode::BadAmount, "negative weight for " + key);
        sum += to256(w.raw());
    }
    if (sum == 0) throw KatalError(ErrorCode::BadAmount, "zero total weight");

    const int256 t = to256(total.raw());
    std::vector<std::pair<std::string, Fixed>> out;
    out.reserve(weights.size());
    std::vector<int256> remainders(weights.size());
    int256 allocated = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
        int256 num = t * to256(weights[i].second.raw());
        int256 base = num / sum;  // floor, all operands non-negative
        remainders[i] = num % sum;
        allocated += base;
        out.emplace_back(weights[i].first, Fixed::from_raw(from256(base)));
    }
    // Hand out the leftover base units to the largest remainders,
    // earlier (sorted) keys first on ties.
    int256 leftover = t - allocated;
    std::vector<size_t> order(weights.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return remainders[a] > remainders[b]; });
    for (size_t i = 0; leftover > 0; ++i, --leftover) {
        size_t idx = order[i % order.size()];
        out[idx].second += Fixed::from_raw(1);
    }
    return out;
}

}  // namespace katal
