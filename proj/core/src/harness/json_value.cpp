#include <json.hpp>

#include "katal/crypto.hpp"
#include "katal/errors.hpp"
#include "katal/harness.hpp"

namespace katal::harness {

namespace {

using nlohmann::json;

Value from_json(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return Value();
        case json::value_t::boolean:
            return Value(j.get<bool>());
        case json::value_t::number_integer:
            return Value(j.get<int64_t>());
        case json::value_t::number_unsigned:
            return Value(j.get<uint64_t>());
        case json::value_t::string:
            return Value(j.get<std::string>());
        case json::value_t::array: {
            Value::List list;
            for (const json& item : j) list.push_back(from_json(item));
            return Value(std::move(list));
        }
        case json::value_t::object: {
            if (j.size() == 1 && j.contains("$fix"))
                return Value(Fixed::parse(j.at("$fix").get<std::string>()));
            if (j.size() == 1 && j.contains("$testsig_key"))
                return Value(crypto::test_sig_parameters(j.at("$testsig_key").get<std::string>()));
            Value::Map map;
            for (auto it = j.begin(); it != j.end(); ++it) map[it.key()] = from_json(it.value());
            return Value(std::move(map));
        }
        default:
            throw KatalError(ErrorCode::BadParameters,
                             "JSON floats are not representable as canonical values");
    }
}

json to_json(const Value& v) {
    switch (v.kind()) {
        case Value::Kind::Null:
            return nullptr;
        case Value::Kind::Bool:
            return v.as_bool();
        case Value::Kind::Int: {
            const __int128 i = v.as_int();
            if (i >= INT64_MIN && i <= INT64_MAX) return static_cast<int64_t>(i);
            // Out-of-range integers round-trip as strings.
            std::string text;
            unsigned __int128 mag = i < 0 ? -static_cast<unsigned __int128>(i)
                                          : static_cast<unsigned __int128>(i);
            while (mag > 0) {
                text.insert(text.begin(), static_cast<char>('0' + static_cast<int>(mag % 10)));
                mag /= 10;
            }
            if (i < 0) text.insert(text.begin(), '-');
            return json{{"$int", text}};
        }
        case Value::Kind::Fix:
            return json{{"$fix", v.as_fix().to_string()}};
        case Value::Kind::Str:
            return v.as_str();
        case Value::Kind::List: {
            json arr = json::array();
            for (const Value& item : v.as_list()) arr.push_back(to_json(item));
            return arr;
        }
        case Value::Kind::Map: {
            json obj = json::object();
            for (const auto& [key, item] : v.as_map()) obj[key] = to_json(item);
            return obj;
        }
    }
    return nullptr;
}

}  // namespace

std::string value_to_json_text(const Value& v, int indent) { return to_json(v).dump(indent); }

Value value_from_json_text(const std::string& text) {
    try {
        return from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw KatalError(ErrorCode::BadParameters, std::string("JSON parse: ") + e.what());
    }
}

}  // namespace katal::harness
