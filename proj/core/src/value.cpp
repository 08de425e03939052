#include "katal/value.hpp"

#include <cstring>

#include "katal/errors.hpp"

namespace katal {

namespace {

[[noreturn]] void kind_error(const char* wanted) {
    throw KatalError(ErrorCode::BadParameters, std::string("expected ") + wanted);
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

void put_i128(std::vector<uint8_t>& out, __int128 v) {
    for (int shift = 120; shift >= 0; shift -= 8)
        out.push_back(static_cast<uint8_t>(static_cast<unsigned __int128>(v) >> shift));
}

struct Reader {
    const std::vector<uint8_t>& buf;
    size_t pos = 0;

    uint8_t byte() {
        if (pos >= buf.size()) throw KatalError(ErrorCode::ParseError, "truncated value");
        return buf[pos++];
    }
    uint32_t u32() {
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | byte();
        return v;
    }
    __int128 i128() {
        unsigned __int128 v = 0;
        for (int i = 0; i < 16; ++i) v = (v << 8) | byte();
        return static_cast<__int128>(v);
    }
    std::string str() {
        uint32_t len = u32();
        if (pos + len > buf.size()) throw KatalError(ErrorCode::ParseError, "truncated string");
        std::string s(reinterpret_cast<const char*>(buf.data() + pos), len);
        pos += len;
        return s;
    }
};

Value decode_one(Reader& r) {
    switch (r.byte()) {
        case 0x00: return Value();
        case 0x01: return Value(false);
        case 0x02: return Value(true);
        case 0x03: return Value(r.i128());
        case 0x04: return Value(Fixed::from_raw(r.i128()));
        case 0x05: return Value(r.str());
        case 0x06: {
            uint32_t n = r.u32();
            Value::List l;
            l.reserve(n);
            for (uint32_t i = 0; i < n; ++i) l.push_back(decode_one(r));
            return Value(std::move(l));
        }
        case 0x07: {
            uint32_t n = r.u32();
            Value::Map m;
            std::string prev;
            for (uint32_t i = 0; i < n; ++i) {
                std::string k = r.str();
                if (i > 0 && !(prev < k))
                    throw KatalError(ErrorCode::ParseError, "non-canonical map key order");
                prev = k;
                m.emplace(std::move(k), decode_one(r));
            }
            return Value(std::move(m));
        }
        default: throw KatalError(ErrorCode::ParseError, "bad value tag");
    }
}

}  // namespace

bool Value::as_bool() const {
    if (auto* p = std::get_if<bool>(&data_)) return *p;
    kind_error("bool");
}

__int128 Value::as_int() const {
    if (auto* p = std::get_if<__int128>(&data_)) return *p;
    kind_error("int");
}

int64_t Value::as_int64() const {
    __int128 v = as_int();
    if (v < INT64_MIN || v > INT64_MAX) kind_error("int64-range int");
    return static_cast<int64_t>(v);
}

uint64_t Value::as_uint64() const {
    __int128 v = as_int();
    if (v < 0 || v > static_cast<__int128>(UINT64_MAX)) kind_error("uint64-range int");
    return static_cast<uint64_t>(v);
}

Fixed Value::as_fix() const {
    if (auto* p = std::get_if<Fixed>(&data_)) return *p;
    kind_error("fixed");
}

const std::string& Value::as_str() const {
    if (auto* p = std::get_if<std::string>(&data_)) return *p;
    kind_error("string");
}

const Value::List& Value::as_list() const {
    if (auto* p = std::get_if<List>(&data_)) return *p;
    kind_error("list");
}

const Value::Map& Value::as_map() const {
    if (auto* p = std::get_if<Map>(&data_)) return *p;
    kind_error("map");
}

Value::List& Value::as_list() {
    if (auto* p = std::get_if<List>(&data_)) return *p;
    kind_error("list");
}

Value::Map& Value::as_map() {
    if (auto* p = std::get_if<Map>(&data_)) return *p;
    kind_error("map");
}

bool Value::has(const std::string& key) const { return as_map().count(key) != 0; }

const Value& Value::get(const std::string& key) const {
    static const Value null_value;
    const Map& m = as_map();
    auto it = m.find(key);
    return it == m.end() ? null_value : it->second;
}

const Value& Value::at(const std::string& key) const {
    const Map& m = as_map();
    auto it = m.find(key);
    if (it == m.end()) throw KatalError(ErrorCode::BadParameters, "missing field '" + key + "'");
    return it->second;
}

void Value::set(const std::string& key, Value v) { as_map()[key] = std::move(v); }

void Value::erase(const std::string& key) { as_map().erase(key); }

void Value::encode(std::vector<uint8_t>& out) const {
    switch (kind()) {
        case Kind::Null:
            out.push_back(0x00);
            break;
        case Kind::Bool:
            out.push_back(std::get<bool>(data_) ? 0x02 : 0x01);
            break;
        case Kind::Int:
            out.push_back(0x03);
            put_i128(out, std::get<__int128>(data_));
            break;
        case Kind::Fix:
            out.push_back(0x04);
            put_i128(out, std::get<Fixed>(data_).raw());
            break;
        case Kind::Str: {
            const std::string& s = std::get<std::string>(data_);
            out.push_back(0x05);
            put_u32(out, static_cast<uint32_t>(s.size()));
            out.insert(out.end(), s.begin(), s.end());
            break;
        }
        case Kind::List: {
            const List& l = std::get<List>(data_);
            out.push_back(0x06);
            put_u32(out, static_cast<uint32_t>(l.size()));
            for (const Value& v : l) v.encode(out);
            break;
        }
        case Kind::Map: {
            const Map& m = std::get<Map>(data_);
            out.push_back(0x07);
            put_u32(out, static_cast<uint32_t>(m.size()));
            for (const auto& [k, v] : m) {
                put_u32(out, static_cast<uint32_t>(k.size()));
                out.insert(out.end(), k.begin(), k.end());
                v.encode(out);
            }
            break;
        }
    }
}

std::vector<uint8_t> Value::encode() const {
    std::vector<uint8_t> out;
    encode(out);
    return out;
}

Value Value::decode(const std::vector<uint8_t>& bytes) {
    Reader r{bytes};
    Value v = decode_one(r);
    if (r.pos != bytes.size()) throw KatalError(ErrorCode::ParseError, "trailing bytes");
    return v;
}

}  // namespace katal
