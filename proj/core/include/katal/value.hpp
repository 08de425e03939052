#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "katal/fixed.hpp"

namespace katal {

// The recursive structured value used for object storage and event
// parameters. Maps are ordered (byte-wise key sort) and there is no
// floating point, so equal values always serialize identically.
class Value {
public:
    enum class Kind { Null, Bool, Int, Fix, Str, List, Map };

    using List = std::vector<Value>;
    using Map = std::map<std::string, Value>;

    Value() : data_(std::monostate{}) {}
    Value(bool b) : data_(b) {}
    Value(int i) : data_(static_cast<__int128>(i)) {}
    Value(int64_t i) : data_(static_cast<__int128>(i)) {}
    Value(uint64_t i) : data_(static_cast<__int128>(i)) {}
    Value(__int128 i) : data_(i) {}
    Value(Fixed f) : data_(f) {}
    Value(const char* s) : data_(std::string(s)) {}
    Value(std::string s) : data_(std::move(s)) {}
    Value(List l) : data_(std::move(l)) {}
    Value(Map m) : data_(std::move(m)) {}

    Kind kind() const { return static_cast<Kind>(data_.index()); }
    bool is_null() const { return kind() == Kind::Null; }
    bool is_map() const { return kind() == Kind::Map; }

    // Typed accessors; throw BadParameters on a kind mismatch.
    bool as_bool() const;
    __int128 as_int() const;
    int64_t as_int64() const;
    uint64_t as_uint64() const;
    Fixed as_fix() const;
    const std::string& as_str() const;
    const List& as_list() const;
    const Map& as_map() const;
    List& as_list();
    Map& as_map();

    // Map helpers. get() returns Null for a missing key; at() throws.
    bool has(const std::string& key) const;
    const Value& get(const std::string& key) const;
    const Value& at(const std::string& key) const;
    void set(const std::string& key, Value v);
    void erase(const std::string& key);

    friend bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }

    // Canonical byte encoding (tagged, big-endian lengths and integers).
    void encode(std::vector<uint8_t>& out) const;
    std::vector<uint8_t> encode() const;
    static Value decode(const std::vector<uint8_t>& bytes);

private:
    std::variant<std::monostate, bool, __int128, Fixed, std::string, List, Map> data_;
};

}  // namespace katal
