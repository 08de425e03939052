#include "katal/crypto.hpp"

#include <sodium.h>

#include <cstring>
#include <mutex>

#include "katal/errors.hpp"

namespace katal::crypto {

namespace {

void ensure_sodium() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        if (sodium_init() < 0) throw std::runtime_error("sodium_init failed");
    });
}

constexpr char kHexDigits[] = "0123456789abcdef";

}  // namespace

Digest32 sha256(const std::vector<uint8_t>& data) {
    ensure_sodium();
    Digest32 out;
    crypto_hash_sha256(out.data(), data.data(), data.size());
    return out;
}

Digest32 sha256(const std::string& data) {
    return sha256(std::vector<uint8_t>(data.begin(), data.end()));
}

std::string hex_encode(const uint8_t* data, size_t len) {
    std::string out;
    out.reserve(len * 2);
    for (size_t i = 0; i < len; ++i) {
        out += kHexDigits[data[i] >> 4];
        out += kHexDigits[data[i] & 0x0f];
    }
    return out;
}

std::string hex_encode(const std::vector<uint8_t>& data) {
    return hex_encode(data.data(), data.size());
}

std::string hex_encode(const Digest32& digest) { return hex_encode(digest.data(), digest.size()); }

std::vector<uint8_t> hex_decode(const std::string& hex) {
    if (hex.size() % 2 != 0) throw KatalError(ErrorCode::BadParameters, "odd hex length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw KatalError(ErrorCode::BadParameters, "bad hex digit");
    };
    std::vector<uint8_t> out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    return out;
}

bool method_known(const std::string& method) {
    return method == "test-sig" || method == "ed25519";
}

bool method_verify(const std::string& method, const std::vector<uint8_t>& message,
                   const std::string& parameters_hex, const std::string& proof_hex) {
    ensure_sodium();
    try {
        if (method == "test-sig") {
            std::vector<uint8_t> preimage(parameters_hex.begin(), parameters_hex.end());
            preimage.insert(preimage.end(), message.begin(), message.end());
            return hex_encode(sha256(preimage)) == proof_hex;
        }
        if (method == "ed25519") {
            std::vector<uint8_t> pk = hex_decode(parameters_hex);
            std::vector<uint8_t> sig = hex_decode(proof_hex);
            if (pk.size() != crypto_sign_PUBLICKEYBYTES || sig.size() != crypto_sign_BYTES)
                return false;
            return crypto_sign_verify_detached(sig.data(), message.data(), message.size(),
                                               pk.data()) == 0;
        }
    } catch (const KatalError&) {
        return false;
    }
    return false;
}

std::string test_sig_parameters(const std::string& secret) {
    return hex_encode(sha256(secret));
}

std::string test_sig_prove(const std::string& secret, const std::vector<uint8_t>& message) {
    std::string params = test_sig_parameters(secret);
    std::vector<uint8_t> preimage(params.begin(), params.end());
    preimage.insert(preimage.end(), message.begin(), message.end());
    return hex_encode(sha256(preimage));
}

Ed25519Keypair ed25519_from_seed(const std::string& seed) {
    ensure_sodium();
    Digest32 seed32 = sha256(seed);
    std::array<uint8_t, crypto_sign_PUBLICKEYBYTES> pk;
    Ed25519Keypair kp;
    kp.secret_key.resize(crypto_sign_SECRETKEYBYTES);
    crypto_sign_seed_keypair(pk.data(), kp.secret_key.data(), seed32.data());
    kp.public_hex = hex_encode(pk.data(), pk.size());
    return kp;
}

std::string ed25519_prove(const Ed25519Keypair& kp, const std::vector<uint8_t>& message) {
    std::array<uint8_t, crypto_sign_BYTES> sig;
    crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(),
                         kp.secret_key.data());
    return hex_encode(sig.data(), sig.size());
}

}  // namespace katal::crypto
