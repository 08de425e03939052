#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace katal::crypto {

using Digest32 = std::array<uint8_t, 32>;

Digest32 sha256(const std::vector<uint8_t>& data);
Digest32 sha256(const std::string& data);

std::string hex_encode(const uint8_t* data, size_t len);
std::string hex_encode(const std::vector<uint8_t>& data);
std::string hex_encode(const Digest32& digest);
std::vector<uint8_t> hex_decode(const std::string& hex);  // throws BadParameters

// Pluggable authentication methods, keyed by name. Two schemes ship:
//
//   "test-sig"  deterministic toy scheme. parameters = hex(sha256(secret)),
//               proof = hex(sha256(parameters_bytes || message)). Anyone who
//               knows the secret can derive both; verification only needs the
//               registered parameters.
//   "ed25519"   real signatures via libsodium. parameters = hex public key,
//               proof = hex detached signature.
bool method_verify(const std::string& method, const std::vector<uint8_t>& message,
                   const std::string& parameters_hex, const std::string& proof_hex);
bool method_known(const std::string& method);

// Signing-side helpers used by tests and the scenario harness.
std::string test_sig_parameters(const std::string& secret);
std::string test_sig_prove(const std::string& secret, const std::vector<uint8_t>& message);

struct Ed25519Keypair {
    std::string public_hex;
    std::vector<uint8_t> secret_key;  // 64-byte libsodium secret key
};
Ed25519Keypair ed25519_from_seed(const std::string& seed);
std::string ed25519_prove(const Ed25519Keypair& kp, const std::vector<uint8_t>& message);

}  // namespace katal::crypto
