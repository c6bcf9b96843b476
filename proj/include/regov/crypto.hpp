#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "regov/bytes.hpp"

namespace regov {

inline constexpr std::size_t kPublicKeySize = 32;
inline constexpr std::size_t kPrivateKeySize = 64;
inline constexpr std::size_t kSignatureSize = 64;
inline constexpr std::size_t kDigestSize = 32;
inline constexpr std::size_t kSeedSize = 32;

using PublicKey = std::array<std::uint8_t, kPublicKeySize>;
using PrivateKey = std::array<std::uint8_t, kPrivateKeySize>;
using Signature = std::array<std::uint8_t, kSignatureSize>;
using Digest = std::array<std::uint8_t, kDigestSize>;
using Seed = std::array<std::uint8_t, kSeedSize>;

// Node identity backed by an Ed25519 key pair. The private key is present
// only on the owning node; node_id is the lowercase hex of the public key.
struct NodeIdentity {
    PublicKey public_key{};
    std::optional<PrivateKey> private_key;
    std::string node_id;

    static NodeIdentity from_seed(const Seed& seed);
    // Deterministic identity for simulations: seed = digest(name).
    static NodeIdentity derive(std::string_view name);
    static NodeIdentity public_only(const PublicKey& pk);

    bool can_sign() const { return private_key.has_value(); }
    bool operator==(const NodeIdentity& o) const { return public_key == o.public_key; }
};

std::string key_to_hex(const PublicKey& pk);
PublicKey key_from_hex(std::string_view hex);

Digest digest(const Bytes& data);
Digest digest(std::string_view data);

Signature sign(const PrivateKey& sk, const Bytes& message);
bool verify(const PublicKey& pk, const Bytes& message, const Signature& sig);

// Auth token carrying the signer's public key so the receiver can recover
// it from the token alone: public_key (32) || signature (64) over message.
Bytes make_auth_token(const NodeIdentity& signer, std::string_view message);
// Returns the embedded key iff the signature verifies under it.
std::optional<PublicKey> recover_auth_token(const Bytes& token, std::string_view message);

// Deterministic stream generator used wherever the simulation needs
// reproducible randomness (key material, salts, test payloads).
class Rng {
public:
    explicit Rng(const Seed& seed) : seed_(seed) {}
    explicit Rng(std::string_view label) : seed_(digest(label)) {}

    void fill(std::uint8_t* out, std::size_t len);
    Bytes bytes(std::size_t len);
    Seed seed32();
    std::uint64_t next_u64();
    // Uniform in [0, bound): bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    Seed seed_{};
    std::uint64_t counter_ = 0;
};

void crypto_init();

} // namespace regov
