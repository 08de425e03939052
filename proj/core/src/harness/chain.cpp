#include "katal/crypto.hpp"
#include "katal/extrinsic.hpp"
#include "katal/harness.hpp"
#include "katal/kernel.hpp"

namespace katal::harness {

Chain::Chain(const GenesisConfig& genesis, ChainParams params) : params_(std::move(params)) {
    register_builtin_templates(rt_);
    apply_genesis(rt_, genesis);
    seed_ = params_.initial_seed_hex.empty() ? std::vector<uint8_t>(32, 0)
                                             : crypto::hex_decode(params_.initial_seed_hex);
}

ExecutionReport Chain::apply_block(const std::vector<Value>& transactions,
                                   const std::vector<ObjectId>& slashes) {
    const uint64_t height = ++height_;
    const bool macro = is_macro(height);
    rt_.set_block_context(height, time_at(height), macro);

    std::vector<Value> extrinsics;
    extrinsics.push_back(Inherent::timestamp(height, time_at(height)).to_value());
    for (const ObjectId& id : slashes) extrinsics.push_back(Inherent::slash(id).to_value());
    if (macro) {
        const auto digest = crypto::sha256(seed_);
        seed_.assign(digest.begin(), digest.end());
        extrinsics.push_back(Inherent::seed(crypto::hex_encode(seed_)).to_value());
    } else {
        for (const Value& tx : transactions) extrinsics.push_back(tx);
    }
    const std::vector<ObjectId> active = kernel::consensus::active_validators(rt_);
    if (!active.empty())
        extrinsics.push_back(Inherent::reward(active[height % active.size()]).to_value());

    return rt_.run_extrinsics(extrinsics);
}

}  // namespace katal::harness
