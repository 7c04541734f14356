#include "ising/rng_stream.hpp"

namespace ising {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Map 64 random bits to (0,1): top 53 bits shifted to the mantissa range,
// offset by half an ulp so neither endpoint is reachable.
double to_open_unit(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint32_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    key_ = mix64(mix64(seed + kGamma) ^ (static_cast<std::uint64_t>(stream_id) * 0xd2b74407b1ce6e93ULL + 0x9e6c63d0876a9a62ULL));
}

UvPair RngStream::pair_at(std::uint64_t index) const {
    const std::uint64_t n = index * 2;
    return {to_open_unit(mix64(key_ + kGamma * n)),
            to_open_unit(mix64(key_ + kGamma * (n + 1)))};
}

UvPair RngStream::next_pair() {
    const UvPair p = pair_at(cursor_);
    ++cursor_;
    high_water_ = std::max(high_water_, cursor_);
    return p;
}

void RngStream::commit(std::uint64_t consumed_pairs) {
    committed_ += consumed_pairs;
    cursor_ = committed_;
}

void RngStream::commit_fresh() {
    committed_ = std::max(committed_, high_water_);
    cursor_ = committed_;
}

} // namespace ising
