#pragma once

#include <algorithm>
#include <cstdint>

namespace ising {

/// One uniform (0,1) sample pair: `u` feeds event timing, `v` atom selection.
struct UvPair {
    double u;
    double v;
};

/// Stream id reserved for lattice initialization, outside the PE id range.
inline constexpr std::uint32_t kInitStreamId = 0xffffffffu;

/*!
 * Deterministic, index-addressable stream of (U, V) pairs.
 *
 * Every pair is a pure function of (seed, stream_id, index), so any window of
 * the stream can be re-read bit-identically. That is what makes optimistic
 * re-simulation sound: an iteration that rewinds to the committed index sees
 * exactly the numbers the previous iteration saw, in the same order.
 *
 * `cursor` is the next index handed out; `committed` marks the prefix consumed
 * by committed events. The pair that overflowed a time window is read but not
 * committed, so it is the first pair re-read in the next window.
 *
 * Generator: splitmix64 finalizer over key + n*gamma (counter mode). Values
 * are mapped into the open interval (0,1), so log(u) is always finite.
 */
class RngStream {
public:
    RngStream() = default;
    RngStream(std::uint64_t seed, std::uint32_t stream_id);

    /// Pure lookup; does not move the cursor.
    UvPair pair_at(std::uint64_t index) const;

    /// Returns pair_at(cursor) and advances the cursor.
    UvPair next_pair();

    /// Rewind (or fast-forward) the cursor; contents are unaffected.
    void reset_to(std::uint64_t index) { cursor_ = index; }

    /// Mark `consumed_pairs` further pairs as consumed by committed events
    /// and park the cursor at the committed frontier.
    void commit(std::uint64_t consumed_pairs);

    /// Abandon every index touched so far and continue from a fresh block.
    void commit_fresh();

    std::uint64_t cursor() const { return cursor_; }
    std::uint64_t committed() const { return committed_; }
    std::uint64_t high_water() const { return high_water_; }
    std::uint64_t seed() const { return seed_; }
    std::uint32_t stream_id() const { return stream_id_; }

    static constexpr const char* generator_name() { return "splitmix64-counter"; }

private:
    std::uint64_t seed_ = 0;
    std::uint32_t stream_id_ = 0;
    std::uint64_t key_ = 0;
    std::uint64_t cursor_ = 0;
    std::uint64_t committed_ = 0;
    std::uint64_t high_water_ = 0;
};

} // namespace ising
