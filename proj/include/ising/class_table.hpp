#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ising/lattice.hpp"

namespace ising {

/// Result of the class-selection scan: chosen class, the cumulative weight
/// strictly below it, and the class's own normalized weight.
struct ClassPick {
    int class_index;
    double w_prev;
    double weight;
};

/*!
 * Rejection-free event table: every covered atom sits in one of the 10
 * (spin, up-neighbor count) classes, kept in linear order per class so a
 * uniform residual picks a member in O(1). Spin flips move at most 5 atoms
 * between classes (swap-remove), and the combined rate
 * Lambda = lambda * sum_k N_k p_k is maintained incrementally with a
 * periodic from-scratch refresh to bound floating-point drift.
 *
 * A table may cover a subset of the lattice (one PE's block); atoms outside
 * the covered set are ignored by updates, so the same code serves the
 * sequential sampler, the per-PE optimistic engines, and the oracle.
 */
class ClassTable {
public:
    ClassTable() = default;

    /// Table over every atom of the lattice.
    ClassTable(const Lattice& lattice, const ModelParams& params);

    /// Table over `covered` (ascending atom ids); classification still reads
    /// the full lattice, so neighbor spins outside the set act as ghosts.
    ClassTable(const Lattice& lattice, const ModelParams& params, std::span<const std::int32_t> covered);

    bool covers(std::int32_t atom) const { return slots_[static_cast<std::size_t>(atom)].cls >= 0; }
    int class_of_atom(std::int32_t atom) const { return slots_[static_cast<std::size_t>(atom)].cls; }

    int count(int k) const { return static_cast<int>(members_[static_cast<std::size_t>(k)].size()); }
    std::int32_t member(int k, int pos) const { return members_[static_cast<std::size_t>(k)][static_cast<std::size_t>(pos)]; }
    std::int32_t n_covered() const { return n_covered_; }
    double class_prob(int k) const { return class_prob_[static_cast<std::size_t>(k)]; }

    /// Cached combined rate Lambda.
    double total_rate() const { return rate_; }

    /// Lambda recomputed from the class counts; audit hook.
    double recompute_rate_scratch() const;

    /// React to the flip of `atom`, whose spin in `lattice` has already been
    /// negated. Reclassifies `atom` (if covered) and its covered neighbors.
    /// Works for both own flips and ghost flips of uncovered atoms.
    void on_spin_flipped(const Lattice& lattice, std::int32_t atom);

    /// Negate the spin and update the table; `atom` need not be covered.
    void apply_flip(Lattice& lattice, std::int32_t atom) {
        lattice.flip(atom);
        on_spin_flipped(lattice, atom);
    }

    /// Linear scan of cumulative class weights: smallest k with W(k-1) < v <= W(k).
    ClassPick select_class(double v) const;

    /// Member lookup from the normalized residual of v within the class.
    std::int32_t select_atom(int class_index, double v, double w_prev) const;

    /// Full selection: class scan then member lookup with the same sample.
    std::int32_t select(double v) const;

private:
    struct Slot {
        std::int32_t pos = -1;
        std::int8_t cls = -1;
    };

    void insert(std::int32_t atom, int k);
    void move_atom(std::int32_t atom, int to_class);
    void update_atom(const Lattice& lattice, std::int32_t atom);
    double unnormalized_weight_sum() const;

    std::vector<Slot> slots_;
    std::array<std::vector<std::int32_t>, kNumClasses> members_;
    std::array<double, kNumClasses> class_prob_{};
    double lambda_ = 0.0;
    double rate_ = 0.0;
    std::uint64_t moves_ = 0;
    std::int32_t n_covered_ = 0;
};

} // namespace ising
