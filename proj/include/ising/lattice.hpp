#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ising/errors.hpp"

namespace ising {

enum class FlipRule { Metropolis, Glauber };

enum class SpinInit { AllUp, AllDown, Random };

/// Model constants. Temperature enters only through beta = 1/(k_B * T).
struct ModelParams {
    double coupling = 1.0;     // J, nearest-neighbor coupling (J > 0)
    double field = 0.0;        // H, external field
    double beta = 1.0;         // inverse temperature, >= 0
    double attempt_rate = 1.0; // lambda, per-atom Poisson attempt rate
    FlipRule rule = FlipRule::Glauber;

    void validate() const;
};

/// Periodic 2D grid of +/-1 spins. Atom ids are row-major.
class Lattice {
public:
    Lattice() = default;

    static Lattice build(int width, int height, SpinInit init, std::uint64_t seed = 0);

    int width() const { return width_; }
    int height() const { return height_; }
    std::int32_t n_atoms() const { return static_cast<std::int32_t>(spins_.size()); }

    std::int32_t atom_at(int row, int col) const { return row * width_ + col; }
    int row_of(std::int32_t v) const { return v / width_; }
    int col_of(std::int32_t v) const { return v % width_; }

    int spin(std::int32_t v) const { return spins_[static_cast<std::size_t>(v)]; }
    void set_spin(std::int32_t v, int s) { spins_[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(s); }
    void flip(std::int32_t v) { spins_[static_cast<std::size_t>(v)] = -spins_[static_cast<std::size_t>(v)]; }

    /// The 4 periodic neighbors, fixed order: up, down, left, right.
    std::array<std::int32_t, 4> neighbors(std::int32_t v) const;

    int up_neighbor_count(std::int32_t v) const;

    const std::vector<std::int8_t>& spins() const { return spins_; }

private:
    Lattice(int width, int height) : width_(width), height_(height), spins_(static_cast<std::size_t>(width) * height, 1) {}

    int width_ = 0;
    int height_ = 0;
    std::vector<std::int8_t> spins_;
};

/// Sum of the 4 neighbor spins; one of {-4, -2, 0, 2, 4}.
int neighbor_sum(const Lattice& lattice, std::int32_t v);

/// Energy change if a spin with value `spin` and neighbor sum `sigma` flips.
double delta_energy(const ModelParams& params, int spin, int sigma);

/// Full Hamiltonian; each periodic bond counted exactly once (2*W*H bonds).
double total_energy(const Lattice& lattice, const ModelParams& params);

/// Sum of all spins.
long magnetization(const Lattice& lattice);

/// Flip probability for the configured rule; always in [0, 1].
double flip_probability(const ModelParams& params, double delta_e);

inline constexpr int kNumClasses = 10;

/// Class index k = 5*(s+1)/2 + up_count, a bijection over the 10 states.
int class_of(int spin, int up_count);

/// Flip probability of any atom in class k.
double class_flip_prob(const ModelParams& params, int k);

} // namespace ising
