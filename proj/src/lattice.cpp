#include "ising/lattice.hpp"

#include <cmath>

#include "ising/rng_stream.hpp"

namespace ising {

void ModelParams::validate() const {
    if (!(coupling > 0.0))
        throw ConfigError("coupling J must be positive");
    if (!(attempt_rate > 0.0))
        throw ConfigError("attempt rate lambda must be positive");
    if (!(beta >= 0.0))
        throw ConfigError("beta must be non-negative");
}

Lattice Lattice::build(int width, int height, SpinInit init, std::uint64_t seed) {
    if (width < 3 || height < 3)
        throw ConfigError("lattice dimensions must be at least 3x3 so the 4 neighbors of an atom are distinct");
    Lattice lat(width, height);
    switch (init) {
    case SpinInit::AllUp:
        break; // constructed all +1
    case SpinInit::AllDown:
        for (auto& s : lat.spins_) s = -1;
        break;
    case SpinInit::Random: {
        RngStream stream(seed, kInitStreamId);
        for (std::int32_t v = 0; v < lat.n_atoms(); ++v)
            lat.spins_[static_cast<std::size_t>(v)] = stream.pair_at(static_cast<std::uint64_t>(v)).u < 0.5 ? -1 : 1;
        break;
    }
    }
    return lat;
}

std::array<std::int32_t, 4> Lattice::neighbors(std::int32_t v) const {
    const int r = row_of(v);
    const int c = col_of(v);
    const int up = (r == 0) ? height_ - 1 : r - 1;
    const int down = (r == height_ - 1) ? 0 : r + 1;
    const int left = (c == 0) ? width_ - 1 : c - 1;
    const int right = (c == width_ - 1) ? 0 : c + 1;
    return {atom_at(up, c), atom_at(down, c), atom_at(r, left), atom_at(r, right)};
}

int Lattice::up_neighbor_count(std::int32_t v) const {
    int count = 0;
    for (std::int32_t u : neighbors(v))
        if (spin(u) > 0) ++count;
    return count;
}

int neighbor_sum(const Lattice& lattice, std::int32_t v) {
    int sum = 0;
    for (std::int32_t u : lattice.neighbors(v))
        sum += lattice.spin(u);
    return sum;
}

double delta_energy(const ModelParams& params, int spin, int sigma) {
    return 2.0 * params.coupling * spin * sigma + 2.0 * params.field * spin;
}

double total_energy(const Lattice& lattice, const ModelParams& params) {
    // Count each periodic bond once via the right and down neighbor of every atom.
    long bond_sum = 0;
    long spin_sum = 0;
    for (std::int32_t v = 0; v < lattice.n_atoms(); ++v) {
        const auto nbrs = lattice.neighbors(v);
        const int s = lattice.spin(v);
        bond_sum += s * (lattice.spin(nbrs[1]) + lattice.spin(nbrs[3]));
        spin_sum += s;
    }
    return -params.coupling * static_cast<double>(bond_sum) - params.field * static_cast<double>(spin_sum);
}

long magnetization(const Lattice& lattice) {
    long m = 0;
    for (std::int32_t v = 0; v < lattice.n_atoms(); ++v)
        m += lattice.spin(v);
    return m;
}

double flip_probability(const ModelParams& params, double delta_e) {
    const double exponent = params.beta * delta_e;
    if (params.rule == FlipRule::Metropolis) {
        const double theta = std::exp(-exponent);
        return theta < 1.0 ? theta : 1.0;
    }
    // Glauber: theta/(1+theta) rewritten as 1/(1+exp(beta*dE)) so neither
    // branch of the sign of dE can overflow.
    return 1.0 / (1.0 + std::exp(exponent));
}

int class_of(int spin, int up_count) {
    return 5 * (spin + 1) / 2 + up_count;
}

double class_flip_prob(const ModelParams& params, int k) {
    const int spin = k < 5 ? -1 : 1;
    const int up_count = k % 5;
    const int sigma = 2 * up_count - 4;
    return flip_probability(params, delta_energy(params, spin, sigma));
}

} // namespace ising
