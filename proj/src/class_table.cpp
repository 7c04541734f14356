#include "ising/class_table.hpp"

#include <cmath>

#include "ising/errors.hpp"

namespace ising {

namespace {
// Scratch refresh cadence for the cached rate, in class moves.
constexpr std::uint64_t kRefreshMask = (1u << 16) - 1;
} // namespace

ClassTable::ClassTable(const Lattice& lattice, const ModelParams& params)
    : slots_(static_cast<std::size_t>(lattice.n_atoms())), lambda_(params.attempt_rate) {
    for (int k = 0; k < kNumClasses; ++k)
        class_prob_[static_cast<std::size_t>(k)] = class_flip_prob(params, k);
    for (std::int32_t v = 0; v < lattice.n_atoms(); ++v)
        insert(v, class_of(lattice.spin(v), lattice.up_neighbor_count(v)));
    n_covered_ = lattice.n_atoms();
    rate_ = recompute_rate_scratch();
}

ClassTable::ClassTable(const Lattice& lattice, const ModelParams& params, std::span<const std::int32_t> covered)
    : slots_(static_cast<std::size_t>(lattice.n_atoms())), lambda_(params.attempt_rate) {
    for (int k = 0; k < kNumClasses; ++k)
        class_prob_[static_cast<std::size_t>(k)] = class_flip_prob(params, k);
    for (std::int32_t v : covered)
        insert(v, class_of(lattice.spin(v), lattice.up_neighbor_count(v)));
    n_covered_ = static_cast<std::int32_t>(covered.size());
    rate_ = recompute_rate_scratch();
}

void ClassTable::insert(std::int32_t atom, int k) {
    auto& vec = members_[static_cast<std::size_t>(k)];
    slots_[static_cast<std::size_t>(atom)] = {static_cast<std::int32_t>(vec.size()), static_cast<std::int8_t>(k)};
    vec.push_back(atom);
}

double ClassTable::unnormalized_weight_sum() const {
    double sum = 0.0;
    for (int k = 0; k < kNumClasses; ++k)
        sum += static_cast<double>(members_[static_cast<std::size_t>(k)].size()) * class_prob_[static_cast<std::size_t>(k)];
    return sum;
}

double ClassTable::recompute_rate_scratch() const {
    return lambda_ * unnormalized_weight_sum();
}

void ClassTable::move_atom(std::int32_t atom, int to_class) {
    Slot& slot = slots_[static_cast<std::size_t>(atom)];
    const int from_class = slot.cls;
    if (from_class == to_class)
        return;

    // Swap-remove from the old class; linear order within a class is
    // arbitrary, so selection stays uniform.
    auto& from = members_[static_cast<std::size_t>(from_class)];
    from[static_cast<std::size_t>(slot.pos)] = from.back();
    slots_[static_cast<std::size_t>(from[static_cast<std::size_t>(slot.pos)])].pos = slot.pos;
    from.pop_back();

    insert(atom, to_class);

    rate_ += lambda_ * (class_prob_[static_cast<std::size_t>(to_class)] - class_prob_[static_cast<std::size_t>(from_class)]);
    ++moves_;
    if ((moves_ & kRefreshMask) == 0)
        rate_ = recompute_rate_scratch();
}

void ClassTable::update_atom(const Lattice& lattice, std::int32_t atom) {
    if (!covers(atom))
        return;
    move_atom(atom, class_of(lattice.spin(atom), lattice.up_neighbor_count(atom)));
}

void ClassTable::on_spin_flipped(const Lattice& lattice, std::int32_t atom) {
    update_atom(lattice, atom);
    for (std::int32_t u : lattice.neighbors(atom))
        update_atom(lattice, u);
}

ClassPick ClassTable::select_class(double v) const {
    const double sum = unnormalized_weight_sum();
    if (!(sum > 0.0))
        throw SimError("class selection with zero combined rate");

    double w_prev = 0.0;
    ClassPick fallback{-1, 0.0, 0.0};
    for (int k = 0; k < kNumClasses; ++k) {
        const std::size_t n_k = members_[static_cast<std::size_t>(k)].size();
        const double weight = static_cast<double>(n_k) * class_prob_[static_cast<std::size_t>(k)] / sum;
        const double w_k = w_prev + weight;
        if (n_k > 0) {
            if (v <= w_k)
                return {k, w_prev, weight};
            fallback = {k, w_prev, weight};
        }
        w_prev = w_k;
    }
    // v fell past W(9) by rounding; clamp to the last populated class.
    return fallback;
}

std::int32_t ClassTable::select_atom(int class_index, double v, double w_prev) const {
    const auto& vec = members_[static_cast<std::size_t>(class_index)];
    const int n_k = static_cast<int>(vec.size());
    if (n_k == 0)
        throw SimError("atom selection from an empty class");

    const double sum = unnormalized_weight_sum();
    const double weight = static_cast<double>(n_k) * class_prob_[static_cast<std::size_t>(class_index)] / sum;
    const double residual = (v - w_prev) / weight;
    int index = static_cast<int>(std::floor(residual * static_cast<double>(n_k))) + 1;
    if (index < 1) index = 1;
    if (index > n_k) index = n_k;
    return vec[static_cast<std::size_t>(index - 1)];
}

std::int32_t ClassTable::select(double v) const {
    const ClassPick pick = select_class(v);
    return select_atom(pick.class_index, v, pick.w_prev);
}

} // namespace ising
