#include "ising/event_clock.hpp"

#include <cmath>

#include "ising/errors.hpp"

namespace ising {

std::optional<double> solve_event_time(const PiecewiseRate& profile, double tau_prev, double t_end, double u) {
    if (!(u > 0.0 && u < 1.0))
        throw SimError("uniform sample must lie strictly inside (0,1)");

    double rate = profile.initial_rate;
    std::size_t i = 0;
    while (i < profile.steps.size() && profile.steps[i].time <= tau_prev)
        rate = profile.steps[i++].rate;

    EventClock clock{tau_prev, 0.0, -std::log(u)};
    for (; i < profile.steps.size() && profile.steps[i].time < t_end; ++i) {
        const double tau = clock.candidate(rate);
        if (tau <= profile.steps[i].time)
            return tau < t_end ? std::optional<double>(tau) : std::nullopt;
        clock.advance(rate, profile.steps[i].time);
        rate = profile.steps[i].rate;
    }
    const double tau = clock.candidate(rate);
    if (tau < t_end)
        return tau;
    return std::nullopt;
}

} // namespace ising
