#pragma once

#include <limits>
#include <optional>
#include <vector>

namespace ising {

/*!
 * Exponential waiting-time clock over a piecewise-constant rate.
 *
 * The next event time tau solves  integral from anchor to tau of rate dt =
 * target (= -log U).  The integral is accumulated one constant segment at a
 * time: `advance` absorbs the segment up to a rate change, `candidate` is the
 * event time if the current rate persisted.  An event occurs in the current
 * segment exactly when its candidate precedes the next rate change.
 *
 * This one struct is shared by the sequential sampler, the per-PE optimistic
 * engine, and the full-knowledge oracle, so that all of them perform the
 * identical floating-point operation sequence; the bit-exact fixed-point
 * comparison between engine and oracle depends on that.  For the same reason
 * the accumulator is never cut at a time-window boundary: a clock survives
 * across windows (the paper's carried tau_0) until its target is met.
 */
struct EventClock {
    double t_mark = 0.0;  // last rate change (or the previous own event)
    double acc = 0.0;     // integral accumulated from the pending draw's anchor
    double target = 0.0;  // -log U of the pending pair

    /// Event time if the rate stays `rate` from t_mark on.
    double candidate(double rate) const {
        if (!(rate > 0.0))
            return std::numeric_limits<double>::infinity();
        return t_mark + (target - acc) / rate;
    }

    /// Absorb the constant-rate segment [t_mark, t_break).
    void advance(double rate, double t_break) {
        acc += rate * (t_break - t_mark);
        t_mark = t_break;
    }

    /// Start waiting for the next event: anchor at `t_event` with a new draw.
    void rearm(double t_event, double new_target) {
        t_mark = t_event;
        acc = 0.0;
        target = new_target;
    }
};

/// `rate` takes effect at `time`.
struct RateStep {
    double time;
    double rate;
};

/// Piecewise-constant rate profile: `initial_rate` until the first step,
/// then each step's rate from its time on. Step times strictly increase.
struct PiecewiseRate {
    double initial_rate = 0.0;
    std::vector<RateStep> steps;
};

/*!
 * Solve for the event time after `tau_prev` given the profile, valid up to
 * `t_end`: the time tau in (tau_prev, t_end) at which the integral of the
 * rate reaches -log(u), or nullopt when the exponential deviate outlives the
 * window (overflow). Steps at or before tau_prev only adjust the starting
 * rate.
 */
std::optional<double> solve_event_time(const PiecewiseRate& profile, double tau_prev, double t_end, double u);

} // namespace ising
