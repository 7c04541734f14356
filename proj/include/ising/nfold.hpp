#pragma once

#include "ising/class_table.hpp"
#include "ising/history.hpp"
#include "ising/lattice.hpp"
#include "ising/rng_stream.hpp"

namespace ising {

/// Next event time of a constant-rate Poisson clock: tau_prev - log(U)/rate.
double next_event_time(double rate, double tau_prev, double u);

/*!
 * Sequential rejection-free sampler over the whole lattice.
 *
 * Repeatedly draws one (U, V) pair per candidate event: U sets the waiting
 * time against the combined rate, V selects the class and the atom. Every
 * drawn pair either produces exactly one flip or ends the run (its time
 * reached t_end); there are no rejections. Events strictly inside (0, t_end)
 * are returned and committed on the stream; the overflowing pair is left
 * uncommitted so a later window re-reads it first.
 */
History run_sequential(Lattice& lattice, const ModelParams& params, RngStream& stream, double t_end);

} // namespace ising
