#pragma once

#include <span>

namespace ex2vec {

// A consumption history is the ordered sequence of past positive-consumption
// timestamps of one (user, item) pair, strictly increasing, in the dataset's
// time unit. Callers are responsible for only passing L=1 event times.
using History = std::span<const double>;

// ACT-R base-level activation: ln of the sum of (t - t_j)^(-d) over past
// consumptions strictly before t. Returns -infinity when no past consumption
// precedes t, so first exposures rank below every finite activation.
double base_level(History history, double t, double decay);

// Ex2Vec exposure kernel: like the base level but without the logarithm and
// with a cutoff c > 0 added inside the power law, keeping each term bounded
// by c^(-d) when the gap is small. Returns 0 for an empty effective history.
double exposure_kernel(History history, double t, double cutoff, double decay);

// Derivative of exposure_kernel with respect to the cutoff:
// sum of -d * (t - t_j + c)^(-d-1) over past consumptions strictly before t.
double exposure_kernel_dcutoff(History history, double t, double cutoff,
                               double decay);

}  // namespace ex2vec
