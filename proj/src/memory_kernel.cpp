#include "ex2vec/memory_kernel.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace ex2vec {

double base_level(History history, double t, double decay) {
  assert(decay > 0.0);
  double sum = 0.0;
  bool any = false;
  for (double tj : history) {
    if (t > tj) {
      sum += std::pow(t - tj, -decay);
      any = true;
    }
  }
  if (!any) return -std::numeric_limits<double>::infinity();
  return std::log(sum);
}

double exposure_kernel(History history, double t, double cutoff, double decay) {
  assert(cutoff > 0.0);
  assert(decay > 0.0);
  double sum = 0.0;
  for (double tj : history) {
    if (t > tj) sum += std::pow(t - tj + cutoff, -decay);
  }
  return sum;
}

double exposure_kernel_dcutoff(History history, double t, double cutoff,
                               double decay) {
  double sum = 0.0;
  for (double tj : history) {
    if (t > tj) sum += -decay * std::pow(t - tj + cutoff, -decay - 1.0);
  }
  return sum;
}

}  // namespace ex2vec
