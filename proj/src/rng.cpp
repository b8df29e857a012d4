#include "bubblestat/rng.hpp"

#include "bubblestat/normal.hpp"

namespace bubblestat {

double Rng::normal() { return normal_quantile(uniform()); }

}  // namespace bubblestat
