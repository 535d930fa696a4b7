#pragma once

#include "bforest/model.hpp"

// The four worked families: alpha = {1}, gamma = {0}; family 1 adds beta = {1},
// families 2-4 put n/2 into R, T or both.
inline bforest::ConnectionSpec worked_family(int j, long n) {
  bforest::RawSpec r;
  r.n = n;
  r.alphas = {1};
  if (j == 1) r.betas = {1};
  r.gammas = {0};
  r.half_r = j == 2 || j == 4;
  r.half_t = j == 3 || j == 4;
  return bforest::validate_spec(r);
}
