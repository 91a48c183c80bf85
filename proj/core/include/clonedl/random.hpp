#pragma once

#include <random>
#include <string>
#include <vector>

#include "clonedl/theory.hpp"

namespace clonedl {

/// Variable names x1..xn.
std::vector<std::string> variable_names(unsigned n);

/// Random formula over `signature` of depth at most `max_depth`. Constants
/// of the signature appear as leaves with probability `constant_rate`.
Formula random_formula(std::mt19937_64& rng, const Signature& signature,
                       const std::vector<std::string>& vars, unsigned max_depth,
                       double constant_rate = 0.15);

struct RandomTheoryParams {
  Signature signature;
  unsigned num_vars = 4;
  unsigned max_w = 3;
  unsigned max_d = 4;
  unsigned max_depth = 2;
  double constant_rate = 0.15;
};

DefaultTheory random_theory(std::mt19937_64& rng, const RandomTheoryParams& params);

}  // namespace clonedl
