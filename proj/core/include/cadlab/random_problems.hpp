#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cadlab/problem.hpp"

namespace cadlab {

struct RandomProfile {
  std::size_t nvars = 2;
  std::size_t npolys = 2;
  std::uint32_t max_degree = 2;
  std::size_t max_terms = 3;
  std::int64_t coeff_range = 5;
  double equality_fraction = 0.3;
};

/// Throws DomainError on non-positive bounds or a fraction outside [0, 1].
void validate(const RandomProfile& profile);
/// Profile JSON object; missing keys keep their defaults. ParseError on bad input.
RandomProfile parse_profile(const std::string& json_text);
std::string emit_profile(const RandomProfile& profile);

/// Conjunctions of npolys sign conditions on nonconstant polynomials.
/// Reproducible from the seed (mt19937_64).
std::vector<Problem> random_problems(std::uint64_t seed, std::size_t count, const RandomProfile& profile);

}  // namespace cadlab
