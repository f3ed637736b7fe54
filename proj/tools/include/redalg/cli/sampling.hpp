#pragma once

#include <memory>
#include <random>

#include "redalg/coset.hpp"

namespace redalg::cli {

/// Small random Cartan coefficient: an integer, maybe plus a multiple of
/// one variable, maybe over a shifted variable.
RationalFn sample_coefficient(std::mt19937& rng, int vars);

/// Random element of A' whose terms are products of up to max_degree
/// letters of the context (g-letters only when with_g is set).
Element sample_element(std::mt19937& rng, const std::shared_ptr<const Context>& ctx, int max_degree, int max_terms,
                       bool with_g);

inline CosetElement sample_coset(std::mt19937& rng, const std::shared_ptr<const Context>& ctx, int max_degree,
                                 int max_terms = 2) {
  return CosetElement(sample_element(rng, ctx, max_degree, max_terms, false));
}

}  // namespace redalg::cli
