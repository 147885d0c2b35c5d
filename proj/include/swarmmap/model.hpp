#pragma once

#include <Eigen/Core>

#include "swarmmap/rng.hpp"
#include "swarmmap/types.hpp"

namespace swarmmap {

// Probabilities over the 8 move directions, indexed by Direction.
using TransitionProbs = Eigen::Array<double, Direction::kCount, 1>;

// Pheromone weighing function W(sigma) = (1 + sigma/(1 + delta*sigma))^beta.
// Evaluated as exp(beta * log1p(...)) so large beta does not overflow the
// intermediate power; for delta > 0 the result is bounded by (1+1/delta)^beta.
// Throws DomainError on negative or non-finite inputs, or if the result
// itself is non-finite (possible when delta = 0).
double pheromone_weight(double sigma, double beta, double delta);

// Directional bias w for a heading change of delta_steps 45-degree
// increments: {1, 1/2, 1/4, 1/12, 1/20} for 0..4. Sharp turns are rare.
double directional_weight(int delta_steps);

// Normalized probabilities of moving to each of the 8 neighbors of the
// ant's cell, combining pheromone weight at the neighbor with the turn
// penalty relative to the ant's current heading. Entries are >= 0 and sum
// to 1.
TransitionProbs transition_probabilities(const AntState& ant,
                                         const PheromoneField& field,
                                         const Params& params);

// Inverse-CDF draw over the 8 directions in fixed index order. Consumes
// exactly one uniform double from the generator. probs must sum to 1 within
// 1e-9.
Direction sample_move(const TransitionProbs& probs, SplitMix64& rng);

}  // namespace swarmmap
