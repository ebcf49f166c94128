// Copyright 2026 The qdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDIST_RANDOM_HPP
#define QDIST_RANDOM_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qdist/hilbert.hpp"
#include "qdist/interferometer.hpp"
#include "qdist/measures.hpp"

namespace qdist {

// Random instances for the property suites. Every generator draws only from
// the engine it is given, so a seed fixes the instance.

using Rng = std::mt19937_64;

/// Seed for independent stream `stream` of a run seeded with `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive

/// Normalized complex Gaussian vector.
StateVector random_state(std::size_t dimension, Rng& rng);
/// Two orthonormal states (Gram-Schmidt on Gaussian vectors); dimension >= 2.
PathStates random_orthonormal_pair(std::size_t dimension, Rng& rng);
/// Haar-random unitary.
Matrix random_unitary(std::size_t dimension, Rng& rng);
/// Random partition of {0..n-1} into non-empty blocks.
std::vector<std::vector<std::size_t>> random_partition(std::size_t n, Rng& rng);

/// Random orthonormal basis coarsened into random blocks (or kept rank one).
ProjectiveMeasurement random_measurement(std::size_t dimension, Rng& rng, bool rank_one = false);
/// Two measurements block-diagonal in one shared random basis.
std::pair<ProjectiveMeasurement, ProjectiveMeasurement> random_commuting_pair(std::size_t dimension, Rng& rng);

/// Random distribution; some outcomes are set to exactly zero.
OutcomeDistribution random_distribution(std::size_t support, Rng& rng);

/// Random normalized field on `truncation` Fock levels. With `room_for_shift`
/// the top level is left empty so a photon can be added.
FieldState random_field(std::size_t truncation, Rng& rng, bool room_for_shift = false);

/// Normalized random packet envelope on `points` grid points.
Vector random_envelope(std::size_t points, Rng& rng);

}  // namespace qdist

#endif  // QDIST_RANDOM_HPP
