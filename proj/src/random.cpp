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

#include "qdist/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qdist {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

namespace {

Vector gaussian_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal;
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

Vector nonzero_gaussian(std::size_t n, Rng& rng) {
  Vector v = gaussian_vector(n, rng);
  while (v.norm() == 0.0) v = gaussian_vector(n, rng);
  return v;
}

}  // namespace

StateVector random_state(std::size_t dimension, Rng& rng) {
  const Vector v = nonzero_gaussian(dimension, rng);
  return StateVector(v / v.norm());
}

PathStates random_orthonormal_pair(std::size_t dimension, Rng& rng) {
  if (dimension < 2) throw InvalidArgument("an orthonormal pair needs dimension >= 2");
  const Matrix u = random_unitary(dimension, rng);
  return {StateVector(u.col(0)), StateVector(u.col(1))};
}

Matrix random_unitary(std::size_t dimension, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dimension);
  Matrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) g.col(j) = gaussian_vector(dimension, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

std::vector<std::vector<std::size_t>> random_partition(std::size_t n, Rng& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t blocks = uniform_index(rng, 1, n);
  // blocks - 1 distinct cut points in 1..n-1.
  std::vector<std::size_t> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(blocks - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);
  std::vector<std::vector<std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t cut : cuts) {
    out.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start), order.begin() + static_cast<std::ptrdiff_t>(cut));
    start = cut;
  }
  return out;
}

ProjectiveMeasurement random_measurement(std::size_t dimension, Rng& rng, bool rank_one) {
  const Matrix u = random_unitary(dimension, rng);
  std::vector<std::vector<std::size_t>> blocks;
  if (rank_one) {
    for (std::size_t i = 0; i < dimension; ++i) blocks.push_back({i});
  } else {
    blocks = random_partition(dimension, rng);
  }
  return ProjectiveMeasurement::from_basis_blocks(u, blocks);
}

std::pair<ProjectiveMeasurement, ProjectiveMeasurement> random_commuting_pair(std::size_t dimension, Rng& rng) {
  const Matrix u = random_unitary(dimension, rng);
  auto first = ProjectiveMeasurement::from_basis_blocks(u, random_partition(dimension, rng));
  auto second = ProjectiveMeasurement::from_basis_blocks(u, random_partition(dimension, rng));
  return {std::move(first), std::move(second)};
}

OutcomeDistribution random_distribution(std::size_t support, Rng& rng) {
  std::exponential_distribution<double> weight;
  std::bernoulli_distribution drop(0.15);
  std::vector<double> w(support);
  double total = 0.0;
  while (total == 0.0) {
    for (double& x : w) x = drop(rng) ? 0.0 : weight(rng);
    total = std::accumulate(w.begin(), w.end(), 0.0);
  }
  for (double& x : w) x /= total;
  return OutcomeDistribution::from_probabilities(w);
}

FieldState random_field(std::size_t truncation, Rng& rng, bool room_for_shift) {
  const std::size_t usable = room_for_shift ? truncation - 1 : truncation;
  if (usable < 1) throw InvalidArgument("random field needs at least one usable Fock level");
  // Occupy a random window of levels so that narrow and broad number
  // distributions both appear.
  const std::size_t lo = uniform_index(rng, 0, usable - 1);
  const std::size_t hi = uniform_index(rng, lo, usable - 1);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(truncation));
  v.segment(static_cast<Eigen::Index>(lo), static_cast<Eigen::Index>(hi - lo + 1)) = nonzero_gaussian(hi - lo + 1, rng);
  v /= v.norm();
  return FieldState::from_amplitudes(std::move(v));
}

Vector random_envelope(std::size_t points, Rng& rng) {
  const Vector v = nonzero_gaussian(points, rng);
  return v / v.norm();
}

}  // namespace qdist
