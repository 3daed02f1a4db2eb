// Copyright 2026 The qmeas developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Outcome distributions over observable eigenvalues.
 */

#pragma once

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "qmeas/types.hpp"

namespace qmeas {

namespace detail {

inline void check_probability_entries(const std::vector<double> &p,
                                      const char *what) {
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < -tol::kProbabilitySlack) {
      std::ostringstream os;
      os << what << ": invalid probability " << v;
      throw ValidationError(os.str());
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol::kValidity) {
    std::ostringstream os;
    os << what << ": probabilities sum to " << sum;
    throw ValidationError(os.str());
  }
}

}  // namespace detail

// Distribution of measurement outcomes, indexed like the observable's
// eigenvalue list.
class OutcomeDistribution {
 public:
  OutcomeDistribution(std::vector<double> eigenvalues,
                      std::vector<double> probabilities)
      : eigenvalues_(std::move(eigenvalues)),
        probabilities_(std::move(probabilities)) {
    if (eigenvalues_.empty() || eigenvalues_.size() != probabilities_.size())
      throw DimensionError(
          "OutcomeDistribution: eigenvalue/probability size mismatch");
    detail::check_probability_entries(probabilities_, "OutcomeDistribution");
  }

  std::size_t size() const { return eigenvalues_.size(); }
  double eigenvalue(std::size_t n) const { return eigenvalues_.at(n); }
  double probability(std::size_t n) const { return probabilities_.at(n); }
  const std::vector<double> &eigenvalues() const { return eigenvalues_; }
  const std::vector<double> &probabilities() const { return probabilities_; }

 private:
  std::vector<double> eigenvalues_;
  std::vector<double> probabilities_;
};

// Joint distribution over two outcome lists; table(r, c) is the probability
// of row eigenvalue r together with column eigenvalue c.
class JointOutcomeDistribution {
 public:
  JointOutcomeDistribution(std::vector<double> rowEigenvalues,
                           std::vector<double> colEigenvalues, RMatrix table)
      : rowEigenvalues_(std::move(rowEigenvalues)),
        colEigenvalues_(std::move(colEigenvalues)),
        table_(std::move(table)) {
    if (table_.rows() != static_cast<Index>(rowEigenvalues_.size()) ||
        table_.cols() != static_cast<Index>(colEigenvalues_.size()))
      throw DimensionError("JointOutcomeDistribution: table shape mismatch");
    double sum = 0.0;
    for (Index r = 0; r < table_.rows(); ++r)
      for (Index c = 0; c < table_.cols(); ++c) {
        const double v = table_(r, c);
        if (!std::isfinite(v) || v < -tol::kProbabilitySlack) {
          std::ostringstream os;
          os << "JointOutcomeDistribution: invalid entry " << v;
          throw ValidationError(os.str());
        }
        sum += v;
      }
    if (std::abs(sum - 1.0) > tol::kValidity) {
      std::ostringstream os;
      os << "JointOutcomeDistribution: entries sum to " << sum;
      throw ValidationError(os.str());
    }
  }

  const std::vector<double> &row_eigenvalues() const { return rowEigenvalues_; }
  const std::vector<double> &col_eigenvalues() const { return colEigenvalues_; }
  const RMatrix &table() const { return table_; }
  double probability(std::size_t row, std::size_t col) const {
    return table_(static_cast<Index>(row), static_cast<Index>(col));
  }

  // Total mass off the diagonal; zero exactly when repeated outcomes agree.
  double off_diagonal_mass() const {
    double mass = 0.0;
    for (Index r = 0; r < table_.rows(); ++r)
      for (Index c = 0; c < table_.cols(); ++c)
        if (r != c) mass += std::abs(table_(r, c));
    return mass;
  }

 private:
  std::vector<double> rowEigenvalues_;
  std::vector<double> colEigenvalues_;
  RMatrix table_;
};

}  // namespace qmeas
