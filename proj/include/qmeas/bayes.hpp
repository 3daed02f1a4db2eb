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
 * Classical discrete probability counterpart: joint distributions,
 * prior/posterior updating, and the classical nonselective measurement,
 * which changes nothing by the law of total probability.
 */

#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmeas/types.hpp"

namespace qmeas::bayes {

// Distribution over opaque labels.
class LabelDistribution {
 public:
  LabelDistribution(std::vector<std::string> labels,
                    std::vector<double> probabilities)
      : labels_(std::move(labels)), probabilities_(std::move(probabilities)) {
    if (labels_.empty() || labels_.size() != probabilities_.size())
      throw DimensionError("LabelDistribution: label/probability size mismatch");
    double sum = 0.0;
    for (double p : probabilities_) {
      if (!std::isfinite(p) || p < 0.0)
        throw ValidationError("LabelDistribution: probabilities must be >= 0");
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol::kValidity) {
      std::ostringstream os;
      os << "LabelDistribution: probabilities sum to " << sum;
      throw ValidationError(os.str());
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::string &label(std::size_t i) const { return labels_.at(i); }
  double probability(std::size_t i) const { return probabilities_.at(i); }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::vector<double> &probabilities() const { return probabilities_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> probabilities_;
};

// Joint distribution Pr{X=x, Y=y} over two discrete label sets; table(x, y)
// indexed rows-by-X, columns-by-Y.
class ClassicalJoint {
 public:
  ClassicalJoint(std::vector<std::string> xValues,
                 std::vector<std::string> yValues, RMatrix table)
      : xValues_(std::move(xValues)),
        yValues_(std::move(yValues)),
        table_(std::move(table)) {
    if (xValues_.empty() || yValues_.empty())
      throw DimensionError("ClassicalJoint: label lists must be nonempty");
    if (table_.rows() != static_cast<Index>(xValues_.size()) ||
        table_.cols() != static_cast<Index>(yValues_.size()))
      throw DimensionError("ClassicalJoint: table shape mismatch");
    double sum = 0.0;
    for (Index r = 0; r < table_.rows(); ++r)
      for (Index c = 0; c < table_.cols(); ++c) {
        const double v = table_(r, c);
        if (!std::isfinite(v) || v < 0.0)
          throw ValidationError("ClassicalJoint: entries must be >= 0");
        sum += v;
      }
    if (std::abs(sum - 1.0) > 1e-12) {
      std::ostringstream os;
      os << "ClassicalJoint: entries sum to " << sum;
      throw ValidationError(os.str());
    }
  }

  const std::vector<std::string> &x_values() const { return xValues_; }
  const std::vector<std::string> &y_values() const { return yValues_; }
  const RMatrix &table() const { return table_; }

  std::size_t y_index(const std::string &y) const {
    for (std::size_t i = 0; i < yValues_.size(); ++i)
      if (yValues_[i] == y) return i;
    throw DimensionError("ClassicalJoint: unknown Y label '" + y + "'");
  }

 private:
  std::vector<std::string> xValues_;
  std::vector<std::string> yValues_;
  RMatrix table_;
};

// Marginal distribution of X: Pr{X=x} = sum_y Pr{X=x, Y=y}.
inline LabelDistribution prior(const ClassicalJoint &joint) {
  std::vector<double> p(joint.x_values().size(), 0.0);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (Index y = 0; y < joint.table().cols(); ++y)
      p[x] += joint.table()(static_cast<Index>(x), y);
  return LabelDistribution(joint.x_values(), std::move(p));
}

// Conditional distribution of X given Y=y:
// Pr{X=x | Y=y} = Pr{X=x, Y=y} / sum_x Pr{X=x, Y=y}.
inline LabelDistribution posterior(const ClassicalJoint &joint, std::size_t yIndex) {
  if (yIndex >= joint.y_values().size())
    throw DimensionError("posterior: Y index out of range");
  const double columnMass = joint.table().col(static_cast<Index>(yIndex)).sum();
  if (columnMass <= 1e-12) {
    std::ostringstream os;
    os << "posterior: conditioning on null event Y='"
       << joint.y_values()[yIndex] << "' (probability " << columnMass << ")";
    throw NullEventError(os.str());
  }
  std::vector<double> p(joint.x_values().size(), 0.0);
  for (std::size_t x = 0; x < p.size(); ++x)
    p[x] = joint.table()(static_cast<Index>(x), static_cast<Index>(yIndex)) /
           columnMass;
  return LabelDistribution(joint.x_values(), std::move(p));
}

inline LabelDistribution posterior(const ClassicalJoint &joint,
                                   const std::string &y) {
  return posterior(joint, joint.y_index(y));
}

// Measure Y but ignore the outcome: the mixture of posteriors weighted by
// Pr{Y=y}. Equals the prior by the law of total probability; a classical
// nonselective measurement changes nothing.
inline LabelDistribution classical_nonselective(const ClassicalJoint &joint) {
  std::vector<double> p(joint.x_values().size(), 0.0);
  for (std::size_t y = 0; y < joint.y_values().size(); ++y) {
    const double weight = joint.table().col(static_cast<Index>(y)).sum();
    if (weight > 1e-12) {
      const LabelDistribution post = posterior(joint, y);
      for (std::size_t x = 0; x < p.size(); ++x)
        p[x] += weight * post.probability(x);
    } else {
      // Below the conditioning floor the weighted posterior degenerates to
      // the raw column; add it directly instead of dividing by ~0.
      for (std::size_t x = 0; x < p.size(); ++x)
        p[x] += joint.table()(static_cast<Index>(x), static_cast<Index>(y));
    }
  }
  return LabelDistribution(joint.x_values(), std::move(p));
}

}  // namespace qmeas::bayes
