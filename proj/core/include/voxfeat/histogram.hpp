// Copyright 2026 The voxfeat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VOXFEAT_HISTOGRAM_HPP_
#define VOXFEAT_HISTOGRAM_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace voxfeat {

/// A normalized histogram: len(probabilities) = len(bin_edges) - 1 and the
/// probabilities sum to 1.
struct HistogramDistribution {
  std::vector<double> bin_edges;
  std::vector<double> probabilities;
  std::size_t total_count = 0;   // in-range samples
  std::size_t dropped_count = 0; // samples outside [first, last] edge

  /// Throws DomainError if the shape or normalization invariant fails.
  void validate() const;
};

/// n_bins + 1 uniformly spaced edges over [lo, hi]. A degenerate range
/// (lo == hi) is widened symmetrically so the data still lands in a bin.
std::vector<double> uniform_edges(double lo, double hi, std::size_t n_bins);

/// Geometric edges over [lo, hi] for log-scale binning; lo must be > 0.
std::vector<double> log_edges(double lo, double hi, std::size_t n_bins);

/// Histogram of values over the given edges. Bin k is [e_k, e_{k+1}), the
/// last bin is closed; out-of-range values are dropped (and counted).
/// Throws DomainError when no value falls inside the range.
HistogramDistribution make_histogram(std::span<const double> values,
                                     std::vector<double> bin_edges);

/// Bhattacharyya distance -ln(sum_k sqrt(a_k * b_k)) between two
/// histograms over identical bin edges. Symmetric and >= 0; disjoint
/// supports give +infinity (the documented sentinel).
/// Throws DomainError on mismatched bin edges.
double bhattacharyya(const HistogramDistribution& a,
                     const HistogramDistribution& b);

}  // namespace voxfeat

#endif  // VOXFEAT_HISTOGRAM_HPP_
