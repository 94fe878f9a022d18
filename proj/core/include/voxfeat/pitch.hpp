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

#ifndef VOXFEAT_PITCH_HPP_
#define VOXFEAT_PITCH_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "voxfeat/audio.hpp"

namespace voxfeat {

/// Configuration of the soft-voicing pitch tracker.
///
/// Every frame receives a pitch in [min_f0_hz, max_f0_hz]; voicing is
/// expressed through the continuous POV feature rather than a hard
/// decision. The signal is lowpassed at lowpass_cutoff_hz and decimated
/// to processing_rate_hz before correlation analysis.
struct PitchConfig {
  double min_f0_hz = 50.0;
  double max_f0_hz = 1000.0;
  double lowpass_cutoff_hz = 1500.0;
  double frame_shift_ms = 10.0;
  double frame_length_ms = 25.0;

  /// Weight of the squared log-lag jump between consecutive frames in the
  /// Viterbi path cost.
  double penalty_factor = 0.1;

  /// Additive stabilizer inside the NCCF denominator sqrt(e1*e2 + ballast).
  /// The processed signal is RMS-normalized first, so window energies are
  /// O(frame_length_samples); the default damps correlation values only in
  /// near-silent frames.
  double nccf_ballast = 1.0;

  /// Span (frames, odd) of the weighted short-time mean subtraction that
  /// produces the normalized log pitch. 151 frames is about 1.5 s at the
  /// default shift.
  int normalization_window_frames = 151;

  /// Context of the regression delta applied to log pitch.
  int delta_context_frames = 2;

  /// Internal rate the signal is decimated to before NCCF analysis.
  /// Must satisfy lowpass_cutoff_hz <= processing_rate_hz / 2.
  int processing_rate_hz = 4000;

  /// Short-lag preference (Hz): the local score of a lag candidate is
  /// scaled by (1 - soft_min_f0_hz * lag_s), which resolves the tie
  /// between a period and its integer multiples on strongly periodic
  /// signals.
  double soft_min_f0_hz = 10.0;

  /// Relative spacing of the geometric lag grid the NCCF is interpolated
  /// onto; 0.005 is about 8.6 cents between adjacent candidates.
  double lag_grid_step = 0.005;

  /// Half-width, in integer lags, of the bandlimited interpolation kernel
  /// (and the extra NCCF lags computed to support it).
  int nccf_interp_half_width = 5;

  /// Throws ConfigError if any invariant is violated.
  void validate() const;
};

struct PitchFrame {
  double time_s = 0.0;                // frame center
  double nccf = 0.0;                  // peak correlation at the chosen lag
  double pitch_hz = 0.0;              // in [min_f0_hz, max_f0_hz]
  double pov_feature = 0.0;           // low = strongly voiced
  double log_pitch = 0.0;             // ln(pitch_hz)
  double normalized_log_pitch = 0.0;  // mean-subtracted log pitch
  double delta_pitch = 0.0;
};

struct PitchTrack {
  std::vector<PitchFrame> frames;
  PitchConfig config;

  bool empty() const { return frames.empty(); }
  std::size_t size() const { return frames.size(); }
};

/// Normalized cross-correlation of a window with its lag-shifted copy, for
/// every lag in [first_lag, last_lag].
///
/// The window must hold at least corr_length + last_lag samples. The mean
/// of the first corr_length samples is removed before correlation, and the
/// denominator is sqrt(e1 * e2 + ballast). Values lie in [-1, 1]; an
/// all-zero window gives 0 at every lag.
///
/// Throws DomainError on an empty or invalid lag range, ConfigError when
/// the window is too short.
std::vector<double> compute_nccf(std::span<const double> window,
                                 std::size_t corr_length, int first_lag,
                                 int last_lag, double ballast);

/// Candidate lags in seconds: a geometric grid over
/// [1/max_f0_hz, 1/min_f0_hz] with ratio (1 + lag_grid_step).
std::vector<double> select_lags(const PitchConfig& config);

/// Bandlimited interpolation of integer-lag NCCF values (lag first_lag at
/// rate_hz) onto arbitrary lag points in seconds. Windowed-sinc kernel at
/// the lag-domain Nyquist; values outside the computed range are taken as
/// zero.
std::vector<double> interpolate_nccf(std::span<const double> nccf_by_lag,
                                     int first_lag, int rate_hz,
                                     std::span<const double> target_lags_s,
                                     int kernel_half_width = 5);

struct ViterbiResult {
  std::vector<int> path;  // one lag index per frame
  double cost = 0.0;      // total path cost
};

/// Globally optimal path through a per-frame, per-lag score lattice,
/// minimizing sum_t(-score[t][j_t]) +
/// penalty_factor * sum_t (ln lag[j_t] - ln lag[j_{t-1}])^2.
/// The lattice must be rectangular and non-empty; ties resolve to the
/// lowest lag index.
ViterbiResult viterbi_pitch(const std::vector<std::vector<double>>& scores,
                            std::span<const double> lags,
                            double penalty_factor);

/// Cost of an explicit path under the viterbi_pitch objective, accumulated
/// in frame order. viterbi_pitch(...).cost equals path_cost of its path.
double path_cost(const std::vector<std::vector<double>>& scores,
                 std::span<const double> lags, double penalty_factor,
                 std::span<const int> path);

/// The frozen POV mapping: pov = (1.0001 - nccf)^0.15 - 1.
///
/// Strictly decreasing on [-1, 1], so low values mean strong voicing.
/// Range: [pov_feature_min(), pov_feature_max()] ~= [-0.7488, 0.1096].
/// Throws DomainError outside [-1, 1].
double nccf_to_pov(double nccf);

/// Endpoints of the POV mapping's range: the values at nccf = 1 and
/// nccf = -1 respectively.
double pov_feature_min();
double pov_feature_max();

/// Voicing strength in (0, 1) used as the weight of a frame in the
/// short-time mean subtraction. A fixed squashing of |nccf|.
double nccf_to_voicing_weight(double nccf);

/// Weighted moving-average subtraction with a centered window truncated at
/// the edges: out[i] = values[i] - weighted mean over
/// [i - window/2, i + window/2]. A window whose weights sum to zero falls
/// back to the unweighted mean.
std::vector<double> weighted_mean_subtract(std::span<const double> values,
                                           std::span<const double> weights,
                                           int window_frames);

/// Per-frame normalized log pitch of an existing track, using the track's
/// normalization window and weights derived from each frame's nccf.
std::vector<double> normalize_log_pitch(const PitchTrack& track);

/// Regression delta: delta(i) = sum_k k*(v[i+k] - v[i-k]) / (2*sum_k k^2)
/// with edge frames replicated. context >= 1.
std::vector<double> compute_delta(std::span<const double> values,
                                  int context);

/// Runs the full tracker: lowpass + decimate, NCCF lattice, bandlimited
/// lag interpolation, Viterbi, then the POV / log pitch / normalized log
/// pitch / delta pitch outputs. Deterministic for fixed inputs.
///
/// Throws ConfigError for invalid configs or when the audio is shorter
/// than one frame at the processing rate.
PitchTrack extract_pitch(const AudioBuffer& audio, const PitchConfig& config);

}  // namespace voxfeat

#endif  // VOXFEAT_PITCH_HPP_
