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

#ifndef VOXFEAT_EVALUATION_HPP_
#define VOXFEAT_EVALUATION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "voxfeat/audio.hpp"
#include "voxfeat/ground_truth.hpp"
#include "voxfeat/pitch.hpp"

namespace voxfeat {

/// GPE threshold: an estimate is a gross error when it deviates from the
/// reference by more than one semitone.
inline constexpr double kGpeThresholdSemitones = 1.0;

/// |12 * log2(f_est / f_ref)|; both frequencies must be positive.
double semitone_deviation(double f_est_hz, double f_ref_hz);

/// Scores of an estimated track against annotated ground truth.
///
/// Reference frames are matched to the nearest estimated frame center
/// within hop/2; unmatched reference frames are excluded and counted.
/// GPE uses every matched reference-voiced frame as denominator (the
/// tracker makes no hard voicing decision). FPE is the mean absolute
/// deviation in cents over the frames within the GPE threshold, and is
/// absent when no frame qualifies.
struct PitchEvalResult {
  double gpe = 0.0;
  std::optional<double> fpe_cents;
  std::size_t n_voiced_ref = 0;   // matched reference-voiced frames
  std::size_t n_gross = 0;        // of which deviate > 1 semitone
  std::size_t n_within = 0;       // of which are within the threshold
  std::size_t n_unmatched = 0;    // reference frames with no estimate
};

/// Full evaluation in one pass. Throws UndefinedResultError when no
/// matched reference-voiced frame exists.
PitchEvalResult evaluate_track(const PitchTrack& est,
                               const GroundTruthTrack& ref);

/// Fraction of matched reference-voiced frames whose estimate deviates by
/// more than one semitone.
double gpe(const PitchTrack& est, const GroundTruthTrack& ref);

/// Mean absolute deviation in cents over matched reference-voiced frames
/// within the GPE threshold. Throws UndefinedResultError when none
/// qualifies.
double fpe(const PitchTrack& est, const GroundTruthTrack& ref);

/// Voicing threshold fitted to labeled POV values with the rule
/// "voiced iff pov < threshold".
struct ThresholdEstimate {
  double threshold = 0.0;
  double error_rate = 0.0;  // training misclassification rate
  bool inverted = false;    // error_rate >= 0.5: labels oppose the POV
                            // orientation
};

/// Exhaustive scan over candidate thresholds minimizing the total
/// voiced/unvoiced classification error; ties resolve to the lowest
/// threshold. Both classes must be present.
ThresholdEstimate estimate_voicing_threshold(std::span<const double> pov_values,
                                             std::span<const bool> ref_voicing);

/// One utterance of a tuning dataset. Audio is produced on demand so large
/// datasets need not stay resident.
struct TuneItem {
  std::string id;
  std::function<AudioBuffer()> load_audio;
  GroundTruthTrack ground_truth;
};

struct GridEntry {
  double max_f0_hz = 0.0;
  double lowpass_cutoff_hz = 0.0;
  double gpe = 0.0;
  std::optional<double> fpe_cents;
  std::size_t n_voiced_ref = 0;
  std::size_t n_utterances = 0;  // evaluated successfully
};

struct TuningResult {
  std::vector<GridEntry> grid;     // sorted by (max_f0, lowpass_cutoff)
  std::size_t best_index = 0;      // lexicographic (gpe, fpe) minimum
  std::vector<std::string> failures;  // "utterance_id: reason"
};

/// Evaluates every (max_f0, lowpass_cutoff) combination over the dataset,
/// pooling GPE/FPE over frames. Utterances that fail extraction are
/// excluded and recorded. The result is independent of the ordering of
/// both the dataset and the grid value lists.
TuningResult grid_search(const std::vector<TuneItem>& dataset,
                         std::span<const double> max_f0_values,
                         std::span<const double> lowpass_values,
                         const PitchConfig& base);

/// The published tuning grid: max-f0 400..1000 Hz in 100 Hz steps,
/// lowpass cutoff {1000, 1500, 2000} Hz.
std::vector<double> default_max_f0_grid();
std::vector<double> default_lowpass_grid();

}  // namespace voxfeat

#endif  // VOXFEAT_EVALUATION_HPP_
