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

#ifndef VOXFEAT_VOICE_QUALITY_HPP_
#define VOXFEAT_VOICE_QUALITY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "voxfeat/audio.hpp"
#include "voxfeat/pitch.hpp"

namespace voxfeat {

/// Glottal-cycle marks detected in voiced regions.
///
/// periods_s[i] and peak_amplitudes[i] describe the cycle between
/// boundaries_s[i] and boundaries_s[i+1] whenever both marks belong to the
/// same voiced run; chain_ids tells runs apart so perturbation measures
/// never difference periods across a voicing gap.
struct CycleSequence {
  std::vector<double> boundaries_s;       // strictly increasing marks
  std::vector<double> periods_s;          // consecutive mark differences
  std::vector<double> peak_amplitudes;    // per-cycle max |sample|
  std::vector<int> chain_ids;             // voiced-run id per period

  bool empty() const { return periods_s.empty(); }
  std::size_t num_cycles() const { return periods_s.size(); }
};

/// Utterance-level voice-quality report. Values are null when the input
/// has too few cycles (or no voiced frames) for the measure to exist.
struct VqReport {
  std::optional<double> jitta_s;   // mean |T(i+1) - T(i)|, seconds
  std::optional<double> rap;       // relative average perturbation
  std::optional<double> shimmer;   // relative amplitude perturbation
  std::optional<double> hnr_db;    // mean harmonics-to-noise ratio
  std::size_t n_cycles = 0;
  std::size_t n_voiced_frames = 0;
};

/// One row of the sliding-window per-frame VQ stream (NaN = undefined).
struct VqFrame {
  double time_s = 0.0;
  double jitta_s = 0.0;
  double rap = 0.0;
  double shimmer = 0.0;
  double hnr_db = 0.0;
};

/// HNR clamp limits in dB.
inline constexpr double kHnrFloorDb = -20.0;
inline constexpr double kHnrCeilingDb = 60.0;

/// Locates one mark per glottal cycle inside voiced regions (frames with
/// pov_feature < voiced_threshold). Marks are seeded at waveform peaks
/// near multiples of the local pitch period, aligned by cross-correlation
/// against the previous cycle, and refined to sub-sample precision.
/// No voiced frames yields an empty sequence.
CycleSequence detect_cycles(const AudioBuffer& audio, const PitchTrack& track,
                            double voiced_threshold);

/// Average absolute variation of the fundamental period between
/// consecutive cycles, in seconds. Needs at least 2 comparable periods.
double jitta(const CycleSequence& cycles);

/// Mean absolute deviation of each period from the 3-period moving
/// average, divided by the mean period. Needs at least 3 comparable
/// periods.
double rap(const CycleSequence& cycles);

/// Mean absolute difference between consecutive cycle peak amplitudes,
/// divided by the mean amplitude. Needs at least 2 cycles with positive
/// amplitudes.
double shimmer(const CycleSequence& cycles);

/// 10*log10(r / (1 - r)) clamped to [kHnrFloorDb, kHnrCeilingDb], where r
/// is the normalized autocorrelation at the pitch period. r >= 1 maps to
/// the ceiling, r <= 0 to the floor.
double hnr_from_correlation(double r);

struct HnrResult {
  std::vector<double> frame_times_s;  // voiced frames only
  std::vector<double> frame_hnr_db;
  double mean_db = 0.0;
};

/// Per-voiced-frame HNR from the autocorrelation of the signal at the lag
/// of the local pitch period, plus the utterance mean.
/// Throws UndefinedResultError when no voiced frame can be evaluated.
HnrResult hnr(const AudioBuffer& audio, const PitchTrack& track,
              double voiced_threshold);

/// Utterance-level report combining the four measures. Inputs with too few
/// cycles produce explicit undefined (null) entries instead of throwing.
VqReport extract_vq(const AudioBuffer& audio, const PitchTrack& track,
                    double voiced_threshold);

/// Sliding-window VQ stream: one row per pitch frame, each computed from
/// the cycles inside a window_ms window centered on the frame. Windows
/// with fewer than 3 cycles fall back to the utterance value; measures
/// undefined even at utterance level emit NaN.
std::vector<VqFrame> vq_frame_stream(const AudioBuffer& audio,
                                     const PitchTrack& track,
                                     double voiced_threshold,
                                     double window_ms = 100.0);

}  // namespace voxfeat

#endif  // VOXFEAT_VOICE_QUALITY_HPP_
