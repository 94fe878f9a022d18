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

#ifndef VOXFEAT_GROUND_TRUTH_HPP_
#define VOXFEAT_GROUND_TRUTH_HPP_

#include <filesystem>
#include <vector>

namespace voxfeat {

struct GroundTruthEntry {
  double time_s = 0.0;
  double f0_hz = 0.0;  // 0 encodes unvoiced
};

/// Manually annotated reference pitch, uniformly sampled every hop_s.
struct GroundTruthTrack {
  std::vector<GroundTruthEntry> entries;
  double hop_s = 0.0;
};

/// Unit of the second column in an annotation file.
enum class PitchUnit {
  kHz,        // frequency in Hz, 0 = unvoiced
  kSemitone,  // MIDI-like semitones, converted via f = 440 * 2^((m-69)/12);
              // 0 = unvoiced
};

/// Converts a MIDI-like semitone value to Hz.
double semitone_to_hz(double semitone);

/// Reads "time_s value" pairs, one per line; '#' starts a comment. hop_s
/// is inferred from the time column. Throws FormatError (with the line
/// number) on malformed rows or non-increasing times.
GroundTruthTrack load_ground_truth(const std::filesystem::path& path,
                                   PitchUnit unit = PitchUnit::kHz);

}  // namespace voxfeat

#endif  // VOXFEAT_GROUND_TRUTH_HPP_
