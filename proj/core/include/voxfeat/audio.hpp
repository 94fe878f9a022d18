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

#ifndef VOXFEAT_AUDIO_HPP_
#define VOXFEAT_AUDIO_HPP_

#include <cstddef>
#include <filesystem>
#include <vector>

namespace voxfeat {

/// A mono audio signal. Samples are dimensionless with nominal range [-1, 1].
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate_hz = 0;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_s() const {
    return sample_rate_hz > 0
               ? static_cast<double>(samples.size()) / sample_rate_hz
               : 0.0;
  }
};

/// Reads a RIFF/WAVE file containing linear PCM (8/16/24/32-bit integer).
/// Multi-channel input is averaged down to mono; samples are scaled to
/// [-1, 1] from the full-scale integer range.
///
/// Throws FormatError for unreadable files or non-PCM encodings (the
/// message names the format tag that was found).
AudioBuffer load_wav(const std::filesystem::path& path);

/// Writes a mono 16-bit PCM WAV file. Samples are clipped to [-1, 1].
void save_wav(const std::filesystem::path& path, const AudioBuffer& audio);

}  // namespace voxfeat

#endif  // VOXFEAT_AUDIO_HPP_
