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

#ifndef VOXFEAT_FRAMING_HPP_
#define VOXFEAT_FRAMING_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "voxfeat/audio.hpp"

namespace voxfeat {

/// The framing contract shared by every frame-based analysis: frame i
/// starts at i * frame_shift; a signal of duration D ms yields
/// floor((D - frame_length) / frame_shift) + 1 frames when D >= frame_length,
/// else 0.
struct FramingSpec {
  double frame_length_ms = 25.0;
  double frame_shift_ms = 10.0;

  /// Throws ConfigError unless 0 < frame_shift_ms <= frame_length_ms.
  void validate() const;
};

/// Frame count from the duration formula, in milliseconds.
std::size_t frame_count_ms(double duration_ms, const FramingSpec& spec);

/// FramingSpec resolved to integer sample counts at a concrete rate.
struct FrameLayout {
  std::size_t frame_length = 0;  // samples
  std::size_t frame_shift = 0;   // samples

  static FrameLayout resolve(const FramingSpec& spec, int sample_rate_hz);

  std::size_t count(std::size_t num_samples) const;
  std::size_t start(std::size_t frame_index) const {
    return frame_index * frame_shift;
  }
  /// Frame center in seconds.
  double center_s(std::size_t frame_index, int sample_rate_hz) const {
    return (static_cast<double>(start(frame_index)) +
            0.5 * static_cast<double>(frame_length)) /
           sample_rate_hz;
  }
};

/// Views over the buffer, one per frame. A signal shorter than one frame
/// yields an empty sequence.
std::vector<std::span<const double>> frame_signal(const AudioBuffer& audio,
                                                  const FramingSpec& spec);

}  // namespace voxfeat

#endif  // VOXFEAT_FRAMING_HPP_
