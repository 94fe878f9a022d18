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

#ifndef VOXFEAT_RESAMPLE_HPP_
#define VOXFEAT_RESAMPLE_HPP_

#include <vector>

#include "voxfeat/audio.hpp"

namespace voxfeat {

/// Sample-rate conversion with a Blackman-windowed-sinc polyphase filter.
///
/// The anti-alias cutoff defaults to 0.95 of the smaller Nyquist; stopband
/// attenuation exceeds 40 dB. Output duration stays within one sample
/// period of the input duration. Equal rates return the input unchanged.
AudioBuffer resample(const AudioBuffer& audio, int target_hz);

/// Same as resample() with an explicit filter cutoff in Hz. Used by the
/// pitch tracker, whose lowpass cutoff sits below the processing Nyquist.
/// cutoff_hz must be positive and at most the smaller Nyquist frequency.
AudioBuffer resample(const AudioBuffer& audio, int target_hz,
                     double cutoff_hz);

/// Low-level signal interface for the above.
std::vector<double> resample_signal(const std::vector<double>& input,
                                    int input_hz, int output_hz,
                                    double cutoff_hz);

/// Zero-phase FIR lowpass at the original rate (windowed sinc, same kernel
/// family as the resampler). Used when the input already sits at the
/// tracker's processing rate.
std::vector<double> lowpass_signal(const std::vector<double>& input,
                                   int rate_hz, double cutoff_hz);

}  // namespace voxfeat

#endif  // VOXFEAT_RESAMPLE_HPP_
