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

#ifndef VOXFEAT_ANNOTATIONS_HPP_
#define VOXFEAT_ANNOTATIONS_HPP_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace voxfeat {

/// A phone-level annotation span within one utterance.
struct PhoneSegment {
  double start_s = 0.0;
  double end_s = 0.0;
  std::string label;
  std::string utterance_id;

  double duration_s() const { return end_s - start_s; }
};

struct AnnotationWarning {
  std::size_t line = 0;
  std::string message;
};

/// Segments of one utterance plus validation findings (e.g. overlapping
/// spans, which are accepted but flagged).
struct AnnotationFile {
  std::vector<PhoneSegment> segments;  // sorted by start time
  std::vector<AnnotationWarning> warnings;
};

/// Parses whitespace-separated "start_s end_s label" rows; '#' starts a
/// comment. Throws FormatError with the offending line number on
/// malformed rows (wrong column count, non-numeric times, end <= start).
AnnotationFile load_annotations(const std::filesystem::path& path,
                                const std::string& utterance_id);

/// Named phone classes (vowels, voiced/unvoiced fricatives, stops, ...).
using PhoneClassTable = std::map<std::string, std::set<std::string>>;

/// Built-in ARPAbet-style inventory, editable via a JSON file of the form
/// {"class_name": ["symbol", ...], ...}.
PhoneClassTable default_phone_classes();
PhoneClassTable load_phone_classes(const std::filesystem::path& path);

}  // namespace voxfeat

#endif  // VOXFEAT_ANNOTATIONS_HPP_
