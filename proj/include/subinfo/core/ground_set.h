// Copyright 2026 The Authors.
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

#ifndef SUBINFO_CORE_GROUND_SET_H_
#define SUBINFO_CORE_GROUND_SET_H_

#include <cstddef>
#include <string>
#include <vector>

namespace subinfo {

// The finite universe every subset and set function is defined over.
class GroundSet {
 public:
  // Throws ArgumentError when size is zero or labels are not exactly `size`
  // distinct names. An empty label list means "unlabeled".
  explicit GroundSet(size_t size, std::vector<std::string> labels = {});

  size_t size() const { return size_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  size_t size_;
  std::vector<std::string> labels_;
};

}  // namespace subinfo

#endif  // SUBINFO_CORE_GROUND_SET_H_
