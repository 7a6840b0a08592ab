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

#include "subinfo/core/oracle.h"

#include <set>

#include "subinfo/core/error.h"
#include "subinfo/core/ground_set.h"

namespace subinfo {

GroundSet::GroundSet(size_t size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (size_ == 0) throw ArgumentError("ground set must have at least one element");
  if (!labels_.empty()) {
    if (labels_.size() != size_) {
      throw ArgumentError("ground set of size " + std::to_string(size_) + " has " +
                          std::to_string(labels_.size()) + " labels");
    }
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if (distinct.size() != labels_.size()) throw ArgumentError("ground set labels are not distinct");
  }
}

ValueOracle::ValueOracle(std::shared_ptr<const SetFunction> function, size_t cache_capacity)
    : function_(std::move(function)), capacity_(cache_capacity) {
  if (function_ == nullptr) throw ArgumentError("oracle needs a set function");
}

void ValueOracle::CheckGround(const Subset& subset) const {
  if (subset.universe_size() != function_->ground_size()) {
    throw StructuralError("subset over a ground set of size " +
                          std::to_string(subset.universe_size()) + " passed to a function over " +
                          std::to_string(function_->ground_size()) + " elements");
  }
}

double ValueOracle::EvaluateUncached(const Subset& subset) const {
  CheckGround(subset);
  evaluations_.fetch_add(1, std::memory_order_relaxed);
  return function_->Evaluate(subset);
}

double ValueOracle::operator()(const Subset& subset) const {
  if (capacity_ == 0) return EvaluateUncached(subset);
  CheckGround(subset);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(subset);
    if (it != index_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second);
      cache_hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second->second;
    }
  }
  // Evaluate outside the lock. A racing thread may compute the same value;
  // only the first to store it is counted, so the count does not depend on
  // scheduling.
  const double value = function_->Evaluate(subset);
  std::lock_guard<std::mutex> lock(mu_);
  if (index_.find(subset) == index_.end()) {
    evaluations_.fetch_add(1, std::memory_order_relaxed);
    lru_.emplace_front(subset, value);
    index_.emplace(subset, lru_.begin());
    if (lru_.size() > capacity_) {
      index_.erase(lru_.back().first);
      lru_.pop_back();
    }
  }
  return value;
}

size_t ValueOracle::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return lru_.size();
}

void ValueOracle::ClearCache() {
  std::lock_guard<std::mutex> lock(mu_);
  lru_.clear();
  index_.clear();
}

ConditionedFunction::ConditionedFunction(const ValueOracle& base, Subset condition)
    : base_(base), condition_(std::move(condition)) {
  if (condition_.universe_size() != base_.ground_size()) {
    throw StructuralError("conditioning set is over a different ground set");
  }
  condition_value_ = base_(condition_);
}

double ConditionedFunction::Evaluate(const Subset& subset) const {
  return base_(subset | condition_) - condition_value_;
}

FunctionClaims ConditionedFunction::claims() const {
  FunctionClaims c = base_.claims();
  c.normalized = true;
  return c;
}

}  // namespace subinfo
