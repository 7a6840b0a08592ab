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

#ifndef SUBINFO_CORE_ORACLE_H_
#define SUBINFO_CORE_ORACLE_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "subinfo/core/subset.h"

namespace subinfo {

// Structural properties a function provider claims. These are claims only;
// the analysis module can certify or refute them.
struct FunctionClaims {
  bool normalized = false;
  bool monotone = false;
  bool submodular = false;
  bool second_order_supermodular = false;

  friend bool operator==(const FunctionClaims&, const FunctionClaims&) = default;
};

// A set function f: 2^ground -> R. Implementations must be deterministic and
// safe to call concurrently from several threads.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual size_t ground_size() const = 0;
  virtual double Evaluate(const Subset& subset) const = 0;
  virtual FunctionClaims claims() const { return {}; }
  virtual std::string name() const { return "custom"; }
};

// Adapts a callable into a SetFunction. Mostly useful for tests and for
// user-supplied oracles.
class LambdaSetFunction : public SetFunction {
 public:
  using Fn = std::function<double(const Subset&)>;

  LambdaSetFunction(size_t ground_size, Fn fn, FunctionClaims claims = {},
                    std::string name = "custom")
      : ground_size_(ground_size), fn_(std::move(fn)), claims_(claims), name_(std::move(name)) {}

  size_t ground_size() const override { return ground_size_; }
  double Evaluate(const Subset& subset) const override { return fn_(subset); }
  FunctionClaims claims() const override { return claims_; }
  std::string name() const override { return name_; }

 private:
  size_t ground_size_;
  Fn fn_;
  FunctionClaims claims_;
  std::string name_;
};

// Memoizing front end to a SetFunction. The cache is a bounded LRU keyed by
// subset and guarded by a mutex, so one oracle may be shared across threads.
// A capacity of zero disables caching.
class ValueOracle {
 public:
  static constexpr size_t kDefaultCacheCapacity = size_t{1} << 20;

  explicit ValueOracle(std::shared_ptr<const SetFunction> function,
                       size_t cache_capacity = kDefaultCacheCapacity);

  ValueOracle(const ValueOracle&) = delete;
  ValueOracle& operator=(const ValueOracle&) = delete;

  // Evaluates f(subset). Throws StructuralError if the subset is over a
  // different ground set.
  double operator()(const Subset& subset) const;
  // Bypasses the cache but still counts the evaluation.
  double EvaluateUncached(const Subset& subset) const;

  size_t ground_size() const { return function_->ground_size(); }
  FunctionClaims claims() const { return function_->claims(); }
  const SetFunction& function() const { return *function_; }
  std::shared_ptr<const SetFunction> shared_function() const { return function_; }

  // Number of calls that reached the underlying function. Concurrent misses
  // on the same subset count once.
  uint64_t evaluations() const { return evaluations_.load(std::memory_order_relaxed); }
  uint64_t cache_hits() const { return cache_hits_.load(std::memory_order_relaxed); }
  size_t cache_size() const;
  size_t cache_capacity() const { return capacity_; }
  void ClearCache();

 private:
  void CheckGround(const Subset& subset) const;

  std::shared_ptr<const SetFunction> function_;
  size_t capacity_;

  using Entry = std::pair<Subset, double>;
  mutable std::mutex mu_;
  mutable std::list<Entry> lru_;  // most recently used at the front
  mutable std::unordered_map<Subset, std::list<Entry>::iterator, SubsetHash> index_;
  mutable std::atomic<uint64_t> evaluations_{0};
  mutable std::atomic<uint64_t> cache_hits_{0};
};

// g(X) = f(X ∪ C) - f(C). Conditioning a polymatroid keeps it a polymatroid,
// which is how every conditional measure is defined.
class ConditionedFunction : public SetFunction {
 public:
  ConditionedFunction(const ValueOracle& base, Subset condition);

  size_t ground_size() const override { return base_.ground_size(); }
  double Evaluate(const Subset& subset) const override;
  FunctionClaims claims() const override;
  std::string name() const override { return "conditioned(" + base_.function().name() + ")"; }

 private:
  const ValueOracle& base_;
  Subset condition_;
  double condition_value_;
};

}  // namespace subinfo

#endif  // SUBINFO_CORE_ORACLE_H_
