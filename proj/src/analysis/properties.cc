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

#include "subinfo/analysis/properties.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "subinfo/analysis/table.h"
#include "subinfo/core/error.h"
#include "subinfo/core/parallel.h"

namespace subinfo {

std::string PropertyName(Property p) {
  switch (p) {
    case Property::kNormalized: return "normalized";
    case Property::kMonotone: return "monotone";
    case Property::kSubmodular: return "submodular";
    case Property::kSecondOrderSupermodular: return "second_order_supermodular";
    case Property::kPseudoMetricAxioms: return "pseudo_metric";
  }
  return "unknown";
}

std::optional<Property> ParseProperty(const std::string& name) {
  for (Property p : {Property::kNormalized, Property::kMonotone, Property::kSubmodular,
                     Property::kSecondOrderSupermodular, Property::kPseudoMetricAxioms}) {
    if (PropertyName(p) == name) return p;
  }
  return std::nullopt;
}

std::string VerdictName(Verdict v) { return v == Verdict::kHolds ? "holds" : "violated"; }

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Tally {
  std::optional<Witness> first;
  double worst = kInf;
  uint64_t checked = 0;

  template <typename MakeWitness>
  void Record(double margin, double tol, MakeWitness&& make) {
    ++checked;
    worst = std::min(worst, margin);
    if (margin < -tol && !first.has_value()) {
      first = make();
      first->margin = margin;
    }
  }

  void Merge(Tally&& other) {
    checked += other.checked;
    worst = std::min(worst, other.worst);
    if (!first.has_value() && other.first.has_value()) first = std::move(other.first);
  }
};

// Runs visit(index, tally) over [0, count) in ordered chunks and folds the
// per-chunk tallies left to right.
template <typename Visit>
Tally Sweep(size_t count, size_t threads, Visit visit) {
  const size_t chunks = std::max<size_t>(1, std::min<size_t>(count, 512));
  std::vector<Tally> parts(chunks);
  ParallelChunks(count, chunks, threads, [&](size_t c, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) visit(i, parts[c]);
  });
  Tally out;
  for (Tally& t : parts) out.Merge(std::move(t));
  return out;
}

PropertyReport Finish(Property p, Tally&& t) {
  PropertyReport r;
  r.property = p;
  r.pairs_checked = t.checked;
  r.worst_margin = t.worst;
  r.verdict = t.first.has_value() ? Verdict::kViolated : Verdict::kHolds;
  r.witness = std::move(t.first);
  return r;
}

std::string Num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

size_t Bit(size_t j) { return size_t{1} << j; }

double Metric(const std::vector<double>& t, size_t a, size_t b) {
  const double u = t[a | b];
  return (u - t[a]) + (u - t[b]);
}

double Second(const std::vector<double>& t, size_t a, size_t j, size_t k) {
  return t[a | Bit(j) | Bit(k)] - t[a | Bit(j)] - t[a | Bit(k)] + t[a];
}

}  // namespace

PropertyReport CheckNormalized(const ValueOracle& f, const CheckOptions& options) {
  const size_t n = f.ground_size();
  const double v = f(Subset(n));
  Tally t;
  t.Record(-std::abs(v), options.tol, [&] {
    return Witness{{Subset(n)}, {}, {v}, 0.0, "f({}) = " + Num(v) + " != 0"};
  });
  return Finish(Property::kNormalized, std::move(t));
}

PropertyReport CheckMonotone(const ValueOracle& f, const CheckOptions& options) {
  const size_t n = f.ground_size();
  const std::vector<double> t = TabulateAll(f, options.n_limit, options.threads);
  Tally tally = Sweep(t.size(), options.threads, [&](size_t m, Tally& out) {
    for (size_t j = 0; j < n; ++j) {
      if (m & Bit(j)) continue;
      const double gain = t[m | Bit(j)] - t[m];
      out.Record(gain, options.tol, [&] {
        const Subset s = Subset::FromMask(n, m);
        return Witness{{s}, {j}, {t[m], t[m | Bit(j)]}, 0.0,
                       "f(" + std::to_string(j) + " | " + s.ToString() + ") = " + Num(gain) +
                           " < 0"};
      });
    }
  });
  return Finish(Property::kMonotone, std::move(tally));
}

PropertyReport CheckSubmodular(const ValueOracle& f, const CheckOptions& options) {
  const size_t n = f.ground_size();
  const std::vector<double> t = TabulateAll(f, options.n_limit, options.threads);
  Tally tally = Sweep(t.size(), options.threads, [&](size_t m, Tally& out) {
    for (size_t j = 0; j < n; ++j) {
      if (m & Bit(j)) continue;
      for (size_t k = j + 1; k < n; ++k) {
        if (m & Bit(k)) continue;
        const double f2 = Second(t, m, j, k);
        out.Record(-f2, options.tol, [&] {
          const Subset s = Subset::FromMask(n, m);
          return Witness{{s},
                         {j, k},
                         {t[m], t[m | Bit(j)], t[m | Bit(k)], t[m | Bit(j) | Bit(k)]},
                         0.0,
                         "f2(" + std::to_string(j) + "," + std::to_string(k) + "; " +
                             s.ToString() + ") = " + Num(f2) + " > 0"};
        });
      }
    }
  });
  return Finish(Property::kSubmodular, std::move(tally));
}

PropertyReport CheckSecondOrderSupermodular(const ValueOracle& f, const CheckOptions& options) {
  const size_t n = f.ground_size();
  const std::vector<double> t = TabulateAll(f, options.n_limit, options.threads);
  Tally tally = Sweep(t.size(), options.threads, [&](size_t m, Tally& out) {
    for (size_t i = 0; i < n; ++i) {
      if (m & Bit(i)) continue;
      for (size_t j = 0; j < n; ++j) {
        if ((m & Bit(j)) || j == i) continue;
        for (size_t k = j + 1; k < n; ++k) {
          if ((m & Bit(k)) || k == i) continue;
          const double inner = Second(t, m, j, k);
          const double outer = Second(t, m | Bit(i), j, k);
          const double f3 = outer - inner;
          out.Record(f3, options.tol, [&] {
            const Subset s = Subset::FromMask(n, m);
            return Witness{{s},
                           {i, j, k},
                           {outer, inner},
                           0.0,
                           "f2(" + std::to_string(j) + "," + std::to_string(k) + "; " +
                               s.With(i).ToString() + ") = " + Num(outer) + " < f2(" +
                               std::to_string(j) + "," + std::to_string(k) + "; " +
                               s.ToString() + ") = " + Num(inner)};
          });
        }
      }
    }
  });
  return Finish(Property::kSecondOrderSupermodular, std::move(tally));
}

PropertyReport CheckPseudoMetricAxioms(const ValueOracle& f, const CheckOptions& options) {
  const size_t n = f.ground_size();
  const size_t limit = std::min(options.n_limit, options.triple_n_limit);
  if (n > limit) {
    throw ResourceError("pseudo-metric check over " + std::to_string(n) +
                        " elements exceeds the triple limit of " + std::to_string(limit));
  }
  const std::vector<double> t = TabulateAll(f, limit, options.threads);
  const size_t full = t.size();
  auto sets = [&](std::initializer_list<size_t> masks) {
    std::vector<Subset> out;
    for (size_t m : masks) out.push_back(Subset::FromMask(n, m));
    return out;
  };

  Tally pairs = Sweep(full * full, options.threads, [&](size_t idx, Tally& out) {
    const size_t a = idx / full, b = idx % full;
    const double ab = Metric(t, a, b), ba = Metric(t, b, a);
    out.Record(ab, options.tol, [&] {
      return Witness{sets({a, b}), {}, {ab}, 0.0, "non-negativity: D = " + Num(ab)};
    });
    out.Record(-std::abs(ab - ba), options.tol, [&] {
      return Witness{sets({a, b}), {}, {ab, ba}, 0.0, "symmetry"};
    });
    if (a == b) {
      out.Record(-std::abs(ab), options.tol, [&] {
        return Witness{sets({a, b}), {}, {ab}, 0.0, "identity: D(A, A) = " + Num(ab)};
      });
    }
  });
  Tally triangles = Sweep(full * full * full, options.threads, [&](size_t idx, Tally& out) {
    const size_t a = idx / (full * full), b = idx / full % full, c = idx % full;
    const double ab = Metric(t, a, b), bc = Metric(t, b, c), ac = Metric(t, a, c);
    out.Record(ab + bc - ac, options.tol, [&] {
      return Witness{sets({a, b, c}), {}, {ab, bc, ac}, 0.0,
                     "triangle: D(A,C) = " + Num(ac) + " > D(A,B) + D(B,C) = " + Num(ab + bc)};
    });
  });
  pairs.Merge(std::move(triangles));
  return Finish(Property::kPseudoMetricAxioms, std::move(pairs));
}

PropertyReport CheckProperty(const ValueOracle& f, Property property,
                             const CheckOptions& options) {
  switch (property) {
    case Property::kNormalized: return CheckNormalized(f, options);
    case Property::kMonotone: return CheckMonotone(f, options);
    case Property::kSubmodular: return CheckSubmodular(f, options);
    case Property::kSecondOrderSupermodular: return CheckSecondOrderSupermodular(f, options);
    case Property::kPseudoMetricAxioms: return CheckPseudoMetricAxioms(f, options);
  }
  throw ArgumentError("unknown property");
}

bool ReproducesViolation(const ValueOracle& f, const PropertyReport& report, double tol) {
  if (report.verdict != Verdict::kViolated || !report.witness.has_value()) return false;
  const Witness& w = *report.witness;
  auto metric = [&](const Subset& a, const Subset& b) {
    const double u = f(a | b);
    return (u - f(a)) + (u - f(b));
  };
  auto second = [&](const Subset& a, size_t j, size_t k) {
    return f(a.With(j).With(k)) - f(a.With(j)) - f(a.With(k)) + f(a);
  };
  double margin = 0.0;
  switch (report.property) {
    case Property::kNormalized:
      margin = -std::abs(f(w.sets.at(0)));
      break;
    case Property::kMonotone:
      margin = f(w.sets.at(0).With(w.elements.at(0))) - f(w.sets[0]);
      break;
    case Property::kSubmodular:
      margin = -second(w.sets.at(0), w.elements.at(0), w.elements.at(1));
      break;
    case Property::kSecondOrderSupermodular: {
      const Subset& a = w.sets.at(0);
      const size_t i = w.elements.at(0), j = w.elements.at(1), k = w.elements.at(2);
      margin = second(a.With(i), j, k) - second(a, j, k);
      break;
    }
    case Property::kPseudoMetricAxioms: {
      const Subset& a = w.sets.at(0);
      const Subset& b = w.sets.at(1);
      if (w.sets.size() == 3) {
        margin = metric(a, b) + metric(b, w.sets[2]) - metric(a, w.sets[2]);
      } else if (w.description.rfind("symmetry", 0) == 0) {
        margin = -std::abs(metric(a, b) - metric(b, a));
      } else if (w.description.rfind("identity", 0) == 0) {
        margin = -std::abs(metric(a, a));
      } else {
        margin = metric(a, b);
      }
      break;
    }
  }
  return margin < -tol;
}

}  // namespace subinfo
