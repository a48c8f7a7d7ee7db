#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "dislokit/parallel.hpp"

namespace dislokit {

// Neumaier's variant of Kahan summation. Merging two accumulators folds the
// other's running sum and its compensation in that order, so a fixed merge
// order reproduces the same bits.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }

  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.comp_);
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Sums term(i) for i in [0, n) with a result that depends only on n and the
// terms, never on the thread count: the index range is cut into fixed-size
// chunks, each chunk is summed in order, and chunk sums merge in chunk order.
template <class Term>
double deterministic_sum(std::size_t n, int threads, Term term) {
  const std::size_t chunks = (n + kReductionChunk - 1) / kReductionChunk;
  std::vector<CompensatedSum> partial(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::size_t lo = c * kReductionChunk;
    const std::size_t hi = std::min(n, lo + kReductionChunk);
    for (std::size_t i = lo; i < hi; ++i) partial[c].add(term(i));
  });
  CompensatedSum total;
  for (const auto& p : partial) total.merge(p);
  return total.value();
}

}  // namespace dislokit
