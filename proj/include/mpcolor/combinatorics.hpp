#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace mpcolor {

// Exact arbitrary-precision counts. BigCount values are non-negative by
// contract; SignedCount may be negative (move deltas).
using BigCount = boost::multiprecision::cpp_int;
using SignedCount = boost::multiprecision::cpp_int;

// Pascal-triangle cache for C(n, r). Immutable after construction, so it can
// be read from any number of threads.
class BinomialTable {
 public:
  explicit BinomialTable(int max_n);

  int max_n() const { return max_n_; }

  // Requires 0 <= r <= n <= max_n().
  const BigCount& at(int n, int r) const { return rows_[n][r]; }

 private:
  int max_n_;
  std::vector<std::vector<BigCount>> rows_;
};

// C(n, r), with C(n, r) = 0 for n < r and C(n, 0) = 1. Arguments up to the
// shared table cap are served from a memo table; larger ones fall back to the
// multiplicative formula (exact at every step). Safe to call concurrently.
BigCount binomial(long long n, long long r);

// Enumerates every tuple of `parts` non-negative integers summing to `total`,
// each exactly once, in lexicographic order. The stream holds
// C(total + parts - 1, parts - 1) tuples and is generated lazily.
class CompositionRange {
 public:
  // Throws std::domain_error for parts = 0 with total > 0, and
  // std::invalid_argument for negative input.
  CompositionRange(int total, int parts);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<int>;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::vector<int>*;
    using reference = const std::vector<int>&;

    iterator() = default;  // end sentinel
    iterator(int total, int parts);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }
    friend bool operator!=(const iterator& a, const iterator& b) {
      return !(a == b);
    }

   private:
    std::vector<int> current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(total_, parts_); }
  iterator end() const { return iterator(); }

  // Number of tuples in the stream.
  BigCount size() const;

 private:
  int total_;
  int parts_;
};

}  // namespace mpcolor
