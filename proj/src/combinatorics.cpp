#include "mpcolor/combinatorics.hpp"

#include <algorithm>

namespace mpcolor {

namespace {

// Cap of the shared memo table; everything the desk-scale workloads touch
// stays well below this.
constexpr int kSharedTableCap = 256;

BigCount multiplicative_binomial(long long n, long long r) {
  r = std::min(r, n - r);
  BigCount acc = 1;
  for (long long i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;  // divides exactly: acc is C(n - r + i, i) at this point
  }
  return acc;
}

}  // namespace

BinomialTable::BinomialTable(int max_n) : max_n_(max_n) {
  if (max_n < 0) {
    throw std::invalid_argument("BinomialTable: cap must be non-negative");
  }
  rows_.resize(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    rows_[n].assign(n + 1, 1);
    for (int r = 1; r < n; ++r) {
      rows_[n][r] = rows_[n - 1][r - 1] + rows_[n - 1][r];
    }
  }
}

BigCount binomial(long long n, long long r) {
  if (n < 0 || r < 0) {
    throw std::invalid_argument("binomial: arguments must be non-negative");
  }
  if (r > n) return 0;
  static const BinomialTable table(kSharedTableCap);
  if (n <= table.max_n()) {
    return table.at(static_cast<int>(n), static_cast<int>(r));
  }
  return multiplicative_binomial(n, r);
}

CompositionRange::CompositionRange(int total, int parts)
    : total_(total), parts_(parts) {
  if (total < 0 || parts < 0) {
    throw std::invalid_argument("compositions: arguments must be non-negative");
  }
  if (parts == 0 && total > 0) {
    throw std::domain_error(
        "compositions: zero parts cannot sum to a positive total");
  }
}

CompositionRange::iterator::iterator(int total, int parts) : done_(false) {
  current_.assign(parts, 0);
  if (parts > 0) current_.back() = total;
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  const int parts = static_cast<int>(current_.size());
  // Next tuple in lex order: bump the rightmost position that still has mass
  // to its right, then flush that mass to the last slot.
  int suffix = 0;
  for (int i = parts - 2; i >= 0; --i) {
    suffix += current_[i + 1];
    if (suffix > 0) {
      ++current_[i];
      for (int j = i + 1; j < parts - 1; ++j) current_[j] = 0;
      current_.back() = suffix - 1;
      return *this;
    }
  }
  done_ = true;
  return *this;
}

BigCount CompositionRange::size() const {
  if (parts_ == 0) return total_ == 0 ? 1 : 0;
  return binomial(total_ + parts_ - 1, parts_ - 1);
}

}  // namespace mpcolor
