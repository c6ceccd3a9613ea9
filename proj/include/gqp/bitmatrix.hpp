#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gqp {

// Dense square bit matrix; the workhorse behind preference tables and event
// relations. Row-major, packed 64 per word.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n, bool fill = false)
      : n_(n), bits_((n * n + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
    if (fill) clear_padding();
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i, std::size_t j) const {
    std::size_t k = i * n_ + j;
    return (bits_[k >> 6] >> (k & 63)) & 1;
  }

  void set(std::size_t i, std::size_t j, bool value = true) {
    std::size_t k = i * n_ + j;
    if (value)
      bits_[k >> 6] |= std::uint64_t{1} << (k & 63);
    else
      bits_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
  }

  // In-place reflexive-transitive closure (Warshall). Cubic; fine at the
  // sizes we deal in (acts and events are capped well below 10^4).
  void close_reflexive_transitive() {
    for (std::size_t i = 0; i < n_; ++i) set(i, i);
    close_transitive();
  }

  void close_transitive() {
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (get(i, k))
          for (std::size_t j = 0; j < n_; ++j)
            if (get(k, j)) set(i, j);
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void clear_padding() {
    std::size_t used = n_ * n_;
    if (std::size_t rem = used & 63; rem != 0 && !bits_.empty())
      bits_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace gqp
