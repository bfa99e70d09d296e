#pragma once

// Bit-packed vectors and matrices over the two-element field.
//
// Bits are stored little-endian inside 64-bit words: coordinate i lives in
// word i / 64 at bit position i % 64. Bits past length() are always zero,
// which lets equality, popcount and xor work word-at-a-time.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trilights::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

  /// Parses a string over {0,1}; character i is coordinate i.
  static BitVector from_string(std::string_view bits);
  static BitVector unit(std::size_t length, std::size_t index);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  bool operator[](std::size_t i) const { return get(i); }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }

  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  std::size_t count() const noexcept;
  /// Parity of the inner product with `other` (lengths must agree).
  bool dot(const BitVector& other) const;

  /// Indices of set coordinates in ascending order.
  std::vector<std::size_t> ones() const;
  std::string to_string() const;

  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

/// Total order on equal-length vectors matching the order of their
/// {0,1} strings: at the first differing coordinate the 0 sorts first.
bool lex_less(const BitVector& a, const BitVector& b);

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n);
  /// Rows given as {0,1} strings of a common length.
  static BitMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows() == cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }

  BitMatrix transpose() const;
  /// Top-left block with the given dimensions.
  BitMatrix block(std::size_t rows, std::size_t cols) const;

  std::string to_string() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct EliminationResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  /// Reduced row-echelon form; rows [0, rank) carry the pivots.
  BitMatrix reduced;
  /// T with T * A = reduced, present only when requested.
  std::optional<BitMatrix> transform;
};

/// y_j = sum_i a_ji x_i (mod 2).
BitVector mat_vec(const BitMatrix& a, const BitVector& x);

/// Gauss-Jordan elimination. The pivot for each column is the first row at
/// or below the current rank that has the bit set.
EliminationResult row_reduce(const BitMatrix& a, bool track_transform = false);

/// Rank only; skips the reduced-form bookkeeping callers do not need.
std::size_t rank(const BitMatrix& a);

/// Particular solution of A x = c with every free variable set to zero.
std::optional<BitVector> solve(const BitMatrix& a, const BitVector& c);
/// Same, reusing an elimination that carries its transform.
std::optional<BitVector> solve(const EliminationResult& elim, const BitVector& c);

/// Basis of {x : A x = 0}, one vector per free column in ascending order.
std::vector<BitVector> null_space(const BitMatrix& a);
std::vector<BitVector> null_space(const EliminationResult& elim);

/// Determinant mod 2.
bool det_parity(const BitMatrix& a);

}  // namespace trilights::gf2
