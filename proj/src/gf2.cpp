#include "trilights/gf2.hpp"

#include <bit>
#include <utility>

#include "trilights/error.hpp"

namespace trilights::gf2 {

namespace {

void require_same_length(const BitVector& a, const BitVector& b, const char* op) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::shape, std::string(op) + ": length mismatch (" + std::to_string(a.size()) +
                                      " vs " + std::to_string(b.size()) + ")");
  }
}

// dst ^= src on words [from, end).
inline void xor_words(std::span<Word> dst, std::span<const Word> src, std::size_t from) {
  for (std::size_t w = from; w < dst.size(); ++w) dst[w] ^= src[w];
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw Error(ErrorKind::parse, "bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  BitVector v(length);
  v.set(index);
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(*this, other, "xor");
  xor_words(words_, other.words_, 0);
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_length(*this, other, "and");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

bool BitVector::any() const noexcept {
  for (Word w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::dot(const BitVector& other) const {
  require_same_length(*this, other, "dot");
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return (std::popcount(acc) & 1) != 0;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i : ones()) s[i] = '1';
  return s;
}

bool lex_less(const BitVector& a, const BitVector& b) {
  require_same_length(a, b, "lex_less");
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    const Word diff = wa[w] ^ wb[w];
    if (diff != 0) {
      const Word lowest = diff & (~diff + 1);
      return (wa[w] & lowest) == 0;
    }
  }
  return false;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  BitMatrix m;
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw Error(ErrorKind::shape, "from_rows: ragged rows");
    m.rows_.push_back(BitVector::from_string(r));
  }
  return m;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : rows_[r].ones()) t.set(c, r);
  }
  return t;
}

BitMatrix BitMatrix::block(std::size_t rows, std::size_t cols) const {
  if (rows > this->rows() || cols > cols_) throw Error(ErrorKind::shape, "block larger than matrix");
  BitMatrix b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c : rows_[r].ones()) {
      if (c >= cols) break;
      b.set(r, c);
    }
  }
  return b;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

BitVector mat_vec(const BitMatrix& a, const BitVector& x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorKind::shape, "mat_vec: matrix has " + std::to_string(a.cols()) +
                                      " columns but vector has length " + std::to_string(x.size()));
  }
  BitVector y(a.rows());
  for (std::size_t j = 0; j < a.rows(); ++j) {
    if (a.row(j).dot(x)) y.set(j);
  }
  return y;
}

EliminationResult row_reduce(const BitMatrix& a, bool track_transform) {
  EliminationResult res;
  res.reduced = a;
  if (track_transform) res.transform = BitMatrix::identity(a.rows());

  BitMatrix& m = res.reduced;
  const std::size_t rows = m.rows();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && !m.get(pivot, col)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(m.row(pivot), m.row(r));
      if (res.transform) std::swap(res.transform->row(pivot), res.transform->row(r));
    }
    // Columns before `col` are zero in the pivot row, so start at its word.
    const std::size_t from = col / kWordBits;
    const auto prow = m.row(r).words();
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || !m.get(i, col)) continue;
      xor_words(m.row(i).words(), prow, from);
      if (res.transform) xor_words(res.transform->row(i).words(), res.transform->row(r).words(), 0);
    }
    res.pivot_cols.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const BitMatrix& a) {
  // Forward elimination only.
  BitMatrix m = a;
  const std::size_t rows = m.rows();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && !m.get(pivot, col)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) std::swap(m.row(pivot), m.row(r));
    const std::size_t from = col / kWordBits;
    const auto prow = m.row(r).words();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m.get(i, col)) xor_words(m.row(i).words(), prow, from);
    }
    ++r;
  }
  return r;
}

std::optional<BitVector> solve(const EliminationResult& elim, const BitVector& c) {
  if (!elim.transform) throw Error(ErrorKind::precondition, "solve: elimination lacks a transform");
  if (elim.transform->cols() != c.size()) {
    throw Error(ErrorKind::shape, "solve: right-hand side has length " + std::to_string(c.size()) +
                                      ", expected " + std::to_string(elim.transform->cols()));
  }
  const BitVector y = mat_vec(*elim.transform, c);
  for (std::size_t i = elim.rank; i < y.size(); ++i) {
    if (y.get(i)) return std::nullopt;
  }
  BitVector x(elim.reduced.cols());
  for (std::size_t i = 0; i < elim.rank; ++i) {
    if (y.get(i)) x.set(elim.pivot_cols[i]);
  }
  return x;
}

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& c) {
  if (a.rows() != c.size()) {
    throw Error(ErrorKind::shape, "solve: right-hand side has length " + std::to_string(c.size()) +
                                      ", expected " + std::to_string(a.rows()));
  }
  return solve(row_reduce(a, true), c);
}

std::vector<BitVector> null_space(const EliminationResult& elim) {
  const BitMatrix& m = elim.reduced;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : elim.pivot_cols) is_pivot[p] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < elim.rank; ++i) {
      if (m.get(i, free)) v.set(elim.pivot_cols[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BitVector> null_space(const BitMatrix& a) { return null_space(row_reduce(a)); }

bool det_parity(const BitMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::shape, "det_parity: matrix is not square");
  return rank(a) == a.rows();
}

}  // namespace trilights::gf2
