#pragma once

#include <tamagawa/integer.hpp>

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace tamagawa {

// One elementary row (or column) operation. For rows, AddMul means
// row[target] += factor * row[source]; for columns the same on columns.
template <class S>
struct ElementaryOp {
  enum Kind : std::uint8_t { Swap, AddMul, Negate };
  Kind kind;
  std::int32_t target;
  std::int32_t source;
  S factor;
};

template <class S>
struct ElementaryLog {
  std::vector<ElementaryOp<S>> ops;

  void swap(Index a, Index b) { ops.push_back({ElementaryOp<S>::Swap, std::int32_t(a), std::int32_t(b), S(0)}); }
  void addmul(Index target, Index source, const S& c) {
    ops.push_back({ElementaryOp<S>::AddMul, std::int32_t(target), std::int32_t(source), c});
  }
  void negate(Index a) { ops.push_back({ElementaryOp<S>::Negate, std::int32_t(a), 0, S(0)}); }
};

struct SmithOptions {
  bool track_right = true;
};

// Smith normal form U*M*V = D with U, V unimodular and D = diag(d_1 | d_2 | ...),
// d_i > 0. U and V are kept as logs of elementary operations; materialise them
// with left()/right() or apply them to vectors directly.
class SmithForm {
 public:
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index rank() const { return Index(diagonal_.size()); }
  const std::vector<BigInt>& diagonal() const { return diagonal_; }
  bool used_bigint() const { return std::holds_alternative<Logs<BigInt>>(logs_); }

  // v <- U v and v <- U^{-1} v for v of length rows().
  void apply_left(BigVector& v) const;
  void apply_left_inverse(BigVector& v) const;
  // Fast paths; throw ArithmeticOverflow when 64 bits do not suffice.
  void apply_left(IntVector& v) const;
  void apply_left_inverse(IntVector& v) const;
  // w <- V w for w of length cols(). Requires track_right.
  void apply_right(BigVector& w) const;

  BigMatrix left() const;
  BigMatrix left_inverse() const;
  BigMatrix right() const;
  BigMatrix diagonal_matrix() const;

  template <class S>
  struct Logs {
    ElementaryLog<S> row;
    ElementaryLog<S> col;
  };

  template <class S>
  static SmithForm from_reduction(Index rows, Index cols, bool track_right, std::vector<S> diag, Logs<S> logs);

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  bool track_right_ = true;
  std::vector<BigInt> diagonal_;
  std::variant<Logs<std::int64_t>, Logs<BigInt>> logs_;
};

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options = {});
SmithForm smith_normal_form(const BigMatrix& m, SmithOptions options = {});

// Basis (as columns) of the integer kernel {x : M x = 0}.
BigMatrix integer_kernel(const BigMatrix& m);

// Some integer solution of M x = b, if one exists.
bool solve_integer(const BigMatrix& m, const BigVector& b, BigVector& x);

}  // namespace tamagawa
