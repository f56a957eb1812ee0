#include <tamagawa/errors.hpp>
#include <tamagawa/smith.hpp>

#include <algorithm>

namespace tamagawa {

namespace {

template <class S>
using Dense = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class S>
class Reducer {
  using Ops = IntOps<S>;

 public:
  Reducer(Dense<S> a, bool track_right) : a_(std::move(a)), track_right_(track_right) {}

  void run() {
    const Index m = a_.rows(), n = a_.cols();
    for (Index t = 0; t < std::min(m, n); ++t) {
      if (!place_pivot(t)) break;
      reduce_at(t);
      if (Ops::sign(a_(t, t)) < 0) {
        negate_row(t);
      }
      diag_.push_back(a_(t, t));
    }
  }

  std::vector<S> diag_;
  SmithForm::Logs<S> logs_;

 private:
  Dense<S> a_;
  bool track_right_;

  // Moves a smallest-magnitude nonzero entry of the trailing block to (t,t).
  bool place_pivot(Index t) {
    const Index m = a_.rows(), n = a_.cols();
    Index bi = -1, bj = -1;
    S best(0);
    for (Index i = t; i < m && !(bi >= 0 && Ops::is_unit(best)); ++i) {
      for (Index j = t; j < n; ++j) {
        const S& v = a_(i, j);
        if (Ops::is_zero(v)) continue;
        S av = Ops::abs(v);
        if (bi < 0 || av < best) {
          best = av;
          bi = i;
          bj = j;
          if (Ops::is_unit(best)) break;
        }
      }
    }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_at(Index t) {
    const Index m = a_.rows(), n = a_.cols();
    for (;;) {
      // Column t below the pivot.
      Index smallest = -1;
      for (Index i = t + 1; i < m; ++i) {
        if (Ops::is_zero(a_(i, t))) continue;
        S q = Ops::quot(a_(i, t), a_(t, t));
        if (!Ops::is_zero(q)) row_addmul(i, t, Ops::neg(q), t);
        if (!Ops::is_zero(a_(i, t)) && (smallest < 0 || Ops::abs(a_(i, t)) < Ops::abs(a_(smallest, t)))) smallest = i;
      }
      if (smallest >= 0) {
        swap_rows(t, smallest);
        continue;
      }
      // Row t right of the pivot; the column is clear so only a(t, j) moves.
      for (Index j = t + 1; j < n; ++j) {
        if (Ops::is_zero(a_(t, j))) continue;
        S q = Ops::quot(a_(t, j), a_(t, t));
        if (!Ops::is_zero(q)) {
          a_(t, j) = Ops::sub(a_(t, j), Ops::mul(q, a_(t, t)));
          if (track_right_) logs_.col.addmul(j, t, Ops::neg(q));
        }
        if (!Ops::is_zero(a_(t, j)) && (smallest < 0 || Ops::abs(a_(t, j)) < Ops::abs(a_(t, smallest)))) smallest = j;
      }
      if (smallest >= 0) {
        swap_cols(t, smallest);
        continue;
      }
      if (Ops::is_unit(a_(t, t))) return;
      // Enforce the divisibility chain.
      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (!Ops::divides(a_(t, t), a_(i, j))) {
            bad = i;
            break;
          }
      if (bad < 0) return;
      row_addmul(t, bad, S(1), t);
    }
  }

  // row[target] += c * row[source], touching columns >= from only.
  void row_addmul(Index target, Index source, const S& c, Index from) {
    const Index n = a_.cols();
    for (Index j = from; j < n; ++j) {
      const S& s = a_(source, j);
      if (!Ops::is_zero(s)) a_(target, j) = Ops::addmul(a_(target, j), c, s);
    }
    logs_.row.addmul(target, source, c);
  }

  void negate_row(Index t) {
    for (Index j = t; j < a_.cols(); ++j) a_(t, j) = Ops::neg(a_(t, j));
    logs_.row.negate(t);
  }

  void swap_rows(Index a, Index b) {
    if (a == b) return;
    a_.row(a).swap(a_.row(b));
    logs_.row.swap(a, b);
  }

  void swap_cols(Index a, Index b) {
    if (a == b) return;
    a_.col(a).swap(a_.col(b));
    if (track_right_) logs_.col.swap(a, b);
  }
};

template <class V, class S>
V convert(const S& s) {
  if constexpr (std::is_same_v<V, S>) {
    return s;
  } else if constexpr (std::is_same_v<V, BigInt>) {
    return to_big(s);
  } else {
    return IntOps<V>::from(s);
  }
}

template <class S, class Vec>
void replay_forward(const ElementaryLog<S>& log, Vec& v) {
  using V = typename Vec::Scalar;
  for (const auto& op : log.ops) {
    switch (op.kind) {
      case ElementaryOp<S>::Swap:
        std::swap(v[op.target], v[op.source]);
        break;
      case ElementaryOp<S>::AddMul:
        if (!IntOps<V>::is_zero(v[op.source]))
          v[op.target] = IntOps<V>::addmul(v[op.target], convert<V>(op.factor), v[op.source]);
        break;
      case ElementaryOp<S>::Negate:
        v[op.target] = IntOps<V>::neg(v[op.target]);
        break;
    }
  }
}

template <class S, class Vec>
void replay_inverse(const ElementaryLog<S>& log, Vec& v) {
  using V = typename Vec::Scalar;
  for (auto it = log.ops.rbegin(); it != log.ops.rend(); ++it) {
    const auto& op = *it;
    switch (op.kind) {
      case ElementaryOp<S>::Swap:
        std::swap(v[op.target], v[op.source]);
        break;
      case ElementaryOp<S>::AddMul:
        if (!IntOps<V>::is_zero(v[op.source]))
          v[op.target] = IntOps<V>::sub(v[op.target], IntOps<V>::mul(convert<V>(op.factor), v[op.source]));
        break;
      case ElementaryOp<S>::Negate:
        v[op.target] = IntOps<V>::neg(v[op.target]);
        break;
    }
  }
}

// For V = E_1 E_2 ... E_k, V w applies E_k first. A column op
// col[target] += c col[source] is I + c e_source e_target^T.
template <class S, class Vec>
void replay_columns(const ElementaryLog<S>& log, Vec& w) {
  using V = typename Vec::Scalar;
  for (auto it = log.ops.rbegin(); it != log.ops.rend(); ++it) {
    const auto& op = *it;
    switch (op.kind) {
      case ElementaryOp<S>::Swap:
        std::swap(w[op.target], w[op.source]);
        break;
      case ElementaryOp<S>::AddMul:
        if (!IntOps<V>::is_zero(w[op.target]))
          w[op.source] = IntOps<V>::addmul(w[op.source], convert<V>(op.factor), w[op.target]);
        break;
      case ElementaryOp<S>::Negate:
        w[op.target] = IntOps<V>::neg(w[op.target]);
        break;
    }
  }
}

template <class S, class Src>
SmithForm reduce_as(const Src& m, SmithOptions options) {
  Dense<S> a(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) a(i, j) = convert<S>(m(i, j));
  Reducer<S> r(std::move(a), options.track_right);
  r.run();
  return SmithForm::from_reduction<S>(m.rows(), m.cols(), options.track_right, std::move(r.diag_), std::move(r.logs_));
}

}  // namespace

template <class S>
SmithForm SmithForm::from_reduction(Index rows, Index cols, bool track_right, std::vector<S> diag, Logs<S> logs) {
  SmithForm f;
  f.rows_ = rows;
  f.cols_ = cols;
  f.track_right_ = track_right;
  for (const auto& d : diag) f.diagonal_.push_back(convert<BigInt>(d));
  f.logs_ = std::move(logs);
  return f;
}

void SmithForm::apply_left(BigVector& v) const {
  std::visit([&](const auto& l) { replay_forward(l.row, v); }, logs_);
}
void SmithForm::apply_left_inverse(BigVector& v) const {
  std::visit([&](const auto& l) { replay_inverse(l.row, v); }, logs_);
}
void SmithForm::apply_left(IntVector& v) const {
  std::visit([&](const auto& l) { replay_forward(l.row, v); }, logs_);
}
void SmithForm::apply_left_inverse(IntVector& v) const {
  std::visit([&](const auto& l) { replay_inverse(l.row, v); }, logs_);
}
void SmithForm::apply_right(BigVector& w) const {
  if (!track_right_) throw InternalError("right transform was not tracked");
  std::visit([&](const auto& l) { replay_columns(l.col, w); }, logs_);
}

BigMatrix SmithForm::left() const {
  BigMatrix u(rows_, rows_);
  for (Index j = 0; j < rows_; ++j) {
    BigVector e = BigVector::Zero(rows_);
    e[j] = 1;
    apply_left(e);
    u.col(j) = e;
  }
  return u;
}

BigMatrix SmithForm::left_inverse() const {
  BigMatrix u(rows_, rows_);
  for (Index j = 0; j < rows_; ++j) {
    BigVector e = BigVector::Zero(rows_);
    e[j] = 1;
    apply_left_inverse(e);
    u.col(j) = e;
  }
  return u;
}

BigMatrix SmithForm::right() const {
  BigMatrix v(cols_, cols_);
  for (Index j = 0; j < cols_; ++j) {
    BigVector e = BigVector::Zero(cols_);
    e[j] = 1;
    apply_right(e);
    v.col(j) = e;
  }
  return v;
}

BigMatrix SmithForm::diagonal_matrix() const {
  BigMatrix d = BigMatrix::Zero(rows_, cols_);
  for (Index i = 0; i < rank(); ++i) d(i, i) = diagonal_[i];
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options) {
  try {
    return reduce_as<std::int64_t>(m, options);
  } catch (const ArithmeticOverflow&) {
    return reduce_as<BigInt>(m, options);
  }
}

SmithForm smith_normal_form(const BigMatrix& m, SmithOptions options) {
  try {
    return reduce_as<std::int64_t>(m, options);
  } catch (const ArithmeticOverflow&) {
    return reduce_as<BigInt>(m, options);
  }
}

BigMatrix integer_kernel(const BigMatrix& m) {
  SmithForm f = smith_normal_form(m);
  const Index k = m.cols() - f.rank();
  BigMatrix basis(m.cols(), k);
  for (Index c = 0; c < k; ++c) {
    BigVector e = BigVector::Zero(m.cols());
    e[f.rank() + c] = 1;
    f.apply_right(e);
    basis.col(c) = e;
  }
  return basis;
}

bool solve_integer(const BigMatrix& m, const BigVector& b, BigVector& x) {
  SmithForm f = smith_normal_form(m);
  BigVector y = b;
  f.apply_left(y);
  BigVector z = BigVector::Zero(m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    if (i < f.rank()) {
      if (!IntOps<BigInt>::divides(f.diagonal()[i], y[i])) return false;
      z[i] = y[i] / f.diagonal()[i];
    } else if (sgn(y[i]) != 0) {
      return false;
    }
  }
  f.apply_right(z);
  x = z;
  return true;
}

}  // namespace tamagawa
