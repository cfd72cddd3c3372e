#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace tfaest {

/// Upper bound of a difference constraint `x_i - x_j < c` or `<= c`, or no
/// bound at all.
template <class Value> struct DiffBound {
  Value value{};
  bool strict = false;
  bool infinite = true;

  static DiffBound unbounded() { return {}; }
  static DiffBound le(Value v) { return {v, false, false}; }
  static DiffBound lt(Value v) { return {v, true, false}; }

  friend DiffBound operator+(const DiffBound &a, const DiffBound &b) {
    if (a.infinite || b.infinite)
      return unbounded();
    return {a.value + b.value, a.strict || b.strict, false};
  }

  /// Tighter bounds compare smaller.
  friend bool operator<(const DiffBound &a, const DiffBound &b) {
    if (a.infinite)
      return false;
    if (b.infinite)
      return true;
    if (a.value != b.value)
      return a.value < b.value;
    return a.strict && !b.strict;
  }
  friend bool operator<=(const DiffBound &a, const DiffBound &b) { return !(b < a); }
  friend bool operator==(const DiffBound &a, const DiffBound &b) {
    if (a.infinite || b.infinite)
      return a.infinite == b.infinite;
    return a.value == b.value && a.strict == b.strict;
  }
};

/// Difference-bound matrix over variables 0..n-1; variable 0 is the
/// constant zero, so `m(i,0)` bounds x_i from above and `m(0,i)` bounds -x_i.
///
/// Every mutating call leaves the matrix canonical (all-pairs shortest
/// paths) or marks it empty.
template <class Value> class Dbm {
public:
  using Bound = DiffBound<Value>;

  /// All variables unconstrained except, when `non_negative`, x_i >= 0.
  explicit Dbm(std::size_t variables, bool non_negative = true)
      : n_(variables), m_(variables * variables) {
    for (std::size_t i = 0; i < n_; ++i) {
      at(i, i) = Bound::le(Value(0));
      if (non_negative)
        at(0, i) = Bound::le(Value(0));
    }
  }

  std::size_t variables() const { return n_; }
  bool empty() const { return empty_; }
  const Bound &operator()(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }

  /// Adds x_i - x_j `bound` and re-closes.
  void constrain(std::size_t i, std::size_t j, Bound bound) {
    if (empty_ || !(bound < at(i, j)))
      return;
    at(i, j) = bound;
    close_through(i, j);
  }

  /// lower <= x_i <= upper style constraints, given as bounds on x_i - 0 and
  /// 0 - x_i.
  void constrain_upper(std::size_t i, Bound upper) { constrain(i, 0, upper); }
  void constrain_lower(std::size_t i, Bound neg_lower) { constrain(0, i, neg_lower); }

  /// Lets every non-zero variable grow by the same arbitrary amount.
  void delay() {
    if (empty_)
      return;
    for (std::size_t i = 1; i < n_; ++i)
      at(i, 0) = Bound::unbounded();
  }

  /// Forgets everything about x_i except x_i >= 0.
  void release(std::size_t i) {
    if (empty_)
      return;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == i)
        continue;
      at(i, j) = Bound::unbounded();
      at(j, i) = at(j, 0);
    }
    at(0, i) = Bound::le(Value(0));
  }

  /// Pins x_i to `v` exactly.
  void assign(std::size_t i, Value v) {
    constrain(i, 0, Bound::le(v));
    constrain(0, i, Bound::le(-v));
  }

  /// Set inclusion: every valuation of `other` satisfies this.
  bool includes(const Dbm &other) const {
    if (other.empty_)
      return true;
    if (empty_)
      return false;
    for (std::size_t k = 0; k < m_.size(); ++k)
      if (m_[k] < other.m_[k])
        return false;
    return true;
  }

  friend bool operator==(const Dbm &a, const Dbm &b) {
    if (a.empty_ || b.empty_)
      return a.empty_ == b.empty_;
    return a.n_ == b.n_ && a.m_ == b.m_;
  }

  /// Some valuation, choosing each variable in index order within the
  /// bounds left by earlier choices. Closed bounds are preferred; strict
  /// ranges pick a midpoint (or lower + 1 when unbounded above).
  /// Requires a Value type closed under division by 2.
  std::optional<std::vector<Value>> solution() const {
    if (empty_)
      return std::nullopt;
    Dbm work = *this;
    std::vector<Value> values(n_, Value(0));
    for (std::size_t i = 1; i < n_; ++i) {
      const Bound &up = work(i, 0);
      const Bound &neg_lo = work(0, i);
      Value v;
      if (neg_lo.infinite) {
        if (up.infinite)
          v = Value(0);
        else
          v = up.strict ? up.value - Value(1) : up.value;
        work.assign(i, v);
        values[i] = v;
        continue;
      }
      Value lo = -neg_lo.value;
      if (!neg_lo.strict)
        v = lo;
      else if (up.infinite)
        v = lo + Value(1);
      else if (!up.strict)
        v = up.value;
      else
        v = (lo + up.value) / Value(2);
      work.assign(i, v);
      if (work.empty())
        return std::nullopt;
      values[i] = v;
    }
    return values;
  }

private:
  Bound &at(std::size_t i, std::size_t j) { return m_[i * n_ + j]; }

  // Incremental closure after tightening a single entry (i,j).
  void close_through(std::size_t i, std::size_t j) {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        Bound via = at(a, i) + at(i, j) + at(j, b);
        if (via < at(a, b))
          at(a, b) = via;
      }
    }
    for (std::size_t k = 0; k < n_; ++k) {
      if (at(k, k) < Bound::le(Value(0))) {
        empty_ = true;
        return;
      }
    }
  }

  std::size_t n_;
  std::vector<Bound> m_;
  bool empty_ = false;
};

} // namespace tfaest
