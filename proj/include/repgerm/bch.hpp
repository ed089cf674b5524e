#pragma once

// Baker-Campbell-Hausdorff via Dynkin's formula, generic over the element
// type and bracket. Sound for ordinary (ungraded) Lie brackets with nilpotent
// arguments; terms of weight > max_weight are dropped, which is exact when
// all brackets of that weight vanish (m^c = 0).

#include "repgerm/exact.hpp"

#include <vector>

namespace repgerm {

template <class Elem, class BracketFn, class AxpyFn>
class DynkinBch {
public:
  // bracket(a, b) -> Elem; axpy(acc, coeff, term) does acc += coeff * term.
  DynkinBch(BracketFn bracket, AxpyFn axpy) : bracket_(bracket), axpy_(axpy) {}

  Elem run(const Elem& x, const Elem& y, int max_weight) {
    x_ = &x;
    y_ = &y;
    acc_ = Elem{};
    blocks_.clear();
    descend(0, max_weight);
    return acc_;
  }

private:
  void descend(int weight_used, int max_weight) {
    if (!blocks_.empty()) emit(weight_used);
    if (weight_used >= max_weight) return;
    for (int r = 0; r + weight_used <= max_weight; ++r)
      for (int s = (r == 0 ? 1 : 0); r + s + weight_used <= max_weight; ++s) {
        if (r == 0 && s == 0) continue;
        blocks_.push_back({r, s});
        descend(weight_used + r + s, max_weight);
        blocks_.pop_back();
      }
  }

  void emit(int total_weight) {
    const auto& last = blocks_.back();
    // Right-nested bracket word vanishes unless the innermost letter pair is
    // mixed: s_n >= 2 ends in [Y,Y], s_n = 0 with r_n >= 2 ends in [X,X].
    if (last.s >= 2) return;
    if (last.s == 0 && last.r >= 2) return;

    // Operators applied left to right; the final letter is the base.
    Elem term = last.s == 1 ? *y_ : *x_;
    std::vector<std::pair<char, int>> ops;
    for (size_t b = 0; b < blocks_.size(); ++b) {
      int r = blocks_[b].r;
      int s = blocks_[b].s;
      if (b + 1 == blocks_.size()) {
        if (last.s == 1)
          s -= 1;
        else
          r -= 1;
      }
      if (r > 0) ops.emplace_back('x', r);
      if (s > 0) ops.emplace_back('y', s);
    }
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
      for (int k = 0; k < it->second; ++k)
        term = bracket_(it->first == 'x' ? *x_ : *y_, term);

    Rational denom(static_cast<long>(blocks_.size()));
    denom *= Rational(total_weight);
    for (const auto& b : blocks_) {
      denom *= factorial(b.r);
      denom *= factorial(b.s);
    }
    Rational coeff = Rational(blocks_.size() % 2 == 1 ? 1 : -1) / denom;
    axpy_(acc_, coeff, term);
  }

  static Rational factorial(int k) {
    Rational f(1);
    for (int i = 2; i <= k; ++i) f *= Rational(i);
    return f;
  }

  struct Block {
    int r, s;
  };
  BracketFn bracket_;
  AxpyFn axpy_;
  const Elem* x_ = nullptr;
  const Elem* y_ = nullptr;
  Elem acc_{};
  std::vector<Block> blocks_;
};

template <class Elem, class BracketFn, class AxpyFn>
Elem bch_dynkin(const Elem& x, const Elem& y, int max_weight, BracketFn bracket, AxpyFn axpy) {
  DynkinBch<Elem, BracketFn, AxpyFn> engine(bracket, axpy);
  return engine.run(x, y, max_weight);
}

}  // namespace repgerm
