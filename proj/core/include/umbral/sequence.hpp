#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "umbral/error.hpp"
#include "umbral/rational.hpp"

namespace umbral {

// Finite prefix of a sequence indexed from 0. The tag keeps lattice values,
// falling-factorial coefficients and Taylor coefficients from being mixed up.
template <class Tag>
class Sequence {
 public:
  using value_type = Rational;
  using const_iterator = std::vector<Rational>::const_iterator;

  Sequence() = default;
  explicit Sequence(std::vector<Rational> values) : values_(std::move(values)) {}
  Sequence(std::initializer_list<Rational> values) : values_(values) {}

  static Sequence zeros(std::size_t length) { return Sequence(std::vector<Rational>(length)); }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  const Rational& operator[](std::size_t i) const { return values_[i]; }
  Rational& operator[](std::size_t i) { return values_[i]; }

  // Bounds-checked access; indices outside the stored prefix are an error,
  // never an implicit zero.
  const Rational& at(std::ptrdiff_t i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= values_.size()) {
      throw Error(ErrorCode::index_out_of_range,
                  "index " + std::to_string(i) + " outside stored prefix of length " +
                      std::to_string(values_.size()));
    }
    return values_[static_cast<std::size_t>(i)];
  }

  std::span<const Rational> values() const noexcept { return values_; }
  std::vector<Rational>& mutable_values() noexcept { return values_; }

  Sequence prefix(std::size_t length) const {
    if (length > values_.size()) {
      throw Error(ErrorCode::index_out_of_range,
                  "prefix of length " + std::to_string(length) + " requested from length " +
                      std::to_string(values_.size()));
    }
    return Sequence(std::vector<Rational>(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(length)));
  }

  const_iterator begin() const noexcept { return values_.begin(); }
  const_iterator end() const noexcept { return values_.end(); }

  friend bool operator==(const Sequence& a, const Sequence& b) { return a.values_ == b.values_; }

 private:
  std::vector<Rational> values_;
};

struct LatticeTag;
struct FourierTag;
struct TaylorTag;

/// Values z_0..z_L on the regular lattice.
using LatticeSeq = Sequence<LatticeTag>;
/// Coefficients zeta_0..zeta_L in the falling-factorial basis.
using FourierSeq = Sequence<FourierTag>;
/// Formal power series prefix b_0..b_L.
using TaylorCoeffs = Sequence<TaylorTag>;

}  // namespace umbral
