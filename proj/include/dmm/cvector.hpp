#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "dmm/scalar.hpp"
#include "dmm/symbol.hpp"

namespace dmm {

// Sparse real-valued vector indexed by symbols. Absent symbols are exact
// zero; stored entries are never zero, so support size is meaningful and
// equality is structural.
class CVector {
 public:
  CVector() = default;

  // 1-of-N encoding of a single symbol.
  static CVector unit(Symbol s) {
    CVector v;
    v.entries_.emplace(s, Scalar(1.0));
    return v;
  }

  static CVector of(std::initializer_list<std::pair<Symbol, double>> init) {
    CVector v;
    for (const auto& [s, x] : init) v.set(s, Scalar(x));
    return v;
  }

  void set(Symbol s, Scalar x) {
    if (x.is_zero())
      entries_.erase(s);
    else
      entries_.insert_or_assign(s, x);
  }

  Scalar at(Symbol s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? Scalar() : it->second;
  }

  // this += w * v, dropping coordinates that cancel to exact zero.
  // A zero weight contributes nothing and allocates nothing.
  void add_scaled(const CVector& v, Scalar w);

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const std::map<Symbol, Scalar>& entries() const { return entries_; }

  bool operator==(const CVector&) const = default;

 private:
  std::map<Symbol, Scalar> entries_;
};

// Largest absolute coordinate value; exact zero for the empty vector.
Scalar cvector_max_norm(const CVector& v);

// Dot product over the intersection of supports; cost is proportional to
// the smaller support.
Scalar cvector_dot(const CVector& u, const CVector& v);

}  // namespace dmm
