#pragma once

#include <functional>
#include <map>
#include <set>

#include "dmm/ports.hpp"
#include "dmm/scalar.hpp"

namespace dmm {

// Finitely supported vector over ports of one direction. Row masks select
// input ports, column masks select output ports.
template <PortDir D>
class PortMask {
 public:
  PortMask() = default;

  void set(const PortRef& p, Scalar x) {
    if (p.dir != D) throw KindError("mask entry has wrong port direction");
    if (x.is_zero())
      entries_.erase(p);
    else
      entries_.insert_or_assign(p, x);
  }

  Scalar at(const PortRef& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? Scalar() : it->second;
  }

  void add_scaled(const PortMask& v, Scalar w) {
    if (w.is_zero()) return;
    for (const auto& [p, x] : v.entries_) set(p, at(p) + w * x);
  }

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const std::map<PortRef, Scalar>& entries() const { return entries_; }

  bool operator==(const PortMask&) const = default;

 private:
  std::map<PortRef, Scalar> entries_;
};

using RowMask = PortMask<PortDir::in>;
using ColumnMask = PortMask<PortDir::out>;

// The program itself: a finitely supported weight assignment over
// (input port, output port) pairs. Invariants maintained throughout:
// no stored exact-zero weight, and a nonzero weight only ever connects
// ports of equal stream kind.
class NetworkMatrix {
 public:
  NetworkMatrix() = default;

  Scalar at(const PortRef& in, const PortRef& out) const;

  // Adds delta to the (in, out) entry, erasing it when it cancels to exact
  // zero. Rejects direction or kind violations.
  void add(const PortRef& in, const PortRef& out, Scalar delta);

  // this += w * other. A zero weight contributes nothing.
  void add_scaled(const NetworkMatrix& other, Scalar w);

  bool empty() const { return rows_.empty(); }
  std::size_t nonzero_count() const;

  // Row-major view: input port -> (output port -> weight).
  const std::map<PortRef, std::map<PortRef, Scalar>>& rows() const {
    return rows_;
  }
  // Column support: output port -> set of input ports with nonzero weight.
  const std::map<PortRef, std::set<PortRef>>& columns() const {
    return columns_;
  }

  bool row_empty(const PortRef& in) const { return !rows_.count(in); }
  bool column_empty(const PortRef& out) const { return !columns_.count(out); }

  // Deterministic iteration over nonzero entries, row-major.
  void for_each(
      const std::function<void(const PortRef&, const PortRef&, Scalar)>& fn)
      const;

  bool operator==(const NetworkMatrix& other) const {
    return rows_ == other.rows_;
  }

 private:
  std::map<PortRef, std::map<PortRef, Scalar>> rows_;
  std::map<PortRef, std::set<PortRef>> columns_;
};

// Value-style weight update: returns the matrix with the (in, out) entry
// increased by delta.
NetworkMatrix add_to_weight(NetworkMatrix w, const PortRef& in,
                            const PortRef& out, Scalar delta);

// Neurons owning at least one port in the support, minus the silent set.
// The Self instance is always active.
std::set<NeuronInstance> active_neurons(const NetworkMatrix& w,
                                        const std::set<NeuronInstance>& silent);

// For each neuron in `originals`, picks the lowest-index instance of the
// same type whose ports are all untouched by `w` and which is neither
// silent, reserved, an original, nor already picked by this call. The
// assignment is deterministic.
std::map<NeuronInstance, NeuronInstance> allocate_fresh_block(
    const NetworkMatrix& w, const std::set<NeuronInstance>& silent,
    const std::set<NeuronInstance>& reserved,
    const std::set<NeuronInstance>& originals, const Signature& sig);

}  // namespace dmm
