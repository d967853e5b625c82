#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmm/errors.hpp"

namespace dmm {

// The five families of linear streams the runtime implements.
enum class KindFamily {
  scalar,
  cvector,
  network_matrix,
  matrix_row,
  matrix_column,
};

// A named kind of linear stream. Kind names link to one of the built-in
// families; connections require equal kind names, not just equal families.
struct StreamKind {
  std::string name;
  KindFamily family = KindFamily::scalar;

  bool operator==(const StreamKind&) const = default;
  auto operator<=>(const StreamKind&) const = default;
};

// Canonical kind names understood by the runtime.
const StreamKind& scalar_kind();          // "real"
const StreamKind& cvector_kind();         // "c-vector"
const StreamKind& network_matrix_kind();  // "network-matrix"
const StreamKind& matrix_row_kind();      // "matrix-row"
const StreamKind& matrix_column_kind();   // "matrix-column"

std::optional<StreamKind> builtin_kind(const std::string& name);

// A neuron of a given type. Conceptually a countable number of instances of
// every type exists; only finitely many are ever materialized.
struct NeuronInstance {
  std::string type;
  uint64_t index = 0;

  std::string label() const { return type + "#" + std::to_string(index); }

  bool operator==(const NeuronInstance&) const = default;
  auto operator<=>(const NeuronInstance&) const = default;
};

enum class PortDir { in, out };

// Address of one typed port of one neuron instance. The kind is carried for
// convenience; it is derived from the neuron type and does not participate
// in identity.
struct PortRef {
  NeuronInstance neuron;
  std::string port;
  PortDir dir = PortDir::in;
  StreamKind kind;

  std::string label() const { return neuron.label() + "." + port; }

  friend bool operator==(const PortRef& a, const PortRef& b) {
    return a.neuron == b.neuron && a.dir == b.dir && a.port == b.port;
  }
  friend auto operator<=>(const PortRef& a, const PortRef& b) {
    if (auto c = a.neuron <=> b.neuron; c != 0) return c;
    if (auto c = a.dir <=> b.dir; c != 0) return c;
    return a.port <=> b.port;
  }
};

// A transform signature: named, typed, ordered ports. Types with no inputs
// act as stream sources; types with no outputs perform side effects.
struct NeuronType {
  std::string name;
  std::vector<std::pair<std::string, StreamKind>> inputs;
  std::vector<std::pair<std::string, StreamKind>> outputs;
  std::string transform_id;

  PortRef input_port(const NeuronInstance& n, std::size_t i) const;
  PortRef output_port(const NeuronInstance& n, std::size_t i) const;
};

// The distinguished reflection neuron: an identity transform over the
// stream of network matrices whose output *is* the network's matrix.
inline constexpr const char* kSelfTypeName = "self-matrix";
inline constexpr const char* kSelfInputPort = "delta-sum";
inline constexpr const char* kSelfOutputPort = "current-matrix";

const NeuronType& self_neuron_type();
const NeuronInstance& self_instance();
PortRef self_input_port();
PortRef self_output_port();

// The set of stream kinds and neuron types a network is built over.
class Signature {
 public:
  Signature();

  void add_kind(const StreamKind& kind);
  void add_type(NeuronType type);

  bool has_kind(const std::string& name) const;
  bool has_type(const std::string& name) const;
  const StreamKind& kind(const std::string& name) const;
  const NeuronType& type(const std::string& name) const;

  const std::map<std::string, StreamKind>& kinds() const { return kinds_; }
  const std::map<std::string, NeuronType>& types() const { return types_; }

  // Resolves a port by name, checking direction. Throws KindError when the
  // port does not exist on the instance's type.
  PortRef port(const NeuronInstance& n, const std::string& port,
               PortDir dir) const;

  std::vector<PortRef> input_ports(const NeuronInstance& n) const;
  std::vector<PortRef> output_ports(const NeuronInstance& n) const;

 private:
  std::map<std::string, StreamKind> kinds_;
  std::map<std::string, NeuronType> types_;
};

}  // namespace dmm
