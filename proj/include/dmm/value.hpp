#pragma once

#include <map>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "dmm/cvector.hpp"
#include "dmm/matrix.hpp"
#include "dmm/ports.hpp"
#include "dmm/scalar.hpp"

#include "json.hpp"

namespace dmm {

// A value of one stream kind. All five families form linear spaces: they
// support addition and scaling by scalars with exact zero and exact one.
using StreamValue =
    std::variant<Scalar, CVector, NetworkMatrix, RowMask, ColumnMask>;

KindFamily value_family(const StreamValue& v);
StreamValue zero_value(KindFamily family);
bool is_zero_value(const StreamValue& v);

// Weighted sum of values of one kind. The empty sum is the kind's exact
// zero; zero-weight terms contribute nothing and allocate nothing; a single
// unit-weight term reproduces its value bit-exactly.
StreamValue lin_comb(const StreamKind& kind,
                     std::span<const std::pair<Scalar, const StreamValue*>> terms);

StreamValue lin_comb(const StreamKind& kind,
                     const std::vector<std::pair<Scalar, StreamValue>>& terms);

// Recomputes input-port values from output-port values through the matrix:
// one linear combination per nonzero row. Output ports without a value
// contribute their kind's zero. Cost is proportional to the number of
// nonzero weights.
std::map<PortRef, StreamValue> down_movement(
    const NetworkMatrix& w, const std::map<PortRef, StreamValue>& outputs);

// Trace rendering. C-vectors become objects keyed by the character (the
// end-of-string sentinel uses the reserved key "<EOS>"), matrices become
// lists of {in, out, w} records, masks become port-keyed objects.
nlohmann::json value_to_json(const StreamValue& v);

}  // namespace dmm
