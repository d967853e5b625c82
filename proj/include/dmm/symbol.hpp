#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dmm/errors.hpp"

namespace dmm {

// One coordinate of the character alphabet: a Unicode scalar value or the
// end-of-string sentinel. The sentinel lives outside the Unicode range so
// any input text is representable; it sorts after every character.
class Symbol {
 public:
  static constexpr uint32_t kEosCode = 0xFFFFFFFFu;

  static Symbol character(char32_t c) {
    uint32_t code = static_cast<uint32_t>(c);
    if (code > 0x10FFFF || (code >= 0xD800 && code <= 0xDFFF))
      throw ValueError("not a Unicode scalar value");
    return Symbol(code);
  }

  static Symbol eos() { return Symbol(kEosCode); }

  bool is_eos() const { return code_ == kEosCode; }
  char32_t value() const { return static_cast<char32_t>(code_); }

  // UTF-8 rendering of the character, or "<EOS>" for the sentinel.
  std::string display() const;

  bool operator==(const Symbol&) const = default;
  auto operator<=>(const Symbol&) const = default;

 private:
  explicit Symbol(uint32_t code) : code_(code) {}
  uint32_t code_;
};

// Decodes UTF-8 text into symbols. Throws ValueError on malformed input.
std::vector<Symbol> decode_utf8(std::string_view text);

// UTF-8 encoding of a single Unicode scalar value.
std::string encode_utf8(char32_t c);

}  // namespace dmm
