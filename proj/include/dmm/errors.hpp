#pragma once

#include <stdexcept>
#include <string>

namespace dmm {

// A number that cannot serve as a stream scalar (NaN, infinity, overflow).
class ValueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Stream-kind mismatch between combined values or connected ports.
class KindError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lexical or syntactic problem in a network description file.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A program that parsed but cannot be turned into a runnable network.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A transform fault during a clock tick; carries the offending neuron.
class EngineFault : public std::runtime_error {
 public:
  EngineFault(std::string neuron, const std::string& message)
      : std::runtime_error("neuron " + neuron + ": " + message),
        neuron_(std::move(neuron)) {}

  const std::string& neuron() const { return neuron_; }

 private:
  std::string neuron_;
};

}  // namespace dmm
