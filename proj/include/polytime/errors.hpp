#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polytime {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad bitstring literal (anything other than "", "eps" or 0/1 characters).
struct MalformedLiteral : Error {
  using Error::Error;
};

// Misuse of the polynomial algebra: variable-count mismatch, index out of
// range, composition arity mismatch.
struct PolyError : Error {
  using Error::Error;
};

// Expression failed arity checking. `path` names the offending subterm,
// e.g. "rec.h0.comp.g[2]".
struct IllFormed : Error {
  IllFormed(std::string path_, const std::string& what_)
      : Error(path_.empty() ? what_ : path_ + ": " + what_),
        path(std::move(path_)) {}
  std::string path;
};

// Arity/argument-count mismatch at evaluation time.
struct EvalError : Error {
  using Error::Error;
};

// A Rec step broke the RecBounded side condition |f(y,x)| <= |j(y,x)|.
struct BoundViolation : Error {
  BoundViolation(std::string path_, std::string inputs_,
                 std::size_t value_length_, std::size_t bound_length_)
      : Error("RecBounded violated at " + path_ + " on " + inputs_ + ": |f| = " +
              std::to_string(value_length_) + " > |j| = " +
              std::to_string(bound_length_)),
        path(std::move(path_)),
        inputs(std::move(inputs_)),
        value_length(value_length_),
        bound_length(bound_length_) {}
  std::string path;
  std::string inputs;   // rendered argument literals
  std::size_t value_length;
  std::size_t bound_length;
};

// Arity inference on a B_inf term hit an unsatisfiable constraint.
struct InferError : Error {
  using Error::Error;
};

// Unknown stdlib/definition name.
struct LookupError : Error {
  using Error::Error;
};

// Concrete-syntax parse failure with source position (1-based).
struct ParseError : Error {
  ParseError(std::size_t line_, std::size_t column_, const std::string& what_)
      : Error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + what_),
        line(line_), column(column_) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace polytime
