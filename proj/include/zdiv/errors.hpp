#pragma once

#include <stdexcept>
#include <string>

namespace zdiv {

/// Malformed input: ragged tables, out-of-range indices, unparsable text.
class structural_error : public std::runtime_error {
 public:
  explicit structural_error(const std::string& what) : std::runtime_error("structural error: " + what) {}
};

/// Well-formed tables that violate a semiring or semimodule axiom.
class axiom_error : public std::runtime_error {
 public:
  explicit axiom_error(const std::string& what) : std::runtime_error("axiom error: " + what) {}
};

/// A configured size bound would be exceeded.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error("cap exceeded: " + what) {}
};

/// An operation was called outside its documented domain.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error("precondition error: " + what) {}
};

/// The inputs do not satisfy the hypotheses of the statement being checked.
class hypothesis_error : public std::runtime_error {
 public:
  explicit hypothesis_error(const std::string& what) : std::runtime_error("hypothesis error: " + what) {}
};

/// Classification of the one-element semimodule, whose zero-divisor notions are undefined.
class zero_semimodule_error : public precondition_error {
 public:
  explicit zero_semimodule_error(const std::string& what) : precondition_error("zero semimodule: " + what) {}
};

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

class unknown_builtin : public std::runtime_error {
 public:
  explicit unknown_builtin(const std::string& what) : std::runtime_error("unknown builtin: " + what) {}
};

}  // namespace zdiv
