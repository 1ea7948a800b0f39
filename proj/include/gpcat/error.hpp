#pragma once

#include <stdexcept>
#include <string>

namespace gpcat {

enum class ErrorKind {
  field_mismatch,
  dimension,
  validation,
  parse,
  possibly_infinite,
  inconsistent,
  inconclusive,
  io,
  argument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gpcat
