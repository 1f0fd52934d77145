#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simplex {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator index outside its admissible range.
class index_error : public error {
 public:
  using error::error;
};

/// Two cells whose boundaries should agree do not.
class boundary_error : public error {
 public:
  using error::error;
};

/// A search or enumeration ran past its configured budget.
class resource_limit_error : public error {
 public:
  using error::error;
};

/// A model could not interpret a cell (e.g. a strict model met a non-identity).
class model_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(std::size_t position, const std::string& what)
      : error("at " + std::to_string(position) + ": " + what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace simplex
