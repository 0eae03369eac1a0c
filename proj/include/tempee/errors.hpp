#pragma once

#include <stdexcept>
#include <string>

namespace tempee {

// Error taxonomy. The CLI maps these onto process exit codes:
// config/usage -> 2, corrupt data/checkpoint -> 3, numeric failure -> 4.
enum class ErrorKind {
  shape,       // extent mismatches, divisibility violations
  config,      // invalid configuration values
  contract,    // precondition violations (counts, lengths, scalar-ness)
  numeric,     // NaN/Inf where finite values are required
  format,      // on-disk container violations (magic, truncation)
  range,       // value outside its documented interval
  arithmetic,  // integer overflow
  schedule,    // learning-rate schedule exhausted
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error shape_error(const std::string& m) { return Error(ErrorKind::shape, m); }
inline Error config_error(const std::string& m) { return Error(ErrorKind::config, m); }
inline Error contract_error(const std::string& m) { return Error(ErrorKind::contract, m); }
inline Error numeric_error(const std::string& m) { return Error(ErrorKind::numeric, m); }
inline Error format_error(const std::string& m) { return Error(ErrorKind::format, m); }
inline Error range_error(const std::string& m) { return Error(ErrorKind::range, m); }
inline Error arithmetic_error(const std::string& m) { return Error(ErrorKind::arithmetic, m); }
inline Error schedule_error(const std::string& m) { return Error(ErrorKind::schedule, m); }

}  // namespace tempee
