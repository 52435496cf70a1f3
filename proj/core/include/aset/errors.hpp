#pragma once

#include <stdexcept>
#include <string>

namespace aset {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or unreadable files (cube, labels, model, trace).
class io_error : public error {
public:
  explicit io_error(const std::string& what) : error(what) {}
};

/// Invalid or unsatisfiable configuration (sampler, run, scene specs).
class config_error : public error {
public:
  explicit config_error(const std::string& what) : error(what) {}
};

/// Violated call contract: bad ids, dimension mismatches, duplicates.
class invariant_error : public error {
public:
  explicit invariant_error(const std::string& what) : error(what) {}
};

} // namespace aset
