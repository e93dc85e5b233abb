#ifndef HDAKIT_ERROR_HPP
#define HDAKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hdakit {

/// Base class of every exception thrown by hdakit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition (e.g. k > l for an interval).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class UnknownCube : public Error {
 public:
  explicit UnknownCube(const std::string& name) : Error("unknown cube '" + name + "'") {}
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// A reduction step was refused; `clause()` names the precondition that failed.
class Refusal : public Error {
 public:
  Refusal(std::string clause, const std::string& detail)
      : Error("refused (" + clause + "): " + detail), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

/// Malformed input document. `where()` is a JSON pointer or "line:column".
class DataError : public Error {
 public:
  DataError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// List of human-readable defects; empty means "valid".
struct ValidationReport {
  std::vector<std::string> issues;

  bool ok() const { return issues.empty(); }
  void add(std::string issue) { issues.push_back(std::move(issue)); }
  void append(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  }
};

}  // namespace hdakit

#endif  // HDAKIT_ERROR_HPP
