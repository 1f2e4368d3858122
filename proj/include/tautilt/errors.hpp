#pragma once

#include <stdexcept>
#include <string>

namespace tautilt {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

class InvalidRelation : public Error {
 public:
  explicit InvalidRelation(const std::string& msg)
      : Error("invalid relation: " + msg) {}
};

class NotAdmissible : public Error {
 public:
  explicit NotAdmissible(const std::string& msg)
      : Error("not admissible: " + msg) {}
};

class NotProjective : public Error {
 public:
  explicit NotProjective(const std::string& msg)
      : Error("not projective: " + msg) {}
};

class DecompositionInconclusive : public Error {
 public:
  explicit DecompositionInconclusive(const std::string& msg)
      : Error("decomposition inconclusive: " + msg) {}
};

class MutationVerificationFailed : public Error {
 public:
  explicit MutationVerificationFailed(const std::string& msg)
      : Error("mutation verification failed: " + msg) {}
};

class NonIntegral : public Error {
 public:
  explicit NonIntegral(const std::string& msg) : Error("non-integral: " + msg) {}
};

class BrickTestInconclusive : public Error {
 public:
  explicit BrickTestInconclusive(const std::string& msg)
      : Error("brick test inconclusive: " + msg) {}
};

class BrickVerificationFailed : public Error {
 public:
  explicit BrickVerificationFailed(const std::string& msg)
      : Error("brick verification failed: " + msg) {}
};

class CutoffReached : public Error {
 public:
  explicit CutoffReached(const std::string& msg)
      : Error("cutoff reached: " + msg) {}
};

}  // namespace tautilt
