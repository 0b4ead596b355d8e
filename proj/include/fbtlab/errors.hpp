#pragma once

#include <stdexcept>
#include <string>

namespace fbtlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deleting the designated root is never legal.
struct RootDeletionError : Error {
  using Error::Error;
};

// An edge operation referenced an edge absent from the graph.
struct UnknownEdgeError : Error {
  using Error::Error;
};

// Input exceeds a brute-force guard.
struct TooLargeError : Error {
  using Error::Error;
};

// A seeded generator exhausted its retry budget.
struct RetryLimitError : Error {
  using Error::Error;
};

// A forward construction was handed a witness that does not certify.
struct InvalidWitnessError : Error {
  using Error::Error;
};

// A solution lift met a deletion pattern matching no witness.
struct LiftFailureError : Error {
  using Error::Error;
};

// Positioned diagnostic for the text formats. Line numbers are 1-based;
// line 0 marks a document-level problem.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace fbtlab
