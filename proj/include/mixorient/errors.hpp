#pragma once

#include <stdexcept>
#include <string>

namespace mixorient {

/// Base of every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MIXORIENT_DEFINE_ERROR(Name)        \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

MIXORIENT_DEFINE_ERROR(DisconnectedGraph);
MIXORIENT_DEFINE_ERROR(EmptySet);
MIXORIENT_DEFINE_ERROR(NoCycle);
MIXORIENT_DEFINE_ERROR(NoSuchEdge);
MIXORIENT_DEFINE_ERROR(InvalidValue);
MIXORIENT_DEFINE_ERROR(EtaOutOfRange);
MIXORIENT_DEFINE_ERROR(NotNormalized);
MIXORIENT_DEFINE_ERROR(PreconditionViolated);
MIXORIENT_DEFINE_ERROR(NotStronglyOrientable);
MIXORIENT_DEFINE_ERROR(SourceMismatch);

#undef MIXORIENT_DEFINE_ERROR

class TooManyFreeEdges : public Error {
 public:
  explicit TooManyFreeEdges(int free_edges)
      : Error("too many free edges after forcing: " + std::to_string(free_edges)),
        free_edges_(free_edges) {}
  int free_edges() const { return free_edges_; }

 private:
  int free_edges_;
};

/// Graph file problems, tagged with the 1-based line number.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, IndexOutOfRange, SelfLoop };

  ParseError(Kind kind, int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

}  // namespace mixorient
