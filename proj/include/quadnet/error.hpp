#pragma once

#include <stdexcept>
#include <string>

namespace quadnet {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed; `position` is a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Generators are linearly dependent (fewer than 3 for a net, 2 for a pencil).
class RankError : public Error {
 public:
  RankError(const std::string& what, int rank) : Error(what), rank_(rank) {}
  int rank() const noexcept { return rank_; }

 private:
  int rank_;
};

/// A mathematical object that does not exist for the input (vertex of a
/// quadric of rank != 4, Segre symbol of a wholly singular pencil, ...).
class UndefinedObject : public Error {
 public:
  using Error::Error;
};

class VertexUndefined : public UndefinedObject {
 public:
  explicit VertexUndefined(int rank)
      : UndefinedObject("vertex undefined: quadric has rank " + std::to_string(rank)), rank_(rank) {}
  int rank() const noexcept { return rank_; }

 private:
  int rank_;
};

class WhollySingularPencil : public UndefinedObject {
 public:
  WhollySingularPencil() : UndefinedObject("wholly singular pencil: discriminant is identically zero") {}
};

class IdenticallyZero : public Error {
 public:
  IdenticallyZero() : Error("polynomial is identically zero") {}
};

}  // namespace quadnet
