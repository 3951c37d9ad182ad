#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kahler {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live over different contexts (variable lists, orders or fields).
class ContextError : public Error {
 public:
  using Error::Error;
};

/// A list of images/arguments has the wrong length.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Variable or generator index out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A module row has the wrong number of components.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Shape mismatch in a linear map or matrix argument.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded its configured resource cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Division by zero (includes non-invertible residues mod p).
class ZeroDivisionError : public Error {
 public:
  using Error::Error;
};

/// Malformed construction input that is not a parse problem (bad modulus,
/// duplicate names, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Text input rejected; carries the byte position (1-based) of the offender.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A candidate map does not kill a defining relation.  Carries the offending
/// relation and its (nonzero) image, both canonically printed.
class RelationViolation : public Error {
 public:
  RelationViolation(const std::string& what, std::string relation,
                    std::string image)
      : Error(what + " [relation: " + relation + " -> " + image + "]"),
        relation_(std::move(relation)),
        image_(std::move(image)) {}
  const std::string& relation() const { return relation_; }
  const std::string& image() const { return image_; }

 private:
  std::string relation_;
  std::string image_;
};

/// First components of a pair map fail to be the expected algebra map.
class FirstComponentError : public Error {
 public:
  using Error::Error;
};

/// A square that must commute before a construction applies does not.
class CommutingConditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace kahler
