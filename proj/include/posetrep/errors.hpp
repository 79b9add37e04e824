#pragma once

#include <stdexcept>
#include <string>

namespace posetrep {

/** Base class for all errors raised by this library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class CycleError : public Error {
 public:
  explicit CycleError(const std::string& what) : Error(what) {}
};
class DuplicateElement : public Error {
 public:
  explicit DuplicateElement(const std::string& what) : Error(what) {}
};
class EmptyPoset : public Error {
 public:
  explicit EmptyPoset(const std::string& what) : Error(what) {}
};
class UnknownElement : public Error {
 public:
  explicit UnknownElement(const std::string& what) : Error(what) {}
};
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};
class NestingViolation : public Error {
 public:
  NestingViolation(const std::string& what, std::string lower, std::string upper)
      : Error(what), lower_element(std::move(lower)), upper_element(std::move(upper)) {}
  std::string lower_element;
  std::string upper_element;
};
class PosetMismatch : public Error {
 public:
  explicit PosetMismatch(const std::string& what) : Error(what) {}
};
class NotAComplement : public Error {
 public:
  explicit NotAComplement(const std::string& what) : Error(what) {}
};
class DependentVectors : public Error {
 public:
  explicit DependentVectors(const std::string& what) : Error(what) {}
};
class ProbeConditionFailed : public Error {
 public:
  explicit ProbeConditionFailed(const std::string& what) : Error(what) {}
};
class ZeroAmbient : public Error {
 public:
  explicit ZeroAmbient(const std::string& what) : Error(what) {}
};
class ZeroSubspace : public Error {
 public:
  explicit ZeroSubspace(const std::string& what) : Error(what) {}
};
class EmptyList : public Error {
 public:
  explicit EmptyList(const std::string& what) : Error(what) {}
};
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};
class NotStable : public Error {
 public:
  explicit NotStable(const std::string& what) : Error(what) {}
};
class ZeroGap : public Error {
 public:
  explicit ZeroGap(const std::string& what) : Error(what) {}
};
class SingularGram : public Error {
 public:
  explicit SingularGram(const std::string& what) : Error(what) {}
};
class NumericalBreakdown : public Error {
 public:
  explicit NumericalBreakdown(const std::string& what) : Error(what) {}
};
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
  std::size_t position;
};
class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};
class CatalogCorrupt : public Error {
 public:
  explicit CatalogCorrupt(const std::string& what) : Error(what) {}
};

}  // namespace posetrep
