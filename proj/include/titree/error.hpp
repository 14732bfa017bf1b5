#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace titree {

enum class Errc {
  NotATree,
  BadLabel,
  NotAnEdge,
  Overflow,
  BadFamilyParams,
  BranchIsAlreadyPath,
  NotPendentPaths,
  LengthOrderViolated,
  InconsistentSizes,
  PreconditionFailed,
  NonIntegerResult,
  ParityError,
  DichotomyViolated,
  NotTI,
  CapExceeded,
  VerificationFailed,
  MalformedSparse6,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Text-format failures also report the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace titree
