#pragma once

#include <stdexcept>
#include <string>

namespace spirit {

enum class Errc {
  ZeroIsrf,
  InvalidKnots,
  ExtrapolationRequired,
  DomainTooSmall,
  OutOfRange,
  RankDeficient,
  NoSupport,
  DegenerateInit,
  ConfigError,
  DataFormat,
  NumericalFailure,
};

const char* errc_name(Errc c);

/// All failure paths in the library throw this; `code` is stable and is what
/// the CLI maps to exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace spirit
