#include "spirit/common.hpp"

namespace spirit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroIsrf: return "ZeroIsrf";
    case Errc::InvalidKnots: return "InvalidKnots";
    case Errc::ExtrapolationRequired: return "ExtrapolationRequired";
    case Errc::DomainTooSmall: return "DomainTooSmall";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NoSupport: return "NoSupport";
    case Errc::DegenerateInit: return "DegenerateInit";
    case Errc::ConfigError: return "ConfigError";
    case Errc::DataFormat: return "DataFormat";
    case Errc::NumericalFailure: return "NumericalFailure";
  }
  return "UnknownError";
}

}  // namespace spirit
