#include "sigmax/error.hpp"

namespace sigmax {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::space_too_large: return "SpaceTooLarge";
    case Errc::foreign_label: return "ForeignLabel";
    case Errc::universe_mismatch: return "UniverseMismatch";
    case Errc::empty_reference: return "EmptyReference";
    case Errc::both_empty: return "BothEmpty";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::degenerate_grid: return "DegenerateGrid";
    case Errc::zero_total: return "ZeroTotal";
    case Errc::kind_mismatch: return "KindMismatch";
    case Errc::space_mismatch: return "SpaceMismatch";
    case Errc::all_zero_given: return "AllZeroGiven";
    case Errc::zero_evidence: return "ZeroEvidence";
    case Errc::not_exhaustive: return "NotExhaustive";
    case Errc::unknown_fixture: return "UnknownFixture";
    case Errc::internal_disagreement: return "InternalDisagreement";
    case Errc::fixture_invalid: return "FixtureInvalid";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace sigmax
