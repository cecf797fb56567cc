#include "bitplane_lab/error.hpp"

namespace bpl {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::CorruptData: return "CorruptData";
    case Errc::IoError: return "IoError";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::WindowTooLarge: return "WindowTooLarge";
    case Errc::DegenerateHistogram: return "DegenerateHistogram";
    case Errc::EmptyDataset: return "EmptyDataset";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::LayoutNotRecognized: return "LayoutNotRecognized";
    case Errc::MissingImage: return "MissingImage";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::FeatureJoinMismatch: return "FeatureJoinMismatch";
    case Errc::SchemaMismatch: return "SchemaMismatch";
    case Errc::RaggedRows: return "RaggedRows";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

}  // namespace bpl
