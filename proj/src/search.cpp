#include "diffset/search.hpp"

namespace diffset {

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::Exists: return "EXISTS";
    case SearchMode::Count: return "COUNT";
    case SearchMode::All: return "ALL";
  }
  return "?";
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Exists: return "EXISTS";
    case SearchStatus::DsOnly: return "DS_ONLY";
    case SearchStatus::None: return "NONE";
    case SearchStatus::Timeout: return "TIMEOUT";
  }
  return "?";
}

}  // namespace diffset
