#pragma once

#include <string>
#include <string_view>

#include "helix/epsilon.hpp"

namespace helix {

/// Parses a Chern character from either the tuple form "(3,1,-1/2,1/6)"
/// or the serialized 4-array form ["3","1","-1/2","1/6"].
ChernCharacter parse_chern(std::string_view text);

/// The serialized 4-array form, e.g. ["3","1","-1/2","1/6"].
std::string chern_to_json(const ChernCharacter& v);

/// Foundation as an array of four serialized Chern characters.
Foundation parse_foundation_json(std::string_view text);
std::string foundation_to_json(const Foundation& f);

/// Full catalog row as a JSON object with keys
///   index, order, ch, rank, slope, c, chi, wbn{i,h,conjectural}, gg,
///   foundation, mark, resolutions.
std::string record_to_json(const BundleRecord& r);

/// Re-parses the output of record_to_json (round-trip checks and
/// downstream consumers).
BundleRecord record_from_json(std::string_view text);

std::string resolutions_to_json(const std::vector<Resolution>& res);

std::string parents_to_json(const std::pair<ThreeAdic, ThreeAdic>& p);

}  // namespace helix
