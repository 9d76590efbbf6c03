#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tracelab {

using ParamMap = std::map<std::string, std::vector<double>>;

/// Parses "p=0.25:1.75:0.25,r=0.7" or "p=0.1,0.2,r=1". A token with '=' starts
/// a key; bare tokens extend the previous key's list. start:stop:step ranges
/// are inclusive of stop. Throws ArgumentError on malformed input.
ParamMap parse_params(std::string_view text);

/// Merges `more` into `into`; later keys replace earlier ones.
void merge_params(ParamMap& into, const ParamMap& more);

}  // namespace tracelab
