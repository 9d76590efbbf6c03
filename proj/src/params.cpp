#include "tracelab/params.hpp"

#include <cmath>
#include <cstdlib>

#include "tracelab/errors.hpp"

namespace tracelab {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& token) {
  if (token.empty()) throw ArgumentError("empty number in --params");
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || !std::isfinite(v)) {
    throw ArgumentError("invalid number '" + token + "' in --params");
  }
  return v;
}

void append_values(std::vector<double>& out, const std::string& token) {
  const auto first = token.find(':');
  if (first == std::string::npos) {
    out.push_back(parse_number(token));
    return;
  }
  const auto second = token.find(':', first + 1);
  if (second == std::string::npos || token.find(':', second + 1) != std::string::npos) {
    throw ArgumentError("range '" + token + "' must be start:stop:step");
  }
  const double start = parse_number(token.substr(0, first));
  const double stop = parse_number(token.substr(first + 1, second - first - 1));
  const double step = parse_number(token.substr(second + 1));
  if (!(step > 0.0)) throw ArgumentError("range '" + token + "' needs a positive step");
  if (stop < start) throw ArgumentError("range '" + token + "' has stop < start");
  const double count = std::floor((stop - start) / step + 1e-9);
  if (count > 1e6) throw ArgumentError("range '" + token + "' is too long");
  for (int i = 0; i <= static_cast<int>(count); ++i) out.push_back(start + i * step);
}

}  // namespace

ParamMap parse_params(std::string_view text) {
  ParamMap out;
  std::string current;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    const std::string token = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (token.empty()) {
      if (comma == std::string_view::npos && out.empty() && current.empty()) break;
      throw ArgumentError("empty entry in --params");
    }
    const auto eq = token.find('=');
    if (eq != std::string::npos) {
      current = trim(std::string_view(token).substr(0, eq));
      if (current.empty()) throw ArgumentError("missing key before '=' in --params");
      auto& values = out[current];
      values.clear();
      append_values(values, trim(std::string_view(token).substr(eq + 1)));
    } else {
      if (current.empty()) throw ArgumentError("value '" + token + "' has no key in --params");
      append_values(out[current], token);
    }
    if (comma == std::string_view::npos) break;
  }
  return out;
}

void merge_params(ParamMap& into, const ParamMap& more) {
  for (const auto& [key, values] : more) into[key] = values;
}

}  // namespace tracelab
