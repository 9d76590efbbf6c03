#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace tracelab {

enum ExitCode : int { kExitPass = 0, kExitNumericalFail = 1, kExitUsage = 2 };

/// A column-typed table written as CSV or as a JSON array of row objects.
struct Table {
  using Cell = std::variant<double, long long, std::string>;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// RFC-4180 CSV; reals in %.14e.
void write_csv(const Table& table, std::ostream& out);
std::string csv_escape(const std::string& field);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tracelab
