#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace scarlab::csv {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Small CSV emitter; doubles are printed with 17 significant digits so
/// every value round-trips bit-exactly.
class Writer {
 public:
  Writer(const std::string& path, const std::vector<std::string>& header);
  void row(const std::vector<Cell>& cells);
  static std::string format(const Cell& cell);

 private:
  std::ofstream out_;
  std::size_t columns_;
};

}  // namespace scarlab::csv
