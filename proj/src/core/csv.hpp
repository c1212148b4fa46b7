#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace flokit {

// 12-significant-digit decimal rendering used in every CSV body
std::string fmt12(double v);
std::string iso8601_now();

// CSV file with one "# ..." comment header line (the only non-deterministic
// line: it carries the generation timestamp), then a column-name row, then
// deterministic data rows
class csv_writer {
  public:
    csv_writer() = default;
    void open(const std::string& path, const std::string& comment,
              const std::vector<std::string>& columns);
    void row(const std::vector<std::string>& cells);
    void close();
    bool is_open() const { return out_.is_open(); }

  private:
    std::ofstream out_;
    size_t width_ = 0;
};

} // namespace flokit
