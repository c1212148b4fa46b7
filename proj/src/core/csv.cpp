#include "core/csv.hpp"

#include "core/common.hpp"

#include <cstdio>
#include <ctime>

namespace flokit {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string iso8601_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void csv_writer::open(const std::string& path, const std::string& comment,
                      const std::vector<std::string>& columns) {
    out_.open(path);
    if (!out_) fail(errc::io_failure, "cannot open CSV output: " + path);
    out_ << "# " << comment << " generated=" << iso8601_now() << "\n";
    width_ = columns.size();
    for (size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
    out_ << "\n";
}

void csv_writer::row(const std::vector<std::string>& cells) {
    if (!out_.is_open()) fail(errc::io_failure, "CSV row on closed writer");
    if (cells.size() != width_) fail(errc::size_mismatch, "CSV row width mismatch");
    for (size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << "\n";
}

void csv_writer::close() {
    if (out_.is_open()) {
        out_.close();
        if (out_.fail()) fail(errc::io_failure, "CSV close failed");
    }
}

} // namespace flokit
