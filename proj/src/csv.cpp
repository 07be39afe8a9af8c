#include "cbjc/csv.hpp"

#include "cbjc/errors.hpp"

#include <cstdio>

namespace cbjc {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.14e", v);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::string& config_echo,
                     const std::vector<std::string>& columns)
    : path_(path), out_(path), columns_(columns.size()) {
    if (!out_) throw IoError("cannot open " + path.string() + " for writing");
    out_ << "# config: " << config_echo << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
    out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
    if (values.size() != columns_) throw IoError(path_.string() + ": row width does not match header");
    for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_value(values[i]);
    out_ << '\n';
}

void CsvWriter::close() {
    out_.flush();
    if (!out_) throw IoError("write failed for " + path_.string());
    out_.close();
}

}  // namespace cbjc
