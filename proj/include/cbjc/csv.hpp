// csv.hpp — CSV output with a config echo line and a header row.

#pragma once

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace cbjc {

// Writes
//   # config: <echo>
//   col1,col2,...
//   rows in %.14e (15 significant digits)
class CsvWriter {
public:
    // Throws IoError naming the path when the file cannot be opened.
    CsvWriter(const std::filesystem::path& path, const std::string& config_echo,
              const std::vector<std::string>& columns);

    void row(std::span<const double> values);
    // Flushes and checks the stream; throws IoError on failure.
    void close();

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t columns_;
};

std::string format_value(double v);

}  // namespace cbjc
