#ifndef RCM_IO_HPP
#define RCM_IO_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace rcm {

inline constexpr const char* kArtifactVersion = "rcm 0.1.0";

/// CSV with LF line endings, '.' decimals, 17 significant digits for doubles.
class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

    CsvWriter& field(const std::string& s);
    CsvWriter& field(double v);
    CsvWriter& field(std::int64_t v);
    CsvWriter& field(int v) { return field(static_cast<std::int64_t>(v)); }
    CsvWriter& field(std::uint64_t v);
    CsvWriter& field(bool b) { return field(std::string(b ? "1" : "0")); }
    void end_row();

  private:
    std::ofstream os_;
    std::size_t columns_;
    std::size_t in_row_ = 0;
    void sep();
};

std::string format_double(double v);

/// key=value lines, LF endings.
void write_manifest(const std::filesystem::path& path,
                    const std::vector<std::pair<std::string, std::string>>& entries);

std::uint64_t fnv1a64(const std::string& data);
std::string hex16(std::uint64_t v);

} // namespace rcm

#endif
