#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace revrec {

std::vector<std::string> split_tab(const std::string& line);

// Fixed 6-decimal rendering used by every score/metric column.
std::string format_fixed6(double v);

// Shortest %.6g rendering, used for p-values.
std::string format_general6(double v);

// Writes to <path>.tmp and renames on commit, so a crash never leaves a
// half-written output file behind. Destruction without commit discards.
class AtomicWriter {
public:
    explicit AtomicWriter(std::filesystem::path path);
    ~AtomicWriter();

    AtomicWriter(const AtomicWriter&) = delete;
    AtomicWriter& operator=(const AtomicWriter&) = delete;

    std::ostream& stream() { return out_; }
    void commit();

private:
    std::filesystem::path path_;
    std::filesystem::path tmp_;
    std::ofstream out_;
    bool committed_ = false;
};

// Reads all lines (without trailing newline characters).
std::vector<std::string> read_lines(const std::filesystem::path& path);

} // namespace revrec
