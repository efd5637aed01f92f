#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prismdom::detail {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Next line without its terminating LF; nullopt at end of input.
    std::optional<std::string_view> next_line();
    int line_number() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 0;
};

// Whitespace-separated decimal integers; nullopt if any token is not one.
std::optional<std::vector<long long>> parse_ints(std::string_view line);

std::vector<std::string_view> split_words(std::string_view line);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string hex64(std::uint64_t value);

} // namespace prismdom::detail
