#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace centrality {

// FNV-1a, 64 bit. Used to fingerprint corpus manifests so a dataset can be
// matched against the corpus it was built from.
std::uint64_t fnv1a64(std::string_view data);

std::string to_hex(std::uint64_t value);

// Shortest decimal form that parses back to the same double. All numeric
// output goes through this so repeated runs produce identical bytes.
std::string format_double(double value);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace centrality
