#ifndef PSEUDO3D_IO_HPP
#define PSEUDO3D_IO_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

namespace p3s {

class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Whole-file read/write; throw IoError with the path in the message.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace p3s

#endif
