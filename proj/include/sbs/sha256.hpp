#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sbs::util {

// Incremental SHA-256 (FIPS 180-4).
class Sha256 {
public:
    Sha256();
    void update(const void* data, size_t len);
    void update(std::string_view data) { update(data.data(), data.size()); }
    // Finalises and returns the digest as 64 lowercase hex characters.
    std::string hex_digest();

private:
    void process_block(const uint8_t* block);

    uint32_t state_[8];
    uint64_t total_len_ = 0;
    uint8_t buffer_[64];
    size_t buffer_len_ = 0;
    bool finalized_ = false;
};

std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::string& path);

} // namespace sbs::util
