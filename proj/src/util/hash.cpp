#include "clinsynth/util/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace clinsynth::util {

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256: digest computation failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0x0F]);
    }
    return out;
}

std::uint64_t derive_subseed(std::uint64_t seed, std::string_view scope) {
    const std::string key = std::to_string(seed) + ":" + std::string(scope);
    const std::string h = sha256_hex(key);
    std::uint64_t out = 0;
    for (int i = 0; i < 16; ++i) {
        const char c = h[static_cast<std::size_t>(i)];
        const std::uint64_t nibble =
            c <= '9' ? static_cast<std::uint64_t>(c - '0') : static_cast<std::uint64_t>(c - 'a' + 10);
        out = (out << 4) | nibble;
    }
    return out;
}

}  // namespace clinsynth::util
