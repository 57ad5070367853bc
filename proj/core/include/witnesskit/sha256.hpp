#pragma once

#include <string>

namespace witnesskit {

/// Hex digest of SHA-256 over the given bytes.
std::string sha256_hex(const std::string& data);

}  // namespace witnesskit
