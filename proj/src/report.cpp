#include "mixorient/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <stdexcept>

namespace mixorient {

ReportDocument::ReportDocument() {
  add("tool", std::string(kToolName));
  add("version", std::string(kToolVersion));
}

void ReportDocument::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
}

void ReportDocument::add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }

void ReportDocument::add(std::string key, double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("cannot format number");
  add(std::move(key), std::string(buf.data(), ptr));
}

void ReportDocument::add(std::string key, bool value) {
  add(std::move(key), std::string(value ? "true" : "false"));
}

std::string ReportDocument::get(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return v;
  }
  return {};
}

std::string ReportDocument::render() const {
  std::string out;
  for (const auto& [k, v] : fields_) out += k + ": " + v + "\n";
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

}  // namespace mixorient
