#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mixorient {

inline constexpr std::string_view kToolName = "mixorient";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Ordered `key: value` text document. Integers are written exactly and
/// reals in shortest round-trip form, so identical inputs give identical bytes.
class ReportDocument {
 public:
  ReportDocument();

  void add(std::string key, std::string value);
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, long long value);
  void add(std::string key, int value) { add(std::move(key), static_cast<long long>(value)); }
  void add(std::string key, double value);
  void add(std::string key, bool value);

  /// Value for `key`, or empty when absent.
  std::string get(std::string_view key) const;
  std::string render() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

/// Lower-case hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

}  // namespace mixorient
