#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace posepick {

/// Flat `key = value` configuration text with section-prefixed keys
/// (e.g. `perturb.delta_t = 0.20`). Lines whose first non-blank character
/// is '#' are comments. Later assignments to the same key win, which lets
/// override lines be appended to a snapshot and re-parsed.
class KeyValues {
 public:
  static KeyValues parse_file(const std::string& path);
  static KeyValues parse_string(const std::string& text, const std::string& name = "<config>");

  bool has(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  /// Accessors throw std::invalid_argument naming the key when it is absent
  /// (no-default overloads) or malformed.
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& def) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double def) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t def) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t def) const;

  /// Whitespace-separated numeric list value.
  std::vector<double> get_doubles(const std::string& key) const;

  /// Keys beginning with `prefix`, in insertion order.
  std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

  /// Canonical `key = value` text, one line per key, insertion order.
  std::string serialize() const;

 private:
  struct Entry {
    std::string key;
    std::string value;
  };
  const Entry* find(const std::string& key) const;
  std::vector<Entry> entries_;
};

/// FNV-1a 64-bit digest of a byte string, as 16 hex characters. Used to
/// fingerprint effective configurations for provenance headers.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace posepick
