#include "posepick/config.hpp"

#include "posepick/pose_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace posepick {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

KeyValues KeyValues::parse_string(const std::string& text, const std::string& name) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError(name, lineno, "expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw ParseError(name, lineno, "empty key");
    kv.set(key, value);
  }
  return kv;
}

KeyValues KeyValues::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str(), path);
}

const KeyValues::Entry* KeyValues::find(const std::string& key) const {
  for (const Entry& e : entries_) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

bool KeyValues::has(const std::string& key) const { return find(key) != nullptr; }

void KeyValues::set(const std::string& key, const std::string& value) {
  for (Entry& e : entries_) {
    if (e.key == key) {
      e.value = value;
      return;
    }
  }
  entries_.push_back(Entry{key, value});
}

std::string KeyValues::get_string(const std::string& key) const {
  const Entry* e = find(key);
  if (!e) throw std::invalid_argument("missing config key: " + key);
  return e->value;
}

std::string KeyValues::get_string(const std::string& key, const std::string& def) const {
  const Entry* e = find(key);
  return e ? e->value : def;
}

double KeyValues::get_double(const std::string& key) const {
  const std::string v = get_string(key);
  return parse_double(v, "config key " + key, 0);
}

double KeyValues::get_double(const std::string& key, double def) const {
  return has(key) ? get_double(key) : def;
}

std::int64_t KeyValues::get_int(const std::string& key) const {
  const std::string v = get_string(key);
  std::int64_t out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
    throw std::invalid_argument("config key " + key + ": invalid integer '" + v + "'");
  }
  return out;
}

std::int64_t KeyValues::get_int(const std::string& key, std::int64_t def) const {
  return has(key) ? get_int(key) : def;
}

std::uint64_t KeyValues::get_u64(const std::string& key, std::uint64_t def) const {
  if (!has(key)) return def;
  const std::string v = get_string(key);
  std::uint64_t out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
    throw std::invalid_argument("config key " + key + ": invalid integer '" + v + "'");
  }
  return out;
}

std::vector<double> KeyValues::get_doubles(const std::string& key) const {
  std::istringstream ss(get_string(key));
  std::vector<double> out;
  std::string tok;
  while (ss >> tok) out.push_back(parse_double(tok, "config key " + key, 0));
  return out;
}

std::vector<std::string> KeyValues::keys_with_prefix(const std::string& prefix) const {
  std::vector<std::string> out;
  for (const Entry& e : entries_) {
    if (e.key.rfind(prefix, 0) == 0) out.push_back(e.key);
  }
  return out;
}

std::string KeyValues::serialize() const {
  std::ostringstream out;
  for (const Entry& e : entries_) out << e.key << " = " << e.value << '\n';
  return out.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xF];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf, 16);
}

}  // namespace posepick
