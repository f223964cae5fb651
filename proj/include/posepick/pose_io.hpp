#pragma once

#include "posepick/candidates.hpp"
#include "posepick/pose.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace posepick {

/// Malformed input file: carries "path:line: message" in what().
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& message);
  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  std::string path_;
  std::size_t line_ = 0;
};

/// Shortest decimal representation that round-trips the exact double value.
std::string format_double(double v);
double parse_double(const std::string& token, const std::string& path, std::size_t line);
std::uint64_t parse_u64(const std::string& token, const std::string& path, std::size_t line);

// Pose list text format, shared across the pipeline: one pose per line,
// whitespace-separated `id tx ty tz qw qx qy qz`, '#' comment lines ignored,
// ids unique. Candidate pools append a trailing `parent_id` column.

std::vector<Pose> load_poses(const std::string& path);
void save_poses(const std::string& path, const std::vector<Pose>& poses);

std::vector<CandidatePose> load_pool(const std::string& path);
void save_pool(const std::string& path, const std::vector<CandidatePose>& pool);

}  // namespace posepick
