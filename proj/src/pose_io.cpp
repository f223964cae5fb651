#include "posepick/pose_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace posepick {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;
}

// Parses pose lines with `base_cols` columns plus an optional parent column.
template <typename Row>
std::vector<Row> load_rows(const std::string& path, bool with_parent,
                           Row (*make)(const Pose&, std::uint64_t)) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  const std::size_t ncols = with_parent ? 9 : 8;

  std::vector<Row> rows;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    const auto toks = tokenize(line);
    if (toks.size() != ncols) {
      throw ParseError(path, lineno,
                       "expected " + std::to_string(ncols) + " columns, got " +
                           std::to_string(toks.size()));
    }
    const std::uint64_t id = parse_u64(toks[0], path, lineno);
    if (!seen.insert(id).second) {
      throw ParseError(path, lineno, "duplicate pose id " + std::to_string(id));
    }
    Eigen::Vector3d t(parse_double(toks[1], path, lineno),
                      parse_double(toks[2], path, lineno),
                      parse_double(toks[3], path, lineno));
    Eigen::Quaterniond q(parse_double(toks[4], path, lineno),
                         parse_double(toks[5], path, lineno),
                         parse_double(toks[6], path, lineno),
                         parse_double(toks[7], path, lineno));
    if (std::abs(q.norm() - 1.0) > 1e-6) {
      throw ParseError(path, lineno, "quaternion is not normalized");
    }
    Pose pose;
    try {
      pose = Pose(id, t, q);
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, lineno, e.what());
    }
    const std::uint64_t parent = with_parent ? parse_u64(toks[8], path, lineno) : 0;
    rows.push_back(make(pose, parent));
  }
  return rows;
}

void write_pose_fields(std::ostream& out, const Pose& p) {
  out << p.id << ' ' << format_double(p.t.x()) << ' ' << format_double(p.t.y()) << ' '
      << format_double(p.t.z()) << ' ' << format_double(p.q.w()) << ' '
      << format_double(p.q.x()) << ' ' << format_double(p.q.y()) << ' '
      << format_double(p.q.z());
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& path, std::size_t line, const std::string& message)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + message),
      path_(path),
      line_(line) {}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& token, const std::string& path, std::size_t line) {
  double v = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw ParseError(path, line, "invalid number '" + token + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& token, const std::string& path, std::size_t line) {
  std::uint64_t v = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw ParseError(path, line, "invalid id '" + token + "'");
  }
  return v;
}

std::vector<Pose> load_poses(const std::string& path) {
  return load_rows<Pose>(path, false,
                         +[](const Pose& p, std::uint64_t) { return p; });
}

void save_poses(const std::string& path, const std::vector<Pose>& poses) {
  auto out = open_out(path);
  out << "# id tx ty tz qw qx qy qz\n";
  for (const Pose& p : poses) {
    write_pose_fields(out, p);
    out << '\n';
  }
}

std::vector<CandidatePose> load_pool(const std::string& path) {
  return load_rows<CandidatePose>(path, true, +[](const Pose& p, std::uint64_t parent) {
    return CandidatePose{p, parent};
  });
}

void save_pool(const std::string& path, const std::vector<CandidatePose>& pool) {
  auto out = open_out(path);
  out << "# id tx ty tz qw qx qy qz parent_id\n";
  for (const CandidatePose& c : pool) {
    write_pose_fields(out, c.pose);
    out << ' ' << c.parent_id << '\n';
  }
}

}  // namespace posepick
