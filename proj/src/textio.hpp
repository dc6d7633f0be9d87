#pragma once

// Small text helpers shared by the file readers and writers.

#include <atomic>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <vector>

#include "netemd/errors.hpp"

namespace netemd::textio {

/// Shortest form that reads back to the same double (at most 17 digits).
inline std::string format_double(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s, std::size_t line = 0) {
  double x = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("not a number: '" + std::string(s) + "'", line);
  }
  return x;
}

inline std::uint64_t parse_uint(std::string_view s, std::size_t line = 0) {
  std::uint64_t x = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("not a non-negative integer: '" + std::string(s) + "'", line);
  }
  return x;
}

/// Splits on tabs and spaces, dropping empty fields.
inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Writes through a sibling temporary file and renames it into place, so a
/// failed write never leaves a partial file behind.
inline void write_file_atomic(const std::filesystem::path& path, const std::function<void(std::ostream&)>& fill) {
  static std::atomic<std::uint64_t> counter{0};
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "_" +
         std::to_string(counter.fetch_add(1));
  try {
    {
      std::ofstream out(tmp, std::ios::binary);
      if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
      fill(out);
      out.flush();
      if (!out) throw IoError("write to " + tmp.string() + " failed");
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

}  // namespace netemd::textio
