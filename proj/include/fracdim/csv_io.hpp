#pragma once

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "fracdim/common.hpp"
#include "fracdim/point_set.hpp"

namespace fracdim {

// Point-set CSV: one point per row, d comma-separated decimal columns,
// optional comment rows starting with '#'. Values are printed with
// shortest-round-trip formatting so save/load is bit-exact.

inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, const std::string& context) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  // tolerate surrounding spaces
  while (first < last && (*first == ' ' || *first == '\t')) ++first;
  while (last > first && (*(last - 1) == ' ' || *(last - 1) == '\t' || *(last - 1) == '\r'))
    --last;
  const auto res = std::from_chars(first, last, value);
  require(res.ec == std::errc() && res.ptr == last,
          context + ": malformed number '" + std::string(text) + "'");
  require(std::isfinite(value), context + ": non-finite value");
  return value;
}

/// Writes content to path via a temp file + atomic rename, so a failed run
/// never leaves a partial output file.
inline void atomic_write_file(const std::filesystem::path& path,
                              const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(out.good(), "cannot open for writing: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    require(out.good(), "write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw error("rename failed for " + path.string() + ": " + ec.message());
  }
}

inline std::string points_to_csv(const PointSet& ps) {
  std::string out;
  out.reserve(ps.size() * ps.dim() * 20);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t c = 0; c < ps.dim(); ++c) {
      if (c) out += ',';
      out += format_double(ps.coord(i, c));
    }
    out += '\n';
  }
  return out;
}

inline void save_csv(const PointSet& ps, const std::filesystem::path& path) {
  atomic_write_file(path, points_to_csv(ps));
}

inline PointSet points_from_csv_text(const std::string& text,
                                     const std::string& context) {
  std::vector<double> flat;
  std::size_t dim = 0, row = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    // skip blanks and comment rows
    std::size_t start = view.find_first_not_of(" \t");
    if (start == std::string_view::npos) continue;
    if (view[start] == '#') continue;
    std::size_t cols = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = view.find(',', pos);
      const std::string_view cell =
          comma == std::string_view::npos ? view.substr(pos) : view.substr(pos, comma - pos);
      flat.push_back(parse_double(cell, context + " row " + std::to_string(row)));
      ++cols;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (dim == 0) {
      dim = cols;
    } else {
      require(cols == dim, context + " row " + std::to_string(row) +
                               ": expected " + std::to_string(dim) + " columns, got " +
                               std::to_string(cols));
    }
  }
  require(dim >= 1, context + ": no data rows");
  return PointSet(dim, std::move(flat));
}

inline PointSet load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return points_from_csv_text(buf.str(), path.string());
}

}  // namespace fracdim
