#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "defenselab/errors.hpp"
#include "defenselab/io/format.hpp"

namespace defenselab::io {

/// One trace cell: empty, integer, real or label. Reals render as the
/// shortest round-trip decimal in both formats.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct TraceTable {
  std::string name;  // file stem
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class TraceFormat { kCsv, kJsonLines };

inline std::string trace_extension(TraceFormat f) {
  return f == TraceFormat::kCsv ? ".csv" : ".jsonl";
}

namespace detail {

inline void write_atomically(const std::filesystem::path& path, const std::string& data) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << data;
    if (!out) throw IoError("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

inline std::string render_csv(const TraceTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (std::holds_alternative<std::int64_t>(row[c]))
        out += std::to_string(std::get<std::int64_t>(row[c]));
      else if (std::holds_alternative<double>(row[c]))
        out += format_double(std::get<double>(row[c]));
      else if (std::holds_alternative<std::string>(row[c]))
        out += std::get<std::string>(row[c]);
    }
    out += '\n';
  }
  return out;
}

inline std::string render_jsonl(const TraceTable& table) {
  std::string out;
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      if (std::holds_alternative<std::int64_t>(row[c]))
        obj[table.columns[c]] = std::get<std::int64_t>(row[c]);
      else if (std::holds_alternative<double>(row[c]))
        obj[table.columns[c]] = std::get<double>(row[c]);
      else if (std::holds_alternative<std::string>(row[c]))
        obj[table.columns[c]] = std::get<std::string>(row[c]);
    }
    out += obj.dump();
    out += '\n';
  }
  return out;
}

}  // namespace detail

/// Writes one table as `<dir>/<name>.<ext>` (atomic replace); returns the path.
inline std::filesystem::path write_trace(const TraceTable& table, TraceFormat format,
                                         const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string());
  const auto path = dir / (table.name + trace_extension(format));
  detail::write_atomically(path,
                           format == TraceFormat::kCsv ? detail::render_csv(table)
                                                       : detail::render_jsonl(table));
  return path;
}

/// Parses a CSV written by write_trace back into cells (numbers only where
/// they round-trip). Used to recompute aggregates from files.
inline TraceTable read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trace " + path.string());
  TraceTable table;
  table.name = path.stem().string();
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string field;
    for (char ch : line) {
      if (ch == ',') {
        fields.push_back(field);
        field.clear();
      } else {
        field += ch;
      }
    }
    fields.push_back(field);
    if (header) {
      table.columns = fields;
      header = false;
      continue;
    }
    std::vector<Cell> row;
    for (const auto& f : fields) {
      if (f.empty()) {
        row.emplace_back(std::monostate{});
        continue;
      }
      std::int64_t i = 0;
      double d = 0.0;
      if (parse_int(f, i)) row.emplace_back(i);
      else if (parse_double(f, d)) row.emplace_back(d);
      else row.emplace_back(f);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace defenselab::io
