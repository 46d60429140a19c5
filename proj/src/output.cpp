#include "bosesemi/output.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace bosesemi {

void Table::add(std::vector<Cell> row) {
  row.resize(columns.size());
  rows.push_back(std::move(row));
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 6);
  std::string s(buf, res.ptr);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

namespace {

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return format_real(v);
      const std::string s = format_real(v);
      double rounded = 0.0;
      std::from_chars(s.data(), s.data() + s.size(), rounded);
      return rounded;
    }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << csv_escape(table.columns[i]);
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << csv_escape(cell_text(row[i]));
    }
    os << '\n';
  }
}

nlohmann::ordered_json to_json(const nlohmann::ordered_json& config, const Table& table) {
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      obj[table.columns[i]] = i < row.size() ? cell_json(row[i]) : nullptr;
    }
    results.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc;
  doc["config"] = config;
  doc["results"] = std::move(results);
  return doc;
}

void write_table(std::ostream& os, OutputFormat format, const nlohmann::ordered_json& config,
                 const Table& table) {
  if (format == OutputFormat::csv) {
    write_csv(os, table);
  } else {
    os << to_json(config, table).dump(2) << '\n';
  }
}

}  // namespace bosesemi
