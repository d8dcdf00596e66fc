#include "qte/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qte {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& cell, size_t row, const std::string& col) {
  const std::string t = trim(cell);
  if (t.empty()) {
    throw ParseError("row " + std::to_string(row) + ": missing value in column '" +
                     col + "'");
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError("row " + std::to_string(row) + ": cannot parse '" + t +
                     "' in column '" + col + "'");
  }
  return v;
}

int find_column(const std::vector<std::string>& header, const std::string& name) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == name) return static_cast<int>(i);
  }
  throw ParseError("column '" + name + "' not found in header");
}

}  // namespace

MatchedSample load_csv(const std::string& path, const ColumnMap& schema) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  if (schema.x_cols.empty()) throw BadConfig("at least one covariate column required");

  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty file '" + path + "'");
  const auto header = split_line(line);

  const int yi = find_column(header, schema.y_col);
  const int ai = find_column(header, schema.a_col);
  std::vector<int> xi;
  for (const auto& c : schema.x_cols) xi.push_back(find_column(header, c));
  int pi = -1;
  if (schema.pair_col) pi = find_column(header, *schema.pair_col);

  std::vector<Observation> raw;
  size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto cells = split_line(line);
    auto cell = [&](int idx) -> const std::string& {
      static const std::string empty;
      return idx < static_cast<int>(cells.size()) ? cells[static_cast<size_t>(idx)]
                                                  : empty;
    };

    Observation o;
    o.y = parse_double(cell(yi), row, schema.y_col);
    const double a = parse_double(cell(ai), row, schema.a_col);
    if (a != 0.0 && a != 1.0) {
      throw ParseError("row " + std::to_string(row) + ": treatment must be 0 or 1, got '" +
                       trim(cell(ai)) + "'");
    }
    o.a = static_cast<int>(a);
    for (size_t k = 0; k < xi.size(); ++k) {
      o.x.push_back(parse_double(cell(xi[k]), row, schema.x_cols[k]));
    }
    if (pi >= 0) {
      const double p = parse_double(cell(pi), row, *schema.pair_col);
      if (p < 0.0 || p != static_cast<double>(static_cast<std::int64_t>(p))) {
        throw ParseError("row " + std::to_string(row) +
                         ": pair id must be a nonnegative integer");
      }
      o.pair_id = static_cast<std::int64_t>(p);
    }
    raw.push_back(std::move(o));
  }

  return validate_sample(raw, /*require_pairs=*/false);
}

void write_csv(const MatchedSample& sample, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");

  const int d = sample.dim_x();
  out << "y,a";
  for (int k = 1; k <= d; ++k) out << ",x" << k;
  const bool with_pair = sample.has_pairs();
  if (with_pair) out << ",pair";
  out << "\n";

  // Re-derive each unit's pair label from the (possibly re-ordered) pair list.
  std::vector<std::int64_t> label(static_cast<size_t>(sample.n_units()), -1);
  if (with_pair) {
    for (int j = 0; j < sample.n_pairs(); ++j) {
      const auto& p = sample.pairs()[static_cast<size_t>(j)];
      label[static_cast<size_t>(p.first)] = j;
      label[static_cast<size_t>(p.second)] = j;
    }
  }

  char buf[64];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
  };
  for (int i = 0; i < sample.n_units(); ++i) {
    const Observation& o = sample.obs(i);
    put(o.y);
    out << ',' << o.a;
    for (double v : o.x) {
      out << ',';
      put(v);
    }
    if (with_pair) out << ',' << label[static_cast<size_t>(i)];
    out << "\n";
  }
}

MatchedSample read_csv_default(const std::string& path) {
  std::ifstream probe(path);
  std::string header;
  if (!probe || !std::getline(probe, header)) {
    throw ParseError("cannot open '" + path + "'");
  }
  const auto cols = split_line(header);
  ColumnMap m;
  m.y_col = "y";
  m.a_col = "a";
  for (const auto& c : cols) {
    const std::string t = trim(c);
    if (t.size() >= 2 && t[0] == 'x') m.x_cols.push_back(t);
    if (t == "pair") m.pair_col = t;
  }
  return load_csv(path, m);
}

}  // namespace qte
