#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qte/types.hpp"

namespace qte {

// Maps named CSV columns onto sample fields.
struct ColumnMap {
  std::string y_col;
  std::string a_col;
  std::vector<std::string> x_cols;
  std::optional<std::string> pair_col;
};

// Reads a UTF-8 CSV with a header row. Every mapped cell must parse; a
// malformed or empty mapped cell raises ParseError naming the row. The
// result is passed through validate_sample.
MatchedSample load_csv(const std::string& path, const ColumnMap& schema);

// Writes header y,a,x1..xd[,pair] with full round-trip precision.
void write_csv(const MatchedSample& sample, const std::string& path);

// Parses the matching write_csv layout (used by round-trip checks).
MatchedSample read_csv_default(const std::string& path);

}  // namespace qte
