#include <algorithm>
#include <set>

#include "lgc/error.hpp"
#include "lgc/lg_table.hpp"
#include "lgc/text.hpp"

namespace lgc {

namespace {

ClassValidity parse_validity(std::string_view token, const std::string& source, std::size_t line) {
  if (token == "+") return ClassValidity::AlwaysValid;
  if (token == "-") return ClassValidity::AlwaysInvalid;
  if (token == "o") return ClassValidity::PerEntry;
  if (token.empty()) return ClassValidity::Undefined;
  throw Error(ErrorCode::UnknownValueToken, "class matrix value '" + std::string(token) + "'",
              source, line);
}

}  // namespace

bool ClassMatrix::has_class(std::string_view id) const {
  return std::find(classes.begin(), classes.end(), id) != classes.end();
}

ClassValidity ClassMatrix::at(std::string_view class_id, std::string_view feature_id) const {
  const auto c = std::find(classes.begin(), classes.end(), class_id);
  const auto f = std::find(features.begin(), features.end(), feature_id);
  if (c == classes.end() || f == features.end()) return ClassValidity::Undefined;
  const auto& row = cells[static_cast<std::size_t>(c - classes.begin())];
  const auto fi = static_cast<std::size_t>(f - features.begin());
  return fi < row.size() ? row[fi] : ClassValidity::Undefined;
}

ClassMatrix parse_class_matrix(std::istream& source, const std::string& source_name) {
  ClassMatrix matrix;
  std::string line;
  std::size_t line_no = 0;
  if (!text::read_line(source, line, line_no) || text::trim(line).empty()) {
    throw Error(ErrorCode::MissingHeader, "class matrix has no header line", source_name, line_no);
  }
  auto header = text::split(line, '\t');
  std::set<std::string> seen;
  for (std::size_t i = 1; i < header.size(); ++i) {
    std::string id(text::trim(header[i]));
    if (id.empty()) {
      throw Error(ErrorCode::MissingHeader, "empty feature id in header", source_name, line_no);
    }
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::DuplicateFeatureId, "feature '" + id + "' appears twice",
                  source_name, line_no);
    }
    matrix.features.push_back(std::move(id));
  }

  while (text::read_line(source, line, line_no)) {
    if (text::trim(line).empty()) continue;
    const auto cells = text::split(line, '\t');
    std::string class_id(text::trim(cells[0]));
    if (class_id.empty()) {
      throw Error(ErrorCode::UnknownValueToken, "row without class id", source_name, line_no);
    }
    if (matrix.has_class(class_id)) {
      throw Error(ErrorCode::DuplicateClassId, "class '" + class_id + "' appears twice",
                  source_name, line_no);
    }
    if (cells.size() > matrix.features.size() + 1) {
      throw Error(ErrorCode::RowArityMismatch, "more cells than header features", source_name,
                  line_no);
    }
    std::vector<ClassValidity> row(matrix.features.size(), ClassValidity::Undefined);
    for (std::size_t i = 1; i < cells.size(); ++i) {
      row[i - 1] = parse_validity(text::trim(cells[i]), source_name, line_no);
    }
    matrix.classes.push_back(std::move(class_id));
    matrix.cells.push_back(std::move(row));
  }
  return matrix;
}

LgTable resolve_features(const LgTable& table, const ClassMatrix& classes) {
  if (!classes.has_class(table.table_id)) {
    throw Error(ErrorCode::UnknownClass, "table '" + table.table_id + "' is not a class of the matrix");
  }
  LgTable out = table;
  for (const auto& feature : classes.features) {
    const auto validity = classes.at(table.table_id, feature);
    const bool present = out.column(feature).has_value();
    switch (validity) {
      case ClassValidity::PerEntry:
        if (!present) {
          throw Error(ErrorCode::InconsistentMatrix, "feature '" + feature + "' is per-entry for class " +
                                                         table.table_id + " but the table has no such column");
        }
        break;
      case ClassValidity::AlwaysValid:
      case ClassValidity::AlwaysInvalid:
        if (!present) {
          out.features.push_back({feature, FeatureKind::Binary, true});
          const auto cell = validity == ClassValidity::AlwaysValid ? CellValue::plus() : CellValue::minus();
          for (auto& row : out.rows) row.cells.push_back(cell);
        }
        break;
      case ClassValidity::Undefined:
        break;
    }
  }
  return out;
}

}  // namespace lgc
