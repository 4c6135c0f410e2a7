#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mhres/matrices.hpp"

namespace mhres {

std::string entry_str(const Rational& v, const CoefLayout& lay);
std::string entry_str(const CoefPoly& v, const CoefLayout& lay);

// alternating multilinear entries as signed sums of brackets [j1 j2 ...],
// a bracket being the determinant of the listed coefficient columns
std::optional<std::string> bracket_form(const CoefPoly& v, const CoefLayout& lay);
inline std::optional<std::string> bracket_form(const Rational&, const CoefLayout&) { return std::nullopt; }

template <class R>
nlohmann::json matrix_to_json(const BlockMatrix<R>& M, const CoefLayout& lay,
                              std::optional<std::pair<int, int>> only = std::nullopt) {
  nlohmann::json rows = nlohmann::json::array(), cols = nlohmann::json::array();
  for (const auto& b : M.rows) rows.push_back(label_str(M.sys, b));
  for (const auto& b : M.cols) cols.push_back(label_str(M.sys, b));
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& bi : M.blocks) {
    if (only && (bi.a != only->first || bi.b != only->second)) continue;
    nlohmann::json ent = nlohmann::json::array();
    for (std::size_t i = 0; i < bi.nrows; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < bi.ncols; ++j) row.push_back(entry_str(M.entries[bi.row0 + i][bi.col0 + j], lay));
      ent.push_back(row);
    }
    blocks.push_back({{"a", bi.a},
                      {"b", bi.b},
                      {"sourceI", bi.source_ep},
                      {"targetJ", bi.target_ep},
                      {"kind", block_kind_name(bi.kind)},
                      {"row0", bi.row0},
                      {"col0", bi.col0},
                      {"entries", ent}});
  }
  return {{"m", M.m},
          {"orientation", M.rows_are_source ? "rows=K1,cols=K0" : "rows=K0,cols=K1"},
          {"rows", rows},
          {"cols", cols},
          {"blocks", blocks}};
}

template <class R>
std::string matrix_to_latex(const BlockMatrix<R>& M, const CoefLayout& lay) {
  std::ostringstream os;
  os << "\\left[\\begin{array}{";
  for (std::size_t j = 0; j < M.cols.size(); ++j) os << "c";
  os << "}\n";
  for (std::size_t i = 0; i < M.rows.size(); ++i) {
    for (std::size_t j = 0; j < M.cols.size(); ++j) {
      if (j) os << " & ";
      const R& e = M.entries[i][j];
      if (auto br = bracket_form(e, lay)) {
        os << *br;
        continue;
      }
      std::string s = entry_str(e, lay);
      // a0 -> a_{0}
      std::string t;
      for (std::size_t c = 0; c < s.size(); ++c) {
        if (std::isalpha(static_cast<unsigned char>(s[c])) && c + 1 < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[c + 1]))) {
          t += s[c];
          t += "_{";
          ++c;
          while (c < s.size() && std::isdigit(static_cast<unsigned char>(s[c]))) t += s[c++];
          t += "}";
          --c;
        } else if (s[c] == '*') {
          t += " ";
        } else {
          t += s[c];
        }
      }
      os << t;
    }
    os << (i + 1 < M.rows.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{array}\\right]\n";
  return os.str();
}

inline std::string matrix_to_csv(const BlockMatrix<Rational>& M) {
  std::ostringstream os;
  for (const auto& row : M.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j].get_str();
    os << "\n";
  }
  return os.str();
}

}  // namespace mhres
