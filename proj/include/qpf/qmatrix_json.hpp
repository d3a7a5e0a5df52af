#pragma once

#include "qmatrix.hpp"

#include <json.hpp>

namespace qpf {

using ordered_json = nlohmann::ordered_json;

/// {shape, terms: [{word: [[j,i],...], coeff: "q^-1 + 2*q^3"}]}
inline ordered_json element_to_json(const QMatrixElement& e) {
  ordered_json j;
  j["shape"] = {e.m, e.n};
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : e.terms) {
    ordered_json t;
    ordered_json word = ordered_json::array();
    for (const QVar& v : w) word.push_back({v.row, v.col});
    t["word"] = std::move(word);
    t["coeff"] = c.to_string();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline QMatrixElement element_from_json(const ordered_json& j) {
  QMatrixElement e;
  e.m = j.at("shape").at(0).get<int>();
  e.n = j.at("shape").at(1).get<int>();
  for (const auto& t : j.at("terms")) {
    QWord w;
    for (const auto& v : t.at("word")) w.push_back(QVar{v.at(0).get<int>(), v.at(1).get<int>()});
    if (!word_sorted(w)) throw std::invalid_argument("element_from_json: word not in normal form");
    e.add(w, LaurentPoly::parse(t.at("coeff").get<std::string>()));
  }
  return e;
}

inline std::string monomial_to_string(const QWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += "x[" + std::to_string(w[i].row) + "," + std::to_string(w[i].col) + "]";
  }
  return s;
}

inline std::string element_to_text(const QMatrixElement& e) {
  if (e.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : e.terms) {
    std::string cs = c.to_string();
    if (!first) s += " + ";
    first = false;
    if (cs == "1" && !w.empty()) s += monomial_to_string(w);
    else if (w.empty()) s += cs;
    else {
      bool simple = cs.find(' ') == std::string::npos && cs.find('-') == std::string::npos;
      s += (simple ? cs : "(" + cs + ")") + "*" + monomial_to_string(w);
    }
  }
  return s;
}

} // namespace qpf
