#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "su3st/su3.hpp"
#include "su3st/verify.hpp"

namespace su3st::cli {

using nlohmann::json;

/// A named generator family ready for emission.
template <class S>
struct NamedMatrices {
  std::string rep;
  std::string which;           // J, K, V or P
  std::vector<std::string> names;
  std::vector<Matrix<S>> mats;
  std::string config;          // scale choices baked into V/P families
};

json entry_json(const ExactScalar& z);
json entry_json(const Complex& z);

template <class S>
json matrix_json(const std::string& name, int index, const Matrix<S>& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(entry_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"name", name}, {"index", index}, {"rows", m.rows()}, {"cols", m.cols()},
              {"entries", std::move(rows)}};
}

template <class S>
json gens_json(const NamedMatrices<S>& nm, const std::string& backend,
               const std::string& branch) {
  json out{{"command", "gens"},
           {"rep", nm.rep},
           {"which", nm.which},
           {"backend", backend},
           {"index_convention",
            "generator indices are 1-based; vector index 9 is time; entries row-major"}};
  if (!branch.empty()) out["branch"] = branch;
  if (!nm.config.empty()) out["config"] = nm.config;
  json mats = json::array();
  for (size_t k = 0; k < nm.mats.size(); ++k)
    mats.push_back(matrix_json(nm.names[k], static_cast<int>(k) + 1, nm.mats[k]));
  out["matrices"] = std::move(mats);
  return out;
}

template <class S>
void gens_csv(std::ostream& os, const NamedMatrices<S>& nm);

/// Re-reads one "matrices" element written by matrix_json.  The backend is
/// taken from the enclosing document.
ExactMatrix matrix_from_json_exact(const json& j);
FloatMatrix matrix_from_json_float(const json& j);

json structure_json(const StructureConstants<ExactReal>& sc);
json structure_json(const StructureConstants<double>& sc);
void structure_csv(std::ostream& os, const StructureConstants<ExactReal>& sc);
void structure_csv(std::ostream& os, const StructureConstants<double>& sc);

json report_json(const SuiteReport& rep, const ToleranceConfig& tol,
                 const std::optional<Corruption>& corrupt);
void report_console(std::ostream& os, const SuiteReport& rep);

}  // namespace su3st::cli
