#include "serialize.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace su3st::cli {

json entry_json(const ExactScalar& z) { return json::array({z.re().str(), z.im().str()}); }
json entry_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

namespace {

std::string csv_value(const ExactReal& v) { return v.str(); }
std::string csv_value(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string csv_re(const ExactScalar& z) { return z.re().str(); }
std::string csv_im(const ExactScalar& z) { return z.im().str(); }
std::string csv_re(const Complex& z) { return csv_value(z.real()); }
std::string csv_im(const Complex& z) { return csv_value(z.imag()); }

}  // namespace

template <class S>
void gens_csv(std::ostream& os, const NamedMatrices<S>& nm) {
  os << "rep,name,row,col,re,im\n";
  for (size_t k = 0; k < nm.mats.size(); ++k) {
    const Matrix<S>& m = nm.mats[k];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        os << nm.rep << ',' << nm.names[k] << ',' << r + 1 << ',' << c + 1 << ','
           << csv_re(m(r, c)) << ',' << csv_im(m(r, c)) << '\n';
  }
}

template void gens_csv<ExactScalar>(std::ostream&, const NamedMatrices<ExactScalar>&);
template void gens_csv<Complex>(std::ostream&, const NamedMatrices<Complex>&);

ExactMatrix matrix_from_json_exact(const json& j) {
  ExactMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const json& rows = j.at("entries");
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const json& e = rows.at(static_cast<size_t>(r)).at(static_cast<size_t>(c));
      m(r, c) = ExactScalar(ExactReal::parse(e.at(0).get<std::string>()),
                            ExactReal::parse(e.at(1).get<std::string>()));
    }
  return m;
}

FloatMatrix matrix_from_json_float(const json& j) {
  FloatMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const json& rows = j.at("entries");
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const json& e = rows.at(static_cast<size_t>(r)).at(static_cast<size_t>(c));
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  return m;
}

namespace {

template <class R>
json structure_json_impl(const StructureConstants<R>& sc) {
  json f = json::array(), d = json::array();
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j)
      for (int k = 1; k <= 9; ++k) {
        if (i < j && j < k && !real_is_zero(sc.f(i, j, k))) {
          json rec{{"i", i}, {"j", j}, {"k", k}};
          if constexpr (std::is_same_v<R, ExactReal>)
            rec["value"] = sc.f(i, j, k).str();
          else
            rec["value"] = sc.f(i, j, k);
          f.push_back(std::move(rec));
        }
        if (i <= j && j <= k && !real_is_zero(sc.d(i, j, k))) {
          json rec{{"i", i}, {"j", j}, {"k", k}};
          if constexpr (std::is_same_v<R, ExactReal>)
            rec["value"] = sc.d(i, j, k).str();
          else
            rec["value"] = sc.d(i, j, k);
          d.push_back(std::move(rec));
        }
      }
  return json{{"command", "structure"},
              {"backend", std::is_same_v<R, ExactReal> ? "exact" : "float"},
              {"canonical_order", "f: i<j<k; d: i<=j<=k; zero entries omitted"},
              {"f", std::move(f)},
              {"d", std::move(d)}};
}

template <class R>
void structure_csv_impl(std::ostream& os, const StructureConstants<R>& sc) {
  os << "tensor,i,j,k,value\n";
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j)
      for (int k = 1; k <= 9; ++k)
        if (i < j && j < k && !real_is_zero(sc.f(i, j, k)))
          os << "f," << i << ',' << j << ',' << k << ',' << csv_value(sc.f(i, j, k)) << '\n';
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j)
      for (int k = 1; k <= 9; ++k)
        if (i <= j && j <= k && !real_is_zero(sc.d(i, j, k)))
          os << "d," << i << ',' << j << ',' << k << ',' << csv_value(sc.d(i, j, k)) << '\n';
}

}  // namespace

json structure_json(const StructureConstants<ExactReal>& sc) { return structure_json_impl(sc); }
json structure_json(const StructureConstants<double>& sc) { return structure_json_impl(sc); }
void structure_csv(std::ostream& os, const StructureConstants<ExactReal>& sc) {
  structure_csv_impl(os, sc);
}
void structure_csv(std::ostream& os, const StructureConstants<double>& sc) {
  structure_csv_impl(os, sc);
}

json report_json(const SuiteReport& rep, const ToleranceConfig& tol,
                 const std::optional<Corruption>& corrupt) {
  json checks = json::array();
  for (const CheckResult& c : rep.checks) {
    json rec{{"id", c.id},
             {"relation", c.relation},
             {"backend", backend_name(c.backend)},
             {"residual", c.residual},
             {"tolerance", c.tolerance},
             {"pass", c.pass}};
    if (c.backend == BackendKind::Exact) rec["exact_zero"] = c.exact_zero;
    if (!c.note.empty()) rec["note"] = c.note;
    checks.push_back(std::move(rec));
  }
  json out{{"command", "verify"},
           {"suite", rep.suite},
           {"backend", backend_name(rep.backend)},
           {"seed", rep.seed},
           {"pass", rep.all_pass()},
           {"elapsed_ms", rep.elapsed_ms},
           {"tolerances", json{{"algebraic", tol.algebraic}, {"post_exponential", tol.post_exp}}},
           {"checks", std::move(checks)}};
  if (corrupt)
    out["corruption"] = json{{"tensor", std::string(1, corrupt->tensor)},
                             {"i", corrupt->i},
                             {"j", corrupt->j},
                             {"k", corrupt->k},
                             {"delta", corrupt->delta}};
  return out;
}

void report_console(std::ostream& os, const SuiteReport& rep) {
  os << "suite: " << rep.suite << "  backend: " << backend_name(rep.backend)
     << "  seed: " << rep.seed << "\n";
  for (const CheckResult& c : rep.checks) {
    os << (c.pass ? "  ok    " : "  FAIL  ") << std::left << std::setw(44) << c.id << "  ";
    if (c.backend == BackendKind::Exact)
      os << "residual " << (c.exact_zero ? "0 (exact)" : "nonzero");
    else
      os << "residual " << std::scientific << std::setprecision(2) << c.residual << std::defaultfloat;
    if (c.tolerance > 0.0 && std::isfinite(c.tolerance))
      os << "  tol " << std::scientific << std::setprecision(2) << c.tolerance
         << std::defaultfloat;
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
  }
  int failed = rep.fail_count();
  os << rep.checks.size() << " checks, " << rep.checks.size() - static_cast<size_t>(failed)
     << " passed, " << failed << " failed  (" << std::fixed << std::setprecision(1)
     << rep.elapsed_ms << " ms)" << std::defaultfloat << "\n";
}

}  // namespace su3st::cli
