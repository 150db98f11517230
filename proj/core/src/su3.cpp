#include "su3st/su3.hpp"

namespace su3st {

std::string rep_name(RepLabel rep) {
  switch (rep) {
    case RepLabel::Rep3: return "3";
    case RepLabel::Rep3Bar: return "3bar";
    case RepLabel::Rep6: return "6";
    case RepLabel::Rep9: return "9";
    case RepLabel::Rep10: return "10";
  }
  return "?";
}

int rep_dim(RepLabel rep) {
  switch (rep) {
    case RepLabel::Rep3: return 3;
    case RepLabel::Rep3Bar: return 3;
    case RepLabel::Rep6: return 6;
    case RepLabel::Rep9: return 9;
    case RepLabel::Rep10: return 10;
  }
  return 0;
}

GeneratorSet<Complex> to_float(const GeneratorSet<ExactScalar>& g) {
  GeneratorSet<Complex> out;
  out.rep = g.rep;
  out.branch = g.branch;
  for (const auto& m : g.js) out.js.push_back(to_float(m));
  for (const auto& m : g.ks) out.ks.push_back(to_float(m));
  for (const auto& m : g.vs) out.vs.push_back(to_float(m));
  return out;
}

StructureConstants<double> to_float(const StructureConstants<ExactReal>& sc) {
  StructureConstants<double> out;
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j)
      for (int k = 1; k <= 9; ++k) {
        out.f(i, j, k) = sc.f(i, j, k).to_double();
        out.d(i, j, k) = sc.d(i, j, k).to_double();
      }
  return out;
}

GeneratorSet<ExactScalar> gellmann() {
  const ExactScalar h = scalar_constants<ExactScalar>::ratio(1, 2);         // 1/2
  const ExactScalar ih(ExactReal(0), ExactReal::ratio(1, 2));               // i/2
  const ExactScalar r8(ExactReal(Rational(0), Rational(0), make_rational(1, 6), Rational(0)));
  // r8 = 1/(2√3) = √3/6

  auto m = [](int n) { return ExactMatrix(n, n); };

  ExactMatrix j1 = m(3), j2 = m(3), j3 = m(3), j4 = m(3), j5 = m(3), j6 = m(3), j7 = m(3),
              j8 = m(3);
  j1(0, 1) = h;
  j1(1, 0) = h;
  j2(0, 1) = -ih;
  j2(1, 0) = ih;
  j3(0, 0) = h;
  j3(1, 1) = -h;
  j4(0, 2) = h;
  j4(2, 0) = h;
  j5(0, 2) = -ih;
  j5(2, 0) = ih;
  j6(1, 2) = h;
  j6(2, 1) = h;
  j7(1, 2) = -ih;
  j7(2, 1) = ih;
  j8(0, 0) = r8;
  j8(1, 1) = r8;
  j8(2, 2) = -(r8 + r8);

  GeneratorSet<ExactScalar> g;
  g.rep = RepLabel::Rep3;
  g.js = {j1, j2, j3, j4, j5, j6, j7, j8};
  return g;
}

GeneratorSet<ExactScalar> antitriplet() {
  GeneratorSet<ExactScalar> g;
  g.rep = RepLabel::Rep3Bar;
  for (const auto& j : gellmann().js) g.js.push_back(-j.transpose());
  return g;
}

const StructureConstants<ExactReal>& canonical_structure() {
  static const StructureConstants<ExactReal> sc = extract_structure(gellmann());
  return sc;
}

const StructureConstants<double>& canonical_structure_float() {
  static const StructureConstants<double> sc = to_float(canonical_structure());
  return sc;
}

}  // namespace su3st
