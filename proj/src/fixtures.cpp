#include "bethe/fixtures.hpp"

#include <algorithm>

namespace bethe {

const char* to_string(FixtureSet s) {
  switch (s) {
    case FixtureSet::FourP: return "4p";
    case FixtureSet::Table1: return "table1";
    case FixtureSet::Table2: return "table2";
    case FixtureSet::Table3: return "table3";
    case FixtureSet::Table4: return "table4";
    case FixtureSet::Table5: return "table5";
    case FixtureSet::Fig1: return "fig1";
    case FixtureSet::Fig2: return "fig2";
  }
  return "?";
}

std::vector<FixtureSet> all_fixture_sets() {
  return {FixtureSet::FourP,   FixtureSet::Table1, FixtureSet::Table2, FixtureSet::Table3,
          FixtureSet::Table4, FixtureSet::Table5, FixtureSet::Fig1,   FixtureSet::Fig2};
}

FixtureSet fixture_set_from_string(const std::string& s) {
  for (FixtureSet f : all_fixture_sets())
    if (s == to_string(f)) return f;
  throw DomainError("unknown fixture set '" + s + "'");
}

double Fixture::deviation_units(const Real& x) const {
  PrecisionGuard g(std::max(Real::default_bits(), 192L));
  return (abs(x - reference()) / Real(unit)).to_double();
}

bool Fixture::matches(const Real& x) const { return deviation_units(x) <= 0.5; }

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> table = {
    {FixtureSet::FourP, 4, 1, "-0.041954894598085548671037594335271341857e0", 1e-40},
    {FixtureSet::Table1, 100, 99, "-0.583308014e-7", 1e-16},
    {FixtureSet::Table1, 100, 98, "-0.613877681e-7", 1e-16},
    {FixtureSet::Table1, 100, 97, "-0.645944796e-7", 1e-16},
    {FixtureSet::Table1, 100, 96, "-0.679594629e-7", 1e-16},
    {FixtureSet::Table1, 101, 100, "-0.566008997e-7", 1e-16},
    {FixtureSet::Table1, 101, 99, "-0.595371896e-7", 1e-16},
    {FixtureSet::Table1, 101, 98, "-0.626158390e-7", 1e-16},
    {FixtureSet::Table1, 101, 97, "-0.658448703e-7", 1e-16},
    {FixtureSet::Table1, 102, 101, "-0.549387309e-7", 1e-16},
    {FixtureSet::Table1, 102, 100, "-0.577602405e-7", 1e-16},
    {FixtureSet::Table1, 102, 99, "-0.607171570e-7", 1e-16},
    {FixtureSet::Table1, 102, 98, "-0.638170329e-7", 1e-16},
    {FixtureSet::Table1, 103, 102, "-0.533410121e-7", 1e-16},
    {FixtureSet::Table1, 103, 101, "-0.560532956e-7", 1e-16},
    {FixtureSet::Table1, 103, 100, "-0.588944368e-7", 1e-16},
    {FixtureSet::Table1, 103, 99, "-0.618715502e-7", 1e-16},
    {FixtureSet::Table1, 104, 103, "-0.518046496e-7", 1e-16},
    {FixtureSet::Table1, 104, 102, "-0.544129416e-7", 1e-16},
    {FixtureSet::Table1, 104, 101, "-0.571439188e-7", 1e-16},
    {FixtureSet::Table1, 104, 100, "-0.600042866e-7", 1e-16},
    {FixtureSet::Table1, 105, 104, "-0.503267262e-7", 1e-16},
    {FixtureSet::Table1, 105, 103, "-0.528359632e-7", 1e-16},
    {FixtureSet::Table1, 105, 102, "-0.554620643e-7", 1e-16},
    {FixtureSet::Table1, 105, 101, "-0.582113531e-7", 1e-16},
    {FixtureSet::Table1, 106, 105, "-0.489044896e-7", 1e-16},
    {FixtureSet::Table1, 106, 104, "-0.513193296e-7", 1e-16},
    {FixtureSet::Table1, 106, 103, "-0.538455408e-7", 1e-16},
    {FixtureSet::Table1, 106, 102, "-0.564890904e-7", 1e-16},
    {FixtureSet::Table1, 107, 106, "-0.475353416e-7", 1e-16},
    {FixtureSet::Table1, 107, 105, "-0.498601821e-7", 1e-16},
    {FixtureSet::Table1, 107, 104, "-0.522912079e-7", 1e-16},
    {FixtureSet::Table1, 107, 103, "-0.548340528e-7", 1e-16},
    {FixtureSet::Table1, 108, 107, "-0.462168279e-7", 1e-16},
    {FixtureSet::Table1, 108, 106, "-0.484558230e-7", 1e-16},
    {FixtureSet::Table1, 108, 105, "-0.507961045e-7", 1e-16},
    {FixtureSet::Table1, 108, 104, "-0.532429945e-7", 1e-16},
    {FixtureSet::Table1, 109, 108, "-0.449466295e-7", 1e-16},
    {FixtureSet::Table1, 109, 107, "-0.471037051e-7", 1e-16},
    {FixtureSet::Table1, 109, 106, "-0.493574371e-7", 1e-16},
    {FixtureSet::Table1, 109, 105, "-0.517128556e-7", 1e-16},
    {FixtureSet::Table1, 110, 109, "-0.437225533e-7", 1e-16},
    {FixtureSet::Table1, 110, 108, "-0.458014220e-7", 1e-16},
    {FixtureSet::Table1, 110, 107, "-0.479725687e-7", 1e-16},
    {FixtureSet::Table1, 110, 106, "-0.502407501e-7", 1e-16},
    {FixtureSet::Table2, 190, 0, "0.272266958e1", 1e-8},
    {FixtureSet::Table2, 190, 1, "-0.490489444e-1", 1e-10},
    {FixtureSet::Table2, 190, 2, "-0.993712588e-2", 1e-11},
    {FixtureSet::Table2, 190, 3, "-0.355864236e-2", 1e-11},
    {FixtureSet::Table2, 191, 0, "0.272266942e1", 1e-8},
    {FixtureSet::Table2, 191, 1, "-0.490490025e-1", 1e-10},
    {FixtureSet::Table2, 191, 2, "-0.993716023e-2", 1e-11},
    {FixtureSet::Table2, 191, 3, "-0.355866654e-2", 1e-11},
    {FixtureSet::Table2, 192, 0, "0.272266927e1", 1e-8},
    {FixtureSet::Table2, 192, 1, "-0.490490596e-1", 1e-10},
    {FixtureSet::Table2, 192, 2, "-0.993719406e-2", 1e-11},
    {FixtureSet::Table2, 192, 3, "-0.355869035e-2", 1e-11},
    {FixtureSet::Table2, 193, 0, "0.272266911e1", 1e-8},
    {FixtureSet::Table2, 193, 1, "-0.490491159e-1", 1e-10},
    {FixtureSet::Table2, 193, 2, "-0.993722737e-2", 1e-11},
    {FixtureSet::Table2, 193, 3, "-0.355871380e-2", 1e-11},
    {FixtureSet::Table2, 194, 0, "0.272266896e1", 1e-8},
    {FixtureSet::Table2, 194, 1, "-0.490491713e-1", 1e-10},
    {FixtureSet::Table2, 194, 2, "-0.993726017e-2", 1e-11},
    {FixtureSet::Table2, 194, 3, "-0.355873690e-2", 1e-11},
    {FixtureSet::Table2, 195, 0, "0.272266881e1", 1e-8},
    {FixtureSet::Table2, 195, 1, "-0.490492258e-1", 1e-10},
    {FixtureSet::Table2, 195, 2, "-0.993729247e-2", 1e-11},
    {FixtureSet::Table2, 195, 3, "-0.355875964e-2", 1e-11},
    {FixtureSet::Table2, 196, 0, "0.272266867e1", 1e-8},
    {FixtureSet::Table2, 196, 1, "-0.490492796e-1", 1e-10},
    {FixtureSet::Table2, 196, 2, "-0.993732428e-2", 1e-11},
    {FixtureSet::Table2, 196, 3, "-0.355878205e-2", 1e-11},
    {FixtureSet::Table2, 197, 0, "0.272266852e1", 1e-8},
    {FixtureSet::Table2, 197, 1, "-0.490493325e-1", 1e-10},
    {FixtureSet::Table2, 197, 2, "-0.993735562e-2", 1e-11},
    {FixtureSet::Table2, 197, 3, "-0.355880412e-2", 1e-11},
    {FixtureSet::Table2, 198, 0, "0.272266838e1", 1e-8},
    {FixtureSet::Table2, 198, 1, "-0.490493846e-1", 1e-10},
    {FixtureSet::Table2, 198, 2, "-0.993738649e-2", 1e-11},
    {FixtureSet::Table2, 198, 3, "-0.355882586e-2", 1e-11},
    {FixtureSet::Table2, 199, 0, "0.272266824e1", 1e-8},
    {FixtureSet::Table2, 199, 1, "-0.490494360e-1", 1e-10},
    {FixtureSet::Table2, 199, 2, "-0.993741690e-2", 1e-11},
    {FixtureSet::Table2, 199, 3, "-0.355884728e-2", 1e-11},
    {FixtureSet::Table2, 200, 0, "0.272266810e1", 1e-8},
    {FixtureSet::Table2, 200, 1, "-0.490494865e-1", 1e-10},
    {FixtureSet::Table2, 200, 2, "-0.993744687e-2", 1e-11},
    {FixtureSet::Table2, 200, 3, "-0.355886838e-2", 1e-11},
    {FixtureSet::Table3, 190, 100, "-0.108830510e-6", 1e-15},
    {FixtureSet::Table3, 190, 101, "-0.105112540e-6", 1e-15},
    {FixtureSet::Table3, 190, 102, "-0.101547415e-6", 1e-15},
    {FixtureSet::Table3, 190, 103, "-0.981275887e-7", 1e-16},
    {FixtureSet::Table3, 191, 100, "-0.109118840e-6", 1e-15},
    {FixtureSet::Table3, 191, 101, "-0.105395841e-6", 1e-15},
    {FixtureSet::Table3, 191, 102, "-0.101825818e-6", 1e-15},
    {FixtureSet::Table3, 191, 103, "-0.984012208e-7", 1e-16},
    {FixtureSet::Table3, 192, 100, "-0.109403831e-6", 1e-15},
    {FixtureSet::Table3, 192, 101, "-0.105675864e-6", 1e-15},
    {FixtureSet::Table3, 192, 102, "-0.102101004e-6", 1e-15},
    {FixtureSet::Table3, 192, 103, "-0.986716920e-7", 1e-16},
    {FixtureSet::Table3, 193, 100, "-0.109685537e-6", 1e-15},
    {FixtureSet::Table3, 193, 101, "-0.105952663e-6", 1e-15},
    {FixtureSet::Table3, 193, 102, "-0.102373023e-6", 1e-15},
    {FixtureSet::Table3, 193, 103, "-0.989390540e-7", 1e-16},
    {FixtureSet::Table3, 194, 100, "-0.109964013e-6", 1e-15},
    {FixtureSet::Table3, 194, 101, "-0.106226290e-6", 1e-15},
    {FixtureSet::Table3, 194, 102, "-0.102641927e-6", 1e-15},
    {FixtureSet::Table3, 194, 103, "-0.992033569e-7", 1e-16},
    {FixtureSet::Table3, 195, 100, "-0.110239309e-6", 1e-15},
    {FixtureSet::Table3, 195, 101, "-0.106496796e-6", 1e-15},
    {FixtureSet::Table3, 195, 102, "-0.102907766e-6", 1e-15},
    {FixtureSet::Table3, 195, 103, "-0.994646499e-7", 1e-16},
    {FixtureSet::Table3, 196, 100, "-0.110511476e-6", 1e-15},
    {FixtureSet::Table3, 196, 101, "-0.106764231e-6", 1e-15},
    {FixtureSet::Table3, 196, 102, "-0.103170590e-6", 1e-15},
    {FixtureSet::Table3, 196, 103, "-0.997229814e-7", 1e-16},
    {FixtureSet::Table3, 197, 100, "-0.110780565e-6", 1e-15},
    {FixtureSet::Table3, 197, 101, "-0.107028643e-6", 1e-15},
    {FixtureSet::Table3, 197, 102, "-0.103430446e-6", 1e-15},
    {FixtureSet::Table3, 197, 103, "-0.999783983e-7", 1e-16},
    {FixtureSet::Table3, 198, 100, "-0.111046625e-6", 1e-15},
    {FixtureSet::Table3, 198, 101, "-0.107290080e-6", 1e-15},
    {FixtureSet::Table3, 198, 102, "-0.103687382e-6", 1e-15},
    {FixtureSet::Table3, 198, 103, "-0.100230947e-6", 1e-15},
    {FixtureSet::Table3, 199, 100, "-0.111309701e-6", 1e-15},
    {FixtureSet::Table3, 199, 101, "-0.107548591e-6", 1e-15},
    {FixtureSet::Table3, 199, 102, "-0.103941443e-6", 1e-15},
    {FixtureSet::Table3, 199, 103, "-0.100480673e-6", 1e-15},
    {FixtureSet::Table3, 200, 100, "-0.111569843e-6", 1e-15},
    {FixtureSet::Table3, 200, 101, "-0.107804219e-6", 1e-15},
    {FixtureSet::Table3, 200, 102, "-0.104192674e-6", 1e-15},
    {FixtureSet::Table3, 200, 103, "-0.100727619e-6", 1e-15},
    {FixtureSet::Table4, 197, 196, "-0.753369175e-8", 1e-17},
    {FixtureSet::Table4, 198, 196, "-0.761387888e-8", 1e-17},
    {FixtureSet::Table4, 198, 197, "-0.741963223e-8", 1e-17},
    {FixtureSet::Table4, 199, 196, "-0.769316490e-8", 1e-17},
    {FixtureSet::Table4, 199, 197, "-0.749821211e-8", 1e-17},
    {FixtureSet::Table4, 199, 198, "-0.730786360e-8", 1e-17},
    {FixtureSet::Table4, 200, 196, "-0.777156469e-8", 1e-17},
    {FixtureSet::Table4, 200, 197, "-0.757591335e-8", 1e-17},
    {FixtureSet::Table4, 200, 198, "-0.738487630e-8", 1e-17},
    {FixtureSet::Table4, 200, 199, "-0.719832864e-8", 1e-17},
    {FixtureSet::Table5, 0, 0, "2.722654335e0", 1e-9},
    {FixtureSet::Table5, 0, 1, "-0.049054544e0", 1e-9},
    {FixtureSet::Table5, 0, 2, "-0.009940457e0", 1e-9},
    {FixtureSet::Table5, 0, 3, "-0.003560999e0", 1e-9},
    {FixtureSet::Table5, 0, 4, "-0.001663771e0", 1e-9},
    {FixtureSet::Table5, 0, 5, "-0.000908042e0", 1e-9},
    {FixtureSet::Table5, 0, 6, "-0.000548999e0", 1e-9},
    {FixtureSet::Table5, 0, 7, "-0.000356923e0", 1e-9},
    {FixtureSet::Table5, 0, 8, "-0.000244981e0", 1e-9},
    {FixtureSet::Table5, 0, 9, "-0.000175372e0", 1e-9},
    {FixtureSet::Table5, 0, 10, "-0.000129830e0", 1e-9},
    {FixtureSet::Fig1, 40, 14, "-0.418087713e-4", 1e-13},
    {FixtureSet::Fig2, 0, 2, "-0.994045690e-2", 1e-11},
  };
  return table;
}

std::vector<Fixture> fixtures(FixtureSet s) {
  std::vector<Fixture> out;
  std::copy_if(fixtures().begin(), fixtures().end(), std::back_inserter(out),
               [s](const Fixture& f) { return f.set == s; });
  return out;
}

const Fixture& find_fixture(FixtureSet s, int n, int l) {
  for (const auto& f : fixtures())
    if (f.set == s && f.n == n && f.l == l) return f;
  throw DomainError(std::string("no fixture (") + std::to_string(n) + "," + std::to_string(l) + ") in " + to_string(s));
}

}  // namespace bethe
