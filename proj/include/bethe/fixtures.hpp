#pragma once

#include "bethe/core.hpp"

#include <string>
#include <vector>

namespace bethe {

enum class FixtureSet { FourP, Table1, Table2, Table3, Table4, Table5, Fig1, Fig2 };

const char* to_string(FixtureSet s);
FixtureSet fixture_set_from_string(const std::string& s);
std::vector<FixtureSet> all_fixture_sets();

// One printed reference value. n = 0 marks an n -> infinity limit.
struct Fixture {
  FixtureSet set;
  int n;
  int l;
  const char* value;  // decimal string as printed
  double unit;        // one unit in the last printed digit

  Real reference() const { return Real(std::string(value)); }
  // Agreement when rounding the computed value to the printed digits
  // reproduces the printed value: |x - ref| <= unit / 2.
  bool matches(const Real& x) const;
  double deviation_units(const Real& x) const;
};

const std::vector<Fixture>& fixtures();
std::vector<Fixture> fixtures(FixtureSet s);
const Fixture& find_fixture(FixtureSet s, int n, int l);

// Quantum numbers of the density plot state.
struct DensityFigure {
  int n = 40, l = 14, m = 6;
};

}  // namespace bethe
