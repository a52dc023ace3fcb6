#include "bethe/asymptotics.hpp"

#include <cmath>

namespace bethe {

const char* to_string(Family f) {
  switch (f) {
    case Family::Circular: return "circular";
    case Family::S: return "S";
    case Family::P: return "P";
  }
  return "?";
}

const AsymptoticSeries& asymptotic_series(Family f) {
  static const AsymptoticSeries circular{
      Family::Circular,
      {{{-0.05685281, 3e-8}, {0.0248208, 6e-7}, {0.03814, 2e-5}, {-0.1145, 5e-4}, {0.166, 3e-3}, {-0.22, 2e-2}}}};
  static const AsymptoticSeries s{
      Family::S,
      {{{2.72265434, 5e-8}, {0.0, 5e-6}, {0.55360, 5e-5}, {-0.5993, 5e-4}, {0.613, 7e-3}, {-0.60, 5e-2}}}};
  static const AsymptoticSeries p{
      Family::P,
      {{{-0.0490545, 1e-7}, {0.0, 5e-6}, {0.20530, 1.5e-4}, {-0.599, 5e-3}, {1.45, 0.1}, {-3.0, 1.0}}}};
  switch (f) {
    case Family::Circular: return circular;
    case Family::S: return s;
    case Family::P: return p;
  }
  return s;
}

namespace {

Band evaluate(const AsymptoticSeries& a, double x) {
  Band b{0, 0};
  double pw = 1;
  for (const auto& c : a.coef) {
    b.value += c.value * pw;
    b.uncertainty += c.uncertainty * pw;
    if (x <= 0) break;  // limit: only the constant term
    pw /= x;
  }
  return b;
}

}  // namespace

Band circular_asymptote(int l) {
  if (l < 1) throw DomainError("circular_asymptote: l must be >= 1");
  Band b = evaluate(asymptotic_series(Family::Circular), l);
  const double l3 = static_cast<double>(l) * l * l;
  b.value /= l3;
  b.uncertainty /= l3;
  return b;
}

Band s_asymptote(int n) {
  if (n < 0) throw DomainError("s_asymptote: n must be >= 1 (0 for the limit)");
  return evaluate(asymptotic_series(Family::S), n);
}

Band p_asymptote(int n) {
  if (n < 0 || n == 1) throw DomainError("p_asymptote: n must be >= 2 (0 for the limit)");
  return evaluate(asymptotic_series(Family::P), n);
}

double limit_reference(int l) {
  static const double table[] = {2.722654335,  -0.049054544, -0.009940457, -0.003560999,
                                 -0.001663771, -0.000908042, -0.000548999, -0.000356923,
                                 -0.000244981, -0.000175372, -0.000129830};
  if (l < 0 || l > 10) throw DomainError("limit_reference: available for 0 <= l <= 10 only");
  return table[l];
}

namespace {

// Least squares by normal equations with partial pivoting; the working
// precision is high enough that squaring the condition number is harmless.
Real fit_constant(const std::vector<Real>& x, const std::vector<Real>& y, const std::vector<int>& powers) {
  const std::size_t p = powers.size(), m = x.size();
  std::vector<std::vector<Real>> a(p, std::vector<Real>(p + 1, Real(0)));
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<Real> row(p);
    for (std::size_t i = 0; i < p; ++i) row[i] = pow(x[r], static_cast<long>(powers[i]));
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) a[i][j] += row[i] * row[j];
      a[i][p] += row[i] * y[r];
    }
  }
  for (std::size_t c = 0; c < p; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < p; ++r)
      if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    if (a[c][c].is_zero()) throw DomainError("extrapolate_limit: singular fit");
    for (std::size_t r = 0; r < p; ++r) {
      if (r == c) continue;
      Real f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= p; ++k) a[r][k] -= f * a[c][k];
    }
  }
  // powers[0] == 0 is the constant term
  return a[0][p] / a[0][0];
}

}  // namespace

Extrapolation extrapolate_limit(const std::vector<std::pair<int, Real>>& values, bool skip_linear, int max_degree) {
  if (values.size() < 4) throw DomainError("extrapolate_limit: need at least 4 points");
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i].first == values[j].first) throw DomainError("extrapolate_limit: duplicate n");
  PrecisionGuard g(std::max(Real::default_bits(), 320L));
  int nmin = values.front().first;
  for (const auto& v : values) nmin = std::min(nmin, v.first);
  // Scaled abscissa nmin/n in (0,1]; the constant term is unaffected.
  std::vector<Real> x, y;
  for (const auto& v : values) {
    x.push_back(Real(nmin) / static_cast<long>(v.first));
    Real yy = v.second;
    yy.round_to(Real::default_bits());
    y.push_back(yy);
  }
  std::vector<Real> est;
  std::vector<int> degs;
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<int> powers{0};
    for (int k = skip_linear ? 2 : 1; k <= d; ++k) powers.push_back(k);
    if (powers.size() < 2 && d < max_degree) continue;
    if (powers.size() > values.size()) break;
    est.push_back(fit_constant(x, y, powers));
    degs.push_back(d);
  }
  Extrapolation out;
  if (est.size() == 1) {
    out.limit = est[0];
    out.degree = degs[0];
    out.low_confidence = true;
    return out;
  }
  std::vector<double> spread;
  for (std::size_t i = 1; i < est.size(); ++i) spread.push_back(abs(est[i] - est[i - 1]).to_double());
  std::size_t best = 0;
  for (std::size_t i = 1; i < spread.size(); ++i)
    if (spread[i] < spread[best]) best = i;
  for (std::size_t i = 1; i <= best; ++i)
    if (spread[i] > spread[i - 1]) out.low_confidence = true;
  // Spreads that only grow show no convergence at all.
  if (best == 0) out.low_confidence = true;
  out.limit = est[best + 1];
  out.error = spread[best];
  out.degree = degs[best + 1];
  return out;
}

}  // namespace bethe
