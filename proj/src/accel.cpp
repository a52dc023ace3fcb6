#include "bethe/accel.hpp"

#include <cmath>

namespace bethe {

Real condense(const TermGenerator& g, long j, int target_digits) {
  if (j < 0) throw DomainError("condense: index must be >= 0");
  const Real rel = pow(Real(10), -static_cast<long>(target_digits + 10));
  Real total;
  Real idx;
  int quiet = 0;
  for (long m = 0; m < 4000; ++m) {
    idx = ldexp(Real(j + 1), m);
    idx -= 1;
    Real v = g.term(idx);
    v = ldexp(v, m);
    total += v;
    if (abs(v) <= rel * abs(total)) {
      if (++quiet >= 2 && m >= 3) return total;
    } else {
      quiet = 0;
    }
  }
  throw AccelerationError("condense: inner sum does not converge");
}

namespace {

// delta_k^(0) from s_0..s_{k+1}; returns false on a vanishing denominator.
bool delta_order(const std::vector<Real>& s, int k, Real& out) {
  // Coefficients (-1)^j C(k,j) (1+j)_{k-1} / (1+k)_{k-1}, scaled so c_0 = 1
  // (a common factor cancels in the ratio).
  Real num, den, c(1), w, tmp;
  for (int j = 0; j <= k; ++j) {
    if (j > 0) {
      c *= -static_cast<long>(k - j + 1) * (j - 1 + k);
      c /= static_cast<long>(j) * j;
    }
    w = s[j + 1] - s[j];
    if (w.is_zero()) return false;
    tmp = c / w;
    den += tmp;
    tmp *= s[j];
    num += tmp;
  }
  if (den.is_zero()) return false;
  out = num / den;
  return true;
}

}  // namespace

TransformResult nonlinear_transform(const std::vector<Real>& s, int order) {
  if (s.size() < 3) throw DomainError("nonlinear_transform: need at least 3 partial sums");
  TransformResult r;
  const int kmax_avail = static_cast<int>(s.size()) - 2;
  const int kmax = order > 0 ? std::min(order, kmax_avail) : kmax_avail;

  bool constant = true;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] != s[0]) constant = false;
  if (constant) {
    r.limit = s.back();
    r.error = Real(0);
    r.order = 0;
    return r;
  }

  // Highest order whose denominators are all nonzero.
  Real cur, prev;
  int got = 0, got_prev = 0;
  for (int k = kmax; k >= 1; --k) {
    Real v;
    if (delta_order(s, k, v)) {
      if (!got) {
        cur = v;
        got = k;
      } else {
        prev = v;
        got_prev = k;
        break;
      }
    } else {
      r.reduced_confidence = true;
    }
  }
  if (!got) {
    // Terminated series: the sequence is constant from some index on.
    r.limit = s.back();
    r.error = abs(s.back() - s[s.size() - 2]);
    r.reduced_confidence = true;
    return r;
  }
  r.limit = cur;
  r.order = got;
  r.error = got_prev ? abs(cur - prev) : abs(cur - s.back());
  return r;
}

CnctResult cnct_sum(const TermGenerator& g, int target_digits, const Real& abs_tol, int max_terms, Exec exec) {
  CnctResult out;
  AccelState& st = out.state;
  const Real rel = pow(Real(10), -static_cast<long>(target_digits));
  int have = 0;
  int batch = 12;
  std::vector<Real> last_estimates;
  while (have < max_terms) {
    const int upto = std::min(max_terms, have + batch);
    std::vector<Real> fresh(upto - have);
    for_each_index(fresh.size(), exec, [&](std::size_t i) {
      fresh[i] = condense(g, have + static_cast<long>(i), target_digits);
    });
    for (int j = have; j < upto; ++j) {
      Real a = fresh[j - have];
      if (j % 2) a = -a;
      st.condensed.push_back(fresh[j - have]);
      Real s = st.partial.empty() ? a : st.partial.back() + a;
      st.partial.push_back(s);
      if (st.partial.size() >= 4) {
        auto tr = nonlinear_transform(st.partial);
        st.estimates.push_back(tr.limit);
        st.reduced_confidence = st.reduced_confidence || tr.reduced_confidence;
      }
    }
    have = upto;
    batch = 4;
    const std::size_t ne = st.estimates.size();
    if (ne >= 3) {
      Real d1 = abs(st.estimates[ne - 1] - st.estimates[ne - 2]);
      Real d2 = abs(st.estimates[ne - 2] - st.estimates[ne - 3]);
      Real err = max(d1, d2);
      Real tol = max(rel * abs(st.estimates.back()), abs_tol);
      st.limit = st.estimates.back();
      st.error = err;
      st.order = static_cast<int>(st.partial.size()) - 2;
      if (err <= tol) {
        out.sum = st.limit;
        out.error = err;
        return out;
      }
    }
  }
  out.sum = st.limit;
  out.error = st.error;
  throw AccelerationError("cnct_sum: target not reached within " + std::to_string(max_terms) +
                          " condensed terms; best estimate " + st.limit.str(20) + " +- " + st.error.str(3));
}

}  // namespace bethe
