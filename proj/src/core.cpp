#include "bethe/core.hpp"

#include <cmath>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bethe {

QuantumState::QuantumState(int n, int l) : n_(n), l_(l) {
  if (n < 1) throw DomainError("principal quantum number must be >= 1");
  if (l < 0 || l >= n) throw DomainError("need 0 <= l <= n-1, got n=" + std::to_string(n) + " l=" + std::to_string(l));
}

std::string QuantumState::label() const { return "(" + std::to_string(n_) + "," + std::to_string(l_) + ")"; }

Real bound_energy(int n) {
  if (n < 1) throw DomainError("bound_energy: n >= 1 required");
  Real e(-1);
  e /= 2L * n * n;
  return e;
}

Real photon_energy(const Real& t, int n) {
  if (t <= 0 || t > 1) throw DomainError("photon_energy: t must lie in (0,1]");
  Real t2 = sqr(t);
  return (1 - t2) / (t2 * (2L * n * n));
}

Real t_of_omega(const Real& omega, int n) {
  if (omega < 0) throw DomainError("t_of_omega: omega must be >= 0");
  return 1 / sqrt(1 + omega * (2L * n * n));
}

PhotonParameter::PhotonParameter(Real t, int n) : t_(std::move(t)), n_(n) {
  if (n < 1) throw DomainError("PhotonParameter: n >= 1 required");
  if (t_ <= 0 || t_ > 1) throw DomainError("PhotonParameter: t must lie in (0,1]");
}

PhotonParameter PhotonParameter::from_omega(const Real& omega, int n) { return {t_of_omega(omega, n), n}; }

WorkingPrecision WorkingPrecision::for_digits(int digits, long extra_bits) {
  WorkingPrecision p;
  p.target_digits = digits;
  p.bits = std::max(64L, digits_to_bits(digits + 10) + extra_bits);
  return p;
}

void WorkingPrecision::validate() const {
  if (bits < 64) throw DomainError("working precision must be at least 64 bits");
  if (target_digits < 1) throw DomainError("target digits must be positive");
  if (max_bits < bits) throw DomainError("maximum precision below starting precision");
  if (step_bits <= 0) throw DomainError("escalation step must be positive");
}

double agreeing_digits(const Real& a, const Real& b) {
  if (a == b) return 1e9;
  Real d = abs(a - b);
  Real s = max(abs(a), abs(b));
  if (s.is_zero()) return 1e9;
  return -log10_abs(d / s);
}

EscalationOutcome escalate(const WorkingPrecision& prec, const std::function<Real(long)>& f) {
  prec.validate();
  long bits = prec.bits;
  EscalationOutcome out;
  Real prev;
  bool have_prev = false;
  while (bits <= prec.max_bits) {
    Real cur;
    {
      PrecisionGuard guard(bits);
      cur = f(bits);
    }
    if (have_prev) {
      double d = agreeing_digits(cur, prev);
      if (d >= prec.target_digits) {
        out.value = cur;
        out.previous = prev;
        out.bits = bits;
        out.digits_agreed = d;
        return out;
      }
    }
    prev = cur;
    have_prev = true;
    bits += prec.step_bits;
  }
  throw PrecisionExhaustedError("no agreement to " + std::to_string(prec.target_digits) + " digits below " +
                                std::to_string(prec.max_bits) + " bits");
}

void for_each_index(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body) {
  if (exec == Exec::Serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const long bits = Real::default_bits();
  std::exception_ptr failure;
  std::mutex failure_lock;
#pragma omp parallel
  {
    PrecisionGuard guard(bits);
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(count); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lk(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

int available_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace bethe
