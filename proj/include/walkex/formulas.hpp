#pragma once

// Closed-form values of ex(n, F_k) for every regime where they are settled,
// with an explicit knowledge status elsewhere.

#include <optional>
#include <stdexcept>
#include <string_view>

namespace walkex {

enum class ExStatus { exact, lower_bound_only, unknown };

enum class Regime { k1, k2_strict, k3_open, kGEnMinus1, nEQkPlus2, nEQkPlus3, mainFormula };

inline std::string_view to_string(ExStatus s)
{
  switch (s) {
    case ExStatus::exact: return "exact";
    case ExStatus::lower_bound_only: return "lower_bound_only";
    case ExStatus::unknown: return "unknown";
  }
  return "?";
}

inline std::string_view to_string(Regime r)
{
  switch (r) {
    case Regime::k1: return "k1";
    case Regime::k2_strict: return "k2_strict";
    case Regime::k3_open: return "k3_open";
    case Regime::kGEnMinus1: return "kGEnMinus1";
    case Regime::nEQkPlus2: return "nEQkPlus2";
    case Regime::nEQkPlus3: return "nEQkPlus3";
    case Regime::mainFormula: return "mainFormula";
  }
  return "?";
}

struct ExValue {
  int n = 0;
  int k = 0;
  bool loops = false;
  std::optional<long long> value;
  ExStatus status = ExStatus::unknown;
  Regime regime = Regime::k1;
  int s = 0;  // n = s*k + t, 0 <= t < k
  int t = 0;

  bool operator==(const ExValue&) const = default;
};

/// C(n,2) - C(s,2) k - s t with n = s k + t, 0 <= t < k. No regime check.
inline long long main_formula_value(int n, int k)
{
  if (n < 0 || k < 1) throw std::invalid_argument("main_formula_value: need n >= 0, k >= 1");
  const long long s = n / k;
  const long long t = n % k;
  const long long nn = n;
  return nn * (nn - 1) / 2 - s * (s - 1) / 2 * k - s * t;
}

/// The same quantity as n(n-1)/2 - (u-1)n/2 - (u+1)v/2 with n = u k + v,
/// valid only where the main formula holds (k >= 4, n >= k + 4).
inline long long alt_main_form(int n, int k)
{
  if (k < 4 || n < k + 4) throw std::invalid_argument("alt_main_form: need k >= 4 and n >= k + 4");
  const long long u = n / k;
  const long long v = n % k;
  const long long nn = n;
  const long long twice = nn * (nn - 1) - (u - 1) * nn - (u + 1) * v;
  return twice / 2;
}

/// Upper bound on f(A) when every vertex-deleted principal submatrix of the
/// order-n matrix A has at most `max_sub` ones: floor(n M / (n - 2)).
inline long long supergraph_bound(int n, long long max_sub)
{
  if (n < 3) throw std::invalid_argument("supergraph_bound: need n >= 3");
  if (max_sub < 0) throw std::invalid_argument("supergraph_bound: need M >= 0");
  return static_cast<long long>(n) * max_sub / (n - 2);
}

/// ex(n, F_k) in the given mode, dispatched by regime.
inline ExValue ex_value(int n, int k, bool loops = false)
{
  if (n < 1 || k < 1) throw std::invalid_argument("ex_value: need n >= 1, k >= 1");
  ExValue ev;
  ev.n = n;
  ev.k = k;
  ev.loops = loops;
  ev.s = n / k;
  ev.t = n % k;
  const long long nn = n;
  const long long half = nn * (nn - 1) / 2;

  auto exact = [&](Regime r, long long v) {
    ev.regime = r;
    ev.status = ExStatus::exact;
    ev.value = v;
    return ev;
  };
  auto unknown = [&](Regime r) {
    ev.regime = r;
    ev.status = ExStatus::unknown;
    ev.value.reset();
    return ev;
  };

  if (k == 1) return exact(Regime::k1, loops ? nn * nn : nn * (nn - 1));

  if (k == 2) {
    // The closed form gives 1 at n = 2, where the 2-cycle has 2 arcs.
    if (loops || n == 2) return unknown(Regime::k2_strict);
    if (n == 4) return exact(Regime::k2_strict, 7);
    if (n % 2 == 1) return exact(Regime::k2_strict, (nn * nn + 4 * nn - 5) / 4);
    return exact(Regime::k2_strict, (nn * nn + 4 * nn - 8) / 4);
  }

  if (k == 3) {
    if (n % 3 == 0 && n >= 6) {
      const long long t = n / 3;
      ev.regime = Regime::k3_open;
      ev.status = ExStatus::lower_bound_only;
      ev.value = 3 * t * t + 1;
      return ev;
    }
    return unknown(Regime::k3_open);
  }

  // k >= 4
  if (k >= n - 1) return n >= 5 ? exact(Regime::kGEnMinus1, half) : unknown(Regime::kGEnMinus1);
  if (n == k + 2) return exact(Regime::nEQkPlus2, half - 1);
  if (n == k + 3) return exact(Regime::nEQkPlus3, half - 2);
  return exact(Regime::mainFormula, main_formula_value(n, k));
}

}  // namespace walkex
