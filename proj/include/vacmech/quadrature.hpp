#pragma once

// Adaptive quadrature on finite and semi-infinite intervals with error
// estimates, oscillatory segment summation with Euler-type acceleration,
// and numerical residue extraction by trapezoidal contour integration.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace vacmech {

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1, 1] (QUADPACK dqk15 constants).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
inline void gk15(const F& f, double a, double b, double& value, double& err,
                 std::size_t& neval) {
  const double h = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double kron = kGK15WeightsK[7] * f(mid);
  double gauss = kGK15WeightsG[3] * f(mid);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kGK15Nodes[i];
    const double fsum = f(mid - dx) + f(mid + dx);
    kron += kGK15WeightsK[i] * fsum;
    if (i % 2 == 1) gauss += kGK15WeightsG[i / 2] * fsum;
  }
  value = kron * h;
  err = std::abs((kron - gauss) * h);
  neval += 15;
}

}  // namespace detail

inline constexpr int kMaxSubdivisionDepth = 60;

// Adaptive bisection with the embedded GK7-15 pair.  Converged when the sum
// of local error estimates drops below max(abs_tol, rel_tol * |value|).
// Non-convergence is reported through the flag, never thrown.
template <class F>
QuadResult integrate(const F& f, double a, double b, double rel_tol = 1e-10,
                     double abs_tol = 0.0) {
  struct Interval {
    double a, b, value, err;
  };
  QuadResult res;
  double v, e;
  detail::gk15(f, a, b, v, e, res.evaluations);
  std::vector<Interval> heap{{a, b, v, e}};
  double total_v = v, total_e = e;

  for (int iter = 0; iter < (1 << 14); ++iter) {
    const double tol = std::max(abs_tol, rel_tol * std::abs(total_v));
    if (total_e <= tol) break;
    // split the interval with the largest error
    std::size_t worst = 0;
    for (std::size_t i = 1; i < heap.size(); ++i)
      if (heap[i].err > heap[worst].err) worst = i;
    const Interval cur = heap[worst];
    const double width = b - a;
    if ((cur.b - cur.a) < width * std::ldexp(1.0, -kMaxSubdivisionDepth)) break;
    const double m = 0.5 * (cur.a + cur.b);
    Interval left{cur.a, m, 0, 0}, right{m, cur.b, 0, 0};
    detail::gk15(f, left.a, left.b, left.value, left.err, res.evaluations);
    detail::gk15(f, right.a, right.b, right.value, right.err, res.evaluations);
    total_v += left.value + right.value - cur.value;
    total_e += left.err + right.err - cur.err;
    heap[worst] = left;
    heap.push_back(right);
  }
  res.value = total_v;
  res.abs_error_estimate = total_e;
  res.converged = total_e <= std::max(abs_tol, rel_tol * std::abs(total_v));
  return res;
}

// Map (a, inf) to t in (0, 1) with s = a + decay_scale * t / (1 - t).
// Suited to integrands that decay at least like a power with characteristic
// scale decay_scale; exponential tails converge even faster.
template <class F>
QuadResult integrate_semi_infinite(const F& f, double a, double decay_scale,
                                   double rel_tol = 1e-10, double abs_tol = 0.0) {
  const double c = decay_scale > 0 ? decay_scale : 1.0;
  auto g = [&](double t) {
    const double om = 1.0 - t;
    const double s = a + c * t / om;
    return f(s) * c / (om * om);
  };
  return integrate(g, 0.0, 1.0, rel_tol, abs_tol);
}

namespace detail {

// Iterated Aitken extrapolation of a sequence of partial sums.  Returns the
// best estimate and a crude residual (difference of the last two entries of
// the final column).
inline std::pair<double, double> aitken(std::vector<double> s) {
  double best = s.back();
  double resid = s.size() > 1 ? std::abs(s[s.size() - 1] - s[s.size() - 2])
                              : std::abs(best);
  while (s.size() >= 3) {
    std::vector<double> t;
    t.reserve(s.size() - 2);
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
      const double d2 = s[i + 2] - 2 * s[i + 1] + s[i];
      if (d2 == 0.0)
        t.push_back(s[i + 2]);
      else
        t.push_back(s[i + 2] - (s[i + 2] - s[i + 1]) * (s[i + 2] - s[i + 1]) / d2);
    }
    if (t.size() >= 2) {
      const double r = std::abs(t[t.size() - 1] - t[t.size() - 2]);
      if (r < resid) {
        resid = r;
        best = t.back();
      }
    } else if (!t.empty() && std::abs(t.back() - best) < resid) {
      best = t.back();
    }
    s = std::move(t);
  }
  return {best, resid};
}

}  // namespace detail

// Integral of an oscillatory integrand over (a, inf), summing the pieces
// between consecutive zeros of the oscillation (spaced zero_spacing apart)
// and accelerating the alternating segment series with iterated Aitken once
// enough segments accumulate.  tail_bound(s) must bound |int_s^inf f|.
template <class F, class TailBound>
QuadResult integrate_oscillatory(const F& f, double a, double zero_spacing,
                                 double rel_tol, const TailBound& tail_bound,
                                 std::size_t max_segments = 400) {
  QuadResult res;
  std::vector<double> partials;
  double sum = 0.0, quad_err = 0.0;
  double left = a;
  const double plain_tol = rel_tol;
  for (std::size_t k = 1; k <= max_segments; ++k) {
    const double right = a + static_cast<double>(k) * zero_spacing;
    QuadResult seg = integrate(f, left, right, plain_tol, 0.0);
    res.evaluations += seg.evaluations;
    sum += seg.value;
    quad_err += seg.abs_error_estimate;
    partials.push_back(sum);
    left = right;
    // try closing with the analytic tail bound
    const double tb = tail_bound(right);
    if (k >= 4 && tb <= rel_tol * std::abs(sum)) {
      res.value = sum;
      res.abs_error_estimate = quad_err + tb;
      res.converged = true;
      return res;
    }
    if (k >= 12) {
      auto [acc, resid] = detail::aitken(partials);
      const double tol = rel_tol * std::max(std::abs(acc), 1e-300);
      if (resid <= tol && quad_err <= 4 * tol) {
        res.value = acc;
        res.abs_error_estimate = quad_err + resid;
        res.converged = true;
        return res;
      }
    }
  }
  auto [acc, resid] = detail::aitken(partials);
  res.value = acc;
  res.abs_error_estimate = quad_err + resid + tail_bound(left);
  res.converged = resid <= rel_tol * std::abs(acc);
  return res;
}

struct pole_isolation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Residue of f at z0 by the trapezoidal rule on a circle |z - z0| = radius:
// (1/2pi i) oint f dz = mean of f(z) (z - z0) over equispaced points.  N is
// doubled until two successive estimates agree to 1e-10 relative.  The rule
// converges geometrically for integrands analytic in an annulus around the
// circle, so a modest N suffices.
template <class F>
std::complex<double> residue_numeric(const F& f, std::complex<double> z0,
                                     int /*pole_order_hint*/, double radius,
                                     double rel_tol = 1e-10) {
  auto estimate = [&](std::size_t n) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double th = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n);
      const std::complex<double> dz = std::polar(radius, th);
      acc += f(z0 + dz) * dz;
    }
    return acc / static_cast<double>(n);
  };
  std::complex<double> prev = estimate(32);
  for (std::size_t n = 64; n <= 8192; n *= 2) {
    const std::complex<double> cur = estimate(n);
    if (std::abs(cur - prev) <= rel_tol * (1.0 + std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

// Radius-independence check: estimates at radius and radius/2 must agree.
template <class F>
std::complex<double> residue_checked(const F& f, std::complex<double> z0,
                                     int pole_order_hint, double radius,
                                     double rel_tol = 1e-8) {
  const auto r1 = residue_numeric(f, z0, pole_order_hint, radius);
  const auto r2 = residue_numeric(f, z0, pole_order_hint, 0.5 * radius);
  if (std::abs(r1 - r2) > rel_tol * (1.0 + std::abs(r1)))
    throw pole_isolation_error("residue estimates disagree across radii");
  return r2;
}

}  // namespace vacmech
