#include "sgt/inertia.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sgt {

std::string to_string(const InertiaTriple& t) {
  std::ostringstream out;
  out << '(' << t.p_plus << ',' << t.n_minus << ',' << t.eta << ')';
  return out.str();
}

Spectrum::Spectrum(std::vector<double> values, double zero_tolerance)
    : values_(std::move(values)), zero_tolerance_(zero_tolerance) {
  if (!(zero_tolerance_ >= 0)) throw std::invalid_argument("spectrum: negative tolerance");
  std::sort(values_.begin(), values_.end(), std::greater<double>());
}

InertiaTriple Spectrum::sign_counts() const {
  InertiaTriple t;
  for (double x : values_) {
    if (x > zero_tolerance_)
      ++t.p_plus;
    else if (x < -zero_tolerance_)
      ++t.n_minus;
    else
      ++t.eta;
  }
  return t;
}

InertiaTriple exact_inertia(const SignedGraph& g) {
  const int n = g.order();
  std::vector<mpq_class> a(static_cast<std::size_t>(n) * n, mpq_class(0));
  for (const Edge& e : g.edges()) {
    a[static_cast<std::size_t>(e.u) * n + e.v] = e.sign;
    a[static_cast<std::size_t>(e.v) * n + e.u] = e.sign;
  }
  auto at = [&](int i, int j) -> mpq_class& { return a[static_cast<std::size_t>(i) * n + j]; };

  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  InertiaTriple out;

  while (!active.empty()) {
    // Prefer a 1x1 pivot on the first nonzero diagonal entry.
    int pivot = -1;
    for (int i : active)
      if (at(i, i) != 0) {
        pivot = i;
        break;
      }
    if (pivot >= 0) {
      mpq_class d = at(pivot, pivot);
      if (sgn(d) > 0)
        ++out.p_plus;
      else
        ++out.n_minus;
      active.erase(std::find(active.begin(), active.end(), pivot));
      for (std::size_t x = 0; x < active.size(); ++x) {
        int i = active[x];
        if (at(i, pivot) == 0) continue;
        mpq_class f = at(i, pivot) / d;
        for (std::size_t y = x; y < active.size(); ++y) {
          int j = active[y];
          at(i, j) -= f * at(pivot, j);
          at(j, i) = at(i, j);
        }
      }
      continue;
    }

    // Diagonal is entirely zero on the active block: grab an off-diagonal
    // pivot [[0, s], [s, 0]], which contributes one eigenvalue of each sign,
    // or conclude the remaining block is zero.
    int pi = -1, pj = -1;
    for (std::size_t x = 0; x < active.size() && pi < 0; ++x)
      for (std::size_t y = x + 1; y < active.size(); ++y)
        if (at(active[x], active[y]) != 0) {
          pi = active[x];
          pj = active[y];
          break;
        }
    if (pi < 0) {
      out.eta += static_cast<int>(active.size());
      break;
    }
    mpq_class s = at(pi, pj);
    ++out.p_plus;
    ++out.n_minus;
    active.erase(std::find(active.begin(), active.end(), pj));
    active.erase(std::find(active.begin(), active.end(), pi));
    for (std::size_t x = 0; x < active.size(); ++x) {
      int i = active[x];
      if (at(i, pi) == 0 && at(i, pj) == 0) continue;
      for (std::size_t y = x; y < active.size(); ++y) {
        int j = active[y];
        at(i, j) -= (at(i, pi) * at(pj, j) + at(i, pj) * at(pi, j)) / s;
        at(j, i) = at(i, j);
      }
    }
  }
  return out;
}

Spectrum float_spectrum(const SignedGraph& g) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (const Edge& e : g.edges()) {
    a[static_cast<std::size_t>(e.u) * n + e.v] = e.sign;
    a[static_cast<std::size_t>(e.v) * n + e.u] = e.sign;
  }
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  // Frobenius norm is invariant under the rotations below.
  double frob = 0.0;
  for (double x : a) frob += x * x;
  frob = std::sqrt(frob);

  constexpr int kMaxSweeps = 100;
  constexpr double kRelativeTolerance = 1e-12;
  for (int sweep = 0;; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    off = std::sqrt(off);
    if (off <= kRelativeTolerance * frob) break;
    if (sweep == kMaxSweeps)
      throw std::runtime_error("jacobi eigensolver failed to converge in 100 sweeps");

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0) t = -t;
        }
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          double arp = at(r, p), arq = at(r, q);
          at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
          at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
  }

  std::vector<double> eigen(n);
  for (int i = 0; i < n; ++i) eigen[i] = at(i, i);
  return Spectrum(std::move(eigen));
}

Spectrum cycle_spectrum_closed_form(int n, bool balanced) {
  if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
  std::vector<double> eigen(n);
  for (int j = 0; j < n; ++j) {
    double angle = balanced ? 2.0 * std::numbers::pi * j / n
                            : (2.0 * j + 1.0) * std::numbers::pi / n;
    eigen[j] = 2.0 * std::cos(angle);
  }
  return Spectrum(std::move(eigen));
}

InertiaTriple cycle_inertia(int n, bool balanced) {
  if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
  InertiaTriple t;
  // 2cos(angle) with angle in [0, 2pi) is positive below pi/2 and above
  // 3pi/2, zero at exactly those two marks, negative in between. Writing
  // angle = (pi/2) * scaled/n turns the comparison into integers: balanced
  // angle 2*pi*j/n gives scaled = 4j, unbalanced (2j+1)*pi/n gives
  // scaled = 2(2j+1).
  for (int j = 0; j < n; ++j) {
    long scaled = balanced ? 4L * j : 2L * (2L * j + 1);
    if (scaled == n || scaled == 3L * n)
      ++t.eta;
    else if (scaled < n || scaled > 3L * n)
      ++t.p_plus;
    else
      ++t.n_minus;
  }
  return t;
}

PendantReduction pendant_reduce(const SignedGraph& g) {
  SignedGraph cur = g;
  int reductions = 0;
  for (;;) {
    auto deg = cur.degrees();
    int leaf = -1;
    for (int v = 0; v < cur.order(); ++v)
      if (deg[v] == 1) {
        leaf = v;
        break;
      }
    if (leaf < 0) break;
    int neighbor = -1;
    for (const Edge& e : cur.edges()) {
      if (e.u == leaf) neighbor = e.v;
      if (e.v == leaf) neighbor = e.u;
      if (neighbor >= 0) break;
    }
    std::vector<int> keep;
    for (int v = 0; v < cur.order(); ++v)
      if (v != leaf && v != neighbor) keep.push_back(v);
    cur = induced_subgraph(cur, VertexSet(std::move(keep)));
    ++reductions;
  }
  return PendantReduction{std::move(cur), reductions};
}

int positive_inertia(const SignedGraph& g) {
  PendantReduction red = pendant_reduce(g);
  return red.reductions + exact_inertia(red.residual).p_plus;
}

}  // namespace sgt
