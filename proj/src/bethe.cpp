#include "yy/bethe.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace yy {

namespace {

double ip(const WeightTable& tab, int i, int k) { return tab.root_ip(i, k).to_double(); }

struct PairedCoords {
  // two roots of t^2 - s t + (s^2 - D)/4, larger imaginary part first
  Complex u, v;
};

// Complex pairs: Im w^1 > Im w^2. Real pairs: ascending, the one-point
// orderings assume w_k < w_{2n+1-k}.
PairedCoords from_sum_and_delta(Complex s, Complex delta) {
  Complex sq = std::sqrt(delta);
  Complex u = (s + sq) * 0.5, v = (s - sq) * 0.5;
  if (u.imag() < v.imag() || (u.imag() == v.imag() && u.real() > v.real())) std::swap(u, v);
  return {u, v};
}

int max_l(const LieType& type) {
  switch (type.family) {
    case Family::A: return type.rank;
    case Family::B: return 2 * type.rank;
    case Family::C: return 2 * type.rank - 1;
    case Family::D: return 2 * type.rank - 2;
  }
  return 0;
}

void check_l(const LieType& type, const LValue& l) {
  validate(type);
  if (l.primed) {
    if (type.family != Family::D || l.value != type.rank - 1)
      throw std::invalid_argument("primed sector only valid as D_n's n-1'");
    return;
  }
  if (l.value < 1 || l.value > max_l(type))
    throw std::invalid_argument("inadmissible l = " + l.str() + " for " + type.str());
}

}  // namespace

std::vector<int> one_point_labels(const LieType& type, const LValue& l) {
  check_l(type, l);
  const int n = type.rank;
  std::vector<int> labels;
  if (l.primed) {
    for (int j = 1; j <= n - 2; ++j) labels.push_back(j);
    labels.push_back(n);
    return labels;
  }
  for (int j = 1; j <= l.value; ++j) {
    int i;
    switch (type.family) {
      case Family::A: i = j; break;
      case Family::B: i = (j <= n) ? j : 2 * n + 1 - j; break;
      case Family::C: i = (j <= n) ? j : 2 * n - j; break;
      case Family::D: i = (j <= n) ? j : 2 * n - 1 - j; break;
      default: i = j;
    }
    labels.push_back(i);
  }
  return labels;
}

std::vector<int> two_point_labels(const LieType& type) {
  validate(type);
  const int n = type.rank;
  std::vector<int> I;
  switch (type.family) {
    case Family::A: I = {1}; break;
    case Family::B:
      for (int i = 1; i <= n; ++i) { I.push_back(i); I.push_back(i); }
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) { I.push_back(i); I.push_back(i); }
      I.push_back(n);
      break;
    case Family::D:
      for (int i = 1; i <= n - 2; ++i) { I.push_back(i); I.push_back(i); }
      I.push_back(n - 1);
      I.push_back(n);
      break;
  }
  return I;
}

CriticalConfig one_point_config(const LieType& type, const LValue& l, double c, Complex z) {
  return CriticalConfig{type, one_point_labels(type, l), {z}, c};
}

CriticalConfig two_point_config(const LieType& type, Complex z1, Complex z2, double c) {
  if (z1 == z2) throw std::invalid_argument("marked points must be distinct");
  return CriticalConfig{type, two_point_labels(type), {z1, z2}, c};
}

namespace {

struct GradientTerms {
  std::vector<Complex> value;
  double max_term = 0.0;
};

GradientTerms gradient_impl(const CriticalConfig& cfg, const std::vector<Complex>& w,
                            bool check_coincidence) {
  auto tab = WeightTable::make(cfg.type);
  const size_t L = cfg.root_labels.size();
  if (w.size() != L) throw std::invalid_argument("coordinate count does not match sector");
  GradientTerms out;
  out.value.assign(L, Complex(0, 0));
  auto track = [&](Complex t) {
    out.max_term = std::max(out.max_term, std::abs(t));
    return t;
  };
  for (size_t j = 0; j < L; ++j) {
    int kj = cfg.root_labels[j];
    double om = tab.omega1_root_ip(kj).to_double();
    Complex acc(0, 0);
    for (const Complex& za : cfg.z) {
      if (om != 0.0) {
        Complex diff = w[j] - za;
        if (check_coincidence && diff == Complex(0, 0))
          throw std::domain_error("coordinate coincides with a marked point");
        acc += track(om / diff);
      }
    }
    for (size_t s = 0; s < L; ++s) {
      if (s == j) continue;
      double rr = ip(tab, kj, cfg.root_labels[s]);
      if (rr == 0.0) continue;
      Complex diff = w[j] - w[s];
      if (check_coincidence && diff == Complex(0, 0))
        throw std::domain_error("coinciding coordinates with nonzero root pairing");
      acc -= track(rr / diff);
    }
    acc -= track(cfg.c * tab.rho_root_ip(kj).to_double());
    out.value[j] = acc;
  }
  return out;
}

}  // namespace

std::vector<Complex> yy_gradient(const CriticalConfig& cfg, const std::vector<Complex>& w) {
  return gradient_impl(cfg, w, true).value;
}

double relative_residual(const CriticalConfig& cfg, const std::vector<Complex>& w) {
  auto g = gradient_impl(cfg, w, true);
  double worst = 0.0;
  for (const Complex& v : g.value) worst = std::max(worst, std::abs(v));
  return worst / std::max(1.0, g.max_term);
}

Complex yy_value(const CriticalConfig& cfg, const std::vector<Complex>& w) {
  auto tab = WeightTable::make(cfg.type);
  const size_t L = cfg.root_labels.size();
  Complex acc(0, 0);
  for (size_t j = 0; j < L; ++j) {
    int kj = cfg.root_labels[j];
    for (const Complex& za : cfg.z) acc += tab.omega1_root_ip(kj).to_double() * std::log(w[j] - za);
    acc -= cfg.c * tab.rho_root_ip(kj).to_double() * w[j];
  }
  for (size_t j = 0; j < L; ++j)
    for (size_t s = j + 1; s < L; ++s) {
      double rr = ip(tab, cfg.root_labels[j], cfg.root_labels[s]);
      if (rr != 0.0) acc -= rr * std::log(w[j] - w[s]);
    }
  double om_norm = tab.omega1_norm().to_double();
  for (size_t a = 0; a < cfg.z.size(); ++a)
    for (size_t b = a + 1; b < cfg.z.size(); ++b) acc -= om_norm * std::log(cfg.z[a] - cfg.z[b]);
  // c * sum_a (rho, omega1) z_a is a constant shift in w; omitted like the
  // z-part normalization, this is a diagnostic value only
  return acc;
}

namespace {

CriticalSolution finish(const CriticalConfig& cfg, std::vector<Complex> w, std::string meta,
                        double gate) {
  CriticalSolution sol;
  sol.coords = std::move(w);
  sol.meta = std::move(meta);
  sol.residual = relative_residual(cfg, sol.coords);
  if (sol.residual >= gate)
    throw std::runtime_error("closed-form residual " + std::to_string(sol.residual) +
                             " exceeds gate for " + sol.meta);
  return sol;
}

}  // namespace

CriticalSolution closed_form_one_point(const LieType& type, const LValue& l, double c, Complex z) {
  check_l(type, l);
  if (!(c > 0)) throw std::invalid_argument("closed forms require c > 0");
  const int n = type.rank;
  auto cfg = one_point_config(type, l, c, z);
  std::vector<Complex> w;

  if (l.primed) {
    // D_n, l = n-1': same chain as the unprimed n-1 with the alpha_n label
    double acc = 0.0;
    for (int j = 1; j <= n - 1; ++j) { acc += 1.0 / (c * (n - j)); w.push_back(z + acc); }
    return finish(cfg, std::move(w), type.str() + " one-point l=n-1'", 1e-9);
  }

  const int lv = l.value;
  switch (type.family) {
    case Family::A: {
      double acc = 0.0;
      for (int i = 1; i <= lv; ++i) { acc += 1.0 / ((lv - i + 1) * c); w.push_back(z + acc); }
      break;
    }
    case Family::B: {
      if (lv < n) {
        double acc = 0.0;
        for (int i = 1; i <= lv; ++i) { acc += 1.0 / (c * (lv - i + 1)); w.push_back(z + acc); }
      } else if (lv == n) {
        double acc = 0.0;
        for (int i = 1; i <= lv; ++i) { acc += 1.0 / (c * (lv - i + 0.5)); w.push_back(z + acc); }
      } else {
        // l >= n+1: singles w_1..w_{2n-l}, symmetric pairs (w_k, w_{2n+1-k}),
        // the alpha_n pair complex-conjugate. Pair sums share the head term
        // 2/(c(2l-2n-1)).
        const int m = 2 * n - lv;
        w.assign(lv, z);
        double acc = 0.0;
        for (int k = 1; k <= m; ++k) { acc += 1.0 / (c * (lv - k)); w[k - 1] = z + acc; }
        double head = 2.0 / (c * (2 * lv - 2 * n - 1));
        double singles2 = 0.0;
        for (int j = 1; j <= m; ++j) singles2 += 2.0 / (c * (lv - j));
        for (int k = m + 1; k <= n; ++k) {
          double tail1 = 0.0, tail2 = 0.0;
          for (int j = m + 1; j <= k - 1; ++j) tail1 += 1.0 / (c * (lv - j - 1));
          for (int j = m + 1; j <= 2 * n - k - 1; ++j) tail2 += 1.0 / (c * (lv - j - 1));
          double wbar = head + singles2 + tail1 + tail2;
          double span = 0.0;
          for (int j = k; j <= 2 * n - k - 1; ++j) span += 1.0 / (c * (lv - j - 1));
          double delta = span * span - 4.0 / (c * c * double(2 * lv - 2 * n - 1) * (2 * lv - 2 * n - 1));
          auto pc = from_sum_and_delta(Complex(wbar, 0), Complex(delta, 0));
          w[k - 1] = z + pc.u;
          w[2 * n - k] = z + pc.v;
        }
      }
      break;
    }
    case Family::C: {
      if (lv < n) {
        double acc = 0.0;
        for (int i = 1; i <= lv; ++i) { acc += 1.0 / (c * (lv - i + 1)); w.push_back(z + acc); }
      } else if (lv == n) {
        double acc = 0.0;
        for (int j = 1; j <= n - 1; ++j) { acc += 1.0 / (c * (n - j + 2)); w.push_back(z + acc); }
        w.push_back(z + acc + 1.0 / c);
      } else {
        const int m = 2 * n - lv - 1;
        w.assign(lv, z);
        double acc = 0.0;
        for (int k = 1; k <= m; ++k) { acc += 1.0 / (c * (lv + 2 - k)); w[k - 1] = z + acc; }
        double wn = acc;
        for (int i = m + 1; i <= n; ++i) wn += 1.0 / (c * (lv + 1 - i));
        w[n - 1] = z + wn;
        double head2 = 0.0;
        for (int i = 1; i <= m; ++i) head2 += 2.0 / (c * (lv - i + 2));
        for (int k = m + 1; k <= n - 1; ++k) {
          double mid2 = 0.0;
          for (int i = m + 1; i <= k - 1; ++i) mid2 += 2.0 / (c * (lv - i + 1));
          double span = 0.0;
          for (int i = k; i <= n; ++i)
            span += 1.0 / (c * (lv - i + 1)) + 1.0 / (c * (lv - 2 * n + i + 1));
          double wbar = head2 + mid2 + span;
          // corrected subtrahend: 4/(c(2l-2n+2)), not the printed 2l-2n+1
          double delta = span * (span - 4.0 / (c * (2 * lv - 2 * n + 2)));
          auto pc = from_sum_and_delta(Complex(wbar, 0), Complex(delta, 0));
          w[k - 1] = z + pc.u;
          w[2 * n - k - 1] = z + pc.v;
        }
      }
      break;
    }
    case Family::D: {
      if (lv <= n - 1) {
        double acc = 0.0;
        for (int i = 1; i <= lv; ++i) { acc += 1.0 / (c * (lv - i + 1)); w.push_back(z + acc); }
      } else if (lv == n) {
        double acc = 0.0;
        for (int j = 1; j <= n - 2; ++j) { acc += 1.0 / (c * (n + 1 - j)); w.push_back(z + acc); }
        Complex mid = z + acc + 1.0 / c;
        w.push_back(mid);
        w.push_back(mid);
      } else {
        const int m = 2 * n - 2 - lv;
        w.assign(lv, z);
        double acc = 0.0;
        for (int k = 1; k <= m; ++k) { acc += 1.0 / (c * (lv + 1 - k)); w[k - 1] = z + acc; }
        double mid = acc;
        for (int i = m + 1; i <= n - 2; ++i) mid += 1.0 / (c * (lv - i));
        mid += 1.0 / (c * (lv + 1 - n));
        w[n - 2] = z + mid;
        w[n - 1] = z + mid;
        double head2 = 0.0;
        for (int i = 1; i <= m; ++i) head2 += 2.0 / (c * (lv + 1 - i));
        for (int k = m + 1; k <= n - 2; ++k) {
          double mid2 = 0.0;
          for (int i = m + 1; i <= k - 1; ++i) mid2 += 2.0 / (c * (lv - i));
          double span = 2.0 / (c * (lv - n + 1));
          for (int i = k; i <= n - 2; ++i)
            span += 1.0 / (c * (lv - i)) + 1.0 / (c * (lv + i + 2 - 2 * n));
          double wbar = head2 + mid2 + span;
          double delta = span * (span - 4.0 / (c * (2 * lv - 2 * n + 2)));
          auto pc = from_sum_and_delta(Complex(wbar, 0), Complex(delta, 0));
          w[k - 1] = z + pc.u;
          w[2 * n - 1 - k - 1] = z + pc.v;
        }
      }
      break;
    }
  }
  return finish(cfg, std::move(w), type.str() + " one-point l=" + l.str(), 1e-9);
}

CriticalSolution closed_form_two_point_c0(const LieType& type, Complex z1, Complex z2) {
  auto cfg = two_point_config(type, z1, z2, 0.0);
  const int n = type.rank;
  std::vector<Complex> w;
  Complex s = z1 + z2;
  Complex zz = z1 * z2;
  Complex d2 = (z1 - z2) * (z1 - z2);
  switch (type.family) {
    case Family::A:
      w.push_back(s * 0.5);
      break;
    case Family::B:
      for (int k = 1; k <= n; ++k) {
        Complex prod = zz + d2 * (double(k) * (2 * n - k) / (4.0 * n * n - 1.0));
        auto pc = from_sum_and_delta(s, s * s - 4.0 * prod);
        w.push_back(pc.u);
        w.push_back(pc.v);
      }
      break;
    case Family::C:
      for (int k = 1; k <= n - 1; ++k) {
        Complex prod = zz + d2 * (double(k) * (2 * n + 1 - k) / (4.0 * n * (n + 1.0)));
        auto pc = from_sum_and_delta(s, s * s - 4.0 * prod);
        w.push_back(pc.u);
        w.push_back(pc.v);
      }
      w.push_back(s * 0.5);
      break;
    case Family::D:
      for (int k = 1; k <= n - 2; ++k) {
        Complex prod = zz + d2 * (double(k) * (2 * n - 1 - k) / (4.0 * n * (n - 1.0)));
        auto pc = from_sum_and_delta(s, s * s - 4.0 * prod);
        w.push_back(pc.u);
        w.push_back(pc.v);
      }
      w.push_back(s * 0.5);
      w.push_back(s * 0.5);
      break;
  }
  return finish(cfg, std::move(w), type.str() + " two-point c=0", 1e-9);
}

CriticalSolution newton_refine(const CriticalConfig& cfg, const std::vector<Complex>& w0) {
  auto tab = WeightTable::make(cfg.type);
  const int L = int(cfg.root_labels.size());
  Eigen::VectorXcd w(L);
  for (int j = 0; j < L; ++j) w(j) = w0[j];

  auto to_vec = [&](const Eigen::VectorXcd& v) {
    std::vector<Complex> out(L);
    for (int j = 0; j < L; ++j) out[j] = v(j);
    return out;
  };

  double res = relative_residual(cfg, to_vec(w));
  for (int iter = 0; iter < 100 && res >= 1e-12; ++iter) {
    auto g = yy_gradient(cfg, to_vec(w));
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(L, L);
    for (int j = 0; j < L; ++j) {
      int kj = cfg.root_labels[j];
      Complex diag(0, 0);
      double om = tab.omega1_root_ip(kj).to_double();
      for (const Complex& za : cfg.z) {
        Complex diff = w(j) - za;
        if (om != 0.0) diag -= om / (diff * diff);
      }
      for (int ss = 0; ss < L; ++ss) {
        if (ss == j) continue;
        double rr = ip(tab, kj, cfg.root_labels[ss]);
        if (rr == 0.0) continue;
        Complex diff = w(j) - w(ss);
        diag += rr / (diff * diff);
        J(j, ss) = -rr / (diff * diff);
      }
      J(j, j) = diag;
    }
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(J);
    Eigen::VectorXcd rhs(L);
    for (int j = 0; j < L; ++j) rhs(j) = g[j];
    Eigen::VectorXcd step = lu.solve(rhs);
    if (!step.allFinite() || (J * step - rhs).norm() > 1e-6 * std::max(1.0, rhs.norm()))
      throw std::runtime_error("singular Jacobian in Newton refinement");
    Eigen::VectorXcd next = w - step;
    double next_res = relative_residual(cfg, to_vec(next));
    // plain damping against overshoot
    for (int h = 0; h < 30 && !(next_res < res || next_res < 1e-12); ++h) {
      step *= 0.5;
      next = w - step;
      next_res = relative_residual(cfg, to_vec(next));
    }
    if (!(next_res < res || next_res < 1e-12))
      throw std::runtime_error("Newton refinement diverged");
    w = next;
    res = next_res;
  }
  if (res >= 1e-9) throw std::runtime_error("Newton refinement did not reach tolerance");
  CriticalSolution sol;
  sol.coords = to_vec(w);
  sol.residual = res;
  sol.meta = "newton";
  return sol;
}

namespace {

bool strictly_increasing(const std::vector<double>& xs, double tol) {
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    if (!(xs[i] < xs[i + 1] - tol)) return false;
  return !xs.empty() && xs[0] > tol;
}

bool real_within(const Complex& x, double tol) { return std::abs(x.imag()) <= tol; }

}  // namespace

bool verify_ordering(const LieType& type, const LValue& l, const CriticalSolution& sol) {
  const int n = type.rank;
  const auto& w = sol.coords;
  const double tol = 1e-9;

  auto reals = [&](int lo, int hi) {  // 1-based inclusive
    std::vector<double> xs;
    for (int k = lo; k <= hi; ++k) xs.push_back(w[k - 1].real());
    return xs;
  };

  if (type.family == Family::A || l.primed) {
    for (const auto& x : w) if (!real_within(x, tol)) return false;
    return strictly_increasing(reals(1, int(w.size())), tol);
  }
  const int lv = l.value;
  switch (type.family) {
    case Family::B: {
      if (lv <= n) {
        for (const auto& x : w) if (!real_within(x, tol)) return false;
        return strictly_increasing(reals(1, lv), tol);
      }
      // pairs (w_k, w_{2n+1-k}) real with w_k < w_{2n+1-k} (Delta_k > 0),
      // middle alpha_n pair strictly complex (Delta_n < 0)
      const int m = 2 * n - lv;
      for (int k = 1; k <= lv; ++k)
        if (k != n && k != n + 1 && !real_within(w[k - 1], tol)) return false;
      Complex u = w[n - 1], v = w[n];
      if (std::abs(u - std::conj(v)) > 1e-7 || std::abs(u.imag()) < tol) return false;
      std::vector<double> low = reals(1, m);
      for (int k = m + 1; k <= n - 1; ++k) low.push_back(w[k - 1].real());
      low.push_back(0.5 * (u + v).real());
      for (int k = n - 1; k >= m + 1; --k) low.push_back(w[2 * n - k].real());
      for (int k = m + 1; k <= n - 1; ++k)
        if (!(w[k - 1].real() < w[2 * n - k].real() - tol)) return false;
      return strictly_increasing(low, tol);
    }
    case Family::C: {
      for (const auto& x : w) if (!real_within(x, tol)) return false;
      return strictly_increasing(reals(1, lv), tol);
    }
    case Family::D: {
      for (const auto& x : w) if (!real_within(x, tol)) return false;
      if (lv <= n - 1) return strictly_increasing(reals(1, lv), tol);
      // nondecreasing with the equal middle pair w_{n-1} = w_n
      if (std::abs(w[n - 2] - w[n - 1]) > 1e-9) return false;
      std::vector<double> xs = reals(1, n - 1);
      for (int k = n + 1; k <= lv; ++k) xs.push_back(w[k - 1].real());
      return strictly_increasing(xs, tol);
    }
    default: return false;
  }
}

bool verify_two_point_structure(const LieType& type, Complex z1, Complex z2,
                                const CriticalSolution& sol) {
  const int n = type.rank;
  const auto& w = sol.coords;
  Complex s = z1 + z2;
  Complex mid = s * 0.5;
  double scale = std::max(1.0, std::abs(z1 - z2));
  auto near = [&](Complex a, Complex b) { return std::abs(a - b) <= 1e-9 * scale; };
  switch (type.family) {
    case Family::A: return near(w[0], mid);
    case Family::B: {
      for (int k = 1; k <= n; ++k)
        if (!near(w[2 * k - 2] + w[2 * k - 1], s)) return false;
      return true;
    }
    case Family::C: {
      for (int k = 1; k <= n - 1; ++k)
        if (!near(w[2 * k - 2] + w[2 * k - 1], s)) return false;
      return near(w.back(), mid);
    }
    case Family::D: {
      for (int k = 1; k <= n - 2; ++k)
        if (!near(w[2 * k - 2] + w[2 * k - 1], s)) return false;
      return near(w[w.size() - 2], mid) && near(w.back(), mid);
    }
  }
  return false;
}

bool verify_c_limit(const LieType& type, int l, Complex z1, Complex z2) {
  if (l != int(two_point_labels(type).size()))
    throw std::invalid_argument("continuation is seeded from the lowest two-point sector only");
  return verify_c_limit(type, z1, z2);
}

bool verify_c_limit(const LieType& type, Complex z1, Complex z2) {
  auto sol = closed_form_two_point_c0(type, z1, z2);
  std::vector<Complex> w = sol.coords;
  const std::vector<double> targets = {1.0, 10.0, 100.0, 1000.0};
  std::vector<double> dists;
  double c_prev = 0.0;
  for (double c_target : targets) {
    // geometric substeps keep Newton in its basin along the continuation
    double c = c_prev;
    while (c < c_target) {
      c = (c == 0.0) ? 0.25 : std::min(c * 1.8, c_target);
      auto cfg = two_point_config(type, z1, z2, c);
      w = newton_refine(cfg, w).coords;
    }
    c_prev = c_target;
    double worst = 0.0;
    for (const Complex& x : w)
      worst = std::max(worst, std::min(std::abs(x - z1), std::abs(x - z2)));
    dists.push_back(worst);
  }
  for (size_t i = 0; i + 1 < dists.size(); ++i)
    if (!(dists[i + 1] < dists[i])) return false;
  // O(1/c): the final decade should shrink distances ~10x, within factor 3
  double ratio = dists[dists.size() - 2] / dists.back();
  return ratio > 10.0 / 3.0 && ratio < 30.0;
}

}  // namespace yy
