#include "zitterlab/checkerboard.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zitterlab::checkerboard {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitTol = 1e-12;

Eigen::Matrix2cd p_matrix(Complex x, Complex y) {
  Eigen::Matrix2cd p;
  p << x, y, Complex(0, 0), Complex(0, 0);
  return p;
}

Eigen::Matrix2cd q_matrix(Complex x, Complex y) {
  Eigen::Matrix2cd q;
  q << Complex(0, 0), Complex(0, 0), y, x;
  return q;
}

Complex i_power(int r) {
  switch (((r % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

void check_cap(int n_steps, std::size_t cap) {
  if (n_steps < 0) throw std::invalid_argument("n_steps must be >= 0");
  if (static_cast<std::size_t>(n_steps) > cap) {
    throw CapExceeded("brute-force path sum over " + std::to_string(n_steps) +
                      " steps exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

MoveState move_state_from_char(char c) {
  if (c == 'P') return MoveState::P;
  if (c == 'Q') return MoveState::Q;
  throw std::invalid_argument("move state must be P or Q");
}

StepMatrices make_step_matrices(double b, double theta) {
  if (!(b > 0.0 && b < 1.0)) {
    throw DomainError("b must lie in (0, 1)");
  }
  const bool quarter = std::abs(theta - kPi / 2) <= 1e-9;
  const bool three_quarter = std::abs(theta - 3 * kPi / 2) <= 1e-9;
  if (!quarter && !three_quarter) {
    throw DomainError("theta must be pi/2 or 3pi/2");
  }
  const double a = std::sqrt(1.0 - b * b);
  const Complex x(a, 0.0);
  // The admissible phases land exactly on the imaginary axis.
  const Complex y = quarter ? Complex(0.0, b) : Complex(0.0, -b);
  StepMatrices m{p_matrix(x, y), q_matrix(x, y), a, b,
                 quarter ? kPi / 2 : 3 * kPi / 2};
  return m;
}

StepMatrices make_step_matrices_from_xy(Complex x, Complex y) {
  const double norm = std::norm(x) + std::norm(y);
  if (std::abs(norm - 1.0) > kUnitTol) {
    throw DomainError("|x|^2 + |y|^2 must equal 1");
  }
  if (std::abs(std::real(std::conj(x) * y)) > kUnitTol) {
    throw DomainError("x and y must be 90 degrees out of phase");
  }
  double theta = std::arg(y) - std::arg(x);
  if (theta < 0) theta += 2 * kPi;
  StepMatrices m{p_matrix(x, y), q_matrix(x, y), std::abs(x), std::abs(y),
                 theta};
  return m;
}

StepMatrices rotate_step_matrices(const StepMatrices& m, double gamma) {
  const Complex phase(std::cos(gamma), std::sin(gamma));
  return make_step_matrices_from_xy(m.x() * phase, m.y() * phase);
}

Field Field::point_source(std::int64_t x, MoveState s) {
  Eigen::Matrix2Xcd data = Eigen::Matrix2Xcd::Zero(2, 1);
  data(s == MoveState::P ? 0 : 1, 0) = Complex(1, 0);
  return Field(x, std::move(data));
}

Field Field::zero(std::int64_t x_min, std::int64_t x_max) {
  if (x_max < x_min) throw std::invalid_argument("empty field bounds");
  return Field(x_min, Eigen::Matrix2Xcd::Zero(2, x_max - x_min + 1));
}

Complex Field::phi_p(std::int64_t x) const {
  if (x < x_min_ || x > x_max()) return {0, 0};
  return data_(0, x - x_min_);
}

Complex Field::phi_q(std::int64_t x) const {
  if (x < x_min_ || x > x_max()) return {0, 0};
  return data_(1, x - x_min_);
}

Spinor Field::spinor(std::int64_t x) const { return {phi_p(x), phi_q(x)}; }

void Field::set_spinor(std::int64_t x, const Spinor& s) {
  if (x < x_min_ || x > x_max()) {
    throw std::out_of_range("site outside field support");
  }
  data_.col(x - x_min_) = s;
}

double Field::probability_at(std::int64_t x) const {
  if (x < x_min_ || x > x_max()) return 0.0;
  return data_.col(x - x_min_).squaredNorm();
}

Field step(const Field& field, const StepMatrices& m) {
  if (field.empty()) return field;
  const Eigen::Index n = field.data().cols();
  const Complex x = m.x();
  const Complex y = m.y();
  Eigen::Matrix2Xcd out = Eigen::Matrix2Xcd::Zero(2, n + 2);
  // Arrivals: P-component at site s reads site s-1, Q-component reads s+1.
  out.row(0).segment(2, n) = x * field.data().row(0) + y * field.data().row(1);
  out.row(1).segment(0, n) = y * field.data().row(0) + x * field.data().row(1);
  return Field(field.x_min() - 1, std::move(out));
}

Amplitude path_amplitude(std::string_view seq, MoveState initial_state,
                         const StepMatrices& m) {
  if (seq.empty()) {
    throw std::invalid_argument("path must contain at least one move");
  }
  const Complex x = m.x();
  const Complex y = m.y();
  Complex amp(1, 0);
  char prev = to_char(initial_state);
  for (char c : seq) {
    if (c != 'P' && c != 'Q') {
      throw std::invalid_argument("move sequence may contain only P and Q");
    }
    amp *= (c == prev) ? x : y;
    prev = c;
  }
  return Amplitude::from_complex(amp);
}

Field kernel_bruteforce_field(int n_steps, MoveState initial_state,
                              const StepMatrices& m, std::size_t cap) {
  check_cap(n_steps, cap);
  const int n = n_steps;
  Eigen::Matrix2Xcd acc = Eigen::Matrix2Xcd::Zero(2, 2 * n + 1);
  const Complex x = m.x();
  const Complex y = m.y();
  const char initial = to_char(initial_state);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Complex amp(1, 0);
    std::int64_t disp = 0;
    char prev = initial;
    for (int i = 0; i < n; ++i) {
      const char mv = ((bits >> i) & 1) ? 'Q' : 'P';
      amp *= (mv == prev) ? x : y;
      disp += (mv == 'P') ? 1 : -1;
      prev = mv;
    }
    acc(prev == 'P' ? 0 : 1, disp + n) += amp;
  }
  return Field(-n, std::move(acc));
}

Field kernel_dp_field(int n_steps, MoveState initial_state,
                      const StepMatrices& m) {
  if (n_steps < 0) throw std::invalid_argument("n_steps must be >= 0");
  const int n = n_steps;
  if (n == 0) return Field::point_source(0, initial_state);

  // The unitarity constraint makes x̄y purely imaginary, so (x, y) is a
  // global phase e^{i gamma} times (a0, i b0) with a0, b0 real. Each n-move
  // path picks up exactly e^{i n gamma}, which factors out of the whole
  // slice. Iterating the slice relation in that gauge needs only real
  // arithmetic: with phi_P = e^{i t gamma} u and phi_Q = e^{i t gamma} i v
  // (from initial state P; the roles of u and v swap from Q),
  //   u(x, t+1) = a0 u(x-1, t) - b0 v(x-1, t)
  //   v(x, t+1) = b0 u(x+1, t) + a0 v(x+1, t).
  const Complex x = m.x();
  const Complex y = m.y();
  double a0, b0, gamma;
  if (x.imag() == 0.0 && x.real() >= 0.0 && y.real() == 0.0) {
    a0 = x.real();
    b0 = y.imag();
    gamma = 0.0;
  } else {
    gamma = (std::abs(x) > 0.0) ? std::arg(x)
                                : std::arg(y) - kPi / 2;
    a0 = std::abs(x);
    const Complex y0 = y * Complex(std::cos(-gamma), std::sin(-gamma));
    b0 = y0.imag();  // real residue is rounding noise, |y0.real()| ~ eps
  }

  // Compact parity storage: slot j at time t holds site 2j - t, so each
  // slice is contiguous and the update is two shifted axpy passes. The
  // grouping keeps the update bitwise symmetric under the P/Q mirror.
  const bool from_p = initial_state == MoveState::P;
  const double s = from_p ? 1.0 : -1.0;  // sign pattern from the gauge basis
  using Arr = Eigen::ArrayXd;
  Arr u = Arr::Zero(n + 1), v = Arr::Zero(n + 1);
  Arr nu = Arr::Zero(n + 1), nv = Arr::Zero(n + 1);
  u(0) = 1.0;
  for (int t = 0; t < n; ++t) {
    const int len = t + 1;
    nu.segment(1, len) = (a0 * u.head(len)) - (s * b0 * v.head(len));
    nu(0) = 0.0;
    nv.head(len) = (s * b0 * u.head(len)) + (a0 * v.head(len));
    nv(len) = 0.0;
    u.swap(nu);
    v.swap(nv);
  }

  const Complex phase =
      (gamma == 0.0) ? Complex(1, 0)
                     : Complex(std::cos(n * gamma), std::sin(n * gamma));
  Eigen::Matrix2Xcd data = Eigen::Matrix2Xcd::Zero(2, 2 * n + 1);
  for (int j = 0; j <= n; ++j) {
    // undo the gauge: the component matching the initial state carries u
    const Complex cu = phase * u(j);
    const Complex cv = phase * Complex(-0.0 * v(j), v(j));  // i * v
    data(0, 2 * j) = from_p ? cu : cv;
    data(1, 2 * j) = from_p ? cv : cu;
  }
  return Field(-n, std::move(data));
}

KernelComponents kernel_components(const Field& f, std::int64_t x) {
  return {Amplitude::from_complex(f.phi_p(x)),
          Amplitude::from_complex(f.phi_q(x))};
}

KernelComponents kernel_bruteforce(const KernelQuery& q, const StepMatrices& m,
                                   std::size_t cap) {
  return kernel_components(
      kernel_bruteforce_field(q.n_steps, q.initial_state, m, cap), q.x);
}

KernelComponents kernel_dp(const KernelQuery& q, const StepMatrices& m) {
  return kernel_components(kernel_dp_field(q.n_steps, q.initial_state, m),
                           q.x);
}

namespace {

// N(R; n, x, final) over all 2^n paths, indexed [site][final][R].
struct CornerHistogram {
  int n = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t& at(std::int64_t x, int final_comp, int r) {
    const auto site = static_cast<std::size_t>(x + n);
    return counts[(site * 2 + final_comp) * (n + 1) + r];
  }
  std::uint64_t get(std::int64_t x, int final_comp, int r) const {
    if (x < -n || x > n) return 0;
    const auto site = static_cast<std::size_t>(x + n);
    return counts[(site * 2 + final_comp) * (n + 1) + r];
  }
};

CornerHistogram corner_histogram(int n_steps, MoveState initial_state,
                                 std::size_t cap) {
  check_cap(n_steps, cap);
  const int n = n_steps;
  CornerHistogram hist;
  hist.n = n;
  hist.counts.assign(std::size_t(2 * n + 1) * 2 * (n + 1), 0);
  const char initial = to_char(initial_state);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::int64_t disp = 0;
    int corners = 0;
    char prev = initial;
    for (int i = 0; i < n; ++i) {
      const char mv = ((bits >> i) & 1) ? 'Q' : 'P';
      if (mv != prev) ++corners;
      disp += (mv == 'P') ? 1 : -1;
      prev = mv;
    }
    ++hist.at(disp, prev == 'P' ? 0 : 1, corners);
  }
  return hist;
}

double check_corner_b(double b) {
  // b = 0 is admitted here as the massless diagnostic edge.
  if (!(b >= 0.0 && b < 1.0)) {
    throw DomainError("b must lie in [0, 1)");
  }
  return std::sqrt(1.0 - b * b);
}

Complex assemble_corner_sum(const CornerHistogram& hist, std::int64_t x,
                            int final_filter,  // 0 = P, 1 = Q, -1 = both
                            int r_max, double a, double b) {
  Complex sum(0, 0);
  const int r_top = std::min(r_max, hist.n);
  for (int r = 0; r <= r_top; ++r) {
    std::uint64_t n_paths = 0;
    if (final_filter != 1) n_paths += hist.get(x, 0, r);
    if (final_filter != 0) n_paths += hist.get(x, 1, r);
    if (n_paths == 0) continue;
    const double mag = std::pow(a, hist.n - r) * std::pow(b, r);
    sum += static_cast<double>(n_paths) * mag * i_power(r);
  }
  return sum;
}

}  // namespace

Amplitude corner_weighted_sum(int n_steps, std::int64_t x,
                              MoveState initial_state, int r_max, double b,
                              std::size_t cap) {
  const double a = check_corner_b(b);
  const CornerHistogram hist = corner_histogram(n_steps, initial_state, cap);
  return Amplitude::from_complex(assemble_corner_sum(hist, x, -1, r_max, a, b));
}

Amplitude corner_weighted_sum_component(int n_steps, std::int64_t x,
                                        MoveState initial_state,
                                        MoveState final_state, int r_max,
                                        double b, std::size_t cap) {
  const double a = check_corner_b(b);
  const CornerHistogram hist = corner_histogram(n_steps, initial_state, cap);
  return Amplitude::from_complex(assemble_corner_sum(
      hist, x, final_state == MoveState::P ? 0 : 1, r_max, a, b));
}

Field corner_weighted_field(int n_steps, MoveState initial_state, int r_max,
                            double b, std::size_t cap) {
  const double a = check_corner_b(b);
  const CornerHistogram hist = corner_histogram(n_steps, initial_state, cap);
  const int n = n_steps;
  Eigen::Matrix2Xcd data = Eigen::Matrix2Xcd::Zero(2, 2 * n + 1);
  for (std::int64_t x = -n; x <= n; ++x) {
    data(0, x + n) = assemble_corner_sum(hist, x, 0, r_max, a, b);
    data(1, x + n) = assemble_corner_sum(hist, x, 1, r_max, a, b);
  }
  return Field(-n, std::move(data));
}

Field gaussian_spinor(double eps, double sigma, double half_width) {
  if (!(eps > 0.0) || !(sigma > 0.0) || !(half_width > 0.0)) {
    throw std::invalid_argument("eps, sigma and half_width must be positive");
  }
  const auto half = static_cast<std::int64_t>(std::llround(half_width / eps));
  Field f = Field::zero(-half, half);
  for (std::int64_t x = -half; x <= half; ++x) {
    const double pos = double(x) * eps;
    const Complex g(std::exp(-pos * pos / (2.0 * sigma * sigma)), 0.0);
    f.set_spinor(x, Spinor(g, g));
  }
  return f;
}

double dirac_residual(const std::vector<Field>& field_history, double b,
                      double eps) {
  if (field_history.size() < 2) {
    throw InsufficientHistory("dirac_residual needs at least two slices");
  }
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const double m = b / eps;
  const Complex im(0.0, m);
  double residual = 0.0;
  for (std::size_t s = 0; s + 1 < field_history.size(); ++s) {
    const Field& prev = field_history[s];
    const Field& next = field_history[s + 1];
    for (std::int64_t x = next.x_min(); x <= next.x_max(); ++x) {
      const Complex rp =
          (next.phi_p(x) - prev.phi_p(x - 1)) / eps - im * prev.phi_q(x - 1);
      const Complex rq =
          (next.phi_q(x) - prev.phi_q(x + 1)) / eps - im * prev.phi_p(x + 1);
      residual = std::max({residual, std::abs(rp), std::abs(rq)});
    }
  }
  return residual;
}

}  // namespace zitterlab::checkerboard
