#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "zitterlab/amplitude.hpp"
#include "zitterlab/errors.hpp"

namespace zitterlab::checkerboard {

using Complex = std::complex<double>;

/// Spinor component convention: index 0 tracks a particle whose latest move
/// was a P-move, index 1 a Q-move (arrival-state convention).
using Spinor = Eigen::Vector2cd;

enum class MoveState { P, Q };

inline char to_char(MoveState s) { return s == MoveState::P ? 'P' : 'Q'; }
MoveState move_state_from_char(char c);

inline constexpr std::size_t kDefaultBruteForceCap = 20;

/// Step operators of the walk. P appends a P-move, Q a Q-move:
///   P = [x y; 0 0],  Q = [0 0; y x]
/// with x the continuation amplitude and y the reversal amplitude, subject to
/// Q†Q + P†P = I, i.e. |x|^2 + |y|^2 = 1 and x̄y purely imaginary.
struct StepMatrices {
  Eigen::Matrix2cd P;
  Eigen::Matrix2cd Q;
  double a = 0.0;      // |x|
  double b = 0.0;      // |y|
  double theta = 0.0;  // relative phase arg(y) - arg(x)

  Complex x() const { return P(0, 0); }
  Complex y() const { return P(0, 1); }
};

/// Canonical matrices with x = a = sqrt(1 - b^2) real positive and
/// y = b e^{i theta}. Requires 0 < b < 1 and theta in {pi/2, 3pi/2}; the
/// default (1/sqrt(2), pi/2) is the symmetric particle-at-rest choice.
StepMatrices make_step_matrices(double b, double theta);

/// Matrices from raw amplitudes; validates the unitarity constraints but
/// leaves the global phase free. Admits the massless edge case y = 0.
StepMatrices make_step_matrices_from_xy(Complex x, Complex y);

/// Global phase rotation of both amplitudes; probabilities are unaffected.
StepMatrices rotate_step_matrices(const StepMatrices& m, double gamma);

/// Two-component field on an integer lattice slice with finite support.
/// Column j of the data holds the spinor at site x_min + j.
class Field {
 public:
  Field() = default;
  Field(std::int64_t x_min, Eigen::Matrix2Xcd data)
      : x_min_(x_min), data_(std::move(data)) {}

  static Field point_source(std::int64_t x, MoveState s);
  static Field zero(std::int64_t x_min, std::int64_t x_max);

  bool empty() const { return data_.cols() == 0; }
  std::int64_t x_min() const { return x_min_; }
  std::int64_t x_max() const { return x_min_ + data_.cols() - 1; }

  Complex phi_p(std::int64_t x) const;
  Complex phi_q(std::int64_t x) const;
  Spinor spinor(std::int64_t x) const;
  void set_spinor(std::int64_t x, const Spinor& s);

  double probability_at(std::int64_t x) const;
  double total_probability() const { return data_.squaredNorm(); }

  const Eigen::Matrix2Xcd& data() const { return data_; }

 private:
  std::int64_t x_min_ = 0;
  Eigen::Matrix2Xcd data_;
};

/// One tick of the walk: phi_P(x) <- x phi_P(x-1) + y phi_Q(x-1) and
/// phi_Q(x) <- y phi_P(x+1) + x phi_Q(x+1). Support grows by one site per
/// side; every transition moves exactly one lattice unit.
Field step(const Field& field, const StepMatrices& m);

/// Product of per-move amplitudes along a path: x when the move continues
/// the previous one, y on a reversal. The first move compares against
/// initial_state.
Amplitude path_amplitude(std::string_view seq, MoveState initial_state,
                         const StepMatrices& m);

struct KernelQuery {
  int n_steps = 0;
  MoveState initial_state = MoveState::P;
  std::int64_t x = 0;  // net displacement; nonzero kernels need |x| <= n and
                       // x ≡ n (mod 2)
};

struct KernelComponents {
  Amplitude p;
  Amplitude q;
};

/// Path sum over all 2^n move sequences, accumulated per (displacement,
/// final state). Throws CapExceeded past the cap.
Field kernel_bruteforce_field(int n_steps, MoveState initial_state,
                              const StepMatrices& m,
                              std::size_t cap = kDefaultBruteForceCap);

/// Same kernel via dynamic programming on slices; scales to n ~ 1e5.
Field kernel_dp_field(int n_steps, MoveState initial_state,
                      const StepMatrices& m);

KernelComponents kernel_components(const Field& f, std::int64_t x);

KernelComponents kernel_bruteforce(const KernelQuery& q, const StepMatrices& m,
                                   std::size_t cap = kDefaultBruteForceCap);
KernelComponents kernel_dp(const KernelQuery& q, const StepMatrices& m);

/// Corner-decomposed path sum: sum_R N(R; n, x) a^(n-R) (i b)^R over
/// reversal counts R <= r_max, with N obtained by enumeration. With
/// r_max = n this equals the component-summed brute-force kernel.
Amplitude corner_weighted_sum(int n_steps, std::int64_t x,
                              MoveState initial_state, int r_max, double b,
                              std::size_t cap = kDefaultBruteForceCap);

/// Restriction of corner_weighted_sum to paths ending in a given state.
Amplitude corner_weighted_sum_component(int n_steps, std::int64_t x,
                                        MoveState initial_state,
                                        MoveState final_state, int r_max,
                                        double b,
                                        std::size_t cap = kDefaultBruteForceCap);

/// Whole kernel assembled from the corner decomposition in a single
/// enumeration pass.
Field corner_weighted_field(int n_steps, MoveState initial_state, int r_max,
                            double b, std::size_t cap = kDefaultBruteForceCap);

/// Smooth two-component Gaussian over sites |x| <= round(half_width / eps)
/// with physical profile exp(-(x eps)^2 / (2 sigma^2)) in both components.
/// Amplitudes are O(1) regardless of eps (continuum scaling), which is what
/// the Dirac residual diagnostic expects.
Field gaussian_spinor(double eps, double sigma, double half_width);

/// Max-norm residual of the light-cone finite-difference Dirac system
///   D+ psi+ = i m psi-   and   D- psi- = i m psi+
/// evaluated on consecutive evolved slices, with m = b / eps and D± the
/// one-sided difference quotients along the characteristics over spacing
/// eps. Throws InsufficientHistory with fewer than two slices.
double dirac_residual(const std::vector<Field>& field_history, double b,
                      double eps);

}  // namespace zitterlab::checkerboard
