// Command-line front end: sequence enumeration, poset quantification,
// sequence-algebra evaluation, checkerboard kernels and invariant suites.
// All emitters share fixed float formatting and row ordering so identical
// configurations produce byte-identical output.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "zitterlab/checkerboard.hpp"
#include "zitterlab/fixture_io.hpp"
#include "zitterlab/poset.hpp"
#include "zitterlab/seqlang.hpp"
#include "zitterlab/sequences.hpp"

namespace cb = zitterlab::checkerboard;
namespace io = zitterlab::io;
using zitterlab::Amplitude;
using zitterlab::CapExceeded;
using io::format_double;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;

std::size_t brute_force_cap() {
  if (const char* env = std::getenv("ZITTERLAB_MAX_STEPS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return cb::kDefaultBruteForceCap;
}

double parse_theta(const std::string& text) {
  if (text == "pi/2") return kPi / 2;
  if (text == "3pi/2") return 3 * kPi / 2;
  return std::stod(text);
}

void emit(const std::string& path, const std::string& contents) {
  if (path.empty()) {
    std::cout << contents;
  } else {
    io::write_file(path, contents);
  }
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateOptions {
  unsigned np = 0;
  unsigned nq = 0;
  bool corners_histogram = false;
  std::string csv_path;
  std::size_t cap = zitterlab::kDefaultEnumerationCap;
};

int run_enumerate(const EnumerateOptions& opt) {
  std::string out;
  if (opt.corners_histogram) {
    std::vector<std::uint64_t> hist(opt.np + opt.nq + 1, 0);
    zitterlab::for_each_sequence(
        opt.np, opt.nq,
        [&](const std::string& s) { ++hist[zitterlab::count_corners(s)]; },
        opt.cap);
    out = "R,count\n";
    for (std::size_t r = 0; r < hist.size(); ++r) {
      if (hist[r] == 0) continue;
      out += std::to_string(r) + "," + std::to_string(hist[r]) + "\n";
    }
  } else {
    out = "seq,R,x_final,t_final\n";
    zitterlab::for_each_sequence(
        opt.np, opt.nq,
        [&](const std::string& s) {
          const auto path = zitterlab::seq_to_path(s);
          const auto end = path.points.back();
          out += s + "," + std::to_string(zitterlab::count_corners(s)) + "," +
                 std::to_string(end.x) + "," + std::to_string(end.t) + "\n";
        },
        opt.cap);
  }
  emit(opt.csv_path, out);
  return 0;
}

// ---------------------------------------------------------------------------
// poset

struct PosetOptions {
  std::string fixture_path;
  std::string sequence;
  std::string chain_p = "P";
  std::string chain_q = "Q";
  std::string intervals_path;
  std::string elements_path;
  std::string save_fixture_path;
};

int run_poset(const PosetOptions& opt) {
  io::PosetFixture fx;
  if (!opt.sequence.empty()) {
    const auto free_particle =
        zitterlab::build_free_particle_poset(opt.sequence);
    if (!opt.save_fixture_path.empty()) {
      io::write_file(opt.save_fixture_path,
                     io::fixture_to_json(free_particle));
    }
    fx = io::to_poset_fixture(free_particle);
  } else if (!opt.fixture_path.empty()) {
    fx = io::load_poset_fixture(opt.fixture_path);
  } else {
    std::cerr << "poset: need --fixture or --sequence\n";
    return 1;
  }
  const auto& chain_p = fx.chain(opt.chain_p);
  const auto& chain_q = fx.chain(opt.chain_q);
  if (!opt.elements_path.empty()) {
    io::write_file(opt.elements_path,
                   io::element_table_csv(fx, chain_p, chain_q));
  }
  const std::string intervals = io::interval_table_csv(fx, chain_p, chain_q);
  if (opt.intervals_path.empty() && !opt.elements_path.empty()) {
    return 0;  // elements only
  }
  emit(opt.intervals_path, intervals);
  return 0;
}

// ---------------------------------------------------------------------------
// seq-eval

int run_seq_eval(const std::string& env_path, const std::string& expr_text) {
  const auto env = io::load_amplitude_env(env_path);
  const auto expr = zitterlab::seqlang::parse(expr_text);
  const Amplitude a = zitterlab::seqlang::evaluate(*expr, env);
  std::cout << "{\"a1\":" << format_double(a.a1())
            << ",\"a2\":" << format_double(a.a2())
            << ",\"prob\":" << format_double(zitterlab::born(a)) << "}\n";
  return 0;
}

// ---------------------------------------------------------------------------
// kernel

struct KernelOptions {
  int steps = 0;
  double b = kInvSqrt2;
  std::string theta = "pi/2";
  std::string initial = "P";
  std::string method = "dp";
  std::string json_path;
};

std::string kernel_json(const cb::Field& field, int n, double b, double theta,
                        const std::string& initial) {
  std::string out = "{\"n\":" + std::to_string(n) +
                    ",\"b\":" + format_double(b) +
                    ",\"theta\":" + format_double(theta) + ",\"initial\":\"" +
                    initial + "\",\"entries\":[";
  bool first = true;
  for (std::int64_t x = field.x_min(); x <= field.x_max(); ++x) {
    const cb::Complex comps[2] = {field.phi_p(x), field.phi_q(x)};
    for (int c = 0; c < 2; ++c) {
      if (comps[c].real() == 0.0 && comps[c].imag() == 0.0) continue;
      if (!first) out += ',';
      first = false;
      out += std::string("{\"x\":") + std::to_string(x) + ",\"comp\":\"" +
             (c == 0 ? "P" : "Q") + "\",\"re\":" +
             format_double(comps[c].real()) + ",\"im\":" +
             format_double(comps[c].imag()) + ",\"prob\":" +
             format_double(std::norm(comps[c])) + "}";
    }
  }
  out += "]}\n";
  return out;
}

int run_kernel(const KernelOptions& opt) {
  const double theta = parse_theta(opt.theta);
  const auto matrices = cb::make_step_matrices(opt.b, theta);
  const auto initial = cb::move_state_from_char(opt.initial.at(0));
  cb::Field field;
  if (opt.method == "dp") {
    field = cb::kernel_dp_field(opt.steps, initial, matrices);
  } else if (opt.method == "brute") {
    field = cb::kernel_bruteforce_field(opt.steps, initial, matrices,
                                        brute_force_cap());
  } else if (opt.method == "corners") {
    field = cb::corner_weighted_field(opt.steps, initial, opt.steps, opt.b,
                                      brute_force_cap());
  } else {
    std::cerr << "kernel: unknown method '" << opt.method << "'\n";
    return 1;
  }
  emit(opt.json_path, kernel_json(field, opt.steps, opt.b, theta, opt.initial));
  return 0;
}

// ---------------------------------------------------------------------------
// zitter

struct ZitterOptions {
  int steps = 0;
  std::string initial = "symmetric";
  double b = kInvSqrt2;
  std::string theta = "pi/2";
  std::string csv_path;
};

int run_zitter(const ZitterOptions& opt) {
  const auto matrices = cb::make_step_matrices(opt.b, parse_theta(opt.theta));
  std::vector<cb::Field> fields;  // evolved together, combined per slice
  bool mixture = false;
  if (opt.initial == "symmetric") {
    // Equal-weight mixture over the two initial move states, combined at the
    // probability level.
    fields.push_back(cb::Field::point_source(0, cb::MoveState::P));
    fields.push_back(cb::Field::point_source(0, cb::MoveState::Q));
    mixture = true;
  } else if (opt.initial == "coherent") {
    cb::Field f = cb::Field::zero(0, 0);
    f.set_spinor(0, cb::Spinor(cb::Complex(kInvSqrt2, 0),
                               cb::Complex(kInvSqrt2, 0)));
    fields.push_back(std::move(f));
  } else {
    fields.push_back(cb::Field::point_source(
        0, cb::move_state_from_char(opt.initial.at(0))));
  }

  std::string out = "t,x,prob\n";
  for (int t = 0; t <= opt.steps; ++t) {
    const std::int64_t lo = fields.front().x_min();
    const std::int64_t hi = fields.front().x_max();
    for (std::int64_t x = lo; x <= hi; ++x) {
      double prob = 0.0;
      for (const auto& f : fields) prob += f.probability_at(x);
      if (mixture) prob /= fields.size();
      if (prob == 0.0) continue;
      out += std::to_string(t) + "," + std::to_string(x) + "," +
             format_double(prob) + "\n";
    }
    if (t < opt.steps) {
      for (auto& f : fields) f = cb::step(f, matrices);
    }
  }
  emit(opt.csv_path, out);
  return 0;
}

// ---------------------------------------------------------------------------
// check

class SuiteReporter {
 public:
  // Records a measurement; prints one pass/fail line. Returns pass.
  bool check(const std::string& what, double measured, double tolerance) {
    const bool ok = measured <= tolerance;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << ": measured "
              << format_double(measured) << " (tol "
              << format_double(tolerance) << ")\n";
    if (!ok) failed_ = true;
    return ok;
  }

  bool check_range(const std::string& what, double measured, double lo,
                   double hi) {
    const bool ok = measured >= lo && measured <= hi;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << ": measured "
              << format_double(measured) << " (range [" << format_double(lo)
              << ", " << format_double(hi) << "])\n";
    if (!ok) failed_ = true;
    return ok;
  }

  bool failed() const { return failed_; }

 private:
  bool failed_ = false;
};

void suite_unitarity(SuiteReporter& rep) {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> b_draw(1e-6, 1.0 - 1e-6);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double theta = (rng() & 1) ? kPi / 2 : 3 * kPi / 2;
    const auto m = cb::make_step_matrices(b_draw(rng), theta);
    const Eigen::Matrix2cd lhs = m.Q.adjoint() * m.Q + m.P.adjoint() * m.P;
    worst = std::max(
        worst,
        (lhs - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
  }
  if (!rep.check("Q'Q + P'P = I over 1000 random (b, theta)", worst, 1e-12))
    return;

  const auto m = cb::make_step_matrices(kInvSqrt2, kPi / 2);
  cb::Field f = cb::Field::point_source(0, cb::MoveState::P);
  double drift = 0.0;
  for (int t = 0; t < 200; ++t) {
    f = cb::step(f, m);
    drift = std::max(drift, std::abs(f.total_probability() - 1.0));
  }
  if (!rep.check("probability conserved across 200 explicit steps", drift,
                 1e-10))
    return;

  const auto big = cb::kernel_dp_field(5000, cb::MoveState::P, m);
  rep.check("|total probability - 1| after 5000 DP steps",
            std::abs(big.total_probability() - 1.0), 1e-10);
}

void suite_oracle(SuiteReporter& rep) {
  const auto m = cb::make_step_matrices(kInvSqrt2, kPi / 2);
  double worst_dp = 0.0;
  double worst_corners = 0.0;
  for (int n = 0; n <= 11; ++n) {
    for (const auto initial : {cb::MoveState::P, cb::MoveState::Q}) {
      const auto brute = cb::kernel_bruteforce_field(n, initial, m);
      const auto dp = cb::kernel_dp_field(n, initial, m);
      for (std::int64_t x = -n; x <= n; ++x) {
        worst_dp = std::max({worst_dp, std::abs(brute.phi_p(x) - dp.phi_p(x)),
                             std::abs(brute.phi_q(x) - dp.phi_q(x))});
        const auto corner_sum =
            cb::corner_weighted_sum(n, x, initial, n, kInvSqrt2).to_complex();
        worst_corners = std::max(
            worst_corners,
            std::abs(corner_sum - (brute.phi_p(x) + brute.phi_q(x))));
      }
    }
  }
  if (!rep.check("kernel_dp = kernel_bruteforce for n <= 11", worst_dp, 1e-12))
    return;
  rep.check("corner decomposition = brute-force kernel for n <= 11",
            worst_corners, 1e-12);
}

void suite_dirac(SuiteReporter& rep) {
  const double mass = 1.0;
  std::vector<double> residuals;
  for (const double eps : {1.0 / 32, 1.0 / 64, 1.0 / 128}) {
    const double b = mass * eps;
    const auto m = cb::make_step_matrices(b, kPi / 2);
    cb::Field f = cb::gaussian_spinor(eps, 0.25, 1.5);
    const int steps = static_cast<int>(std::lround(0.5 / eps));
    std::vector<cb::Field> history;
    for (int t = 0; t < steps; ++t) {
      cb::Field next = cb::step(f, m);
      if (t + 2 >= steps) history.push_back(f);
      f = std::move(next);
    }
    history.push_back(f);
    residuals.push_back(cb::dirac_residual(history, b, eps));
  }
  const double order_1 = std::log2(residuals[0] / residuals[1]);
  const double order_2 = std::log2(residuals[1] / residuals[2]);
  if (!rep.check_range("Dirac residual order, eps 1/32 -> 1/64", order_1, 0.8,
                       1.2))
    return;
  rep.check_range("Dirac residual order, eps 1/64 -> 1/128", order_2, 0.8,
                  1.2);
}

int run_check(const std::string& suite) {
  SuiteReporter rep;
  if (suite == "unitarity") {
    suite_unitarity(rep);
  } else if (suite == "oracle") {
    suite_oracle(rep);
  } else if (suite == "dirac") {
    suite_dirac(rep);
  } else if (suite == "all") {
    suite_unitarity(rep);
    if (!rep.failed()) suite_oracle(rep);
    if (!rep.failed()) suite_dirac(rep);
  } else {
    std::cerr << "check: unknown suite '" << suite << "'\n";
    return 1;
  }
  return rep.failed() ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zitterlab: causal-set event calculus and the 1+1 checkerboard walk"};
  app.require_subcommand(1);

  EnumerateOptions enum_opt;
  auto* cmd_enum =
      app.add_subcommand("enumerate", "Enumerate interaction sequences");
  cmd_enum->add_option("--np", enum_opt.np, "Number of P detections")
      ->required();
  cmd_enum->add_option("--nq", enum_opt.nq, "Number of Q detections")
      ->required();
  cmd_enum->add_flag("--corners", enum_opt.corners_histogram,
                     "Emit the corner-count histogram instead of rows");
  cmd_enum->add_option("--csv", enum_opt.csv_path, "Write CSV to file");
  cmd_enum->add_option("--cap", enum_opt.cap, "Enumeration length cap");

  PosetOptions poset_opt;
  auto* cmd_poset = app.add_subcommand(
      "poset", "Load or build a poset fixture and emit interval tables");
  cmd_poset->add_option("--fixture", poset_opt.fixture_path,
                        "Fixture JSON path");
  cmd_poset->add_option("--sequence", poset_opt.sequence,
                        "Build the free-particle fixture for a move sequence");
  cmd_poset->add_option("--chain-p", poset_opt.chain_p, "Name of chain P");
  cmd_poset->add_option("--chain-q", poset_opt.chain_q, "Name of chain Q");
  cmd_poset->add_option("--intervals", poset_opt.intervals_path,
                        "Write the interval table CSV here");
  cmd_poset->add_option("--elements", poset_opt.elements_path,
                        "Write the quantified-element table CSV here");
  cmd_poset->add_option("--save-fixture", poset_opt.save_fixture_path,
                        "Save a generated fixture as JSON");

  std::string env_path, expr_text;
  auto* cmd_eval =
      app.add_subcommand("seq-eval", "Evaluate a measurement-sequence expression");
  cmd_eval->add_option("--env", env_path, "Link amplitude environment JSON")
      ->required();
  cmd_eval->add_option("expr", expr_text, "Expression to evaluate")
      ->required();

  KernelOptions kernel_opt;
  auto* cmd_kernel =
      app.add_subcommand("kernel", "Propagator from a point source");
  cmd_kernel->add_option("--steps", kernel_opt.steps, "Number of steps")
      ->required();
  cmd_kernel->add_option("--b", kernel_opt.b, "Reversal amplitude magnitude");
  cmd_kernel->add_option("--theta", kernel_opt.theta,
                         "Relative phase (pi/2, 3pi/2 or a number)");
  cmd_kernel->add_option("--initial", kernel_opt.initial,
                         "Initial move state (P or Q)");
  cmd_kernel->add_option("--method", kernel_opt.method,
                         "dp, brute or corners");
  cmd_kernel->add_option("--json", kernel_opt.json_path,
                         "Write kernel JSON to file");

  ZitterOptions zitter_opt;
  auto* cmd_zitter = app.add_subcommand(
      "zitter", "Per-slice probability distribution of the walk");
  cmd_zitter->add_option("--steps", zitter_opt.steps, "Number of steps")
      ->required();
  cmd_zitter->add_option("--initial", zitter_opt.initial,
                         "P, Q, symmetric or coherent");
  cmd_zitter->add_option("--b", zitter_opt.b, "Reversal amplitude magnitude");
  cmd_zitter->add_option("--theta", zitter_opt.theta, "Relative phase");
  cmd_zitter->add_option("--csv", zitter_opt.csv_path, "Write CSV to file");

  std::string suite;
  auto* cmd_check = app.add_subcommand("check", "Run an invariant suite");
  cmd_check
      ->add_option("--suite", suite, "unitarity, oracle, dirac or all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_enum->parsed()) return run_enumerate(enum_opt);
    if (cmd_poset->parsed()) return run_poset(poset_opt);
    if (cmd_eval->parsed()) return run_seq_eval(env_path, expr_text);
    if (cmd_kernel->parsed()) return run_kernel(kernel_opt);
    if (cmd_zitter->parsed()) return run_zitter(zitter_opt);
    if (cmd_check->parsed()) return run_check(suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
