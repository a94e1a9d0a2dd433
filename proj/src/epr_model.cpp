#include "eelab/epr_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "eelab/error.hpp"
#include "eelab/ga3.hpp"

namespace eelab::epr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Re(z)^2 for unit z, written as (1 + Re z^2) / 2 so that exact quarter and
// half turns give exactly 0 and 1.
double squared_real_part(std::complex<double> z) { return 0.5 * (1.0 + (z * z).real()); }

std::uint64_t count_block(double angle, Side side, double delta, std::uint64_t seed,
                          std::uint64_t block, std::uint64_t trials) {
  RandomStream rng(seed, block);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const double phi0 = sample_hidden_phase(rng);
    if (rng.uniform01() < single_probability(angle, side, delta, phi0)) ++hits;
  }
  return hits;
}

}  // namespace

std::string_view to_string(Prediction p) {
  switch (p) {
    case Prediction::plus: return "+";
    case Prediction::minus: return "-";
    case Prediction::undetermined: break;
  }
  return "undetermined";
}

std::complex<double> rotor_phase(double angle, Side side) {
  const ga3::Multivector3 plane = ga3::gp(ga3::basis::I, ga3::basis::e3);
  // rotor(e12, theta) = cos(theta/2) - e12 sin(theta/2), and e12 plays i.
  const double theta = side == Side::A ? -2.0 * angle : 2.0 * angle;
  const ga3::Rotor3 r = ga3::rotor(plane, theta);
  return {r.s(), r.b12()};
}

double reduce_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

double sample_hidden_phase(RandomStream& rng) { return kTwoPi * rng.uniform01(); }

double single_probability(double angle, Side side, double delta, double phi0) {
  if (side == Side::A) {
    return squared_real_part(rotor_phase(angle, Side::A) * std::polar(1.0, phi0));
  }
  return squared_real_part(rotor_phase(angle + delta, Side::B) * std::polar(1.0, -phi0));
}

double coincidence_probability(const AnalyzerPair& s) {
  const auto product = rotor_phase(s.phi1, Side::A) * rotor_phase(s.phi2 + s.delta, Side::B);
  return squared_real_part(product);
}

CoincidenceTable coincidence_table(const AnalyzerPair& s) {
  const double same = coincidence_probability(s);
  return {same, same, 1.0 - same, 1.0 - same};
}

double expectation(const AnalyzerPair& s) {
  const CoincidenceTable c = coincidence_table(s);
  // (C++ + C-- - C+- - C-+) / (C++ + C-- + C+- + C-+) = 2 cos^2 - 1.
  return (c.cpp + c.cmm - c.cpm - c.cmp) / (c.cpp + c.cmm + c.cpm + c.cmp);
}

std::array<std::array<double, 2>, 2> expectation_matrix(const ChshSettings& c) {
  return {{{expectation({c.phi1, c.phi2}), expectation({c.phi1, c.phi2p})},
           {expectation({c.phi1p, c.phi2}), expectation({c.phi1p, c.phi2p})}}};
}

double chsh_sum(const ChshSettings& c) {
  const auto e = expectation_matrix(c);
  return e[0][0] - e[0][1] + e[1][0] + e[1][1];
}

Prediction conditional_outcome(Sign known_a, const AnalyzerPair& s) {
  double r = std::fmod(s.difference(), kPi);
  if (r < 0.0) r += kPi;
  const Prediction same = known_a == Sign::plus ? Prediction::plus : Prediction::minus;
  const Prediction opposite = known_a == Sign::plus ? Prediction::minus : Prediction::plus;
  if (r < kAngleClassTolerance || kPi - r < kAngleClassTolerance) return same;
  if (std::abs(r - kPi / 2) < kAngleClassTolerance) return opposite;
  return Prediction::undetermined;
}

SinglesResult monte_carlo_singles(double angle, Side side, double delta, std::uint64_t n,
                                  std::uint64_t seed, unsigned workers) {
  if (n == 0) throw DomainError("Monte Carlo needs n >= 1 trials");
  const std::uint64_t blocks = (n + kTrialsPerBlock - 1) / kTrialsPerBlock;
  const auto trials_in = [&](std::uint64_t b) {
    return b + 1 == blocks ? n - b * kTrialsPerBlock : kTrialsPerBlock;
  };
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, blocks));

  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += workers) {
          partial[w] += count_block(angle, side, delta, seed, b, trials_in(b));
        }
      });
    }
  }

  SinglesResult r;
  r.n = n;
  for (auto h : partial) r.hits += h;
  r.rate = static_cast<double>(r.hits) / static_cast<double>(n);
  r.std_error = std::sqrt(r.rate * (1.0 - r.rate) / static_cast<double>(n));
  return r;
}

}  // namespace eelab::epr
