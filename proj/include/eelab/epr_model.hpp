#pragma once

// Local rotor model of a polarization-correlation (EPR) experiment.
//
// Each polarizer acts on the photon fields as a rotation in the e1e2 plane;
// reduced to the even subalgebra {1, e1e2} it is a unit complex phase,
// e^{+i phi1} at A and e^{-i phi2} at B. Single detections carry an unknown
// initial phase phi0 uniform on [0, 2 pi), which cancels in coincidences.
//
// Coincidence statistics are analytic. Only the singles have a per-trial
// sampling story in the model, so only they are simulated by Monte Carlo.

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>

#include "eelab/random.hpp"

namespace eelab::epr {

enum class Side { A, B };
enum class Sign { plus, minus };
enum class Prediction { plus, minus, undetermined };

std::string_view to_string(Prediction p);

// Analyzer angles in radians. A source phase difference delta is folded into
// the B side, so every correlation depends on phi1 - phi2 - delta.
struct AnalyzerPair {
  double phi1 = 0.0;
  double phi2 = 0.0;
  double delta = 0.0;

  double difference() const { return phi1 - phi2 - delta; }
};

struct ChshSettings {
  double phi1 = 0.0;
  double phi1p = 0.0;
  double phi2 = 0.0;
  double phi2p = 0.0;
};

struct CoincidenceTable {
  double cpp = 0.0;
  double cmm = 0.0;
  double cpm = 0.0;
  double cmp = 0.0;
};

struct SinglesResult {
  std::uint64_t n = 0;
  std::uint64_t hits = 0;
  double rate = 0.0;
  double std_error = 0.0;
};

// Tolerance (radians) used to recognise multiples of pi/2 in a setting
// difference.
inline constexpr double kAngleClassTolerance = 1e-9;

// Monte Carlo trials per independently seeded block.
inline constexpr std::uint64_t kTrialsPerBlock = 1u << 16;

// e^{+i angle} for A, e^{-i angle} for B, built from a ga3 rotor in the e1e2
// plane (the generator is I e3 = e1 e2).
std::complex<double> rotor_phase(double angle, Side side);

// Angle reduced to [0, 2 pi).
double reduce_angle(double angle);

// Uniform hidden phase on [0, 2 pi).
double sample_hidden_phase(RandomStream& rng);

// A: cos^2(angle + phi0); B: cos^2(angle + delta + phi0).
double single_probability(double angle, Side side, double delta, double phi0);

// [Re(R(A) R(B))]^2 = cos^2(phi1 - phi2 - delta).
double coincidence_probability(const AnalyzerPair& s);
CoincidenceTable coincidence_table(const AnalyzerPair& s);

// 2 cos^2(phi1 - phi2 - delta) - 1.
double expectation(const AnalyzerPair& s);

// Row i = (phi1, phi1'), column j = (phi2, phi2').
std::array<std::array<double, 2>, 2> expectation_matrix(const ChshSettings& c);

// E(phi1,phi2) - E(phi1,phi2') + E(phi1',phi2) + E(phi1',phi2').
double chsh_sum(const ChshSettings& c);

// Outcome at B implied by a known outcome at A; determinate only when the
// setting difference is a multiple of pi/2.
Prediction conditional_outcome(Sign known_a, const AnalyzerPair& s);

// n trials, each drawing phi0 and then a detection with probability
// single_probability. Trials are grouped into blocks of kTrialsPerBlock,
// block b drawing from substream b of `seed`, so the result does not depend
// on `workers`. Throws DomainError for n == 0.
SinglesResult monte_carlo_singles(double angle, Side side, double delta, std::uint64_t n,
                                  std::uint64_t seed, unsigned workers = 1);

}  // namespace eelab::epr
