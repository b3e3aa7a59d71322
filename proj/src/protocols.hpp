#pragma once

#include <string>
#include <vector>

#include "pulses.hpp"

namespace ghzsim {

enum class ProtocolKind { CONVENTIONAL, COMPOSITE, APPENDIX };

const char* protocol_name(ProtocolKind kind);
// returns false if the name is unknown
bool protocol_from_name(const std::string& name, ProtocolKind& kind);

struct TimeBudget {
  double tau = 0.0;
  double lambda_max = 1.0;
};

// A complete pulse program: preparation, free exposure to the field, readout.
// Physical durations of all steps plus exposure_time sum to tau.
struct ProtocolSpec {
  ProtocolKind label = ProtocolKind::CONVENTIONAL;
  uint32_t n_spins = 0;
  double tau = 0.0;
  std::vector<PulseStep> prep;
  double exposure_time = 0.0;
  std::vector<PulseStep> readout;
};

// |sum of durations + exposure - tau|, for the 1e-9 budget invariant
double budget_defect(const ProtocolSpec& spec);
// weakest pulse strength in the sequence (the value reported as lambda)
double lambda_used(const ProtocolSpec& spec);

// One strong pi-pulse on each side of the exposure window:
//   prep    PLUS,  phi = -pi/2, lambda = 1, duration 2 pi
//   readout MINUS, phi = -pi/2, lambda = 1, duration 2 pi
// so t_ex = tau - 4 pi. Requires tau > 4 pi.
ProtocolSpec conventional_protocol(double tau, uint32_t n_spins);

// Weak-arc rotation angle a = pi + asin((pi + t_norm/2)/8). A driven spin
// accumulates detuning phase (delta/2) * integral of cos(theta(t)), so an
// arc must swing past the inverted pole for that integral to come out
// negative; the third-quadrant angle makes each identity triple contribute
// 8 sin(a) = -(pi + t_norm/2), exactly cancelling the center pulse plus
// exposure contribution per side. Requires 0 <= t_norm <= 2(8-pi).
double composite_weak_angle(double t_norm);

// Seven-step detuning-robust sequence for one side of the exposure window,
// in rotation-normalized durations (lambda = 1). With a the weak-arc angle:
// steps I,III,V,VII rotate by a about phi1, steps II,VI by 2a about phi1+pi
// (each triple composes to the identity when delta = 0), and step IV is the
// pi-pulse on `branch`. The six outer steps address the opposite branch, so
// their detuning phases cancel the phase the exposure of length t_norm and
// the central pi-pulse imprint to first order.
std::vector<PulseStep> composite_sequence(double t_norm, double phi1,
                                          Branch branch);

// Composite protocol at a general normalized exposure time: every step runs
// at lambda = (32 a + 4 pi + t_norm)/tau, stretching all durations by
// 1/lambda so the program fills tau exactly; t_ex = t_norm / lambda.
ProtocolSpec composite_protocol_general(double tau, uint32_t n_spins,
                                        double phi1, double t_norm);

// Default composite protocol at the maximal t_norm = 2(8-pi), which gives
// lambda = (50 pi + 16)/tau and hence requires tau >= 50 pi + 16.
ProtocolSpec composite_protocol(double tau, uint32_t n_spins, double phi1);

// Variable-strength three-pulse variant: each side combines two weak
// pi-pulses at lambda_w = 4 pi/(t_ex + 2 pi) (physical duration
// (t_ex + 2 pi)/2 each) with one strong pi-pulse, so t_ex = (tau - 8 pi)/3.
//   prep    MINUS weak, PLUS weak, MINUS strong
//   readout MINUS strong, PLUS weak, MINUS weak
// The readout's weak PLUS pulse uses phi = +pi/2 (all others -pi/2) so the
// four g-branch and two e-branch pi-rotations leave no relative branch sign.
// lambda_w <= 1 requires t_ex >= 2 pi, i.e. tau >= 14 pi.
ProtocolSpec appendix_protocol(double tau, uint32_t n_spins);

// initial state -> prep pulses (detuning only) -> exposure (field + detuning
// on both branches) -> readout pulses -> P(+y).
double run_protocol(const ProtocolSpec& spec, const SpinEnvironment& env);

} // namespace ghzsim
