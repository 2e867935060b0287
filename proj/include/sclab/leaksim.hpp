#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sclab/arith.hpp"
#include "sclab/groups.hpp"
#include "sclab/rng.hpp"

namespace sclab::leaksim {

struct leaksim_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Timing {
    double omega = 0.0;  // simulated seconds
};

struct DaSeq {
    std::vector<groups::EcOp> ops;
    bool dropped = false;
};

struct SignedDigit {
    unsigned pos = 0;
    int sign = 0;  // +1 or -1
};

struct SignedDigits {
    std::vector<SignedDigit> digits;
};

// Per-component error hints, bitmask per component.
enum Hint : uint8_t {
    kHintNone = 0,
    kHintZeroMerge = 1,      // neighbor of a deleted zero component
    kHintBoundaryRound = 2,  // regression fractional part landed in [0.3, 0.5]
    kHintHighCount = 4,      // recovered count exceeds 8
    kHintFilled = 8,         // synthesized by leading-iteration repair
};

// Shift counts between consecutive SUB events of one binary-GCD run,
// first iteration first. Leading iterations may be missing.
struct BeeaComponents {
    std::vector<int> shifts;
    std::vector<uint8_t> hints;      // Hint bitmask, same length as shifts
    std::vector<int8_t> round_dir;   // BoundaryRound alternative: shifts[i] + round_dir[i]
    bool leading_unknown = false;

    size_t size() const { return shifts.size(); }
    void push(int z, uint8_t hint = kHintNone, int8_t dir = 0);
    long total_shifts() const;
};

using LeakRecord = std::variant<Timing, DaSeq, SignedDigits, BeeaComponents>;

struct NoiseModel {
    // timing channel
    double base_latency = 1.0e-3;
    double per_window_cost = 5.0e-5;
    double gaussian_sigma = 0.0;
    // double/add channel
    double flip_rate = 0.0;
    double drop_rate = 0.0;
    // BEEA channel
    int miss_leading_max = 0;  // 0..4
    double zero_merge_rate = 0.0;
    double boundary_round_rate = 0.0;
    double high_count_bias = 0.0;
    // waveform synthesis
    double wave_sigma = 0.0;        // additive noise relative to peak amplitude
    double dist_bias = 0.0;         // systematic inter-peak distance error, in shift units
    double dist_jitter = 0.0;       // random inter-peak distance error, in shift units
    double em_unit_sec = 1.0e-5;    // per-shift distance of window 0, seconds
    double em_decay = 0.3;          // linear unit decay across the 17 windows
    double peak_width_sec = 2.0e-6; // Gaussian peak width, seconds
    std::vector<double> interrupt_positions;  // fraction of trace length in [0,1)
    uint64_t seed = 0;

    void validate() const;
};

// Latency of one fixed-window exponentiation with `exponent`:
// base + per_window_cost * windows + N(0, sigma). Window count comes from
// mod_exp_fixed_window, so exponents in a shorter ceil(bits/w) bucket skip
// whole windows.
Timing simulate_dsa_latency(const mpz_class& exponent, const mpz_class& q, unsigned w,
                            const NoiseModel& m, Rng& rng);

// Symbol-level corruption of a double/add transcript: each symbol is hit
// with probability flip_rate (flip, insert or delete, equally likely);
// whole trace marked dropped with probability drop_rate.
DaSeq noisy_da_sequence(const groups::DaSequence& clean, const NoiseModel& m, Rng& rng);

// Positions and signs of nonzero wNAF digits, noise-free.
SignedDigits signed_wnaf_oracle(const mpz_class& k, unsigned w);

// Runs the traced binary GCD on (e, p_minus_1), converts the transcript to
// per-iteration shift counts, drops 0..miss_leading_max leading iterations
// and injects the three error types with hints attached.
BeeaComponents beea_oracle(const mpz_class& e, const mpz_class& p_minus_1,
                           const NoiseModel& m, Rng& rng);

// Per-iteration shift counts of a complete transcript.
std::vector<int> components_from_trace(const arith::OpTrace& trace);

struct Waveform {
    double sample_rate = 1.0;
    std::vector<double> samples;
};

// Renders SUB events as Gaussian peaks with inter-peak distance
// proportional to the shift count; the per-shift unit distance decays
// linearly across 17 notional windows. Optional additive noise, distance
// jitter and high-energy interrupt bursts.
Waveform synth_em_waveform(const BeeaComponents& trace, double sample_rate,
                           const NoiseModel& m, Rng& rng);
Waveform synth_em_waveform(const arith::OpTrace& trace, double sample_rate,
                           const NoiseModel& m, Rng& rng);

// Flat binary serialization: magic, version, sample rate, length, f64 data.
void save_waveform(const Waveform& w, const std::string& path);
Waveform load_waveform(const std::string& path);

// Synthesis constants shared with the dsp module.
inline constexpr int kEmWindows = 17;
inline constexpr double kPeakAmplitude = 1.0;
inline constexpr double kInterruptAmplitude = 6.0;
double em_unit_for_window(int window_index, double base_unit, double decay);

}  // namespace sclab::leaksim
