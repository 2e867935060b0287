#include "sclab/leaksim.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

namespace sclab::leaksim {

void BeeaComponents::push(int z, uint8_t hint, int8_t dir) {
    shifts.push_back(z);
    hints.push_back(hint);
    round_dir.push_back(dir);
}

long BeeaComponents::total_shifts() const {
    long t = 0;
    for (int z : shifts) t += z;
    return t;
}

void NoiseModel::validate() const {
    auto rate_ok = [](double r) { return r >= 0.0 && r <= 1.0; };
    if (!rate_ok(flip_rate) || !rate_ok(drop_rate) || !rate_ok(zero_merge_rate) ||
        !rate_ok(boundary_round_rate) || !rate_ok(high_count_bias))
        throw leaksim_error("noise model: rates must lie in [0,1]");
    if (miss_leading_max < 0 || miss_leading_max > 4)
        throw leaksim_error("noise model: miss_leading_max must be 0..4");
    if (gaussian_sigma < 0 || wave_sigma < 0 || dist_jitter < 0)
        throw leaksim_error("noise model: sigmas must be nonnegative");
    for (double f : interrupt_positions)
        if (f < 0.0 || f >= 1.0) throw leaksim_error("noise model: interrupt position out of range");
}

Timing simulate_dsa_latency(const mpz_class& exponent, const mpz_class& q, unsigned w,
                            const NoiseModel& m, Rng& rng) {
    if (exponent <= 0) throw leaksim_error("simulate_dsa_latency: exponent must be positive");
    if (q <= 0) throw leaksim_error("simulate_dsa_latency: bad group order");
    // any odd modulus above the exponent works; only the window count matters
    mpz_class modulus = arith::pow2(arith::bitlen(exponent) + 1) + 1;
    auto r = arith::mod_exp_fixed_window(2, exponent, modulus, w);
    double omega = m.base_latency + m.per_window_cost * r.windows_processed;
    if (m.gaussian_sigma > 0) omega += rng.next_gaussian(0.0, m.gaussian_sigma);
    if (omega <= 0) omega = 1e-12;
    return Timing{omega};
}

DaSeq noisy_da_sequence(const groups::DaSequence& clean, const NoiseModel& m, Rng& rng) {
    if (clean.ops.empty()) throw leaksim_error("noisy_da_sequence: empty transcript");
    DaSeq out;
    out.dropped = m.drop_rate > 0 && rng.next_unit() < m.drop_rate;
    out.ops.reserve(clean.ops.size());
    auto flip = [](groups::EcOp op) {
        return op == groups::EcOp::kDouble ? groups::EcOp::kAdd : groups::EcOp::kDouble;
    };
    for (groups::EcOp op : clean.ops) {
        if (m.flip_rate > 0 && rng.next_unit() < m.flip_rate) {
            switch (rng.below_u64(3)) {
                case 0:  // flip
                    out.ops.push_back(flip(op));
                    break;
                case 1:  // insert
                    out.ops.push_back(op);
                    out.ops.push_back(rng.below_u64(2) ? groups::EcOp::kAdd
                                                       : groups::EcOp::kDouble);
                    break;
                default:  // delete
                    break;
            }
        } else {
            out.ops.push_back(op);
        }
    }
    return out;
}

SignedDigits signed_wnaf_oracle(const mpz_class& k, unsigned w) {
    if (k <= 0) throw leaksim_error("signed_wnaf_oracle: scalar must be positive");
    groups::WnafDigits naf = groups::wnaf_recode(k, w);
    SignedDigits out;
    for (size_t i = 0; i < naf.digits.size(); ++i)
        if (naf.digits[i] != 0)
            out.digits.push_back({static_cast<unsigned>(i), naf.digits[i] > 0 ? 1 : -1});
    return out;
}

std::vector<int> components_from_trace(const arith::OpTrace& trace) {
    std::vector<int> comps;
    int run = 0;
    for (arith::Op op : trace.ops) {
        if (op == arith::Op::kShift) {
            ++run;
        } else {
            comps.push_back(run);
            run = 0;
        }
    }
    return comps;
}

BeeaComponents beea_oracle(const mpz_class& e, const mpz_class& p_minus_1,
                           const NoiseModel& m, Rng& rng) {
    if (mpz_even_p(e.get_mpz_t())) throw leaksim_error("beea_oracle: e must be odd");
    if (e <= 0 || e >= p_minus_1) throw leaksim_error("beea_oracle: need 0 < e < p-1");
    m.validate();

    auto [gcd, trace] = arith::beea_gcd_traced(e, p_minus_1);
    (void)gcd;
    std::vector<int> truth = components_from_trace(trace);

    size_t lost = 0;
    if (m.miss_leading_max > 0)
        lost = rng.below_u64(static_cast<uint64_t>(m.miss_leading_max) + 1);
    if (lost >= truth.size()) lost = truth.size() - 1;

    BeeaComponents out;
    out.leading_unknown = m.miss_leading_max > 0;
    for (size_t i = lost; i < truth.size(); ++i) {
        int z = truth[i];
        if (z > 8) {
            // regression quality degrades for long shift runs; the model
            // tends to underestimate them
            int reported = z;
            if (m.high_count_bias > 0) {
                double u = rng.next_unit();
                if (u < m.high_count_bias) reported -= (u < m.high_count_bias / 3.0) ? 2 : 1;
            }
            out.push(reported, reported > 8 ? kHintHighCount : kHintNone);
            continue;
        }
        if (m.zero_merge_rate > 0 && rng.next_unit() < m.zero_merge_rate && z >= 2) {
            // a doubled peak detection splits one gap into (z - c, ~0)
            int c = static_cast<int>(rng.below_u64(2));
            if (rng.below_u64(2) == 0) {
                out.push(z - c);
                out.push(0, kHintZeroMerge);
            } else {
                out.push(0, kHintZeroMerge);
                out.push(z - c);
            }
            continue;
        }
        if (m.boundary_round_rate > 0 && rng.next_unit() < m.boundary_round_rate) {
            // fractional part of the regression output lands in [0.3, 0.5]
            double u = rng.next_unit();
            if (u < 0.5) {
                out.push(z, kHintBoundaryRound, +1);            // rounded correctly
            } else if (u < 0.75 && z >= 2) {
                out.push(z - 1, kHintBoundaryRound, +1);        // rounded one short
            } else {
                out.push(z + 1, kHintBoundaryRound, -1);        // rounded one long
            }
            continue;
        }
        out.push(z);
    }
    return out;
}

double em_unit_for_window(int window_index, double base_unit, double decay) {
    return base_unit * (1.0 - decay * window_index / double(kEmWindows - 1));
}

Waveform synth_em_waveform(const BeeaComponents& trace, double sample_rate,
                           const NoiseModel& m, Rng& rng) {
    if (trace.size() == 0) throw leaksim_error("synth_em_waveform: empty trace");
    if (sample_rate <= 0) throw leaksim_error("synth_em_waveform: bad sample rate");

    size_t n = trace.size();
    // peak i sits one shift-scaled gap after peak i-1; gap i uses the unit
    // distance of its (equal-count) window
    std::vector<double> centers(n);
    double t = 0.0;
    for (size_t i = 0; i < n; ++i) {
        int widx = static_cast<int>(i * kEmWindows / n);
        double unit = em_unit_for_window(widx, m.em_unit_sec, m.em_decay);
        double dist = trace.shifts[i] + m.dist_bias;
        if (m.dist_jitter > 0) dist += rng.next_gaussian(0.0, m.dist_jitter);
        if (dist < 0.1) dist = 0.1;
        t += dist * unit;
        centers[i] = t;
    }

    double span = t + 5.0 * m.em_unit_sec;
    size_t nsamples = static_cast<size_t>(span * sample_rate) + 1;
    Waveform w;
    w.sample_rate = sample_rate;
    w.samples.assign(nsamples, 0.0);

    double sigma = m.peak_width_sec * sample_rate;
    auto render = [&](double center_sec, double amp, double width) {
        double c = center_sec * sample_rate;
        long lo = std::max(0L, static_cast<long>(c - 6 * width));
        long hi = std::min(static_cast<long>(nsamples) - 1, static_cast<long>(c + 6 * width));
        for (long s = lo; s <= hi; ++s) {
            double d = (s - c) / width;
            w.samples[s] += amp * std::exp(-0.5 * d * d);
        }
    };
    for (double c : centers) render(c, kPeakAmplitude, sigma);
    for (double f : m.interrupt_positions) render(f * span, kInterruptAmplitude, 3.0 * sigma);

    if (m.wave_sigma > 0)
        for (double& s : w.samples) s += rng.next_gaussian(0.0, m.wave_sigma * kPeakAmplitude);
    return w;
}

Waveform synth_em_waveform(const arith::OpTrace& trace, double sample_rate,
                           const NoiseModel& m, Rng& rng) {
    BeeaComponents comps;
    for (int z : components_from_trace(trace)) comps.push(z);
    return synth_em_waveform(comps, sample_rate, m, rng);
}

namespace {
constexpr char kWaveMagic[4] = {'S', 'C', 'W', 'V'};
constexpr uint32_t kWaveVersion = 1;
}  // namespace

void save_waveform(const Waveform& w, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw leaksim_error("save_waveform: cannot open " + path);
    out.write(kWaveMagic, 4);
    uint32_t ver = kWaveVersion;
    uint64_t n = w.samples.size();
    out.write(reinterpret_cast<const char*>(&ver), sizeof ver);
    out.write(reinterpret_cast<const char*>(&w.sample_rate), sizeof w.sample_rate);
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(reinterpret_cast<const char*>(w.samples.data()),
              static_cast<std::streamsize>(n * sizeof(double)));
    if (!out) throw leaksim_error("save_waveform: write failed: " + path);
}

Waveform load_waveform(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw leaksim_error("load_waveform: cannot open " + path);
    char magic[4];
    uint32_t ver = 0;
    Waveform w;
    uint64_t n = 0;
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(&ver), sizeof ver);
    in.read(reinterpret_cast<char*>(&w.sample_rate), sizeof w.sample_rate);
    in.read(reinterpret_cast<char*>(&n), sizeof n);
    if (!in || std::memcmp(magic, kWaveMagic, 4) != 0 || ver != kWaveVersion)
        throw leaksim_error("load_waveform: bad header: " + path);
    w.samples.resize(n);
    in.read(reinterpret_cast<char*>(w.samples.data()),
            static_cast<std::streamsize>(n * sizeof(double)));
    if (!in) throw leaksim_error("load_waveform: truncated file: " + path);
    return w;
}

}  // namespace sclab::leaksim
