// Gillespie simulation of the de Bruijn process with a counter-based,
// splittable RNG. The only place rates are converted to floating point.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rates.hpp"
#include "word.hpp"

namespace debruijn {

// Counter-based stream generator (SplitMix64 finalizer applied to
// key + counter). Streams are keyed by (seed, stream id), so independent
// trajectories never share a sequence.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ull))) {}

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ull); }

    // Uniform in (0,1).
    double next_uniform() {
        std::uint64_t bits = next_u64() >> 11;  // 53 bits
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    double next_exponential(double rate) { return -std::log(next_uniform()) / rate; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

struct GillespieStep {
    double dwell = 0;
    Word next;
};

// Per-state jump table: non-self shift targets with their double rates.
// The self-loop (w = a^L with a appended) cancels in the generator and is
// excluded.
struct JumpTable {
    std::vector<std::vector<std::pair<std::int64_t, double>>> targets;  // by state rank
    std::vector<double> exit_rate;

    explicit JumpTable(const RateSystem& R) {
        std::int64_t dim = pow_int(R.n(), R.L());
        targets.resize(static_cast<std::size_t>(dim));
        exit_rate.resize(static_cast<std::size_t>(dim), 0.0);
        for (const Word& u : all_words(R.n(), R.L())) {
            auto& row = targets[static_cast<std::size_t>(u.rank())];
            for (int a = 1; a <= R.n(); ++a) {
                Word v = shift_append(u, a);
                if (v == u) continue;
                double r = to_double(R.beta(v));
                row.emplace_back(v.rank(), r);
                exit_rate[static_cast<std::size_t>(u.rank())] += r;
            }
        }
    }
};

inline GillespieStep gillespie_step(const Word& w, const RateSystem& R, CounterRng& rng) {
    double total = 0;
    std::vector<std::pair<int, double>> choices;  // (letter, rate)
    for (int a = 1; a <= R.n(); ++a) {
        Word v = shift_append(w, a);
        if (v == w) continue;
        double r = to_double(R.beta(v));
        choices.emplace_back(a, r);
        total += r;
    }
    GillespieStep step;
    step.dwell = rng.next_exponential(total);
    double pick = rng.next_uniform() * total;
    double acc = 0;
    int chosen = choices.back().first;
    for (auto [a, r] : choices) {
        acc += r;
        if (pick <= acc) { chosen = a; break; }
    }
    step.next = shift_append(w, chosen);
    return step;
}

struct Trajectory {
    Word initial;
    std::vector<std::pair<double, Word>> steps;  // (dwell in the previous state, next word)
    double total_time = 0;
};

inline Trajectory simulate_trajectory(const RateSystem& R, std::uint64_t seed, int num_steps,
                                      std::uint64_t stream = 0) {
    CounterRng rng(seed, stream);
    Trajectory traj;
    traj.initial = Word::from_rank(R.n(), R.L(), 0);
    Word current = traj.initial;
    for (int i = 0; i < num_steps; ++i) {
        GillespieStep step = gillespie_step(current, R, rng);
        traj.total_time += step.dwell;
        traj.steps.emplace_back(step.dwell, step.next);
        current = step.next;
    }
    return traj;
}

// Time-weighted occupation measure.
struct EmpiricalMeasure {
    int n = 0;
    int L = 0;
    std::vector<double> occupation;  // by word rank
    double total_time = 0;

    std::vector<double> probabilities() const {
        std::vector<double> p(occupation.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = occupation[i] / total_time;
        return p;
    }

    void merge(const EmpiricalMeasure& o) {
        if (occupation.size() != o.occupation.size())
            throw std::invalid_argument("cannot merge measures over different state spaces");
        for (std::size_t i = 0; i < occupation.size(); ++i) occupation[i] += o.occupation[i];
        total_time += o.total_time;
    }
};

// Simulates [0, total_time] from the lexicographically first word and
// keeps the occupation over (burn_in, total_time]; dwell intervals are
// clipped at both boundaries.
inline EmpiricalMeasure simulate_measure(const RateSystem& R, std::uint64_t seed,
                                         double total_time, double burn_in,
                                         int trajectories = 1) {
    if (total_time <= burn_in || burn_in < 0)
        throw std::invalid_argument("need total_time > burn_in >= 0");
    std::int64_t dim = pow_int(R.n(), R.L());
    JumpTable table(R);

    EmpiricalMeasure out;
    out.n = R.n();
    out.L = R.L();
    out.occupation.assign(static_cast<std::size_t>(dim), 0.0);

    for (int traj = 0; traj < trajectories; ++traj) {
        CounterRng rng(seed, static_cast<std::uint64_t>(traj));
        std::int64_t state = 0;
        double t = 0;
        while (t < total_time) {
            double rate = table.exit_rate[static_cast<std::size_t>(state)];
            double dwell = rng.next_exponential(rate);
            double t_end = std::min(t + dwell, total_time);
            double lo = std::max(t, burn_in);
            if (t_end > lo) out.occupation[static_cast<std::size_t>(state)] += t_end - lo;

            const auto& row = table.targets[static_cast<std::size_t>(state)];
            double pick = rng.next_uniform() * rate;
            double acc = 0;
            std::int64_t next = row.back().first;
            for (const auto& [target, r] : row) {
                acc += r;
                if (pick <= acc) { next = target; break; }
            }
            state = next;
            t += dwell;
        }
        out.total_time += total_time - burn_in;
    }
    return out;
}

// (1/2) sum |p - q| over a shared index space.
inline double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size()) throw std::invalid_argument("distribution support mismatch");
    double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::fabs(p[i] - q[i]);
    return s / 2;
}

}  // namespace debruijn
