#pragma once

// Randomized property checks shared by the unit tests and the acceptance runner.

#include "support.hpp"

#include "sosprop/canonical.hpp"
#include "sosprop/oracle.hpp"
#include "sosprop/propagation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testing {

struct SoundnessReport {
    int trials = 0;
    int contradictions = 0;  // propagate returned false
    int violations = 0;      // a compatible CSIM was cut off
    std::string first_failure;
};

/// Builds random partial states (assignments and eliminations, some drawn from a
/// real CSIM so the state stays satisfiable), propagates, and checks that no CSIM
/// compatible with the starting state is lost.
inline SoundnessReport check_propagation_soundness(int r, int s, int n, int trials, std::uint32_t seed)
{
    using namespace sosprop;
    const std::vector<Grid> all = enumerate_csims(r, s, n);
    std::mt19937 rng(seed);
    SoundnessReport report;
    const int cells = r * s;

    // Draws until `trials` states survive construction; dead draws are retried.
    for (int attempt = 0; report.trials < trials && attempt < 100 * trials; ++attempt) {
        MatrixState state(r, s, n);
        const bool from_solution = !all.empty() && rng() % 4 != 0;
        const Grid* source = from_solution ? &all[rng() % all.size()] : nullptr;

        std::vector<int> order(static_cast<std::size_t>(cells));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const int assigned = static_cast<int>(rng() % static_cast<unsigned>(cells + 1));
        bool alive = true;
        for (int k = 0; k < assigned && alive; ++k) {
            const Coordinate c = state.coordinate(order[static_cast<std::size_t>(k)]);
            SignedValue v = source ? *source->at(c.row, c.col)
                                   : SignedValue(Color{static_cast<int>(rng() % n) + 1}, rng() % 2 ? 1 : -1);
            alive = assign(state, c, v);
        }
        const int eliminations = static_cast<int>(rng() % static_cast<unsigned>(cells + 1));
        for (int k = 0; k < eliminations && alive; ++k) {
            const Coordinate c = state.coordinate(static_cast<int>(rng() % cells));
            const SignedValue v(Color{static_cast<int>(rng() % n) + 1}, rng() % 2 ? 1 : -1);
            if (source && *source->at(c.row, c.col) == v) continue;
            alive = eliminate(state, c, v);
        }
        if (!alive) continue;
        ++report.trials;

        std::vector<const Grid*> before;
        for (const Grid& g : all)
            if (compatible(state, g)) before.push_back(&g);

        MatrixState after = state;
        const bool ok = propagate(after);
        if (!ok) ++report.contradictions;
        const bool lost = ok ? std::any_of(before.begin(), before.end(), [&](const Grid* g) { return !compatible(after, *g); })
                             : !before.empty();
        if (lost) {
            ++report.violations;
            if (report.first_failure.empty()) report.first_failure = format_candidates(state);
        }
    }
    return report;
}

inline sosprop::GroupAction random_action(int r, int s, int n, std::mt19937& rng)
{
    using namespace sosprop;
    auto perm = [&](int k) {
        std::vector<int> p(static_cast<std::size_t>(k));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    };
    auto subset = [&](int k, int base) {
        std::vector<int> out;
        for (int i = 0; i < k; ++i)
            if (rng() % 2) out.push_back(i + base);
        return out;
    };
    switch (rng() % 6) {
    case 0: return RowPermutation{perm(r)};
    case 1: return ColumnPermutation{perm(s)};
    case 2: return ColorPermutation{perm(n)};
    case 3: return RowSignFlip{subset(r, 0)};
    case 4: return ColumnSignFlip{subset(s, 0)};
    default: return ColorSignFlip{subset(n, 1)};
    }
}

struct ClosureReport {
    int compositions = 0;
    int violations = 0;
};

/// Applies random compositions of up to `max_steps` generators to each seed grid
/// in turn and checks is_csim after every step.
inline ClosureReport check_group_closure(const std::vector<std::pair<sosprop::Grid, int>>& seeds, int compositions,
                                         int max_steps, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    ClosureReport report;
    for (int k = 0; k < compositions; ++k) {
        const auto& [start, n] = seeds[static_cast<std::size_t>(k) % seeds.size()];
        sosprop::Grid g = start;
        const int steps = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_steps));
        bool ok = true;
        for (int step = 0; step < steps; ++step) {
            g = sosprop::apply_action(g, n, random_action(g.rows(), g.cols(), n, rng));
            ok = ok && sosprop::is_csim(g, n);
        }
        ++report.compositions;
        if (!ok) ++report.violations;
    }
    return report;
}

}  // namespace testing
