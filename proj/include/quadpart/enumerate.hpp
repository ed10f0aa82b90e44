#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "field.hpp"

namespace quadpart {

/// A finite enumeration window: all totally positive integers of the field
/// with trace <= max_trace (a finite set for every bound).
struct TraceWindow {
    QuadField field;
    Int max_trace;

    TraceWindow(QuadField f, Int m) : field(std::move(f)), max_trace(std::move(m)) {
        if (max_trace < 1) {
            throw std::invalid_argument("TraceWindow: max_trace must be >= 1");
        }
    }
};

/**
 * Every delta in O+ with trace(delta) <= max_trace, each exactly once,
 * sorted by (trace, x, y).
 *
 * For omega = sqrt(d) the trace is 2x, so x runs to max_trace/2 and y over
 * d*y^2 < x^2. For omega = (1+sqrt d)/2 the trace t = 2x+y runs to
 * max_trace with y = t mod 2 and d*y^2 < t^2.
 */
inline std::vector<AlgInt> enumerate_totally_positive(const TraceWindow& w) {
    std::vector<AlgInt> out;
    const QuadField& f = w.field;
    const Int& M = w.max_trace;
    switch (f.omega_kind()) {
    case OmegaKind::rational:
        for (Int x = 1; x <= M; ++x) {
            out.emplace_back(f, x, 0);
        }
        return out;
    case OmegaKind::sqrt_d:
        for (Int x = 1; 2 * x <= M; ++x) {
            Int ymax = 0;
            while (f.radicand() * (ymax + 1) * (ymax + 1) < x * x) ++ymax;
            for (Int y = -ymax; y <= ymax; ++y) {
                out.emplace_back(f, x, y);
            }
        }
        break;
    case OmegaKind::half_plus:
        for (Int t = 1; t <= M; ++t) {
            Int ymax = 0;
            while (f.radicand() * (ymax + 1) * (ymax + 1) < t * t) ++ymax;
            for (Int y = -ymax; y <= ymax; ++y) {
                if (pos_mod(t - y, 2) == 0) {
                    out.emplace_back(f, (t - y) / 2, y);
                }
            }
        }
        break;
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

inline std::vector<AlgInt> enumerate_totally_positive(const QuadField& f, const Int& max_trace) {
    return enumerate_totally_positive(TraceWindow(f, max_trace));
}

/**
 * All ordered pairs (alpha, beta) of totally positive integers with
 * alpha + beta = delta, in canonical order of alpha. Finite by the trace
 * bound: trace(alpha) <= trace(delta) - min part trace.
 */
inline std::vector<std::pair<AlgInt, AlgInt>> decompositions(const AlgInt& delta) {
    if (!delta.is_totally_positive()) {
        throw std::domain_error("decompositions: delta must be totally positive");
    }
    std::vector<std::pair<AlgInt, AlgInt>> out;
    const Int bound = delta.trace() - delta.field().min_positive_trace();
    if (bound < 1) {
        return out;
    }
    for (const AlgInt& alpha : enumerate_totally_positive(delta.field(), bound)) {
        AlgInt beta = delta - alpha;
        if (beta.is_totally_positive()) {
            out.emplace_back(alpha, std::move(beta));
        }
    }
    return out;
}

} // namespace quadpart
