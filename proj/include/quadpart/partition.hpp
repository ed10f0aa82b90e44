#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "enumerate.hpp"
#include "field.hpp"
#include "qsum.hpp"

namespace quadpart {

/// A partition: a multiset of totally positive integers, stored as a
/// canonically sorted sequence in descending order.
struct Partition {
    std::vector<AlgInt> parts;

    static Partition of(std::vector<AlgInt> ps) {
        std::sort(ps.begin(), ps.end(),
                  [](const AlgInt& a, const AlgInt& b) { return canonical_less(b, a); });
        return Partition{std::move(ps)};
    }

    AlgInt sum(const QuadField& f) const {
        AlgInt s = AlgInt::zero(f);
        for (const AlgInt& p : parts) {
            s = s + p;
        }
        return s;
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
};

namespace detail {

/// Admissible parts for partitions of delta: totally positive, trace up to
/// trace(delta), filtered by the predicate; descending canonical order.
inline std::vector<AlgInt> admissible_parts_desc(const AlgInt& delta, const PartPredicate& pred) {
    std::vector<AlgInt> parts;
    if (delta.trace() >= delta.field().min_positive_trace()) {
        for (AlgInt& p : enumerate_totally_positive(delta.field(), delta.trace())) {
            if (pred(p)) {
                parts.push_back(std::move(p));
            }
        }
    }
    std::reverse(parts.begin(), parts.end());
    return parts;
}

} // namespace detail

/**
 * All multisets of admissible parts summing to delta, each exactly once.
 * Recursion over the descending part list choosing a multiplicity per part;
 * both embeddings of the remainder decrease strictly with the multiplicity,
 * so the remainder check cuts each branch after finitely many steps.
 *
 * delta = 0 yields the empty partition (the constant term of the
 * generating function); delta not expressible yields an empty list.
 */
inline std::vector<Partition> enumerate_partitions(
    const AlgInt& delta, const PartPredicate& pred = all_parts,
    const std::optional<Int>& mult_bound = std::nullopt) {
    if (!delta.is_totally_nonneg()) {
        throw std::domain_error("enumerate_partitions: delta must be totally nonnegative");
    }
    const std::vector<AlgInt> parts = detail::admissible_parts_desc(delta, pred);
    std::vector<Partition> out;
    std::vector<AlgInt> acc;

    auto rec = [&](auto&& self, std::size_t i, const AlgInt& rem) -> void {
        if (rem.is_zero()) {
            out.push_back(Partition{acc});
            return;
        }
        if (i == parts.size()) {
            return;
        }
        const AlgInt& p = parts[i];
        const std::size_t mark = acc.size();
        Int m = 0;
        AlgInt r = rem;
        for (;;) {
            self(self, i + 1, r);
            ++m;
            if (mult_bound && m > *mult_bound) {
                break;
            }
            r = r - p;
            if (!r.is_totally_nonneg()) {
                break;
            }
            acc.push_back(p);
        }
        acc.erase(acc.begin() + static_cast<std::ptrdiff_t>(mark), acc.end());
    };
    rec(rec, 0, delta);
    return out;
}

/// Number of partitions of delta with admissible parts; independent of the
/// q-sum pipeline. Memoized on (part index, remainder).
inline Int count_partitions(const AlgInt& delta, const PartPredicate& pred = all_parts,
                            const std::optional<Int>& mult_bound = std::nullopt) {
    if (!delta.is_totally_nonneg()) {
        throw std::domain_error("count_partitions: delta must be totally nonnegative");
    }
    const std::vector<AlgInt> parts = detail::admissible_parts_desc(delta, pred);
    std::map<std::pair<std::size_t, std::pair<Int, Int>>, Int> memo;

    auto rec = [&](auto&& self, std::size_t i, const AlgInt& rem) -> Int {
        if (rem.is_zero()) {
            return 1;
        }
        if (i == parts.size()) {
            return 0;
        }
        const auto key = std::make_pair(i, std::make_pair(rem.x(), rem.y()));
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        Int total = 0;
        Int m = 0;
        AlgInt r = rem;
        for (;;) {
            total += self(self, i + 1, r);
            ++m;
            if (mult_bound && m > *mult_bound) {
                break;
            }
            r = r - parts[i];
            if (!r.is_totally_nonneg()) {
                break;
            }
        }
        memo.emplace(key, total);
        return total;
    };
    return rec(rec, 0, delta);
}

/// True iff consecutive differences of the tuple, read left to right, are
/// totally positive or zero (the ascending chain condition).
inline bool is_chain(std::span<const AlgInt> ascending) {
    for (std::size_t i = 0; i + 1 < ascending.size(); ++i) {
        if (!(ascending[i + 1] - ascending[i]).is_totally_nonneg()) {
            return false;
        }
    }
    return true;
}

/// A multiset is a chain partition iff its ascending canonical arrangement
/// satisfies the chain condition: any valid arrangement sorts the parts
/// consistently (differences >= 0 force nondecreasing traces, and distinct
/// parts of equal trace are incomparable).
inline bool is_chain_partition(const Partition& p) {
    std::vector<AlgInt> asc(p.parts.rbegin(), p.parts.rend());
    return is_chain(asc);
}

/**
 * All chain partitions of delta as ascending tuples, built part by part:
 * each new part exceeds its predecessor by an element >= 0 and leaves a
 * totally nonnegative remainder. Optional bounds: number of parts, a part
 * predicate, and a multiplicity cap (consecutive equal parts).
 */
inline std::vector<std::vector<AlgInt>> enumerate_chain_partitions(
    const AlgInt& delta, const std::optional<long>& max_parts = std::nullopt,
    const PartPredicate& pred = all_parts, const std::optional<Int>& mult_bound = std::nullopt) {
    if (!delta.is_totally_positive()) {
        throw std::domain_error("enumerate_chain_partitions: delta must be totally positive");
    }
    std::vector<std::vector<AlgInt>> out;
    std::vector<AlgInt> acc;

    auto rec = [&](auto&& self, const AlgInt& rem) -> void {
        if (rem.is_zero()) {
            out.push_back(acc);
            return;
        }
        if (max_parts && acc.size() == static_cast<std::size_t>(*max_parts)) {
            return;
        }
        for (AlgInt& lam : enumerate_totally_positive(delta.field(), rem.trace())) {
            if (!pred(lam)) {
                continue;
            }
            if (!acc.empty() && !(lam - acc.back()).is_totally_nonneg()) {
                continue;
            }
            if (mult_bound) {
                Int run = 1;
                for (auto it = acc.rbegin(); it != acc.rend() && *it == lam; ++it) {
                    ++run;
                }
                if (run > *mult_bound) {
                    continue;
                }
            }
            AlgInt r = rem - lam;
            if (!r.is_totally_nonneg()) {
                continue;
            }
            acc.push_back(std::move(lam));
            self(self, r);
            acc.pop_back();
        }
    };
    rec(rec, delta);
    return out;
}

/// p(>=, m, delta): chain partitions with at most m parts (all of them when
/// m is empty). Nondecreasing in m; stabilizes once m reaches
/// trace(delta)/min part trace.
inline Int count_chain(const AlgInt& delta, const std::optional<long>& max_parts = std::nullopt) {
    return Int(enumerate_chain_partitions(delta, max_parts).size());
}

/// Chain partitions with exactly m parts (the increments the paper's
/// tables list per m).
inline Int count_chain_exact(const AlgInt& delta, long m) {
    Int n = 0;
    for (const auto& c : enumerate_chain_partitions(delta, m)) {
        if (c.size() == static_cast<std::size_t>(m)) {
            ++n;
        }
    }
    return n;
}

/// A solution of delta = x_1 + 2 x_2 + ... + m x_m with every x_i >= 0.
struct ChainSolution {
    std::vector<AlgInt> xs;

    bool operator==(const ChainSolution& o) const { return xs == o.xs; }
    bool operator!=(const ChainSolution& o) const { return xs != o.xs; }
};

/**
 * phi: a chain (ascending, r <= m parts) maps to the solution
 * (lam_r - lam_{r-1}, ..., lam_2 - lam_1, lam_1, 0, ..., 0) of
 * delta = x_1 + 2 x_2 + ... + m x_m.
 */
inline ChainSolution phi(std::span<const AlgInt> chain, std::size_t m) {
    if (chain.empty()) {
        throw std::invalid_argument("phi: chain must be nonempty");
    }
    if (chain.size() > m) {
        throw std::invalid_argument("phi: chain has more than m parts");
    }
    if (!is_chain(chain)) {
        throw std::domain_error("phi: input is not an ascending chain");
    }
    const std::size_t r = chain.size();
    std::vector<AlgInt> xs;
    xs.reserve(m);
    for (std::size_t i = 0; i + 1 < r; ++i) {
        xs.push_back(chain[r - 1 - i] - chain[r - 2 - i]);
    }
    xs.push_back(chain[0]);
    const AlgInt z = AlgInt::zero(chain[0].field());
    while (xs.size() < m) {
        xs.push_back(z);
    }
    return ChainSolution{std::move(xs)};
}

/// psi: suffix sums of (mu_1, ..., mu_m) up to the last nonzero index r
/// give back the ascending chain (mu_r, mu_{r-1}+mu_r, ..., mu_1+...+mu_r).
inline std::vector<AlgInt> psi(const ChainSolution& sol) {
    std::size_t r = sol.xs.size();
    while (r > 0 && sol.xs[r - 1].is_zero()) {
        --r;
    }
    if (r == 0) {
        throw std::invalid_argument("psi: all coordinates are zero");
    }
    for (const AlgInt& x : sol.xs) {
        if (!x.is_totally_nonneg()) {
            throw std::domain_error("psi: coordinates must be totally nonnegative");
        }
    }
    std::vector<AlgInt> chain;
    chain.reserve(r);
    AlgInt s = AlgInt::zero(sol.xs[0].field());
    for (std::size_t i = r; i-- > 0;) {
        s = s + sol.xs[i];
        chain.push_back(s);
    }
    return chain;
}

/// All m-tuples (x_1, ..., x_m), x_i >= 0, with delta = sum i*x_i, in
/// lexicographic order of the tuple under the canonical element order
/// (zero first).
inline std::vector<ChainSolution> enumerate_weighted_solutions(const AlgInt& delta, std::size_t m) {
    if (!delta.is_totally_positive()) {
        throw std::domain_error("enumerate_weighted_solutions: delta must be totally positive");
    }
    std::vector<ChainSolution> out;
    std::vector<AlgInt> acc;

    auto rec = [&](auto&& self, std::size_t i, const AlgInt& rem) -> void {
        if (i == m) {
            if (rem.is_zero()) {
                out.push_back(ChainSolution{acc});
            }
            return;
        }
        const Int weight = Int(i + 1);
        // x_i = 0
        acc.push_back(AlgInt::zero(delta.field()));
        self(self, i + 1, rem);
        acc.pop_back();
        const Int bound = rem.trace() / weight;
        if (rem.is_zero() || bound < delta.field().min_positive_trace()) {
            return;
        }
        for (AlgInt& cand : enumerate_totally_positive(delta.field(), bound)) {
            AlgInt r = rem - cand.times(weight);
            if (!r.is_totally_nonneg()) {
                continue;
            }
            acc.push_back(std::move(cand));
            self(self, i + 1, r);
            acc.pop_back();
        }
    };
    rec(rec, 0, delta);
    return out;
}

/// Number of solutions of delta = x_1 + 2 x_2 + ... + m x_m with x_i >= 0,
/// by the q-sum product of the factors sum_{alpha >= 0} q^{i alpha}
/// truncated at trace(delta) -- independent of phi/psi and of the chain
/// recursion.
inline Int count_weighted_solutions(const AlgInt& delta, std::size_t m) {
    if (!delta.is_totally_positive()) {
        throw std::domain_error("count_weighted_solutions: delta must be totally positive");
    }
    const Int M = delta.trace();
    const QuadField& f = delta.field();
    QSum acc = QSum::one(f, M);
    for (std::size_t i = 1; i <= m; ++i) {
        QSum factor = QSum::one(f, M);
        const Int bound = M / Int(i);
        if (bound >= f.min_positive_trace()) {
            for (const AlgInt& alpha : enumerate_totally_positive(f, bound)) {
                const AlgInt key = alpha.times(Int(i));
                if (key.trace() <= M) {
                    factor = factor + QSum::monomial(key, 1, M);
                }
            }
        }
        acc = acc * factor;
    }
    return acc.coefficient(delta);
}

} // namespace quadpart
