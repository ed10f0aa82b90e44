#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "enumerate.hpp"
#include "field.hpp"

namespace quadpart {

/**
 * A trace-truncated formal power sum: a sparse map delta -> c_delta over
 * keys delta >= 0 with trace(delta) <= max_trace. Coefficients are exact
 * integers; absent key means coefficient 0.
 *
 * Truncation by trace is exact for products of factors indexed by totally
 * positive parts: traces are nonnegative and additive, so every split of a
 * key inside the window stays inside the window.
 */
class QSum {
public:
    using CoeffMap = std::map<AlgInt, Int, CanonicalLess>;

    QSum(QuadField field, Int max_trace)
        : fld_(std::move(field)), max_trace_(std::move(max_trace)) {}

    static QSum zero(const QuadField& f, const Int& m) { return QSum(f, m); }

    static QSum one(const QuadField& f, const Int& m) {
        QSum s(f, m);
        s.coeffs_.emplace(AlgInt::zero(f), 1);
        return s;
    }

    /// coeff * q^delta (delta >= 0, inside the window).
    static QSum monomial(const AlgInt& delta, Int coeff, const Int& max_trace) {
        if (!delta.is_totally_nonneg()) {
            throw std::domain_error("QSum: key must be totally positive or zero");
        }
        QSum s(delta.field(), max_trace);
        if (coeff != 0 && delta.trace() <= max_trace) {
            s.coeffs_.emplace(delta, std::move(coeff));
        }
        return s;
    }

    const QuadField& field() const noexcept { return fld_; }
    const Int& max_trace() const noexcept { return max_trace_; }
    const CoeffMap& coefficients() const noexcept { return coeffs_; }

    Int coefficient(const AlgInt& delta) const {
        auto it = coeffs_.find(delta);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    QSum operator+(const QSum& o) const {
        require_same_window(o);
        QSum out(fld_, max_trace_);
        out.coeffs_ = coeffs_;
        for (const auto& [k, v] : o.coeffs_) {
            auto [it, inserted] = out.coeffs_.emplace(k, v);
            if (!inserted) {
                it->second += v;
                if (it->second == 0) {
                    out.coeffs_.erase(it);
                }
            }
        }
        return out;
    }

    /// Convolution over all splits gamma = alpha + beta; keys with trace
    /// beyond the window are dropped. The sparser operand drives the outer
    /// loop.
    QSum operator*(const QSum& o) const {
        require_same_window(o);
        const QSum& outer = coeffs_.size() <= o.coeffs_.size() ? *this : o;
        const QSum& inner = coeffs_.size() <= o.coeffs_.size() ? o : *this;
        QSum out(fld_, max_trace_);
        for (const auto& [alpha, ca] : outer.coeffs_) {
            for (const auto& [beta, cb] : inner.coeffs_) {
                AlgInt gamma = alpha + beta;
                if (gamma.trace() > max_trace_) {
                    continue;
                }
                auto [it, inserted] = out.coeffs_.emplace(std::move(gamma), ca * cb);
                if (!inserted) {
                    it->second += ca * cb;
                }
            }
        }
        for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();) {
            it = (it->second == 0) ? out.coeffs_.erase(it) : std::next(it);
        }
        return out;
    }

    bool operator==(const QSum& o) const {
        return fld_ == o.fld_ && max_trace_ == o.max_trace_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const QSum& o) const { return !(*this == o); }

private:
    void require_same_window(const QSum& o) const {
        if (fld_ != o.fld_ || max_trace_ != o.max_trace_) {
            throw std::invalid_argument("QSum: window mismatch");
        }
    }

    QuadField fld_;
    Int max_trace_;
    CoeffMap coeffs_;
};

/// Truncation of 1/(1-q^delta): sum of q^{k delta} over k >= 0 with
/// trace(k delta) <= max_trace. delta must be totally positive, otherwise
/// the trace-0 term would make the truncation unsound.
inline QSum geometric_factor(const AlgInt& delta, const Int& max_trace) {
    if (!delta.is_totally_positive()) {
        throw std::domain_error("geometric_factor: delta must be totally positive");
    }
    QSum s = QSum::one(delta.field(), max_trace);
    AlgInt cur = delta;
    while (cur.trace() <= max_trace) {
        s = s + QSum::monomial(cur, 1, max_trace);
        cur = cur + delta;
    }
    return s;
}

/// Truncation of 1 + q^delta + ... + q^{bound*delta}.
inline QSum bounded_geometric_factor(const AlgInt& delta, const Int& bound, const Int& max_trace) {
    if (!delta.is_totally_positive()) {
        throw std::domain_error("bounded_geometric_factor: delta must be totally positive");
    }
    if (bound < 0) {
        throw std::invalid_argument("bounded_geometric_factor: bound must be >= 0");
    }
    QSum s = QSum::one(delta.field(), max_trace);
    AlgInt cur = delta;
    for (Int k = 1; k <= bound && cur.trace() <= max_trace; ++k) {
        s = s + QSum::monomial(cur, 1, max_trace);
        cur = cur + delta;
    }
    return s;
}

/// Left fold of the factors; the empty product is 1. Associativity makes
/// the order irrelevant.
template <typename Range>
QSum product_over(const QuadField& f, const Int& max_trace, const Range& factors) {
    QSum acc = QSum::one(f, max_trace);
    for (const QSum& g : factors) {
        acc = acc * g;
    }
    return acc;
}

/// Predicate selecting the admissible part set H inside O+.
using PartPredicate = std::function<bool(const AlgInt&)>;

inline const PartPredicate all_parts = [](const AlgInt&) { return true; };

/**
 * The partition generating function restricted to the window: the product
 * over all totally positive delta with trace <= max_trace and pred(delta)
 * of 1/(1-q^delta) (mult_bound empty) or 1 + q^delta + ... + q^{b delta}.
 * Its coefficient at delta is p("H", delta), resp. p("H"(<= b), delta).
 */
inline QSum partition_genfun(const QuadField& f, const Int& max_trace, const PartPredicate& pred,
                             const std::optional<Int>& mult_bound = std::nullopt) {
    QSum acc = QSum::one(f, max_trace);
    for (const AlgInt& delta : enumerate_totally_positive(f, max_trace)) {
        if (!pred(delta)) {
            continue;
        }
        acc = acc * (mult_bound ? bounded_geometric_factor(delta, *mult_bound, max_trace)
                                : geometric_factor(delta, max_trace));
    }
    return acc;
}

} // namespace quadpart
