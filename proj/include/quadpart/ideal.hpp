#pragma once

#include <span>
#include <utility>
#include <vector>

#include "field.hpp"

namespace quadpart {

/**
 * A nonzero ideal of the ring of integers, stored as a rank-2 Z-module in
 * Hermite normal form over the integral basis {1, omega}:
 *
 *     basis rows [[a, 0], [b, c]],  a > 0, c > 0, 0 <= b < a,
 *
 * i.e. the module Z*(a) + Z*(b + c*omega). HNF is unique per module, so
 * equality of the triple (a, b, c) is equality of ideals.
 *
 * Over Q (degree 1) ideals have rank 1; the second row is fixed at (0, 1)
 * by convention and all elements have y = 0, so membership and products
 * reduce to gcd arithmetic on the first coordinate.
 */
class Ideal {
public:
    static Ideal ring_of_integers(const QuadField& f) { return Ideal(f, 1, 0, 1); }

    /// HNF of the module spanned by {g, omega*g : g in gens}. Throws if all
    /// generators are zero.
    static Ideal from_generators(const QuadField& f, std::span<const AlgInt> gens) {
        std::vector<std::pair<Int, Int>> rows;
        for (const AlgInt& g : gens) {
            if (g.field() != f) {
                throw std::invalid_argument("Ideal: generator field mismatch");
            }
            if (g.is_zero()) {
                continue;
            }
            rows.emplace_back(g.x(), g.y());
            if (!f.is_rational()) {
                const AlgInt og = g * AlgInt(f, 0, 1);
                rows.emplace_back(og.x(), og.y());
            }
        }
        if (rows.empty()) {
            throw std::invalid_argument("Ideal: all generators are zero");
        }
        return from_rows(f, std::move(rows));
    }

    static Ideal from_generators(const QuadField& f, std::initializer_list<AlgInt> gens) {
        return from_generators(f, std::span<const AlgInt>(gens.begin(), gens.size()));
    }

    const QuadField& field() const noexcept { return fld_; }
    const Int& a() const noexcept { return a_; }
    const Int& b() const noexcept { return b_; }
    const Int& c() const noexcept { return c_; }

    /// Basis rows as ring elements: a and b + c*omega.
    AlgInt basis1() const { return AlgInt(fld_, a_, 0); }
    AlgInt basis2() const {
        return fld_.is_rational() ? AlgInt(fld_, 0, 0) : AlgInt(fld_, b_, c_);
    }

    /// Module index [O : I] (= a*c for genuine rank-2 ideals, a over Q).
    Int index() const { return fld_.is_rational() ? a_ : a_ * c_; }

    bool is_whole_ring() const { return a_ == 1 && b_ == 0 && c_ == 1; }

    /// Exact membership by solving the triangular integer system.
    bool contains(const AlgInt& e) const {
        if (e.field() != fld_) {
            throw std::invalid_argument("Ideal: field mismatch");
        }
        if (fld_.is_rational()) {
            return e.x() % a_ == 0;
        }
        if (e.y() % c_ != 0) {
            return false;
        }
        const Int n = e.y() / c_;
        return (e.x() - n * b_) % a_ == 0;
    }

    Ideal product(const Ideal& other) const {
        if (fld_ != other.fld_) {
            throw std::invalid_argument("Ideal: field mismatch");
        }
        if (fld_.is_rational()) {
            return Ideal(fld_, a_ * other.a_, 0, 1);
        }
        // The product module is spanned by the four pairwise basis products;
        // omega-closure is inherited from the factors.
        const AlgInt u1 = basis1(), u2 = basis2();
        const AlgInt v1 = other.basis1(), v2 = other.basis2();
        std::vector<std::pair<Int, Int>> rows;
        for (const AlgInt& p : {u1 * v1, u1 * v2, u2 * v1, u2 * v2}) {
            rows.emplace_back(p.x(), p.y());
        }
        return from_rows(fld_, std::move(rows));
    }

    Ideal operator*(const Ideal& other) const { return product(other); }

    /// I^k for k >= 0; power(I, 0) is the whole ring.
    Ideal power(const Int& k) const {
        if (k < 0) {
            throw std::invalid_argument("Ideal: negative power");
        }
        Ideal acc = ring_of_integers(fld_);
        for (Int i = 0; i < k; ++i) {
            acc = acc.product(*this);
        }
        return acc;
    }

    bool operator==(const Ideal& o) const {
        return fld_ == o.fld_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }
    bool operator!=(const Ideal& o) const { return !(*this == o); }

private:
    Ideal(QuadField f, Int a, Int b, Int c)
        : fld_(std::move(f)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    /// HNF of a spanning set of coordinate rows (x, y). Row operations are
    /// unimodular, so the spanned module is preserved.
    static Ideal from_rows(const QuadField& f, std::vector<std::pair<Int, Int>> rows) {
        if (f.is_rational()) {
            Int a = 0;
            for (const auto& r : rows) {
                a = gcd(a, abs(r.first));
            }
            if (a == 0) {
                throw std::invalid_argument("Ideal: rank-deficient generator set");
            }
            return Ideal(f, a, 0, 1);
        }
        // Reduce the y-column to a single nonzero entry by Euclid.
        for (;;) {
            std::size_t pivot = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].second != 0 &&
                    (pivot == rows.size() || abs(rows[i].second) < abs(rows[pivot].second))) {
                    pivot = i;
                }
            }
            if (pivot == rows.size()) {
                throw std::invalid_argument("Ideal: rank-deficient generator set");
            }
            bool reduced_any = false;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == pivot || rows[i].second == 0) {
                    continue;
                }
                const Int q = floor_div(rows[i].second, rows[pivot].second);
                rows[i].first -= q * rows[pivot].first;
                rows[i].second -= q * rows[pivot].second;
                reduced_any = true;
            }
            if (!reduced_any) {
                // pivot is the unique row with y != 0
                Int bx = rows[pivot].first, by = rows[pivot].second;
                if (by < 0) {
                    bx = -bx;
                    by = -by;
                }
                Int a = 0;
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (i != pivot) {
                        a = gcd(a, abs(rows[i].first));
                    }
                }
                if (a == 0) {
                    throw std::invalid_argument("Ideal: rank-deficient generator set");
                }
                return Ideal(f, a, pos_mod(bx, a), by);
            }
        }
    }

    QuadField fld_;
    Int a_, b_, c_;
};

/**
 * The p-adic order: largest k with delta in p^k. Requires delta != 0 and p
 * a proper ideal. Terminates because [O : p^k] grows without bound while
 * delta in p^k forces [O : p^k] <= |N(delta)|. Additive in delta only when
 * p is prime; defined for any proper ideal by the containment rule.
 */
inline Int valuation(const Ideal& p, const AlgInt& delta) {
    if (delta.field() != p.field()) {
        throw std::invalid_argument("valuation: field mismatch");
    }
    if (delta.is_zero()) {
        throw std::domain_error("valuation: infinite at zero");
    }
    if (p.is_whole_ring()) {
        throw std::invalid_argument("valuation: ideal must be proper");
    }
    Int k = 0;
    Ideal pk = p;
    while (pk.contains(delta)) {
        ++k;
        pk = pk.product(p);
    }
    return k;
}

/**
 * Inputs of the ideal partition theorem: an ideal a together with a chosen
 * positive rational integer d in a. Any valid d is accepted; minimality is
 * not required.
 */
struct GlaisherData {
    Ideal a;
    Int d;

    GlaisherData(Ideal ideal, Int modulus) : a(std::move(ideal)), d(std::move(modulus)) {
        if (d < 1) {
            throw std::invalid_argument("GlaisherData: d must be a positive integer");
        }
        if (!a.contains(AlgInt::integer(a.field(), d))) {
            throw std::invalid_argument("GlaisherData: d does not lie in the ideal");
        }
    }
};

/**
 * Membership in S = O+ \ union_{j>=0} (a*(d^j) \ (d^{j+1})).
 *
 * Since d in a, the union collapses to the single index j0 = max{j : d^j
 * divides delta}, and delta lies outside S exactly when delta/d^{j0} in a.
 */
inline bool in_glaisher_S(const GlaisherData& g, const AlgInt& delta) {
    if (!delta.is_totally_positive()) {
        throw std::domain_error("in_glaisher_S: delta must be totally positive");
    }
    if (g.d == 1) {
        return true;  // a = O, the excluded union is empty
    }
    const AlgInt d_elt = AlgInt::integer(delta.field(), g.d);
    AlgInt reduced = delta;
    while (auto q = exact_div(reduced, d_elt)) {
        reduced = *q;
    }
    return !g.a.contains(reduced);
}

} // namespace quadpart
