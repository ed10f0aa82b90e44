#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "integer.hpp"

namespace quadpart {

/// Integral-basis convention of the ring of integers of Q(sqrt d).
enum class OmegaKind {
    rational,   ///< degree 1, the field Q itself (no omega)
    sqrt_d,     ///< omega = sqrt(d), for d = 2,3 mod 4
    half_plus,  ///< omega = (1+sqrt(d))/2, for d = 1 mod 4
};

/**
 * A real quadratic field Q(sqrt d) with d squarefree > 1, or Q itself
 * (selected by radicand 1). Elements are written over the integral basis
 * {1, omega}, so that d = 1 mod 4 fields carry their half-integers exactly.
 */
class QuadField {
public:
    explicit QuadField(Int radicand) : d_(std::move(radicand)) {
        if (d_ < 1) {
            throw std::invalid_argument("QuadField: radicand must be >= 1");
        }
        if (d_ == 1) {
            kind_ = OmegaKind::rational;
            return;
        }
        for (Int p = 2; p * p <= d_; ++p) {
            if (d_ % (p * p) == 0) {
                throw std::invalid_argument("QuadField: radicand must be squarefree");
            }
        }
        kind_ = (d_ % 4 == 1) ? OmegaKind::half_plus : OmegaKind::sqrt_d;
    }

    static QuadField rationals() { return QuadField(1); }

    const Int& radicand() const noexcept { return d_; }
    OmegaKind omega_kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == OmegaKind::rational; }

    /// trace(omega): 0 for omega = sqrt(d), 1 for omega = (1+sqrt(d))/2.
    int omega_trace() const noexcept { return kind_ == OmegaKind::half_plus ? 1 : 0; }

    /// Smallest trace of a totally positive integer (1 over Q, else 2).
    int min_positive_trace() const noexcept { return is_rational() ? 1 : 2; }

    bool operator==(const QuadField& o) const noexcept { return d_ == o.d_; }
    bool operator!=(const QuadField& o) const noexcept { return d_ != o.d_; }

private:
    Int d_;
    OmegaKind kind_;
};

/**
 * An algebraic integer x + y*omega of a QuadField, in integral-basis
 * coordinates. Immutable value type; all arithmetic is exact. Total
 * positivity is decided by pure integer sign tests, never by floating point.
 */
class AlgInt {
public:
    AlgInt(QuadField field, Int x, Int y)
        : field_(std::move(field)), x_(std::move(x)), y_(std::move(y)) {
        if (field_.is_rational() && y_ != 0) {
            throw std::invalid_argument("AlgInt: rational field forces y = 0");
        }
    }

    /// The rational integer n as an element of f.
    static AlgInt integer(const QuadField& f, Int n) { return AlgInt(f, std::move(n), 0); }
    static AlgInt zero(const QuadField& f) { return AlgInt(f, 0, 0); }

    const QuadField& field() const noexcept { return field_; }
    const Int& x() const noexcept { return x_; }
    const Int& y() const noexcept { return y_; }
    bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }

    AlgInt operator+(const AlgInt& o) const {
        require_same_field(o);
        return AlgInt(field_, x_ + o.x_, y_ + o.y_);
    }

    AlgInt operator-(const AlgInt& o) const {
        require_same_field(o);
        return AlgInt(field_, x_ - o.x_, y_ - o.y_);
    }

    AlgInt operator-() const { return AlgInt(field_, -x_, -y_); }

    AlgInt operator*(const AlgInt& o) const {
        require_same_field(o);
        switch (field_.omega_kind()) {
        case OmegaKind::rational:
            return AlgInt(field_, x_ * o.x_, 0);
        case OmegaKind::sqrt_d:
            // omega^2 = d
            return AlgInt(field_, x_ * o.x_ + field_.radicand() * y_ * o.y_,
                          x_ * o.y_ + y_ * o.x_);
        case OmegaKind::half_plus: {
            // omega^2 = omega + (d-1)/4
            const Int m = (field_.radicand() - 1) / 4;
            return AlgInt(field_, x_ * o.x_ + m * y_ * o.y_,
                          x_ * o.y_ + y_ * o.x_ + y_ * o.y_);
        }
        }
        throw std::logic_error("AlgInt: unreachable");
    }

    /// Scalar multiple k*a.
    AlgInt times(const Int& k) const { return AlgInt(field_, k * x_, k * y_); }

    bool operator==(const AlgInt& o) const {
        return field_ == o.field_ && x_ == o.x_ && y_ == o.y_;
    }
    bool operator!=(const AlgInt& o) const { return !(*this == o); }

    /// Sum of the real embeddings; a rational integer, additive.
    Int trace() const {
        if (field_.is_rational()) {
            return x_;
        }
        return 2 * x_ + (field_.omega_trace() ? y_ : Int(0));
    }

    /// Product of the real embeddings; a rational integer, multiplicative.
    Int norm() const {
        switch (field_.omega_kind()) {
        case OmegaKind::rational:
            return x_;
        case OmegaKind::sqrt_d:
            return x_ * x_ - field_.radicand() * y_ * y_;
        case OmegaKind::half_plus: {
            const Int m = (field_.radicand() - 1) / 4;
            return x_ * x_ + x_ * y_ - m * y_ * y_;
        }
        }
        throw std::logic_error("AlgInt: unreachable");
    }

    /// Galois conjugate (identity over Q).
    AlgInt conjugate() const {
        switch (field_.omega_kind()) {
        case OmegaKind::rational:
            return *this;
        case OmegaKind::sqrt_d:
            return AlgInt(field_, x_, -y_);
        case OmegaKind::half_plus:
            // conj(omega) = 1 - omega
            return AlgInt(field_, x_ + y_, -y_);
        }
        throw std::logic_error("AlgInt: unreachable");
    }

    /// True iff every real embedding is > 0. Integer sign tests only:
    /// for omega = sqrt(d) this is x > 0 and x^2 > d y^2; for the half
    /// basis, t = 2x+y > 0 and t^2 > d y^2.
    bool is_totally_positive() const {
        switch (field_.omega_kind()) {
        case OmegaKind::rational:
            return x_ > 0;
        case OmegaKind::sqrt_d:
            return x_ > 0 && x_ * x_ > field_.radicand() * y_ * y_;
        case OmegaKind::half_plus: {
            const Int t = 2 * x_ + y_;
            return t > 0 && t * t > field_.radicand() * y_ * y_;
        }
        }
        throw std::logic_error("AlgInt: unreachable");
    }

    /// The relation a >= 0: totally positive or zero.
    bool is_totally_nonneg() const { return is_zero() || is_totally_positive(); }

private:
    void require_same_field(const AlgInt& o) const {
        if (field_ != o.field_) {
            throw std::invalid_argument("AlgInt: field mismatch");
        }
    }

    QuadField field_;
    Int x_, y_;
};

/// Exact quotient a/b when it lies in the ring, std::nullopt otherwise.
/// Computed as a*conj(b)/N(b) with an integrality check in coordinates.
inline std::optional<AlgInt> exact_div(const AlgInt& a, const AlgInt& b) {
    if (a.field() != b.field()) {
        throw std::invalid_argument("exact_div: field mismatch");
    }
    if (b.is_zero()) {
        throw std::domain_error("exact_div: division by zero");
    }
    const Int n = b.norm();
    const AlgInt p = a * b.conjugate();
    if (p.x() % n != 0 || p.y() % n != 0) {
        return std::nullopt;
    }
    return AlgInt(a.field(), p.x() / n, p.y() / n);
}

/// Canonical total order (trace, x, y); the library's ordering everywhere
/// elements are listed or iterated.
inline bool canonical_less(const AlgInt& a, const AlgInt& b) {
    const Int ta = a.trace(), tb = b.trace();
    if (ta != tb) return ta < tb;
    if (a.x() != b.x()) return a.x() < b.x();
    return a.y() < b.y();
}

struct CanonicalLess {
    bool operator()(const AlgInt& a, const AlgInt& b) const { return canonical_less(a, b); }
};

/// Display form with the radical spelled out, e.g. "6+2√2"; half-integer
/// elements of d = 1 mod 4 fields render as "(a+b√d)/2".
inline std::string to_display(const AlgInt& e) {
    const auto& f = e.field();
    std::ostringstream os;
    auto render = [&os](const Int& a, const Int& b, const Int& d) {
        // a + b*sqrt(d), b != 0 handled by caller
        if (a != 0) {
            os << a.str() << (b > 0 ? "+" : "-");
        } else if (b < 0) {
            os << "-";
        }
        const Int ab = abs(b);
        if (ab != 1) {
            os << ab.str();
        }
        os << "√" << d.str();
    };
    if (f.is_rational() || e.y() == 0) {
        os << e.x().str();
        return os.str();
    }
    if (f.omega_kind() == OmegaKind::sqrt_d) {
        render(e.x(), e.y(), f.radicand());
        return os.str();
    }
    // x + y(1+sqrt d)/2 = ((2x+y) + y sqrt d)/2
    const Int a2 = 2 * e.x() + e.y();
    const Int b2 = e.y();
    if (a2 % 2 == 0 && b2 % 2 == 0) {
        render(a2 / 2, b2 / 2, f.radicand());
        return os.str();
    }
    os << "(";
    render(a2, b2, f.radicand());
    os << ")/2";
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const AlgInt& e) {
    return os << to_display(e);
}

/// Parse failure for element literals; position() is the offset of the
/// offending character.
class ElementParseError : public std::runtime_error {
public:
    ElementParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/**
 * Element literal grammar: `INT`, `INT+INT*w`, `INT-INT*w`, where w denotes
 * omega of the active field. Whitespace between tokens is ignored.
 */
inline AlgInt parse_element(const QuadField& f, std::string_view s) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    };
    auto parse_int = [&](bool allow_sign) -> Int {
        skip_ws();
        bool neg = false;
        if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
        }
        std::size_t digits_from = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == digits_from) {
            throw ElementParseError("expected integer", i);
        }
        Int v(std::string(s.substr(digits_from, i - digits_from)));
        return neg ? -v : v;
    };

    const Int x = parse_int(true);
    skip_ws();
    if (i == s.size()) {
        return AlgInt(f, x, 0);
    }
    if (s[i] != '+' && s[i] != '-') {
        throw ElementParseError("expected '+', '-' or end of literal", i);
    }
    const bool neg = (s[i] == '-');
    ++i;
    Int y = parse_int(false);
    if (neg) y = -y;
    skip_ws();
    if (i == s.size() || s[i] != '*') {
        throw ElementParseError("expected '*'", i);
    }
    ++i;
    skip_ws();
    if (i == s.size() || s[i] != 'w') {
        throw ElementParseError("expected 'w'", i);
    }
    ++i;
    skip_ws();
    if (i != s.size()) {
        throw ElementParseError("trailing characters", i);
    }
    if (f.is_rational()) {
        throw ElementParseError("omega term not allowed over the rationals", 0);
    }
    return AlgInt(f, x, y);
}

} // namespace quadpart
