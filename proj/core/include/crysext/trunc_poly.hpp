#pragma once

#include "crysext/galois_field.hpp"

#include <utility>
#include <vector>

namespace crysext {

/// The chain ring k_E[u]/u^n. Cheap to copy; two rings are equal when they
/// share the coefficient field and the nilpotency index.
class ChainRing {
public:
    ChainRing() = default;
    ChainRing(const GaloisField& field, int length);

    const GaloisField& field() const noexcept { return *field_; }
    int length() const noexcept { return length_; }
    int characteristic() const noexcept { return field_->characteristic(); }

    friend bool operator==(const ChainRing&, const ChainRing&) = default;

private:
    const GaloisField* field_ = nullptr;
    int length_ = 0;
};

/// An element of k_E[u]/u^n stored densely by degree.
class TruncPoly {
public:
    using Code = GaloisField::Code;

    TruncPoly() = default;
    explicit TruncPoly(const ChainRing& ring);

    static TruncPoly zero(const ChainRing& ring) { return TruncPoly(ring); }
    static TruncPoly constant(const ChainRing& ring, FieldElem c);
    static TruncPoly monomial(const ChainRing& ring, int degree, FieldElem c);
    static TruncPoly monomial(const ChainRing& ring, int degree);
    /// Builds from (degree, coefficient) terms; terms at degree >= n vanish.
    static TruncPoly from_terms(const ChainRing& ring, const std::vector<std::pair<int, FieldElem>>& terms);

    const ChainRing& ring() const noexcept { return ring_; }
    int length() const noexcept { return ring_.length(); }

    FieldElem coeff(int degree) const;
    void set_coeff(int degree, FieldElem c);
    Code raw(int degree) const noexcept { return coeffs_[static_cast<std::size_t>(degree)]; }

    bool is_zero() const noexcept;
    bool is_unit() const noexcept { return !coeffs_.empty() && coeffs_[0] != 0; }
    /// Least degree with a nonzero coefficient; `length()` for zero.
    int valuation() const noexcept;
    /// Nonzero terms in increasing degree.
    std::vector<std::pair<int, FieldElem>> terms() const;

    TruncPoly operator-() const;
    TruncPoly& operator+=(const TruncPoly& o);
    TruncPoly& operator-=(const TruncPoly& o);
    TruncPoly& operator*=(const TruncPoly& o) { return *this = *this * o; }
    friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
    friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
    friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
    friend TruncPoly operator*(FieldElem c, const TruncPoly& a) { return a.scaled(c); }

    TruncPoly scaled(FieldElem c) const;
    /// Multiplication by u^m (m >= 0), truncating.
    TruncPoly shifted_up(int m) const;
    /// The polynomial q with deg q < n - m and u^m q = *this; requires
    /// valuation() >= m.
    TruncPoly shifted_down(int m) const;
    /// Inverse of a unit.
    TruncPoly inverse() const;

    /// The k_E-linear ring endomorphism u^i -> u^{pi}.
    TruncPoly phi_twist() const;

    friend bool operator==(const TruncPoly& a, const TruncPoly& b) {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator<(const TruncPoly& a, const TruncPoly& b) { return a.coeffs_ < b.coeffs_; }

    std::string to_string() const;

private:
    ChainRing ring_;
    std::vector<Code> coeffs_;
};

}  // namespace crysext
