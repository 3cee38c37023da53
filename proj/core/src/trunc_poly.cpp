#include "crysext/trunc_poly.hpp"

#include "crysext/error.hpp"

#include <sstream>

namespace crysext {

ChainRing::ChainRing(const GaloisField& field, int length) : field_(&field), length_(length) {
    if (length < 1) throw Error(ErrorKind::invalid_argument, "chain ring length must be positive");
}

TruncPoly::TruncPoly(const ChainRing& ring) : ring_(ring), coeffs_(static_cast<std::size_t>(ring.length()), 0) {}

TruncPoly TruncPoly::constant(const ChainRing& ring, FieldElem c) { return monomial(ring, 0, c); }

TruncPoly TruncPoly::monomial(const ChainRing& ring, int degree, FieldElem c) {
    TruncPoly r(ring);
    if (degree < 0) throw Error(ErrorKind::invalid_argument, "negative degree");
    if (degree < ring.length()) r.coeffs_[static_cast<std::size_t>(degree)] = c.code();
    return r;
}

TruncPoly TruncPoly::monomial(const ChainRing& ring, int degree) { return monomial(ring, degree, ring.field().one()); }

TruncPoly TruncPoly::from_terms(const ChainRing& ring, const std::vector<std::pair<int, FieldElem>>& terms) {
    TruncPoly r(ring);
    for (const auto& [d, c] : terms) {
        if (d < 0) throw Error(ErrorKind::invalid_argument, "negative degree");
        if (d < ring.length()) r.coeffs_[static_cast<std::size_t>(d)] = ring.field().add(r.coeffs_[d], c.code());
    }
    return r;
}

FieldElem TruncPoly::coeff(int degree) const {
    if (degree < 0 || degree >= length()) return ring_.field().zero();
    return {&ring_.field(), coeffs_[static_cast<std::size_t>(degree)]};
}

void TruncPoly::set_coeff(int degree, FieldElem c) {
    if (degree < 0 || degree >= length()) throw Error(ErrorKind::invalid_argument, "degree out of range");
    coeffs_[static_cast<std::size_t>(degree)] = c.code();
}

bool TruncPoly::is_zero() const noexcept {
    for (Code c : coeffs_)
        if (c != 0) return false;
    return true;
}

int TruncPoly::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return length();
}

std::vector<std::pair<int, FieldElem>> TruncPoly::terms() const {
    std::vector<std::pair<int, FieldElem>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(static_cast<int>(i), FieldElem(&ring_.field(), coeffs_[i]));
    return out;
}

TruncPoly TruncPoly::operator-() const {
    TruncPoly r(*this);
    for (auto& c : r.coeffs_) c = ring_.field().neg(c);
    return r;
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
    const auto& F = ring_.field();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = F.add(coeffs_[i], o.coeffs_[i]);
    return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) {
    const auto& F = ring_.field();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = F.sub(coeffs_[i], o.coeffs_[i]);
    return *this;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    const auto& F = a.ring_.field();
    const std::size_t n = a.coeffs_.size();
    TruncPoly r(a.ring_);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ai = a.coeffs_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            const auto bj = b.coeffs_[j];
            if (bj == 0) continue;
            r.coeffs_[i + j] = F.add(r.coeffs_[i + j], F.mul(ai, bj));
        }
    }
    return r;
}

TruncPoly TruncPoly::scaled(FieldElem c) const {
    TruncPoly r(ring_);
    const auto& F = ring_.field();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = F.mul(coeffs_[i], c.code());
    return r;
}

TruncPoly TruncPoly::shifted_up(int m) const {
    if (m < 0) throw Error(ErrorKind::invalid_argument, "negative shift");
    TruncPoly r(ring_);
    const int n = length();
    for (int i = 0; i + m < n; ++i) r.coeffs_[static_cast<std::size_t>(i + m)] = coeffs_[static_cast<std::size_t>(i)];
    return r;
}

TruncPoly TruncPoly::shifted_down(int m) const {
    if (m < 0) throw Error(ErrorKind::invalid_argument, "negative shift");
    if (valuation() < m) throw Error(ErrorKind::invalid_argument, "shifted_down: valuation too small");
    TruncPoly r(ring_);
    const int n = length();
    for (int i = m; i < n; ++i) r.coeffs_[static_cast<std::size_t>(i - m)] = coeffs_[static_cast<std::size_t>(i)];
    return r;
}

TruncPoly TruncPoly::inverse() const {
    if (!is_unit()) throw Error(ErrorKind::invalid_argument, "inverse of a non-unit in k_E[u]/u^n");
    const auto& F = ring_.field();
    const std::size_t n = coeffs_.size();
    TruncPoly r(ring_);
    const Code inv0 = F.inv(coeffs_[0]);
    r.coeffs_[0] = inv0;
    // r_k = -inv0 * sum_{j=1..k} a_j r_{k-j}
    for (std::size_t k = 1; k < n; ++k) {
        Code s = 0;
        for (std::size_t j = 1; j <= k; ++j) s = F.add(s, F.mul(coeffs_[j], r.coeffs_[k - j]));
        r.coeffs_[k] = F.neg(F.mul(inv0, s));
    }
    return r;
}

TruncPoly TruncPoly::phi_twist() const {
    TruncPoly r(ring_);
    const std::size_t p = static_cast<std::size_t>(ring_.characteristic());
    for (std::size_t i = 0; i * p < coeffs_.size(); ++i) r.coeffs_[i * p] = coeffs_[i];
    return r;
}

std::string TruncPoly::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c] : terms()) {
        if (!first) out << " + ";
        first = false;
        const bool compound = ring_.field().degree() > 1 && c.to_string().find('+') != std::string::npos;
        if (d == 0 || !c.is_one()) out << (compound ? "(" : "") << c.to_string() << (compound ? ")" : "");
        if (d >= 1) out << "u";
        if (d >= 2) out << "^" << d;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace crysext
