#pragma once

#include "crysext/galois_field.hpp"
#include "crysext/trunc_poly.hpp"

namespace crysext {

/// Arithmetic setting: K/Q_p totally ramified of ramification index e,
/// coefficients in k_E = GF(p^f), and the value of the mod p cyclotomic
/// character on the fixed Frobenius lift.
class Context {
public:
    Context(int p, int e, int f = 1);
    Context(int p, int e, int f, FieldElem cyclotomic_scalar);

    int p() const noexcept { return p_; }
    int e() const noexcept { return e_; }
    int f() const noexcept { return f_; }
    /// e' = e(p-1).
    int e_prime() const noexcept { return e_ * (p_ - 1); }
    /// Nilpotency index e'p of u in k_E[u]/u^{e'p}.
    int ring_length() const noexcept { return e_prime() * p_; }
    int tame_order() const noexcept { return p_ - 1; }
    /// Residue of n modulo p - 1 in [0, p - 1).
    int reduce(long long n) const noexcept;

    const GaloisField& field() const noexcept { return *field_; }
    ChainRing ring() const { return ChainRing(*field_, ring_length()); }
    FieldElem cyclotomic_scalar() const noexcept { return cyclotomic_scalar_; }

private:
    int p_;
    int e_;
    int f_;
    const GaloisField* field_;
    FieldElem cyclotomic_scalar_;
};

/// omega^exponent on I_K, exponent mod p - 1.
class InertialChar1 {
public:
    InertialChar1(long long exponent, int p);

    int exponent() const noexcept { return exponent_; }
    int p() const noexcept { return p_; }

    friend bool operator==(const InertialChar1&, const InertialChar1&) = default;

private:
    int exponent_;
    int p_;
};

/// A niveau-2 fundamental-character power on I_K, exponent mod p^2 - 1.
class InertialChar2 {
public:
    InertialChar2(long long exponent, int p);

    int exponent() const noexcept { return exponent_; }
    int p() const noexcept { return p_; }

    friend bool operator==(const InertialChar2&, const InertialChar2&) = default;

private:
    int exponent_;
    int p_;
};

/// A character of G_K: omega^k on inertia times the unramified character
/// sending the fixed arithmetic Frobenius lift to `frob`.
struct FullChar {
    InertialChar1 inertial;
    FieldElem frob;

    int exponent() const noexcept { return inertial.exponent(); }
    bool is_unramified() const noexcept { return inertial.exponent() == 0; }
    bool is_trivial() const noexcept { return is_unramified() && frob.is_one(); }

    friend bool operator==(const FullChar& a, const FullChar& b) {
        return a.inertial == b.inertial && a.frob == b.frob;
    }
};

FullChar make_char(const Context& ctx, long long exponent, FieldElem frob);
FullChar make_char(const Context& ctx, long long exponent, long long frob = 1);
FullChar trivial_char(const Context& ctx);
FullChar char_mul(const FullChar& a, const FullChar& b);
FullChar char_inv(const FullChar& a);
FullChar char_pow(const FullChar& a, long long n);
/// The mod p cyclotomic character: omega^e on inertia, configured Frobenius value.
FullChar cyclotomic(const Context& ctx);

InertialChar2 niveau2_frobenius_conjugate(const InertialChar2& chi);

struct SerreWeight {
    int a1;
    int a2;

    bool is_valid(int p) const noexcept { return a1 >= a2 && a1 - a2 <= p - 1; }

    friend bool operator==(const SerreWeight&, const SerreWeight&) = default;
};

/// Throws invalid_weight unless 0 <= a1 - a2 <= p - 1.
void validate_weight(const SerreWeight& a, int p);

/// F_a ~ F_b: equal differences and a2 = b2 mod p - 1.
bool weight_equivalent(const SerreWeight& a, const SerreWeight& b, const Context& ctx);

}  // namespace crysext
