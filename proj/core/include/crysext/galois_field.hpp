#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crysext {

class FieldElem;

/// The finite field GF(p^f) in a fixed polynomial basis over GF(p).
///
/// Elements are encoded as integers c_0 + c_1 p + ... + c_{f-1} p^{f-1}, where
/// c_i is the coefficient of a^i and `a` is a root of the defining
/// polynomial. The defining polynomial is the Conway polynomial where one is
/// tabulated, and otherwise the lexicographically least monic primitive
/// polynomial, so encodings are stable across runs.
///
/// Instances are obtained through `get()`, are immutable, and live for the
/// whole program; raw pointers to them are therefore always valid.
class GaloisField {
public:
    using Code = std::uint32_t;

    static constexpr std::uint32_t max_order = 1u << 20;

    static const GaloisField& get(int p, int f);

    int characteristic() const noexcept { return p_; }
    int degree() const noexcept { return f_; }
    std::uint32_t order() const noexcept { return q_; }

    /// Coefficients c_0..c_f of the monic defining polynomial.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    /// Least primitive root of GF(p), used as the value of the tame character
    /// on the chosen generator of Gal(K_1/K).
    int prime_field_generator() const noexcept { return prime_generator_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(long long n) const;
    FieldElem from_code(Code c) const;
    FieldElem primitive_element() const;
    FieldElem parse(std::string_view text) const;

    Code add(Code a, Code b) const noexcept;
    Code sub(Code a, Code b) const noexcept;
    Code neg(Code a) const noexcept;
    Code mul(Code a, Code b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    Code inv(Code a) const;
    Code pow(Code a, long long n) const;
    Code frobenius(Code a) const noexcept { return pow(a, p_); }
    Code code_of_int(long long n) const noexcept;

    std::string format(Code a) const;
    Code parse_code(std::string_view text) const;

    /// Multiplicative order divides q - 1; exposed for tests.
    std::uint32_t multiplicative_order(Code a) const;

private:
    GaloisField(int p, int f);

    std::vector<int> digits(Code a) const;
    Code from_digits(const std::vector<int>& d) const;

    int p_;
    int f_;
    std::uint32_t q_;
    int prime_generator_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint16_t> add_table_;
};

/// A value in some GaloisField. Default-constructed elements are invalid and
/// only serve as placeholders.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(const GaloisField* field, GaloisField::Code code) noexcept
        : field_(field), code_(code) {}

    const GaloisField& field() const noexcept { return *field_; }
    bool valid() const noexcept { return field_ != nullptr; }
    GaloisField::Code code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }

    FieldElem inverse() const { return {field_, field_->inv(code_)}; }
    FieldElem pow(long long n) const { return {field_, field_->pow(code_, n)}; }
    FieldElem frobenius() const { return {field_, field_->frobenius(code_)}; }
    std::string to_string() const { return field_->format(code_); }

    friend FieldElem operator+(FieldElem a, FieldElem b) noexcept {
        return {a.field_, a.field_->add(a.code_, b.code_)};
    }
    friend FieldElem operator-(FieldElem a, FieldElem b) noexcept {
        return {a.field_, a.field_->sub(a.code_, b.code_)};
    }
    friend FieldElem operator-(FieldElem a) noexcept {
        return {a.field_, a.field_->neg(a.code_)};
    }
    friend FieldElem operator*(FieldElem a, FieldElem b) noexcept {
        return {a.field_, a.field_->mul(a.code_, b.code_)};
    }
    friend FieldElem operator/(FieldElem a, FieldElem b) { return a * b.inverse(); }
    FieldElem& operator+=(FieldElem b) noexcept { return *this = *this + b; }
    FieldElem& operator-=(FieldElem b) noexcept { return *this = *this - b; }
    FieldElem& operator*=(FieldElem b) noexcept { return *this = *this * b; }

    friend bool operator==(FieldElem a, FieldElem b) noexcept {
        return a.field_ == b.field_ && a.code_ == b.code_;
    }

private:
    const GaloisField* field_ = nullptr;
    GaloisField::Code code_ = 0;
};

bool is_prime(long long n) noexcept;

}  // namespace crysext
