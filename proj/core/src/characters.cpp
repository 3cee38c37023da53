#include "crysext/characters.hpp"

#include "crysext/error.hpp"

namespace crysext {

namespace {

int reduce_mod(long long n, long long m) {
    long long r = n % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

void check_prime(int p) {
    if (p < 3 || !is_prime(p)) throw Error(ErrorKind::invalid_argument, "p must be an odd prime, got " + std::to_string(p));
}

}  // namespace

Context::Context(int p, int e, int f) : Context(p, e, f, FieldElem()) {}

Context::Context(int p, int e, int f, FieldElem cyclotomic_scalar) : p_(p), e_(e), f_(f) {
    check_prime(p);
    if (e < 1) throw Error(ErrorKind::invalid_argument, "e must be >= 1, got " + std::to_string(e));
    if (f < 1) throw Error(ErrorKind::invalid_argument, "f must be >= 1, got " + std::to_string(f));
    field_ = &GaloisField::get(p, f);
    if (!cyclotomic_scalar.valid()) {
        cyclotomic_scalar_ = field_->one();
    } else {
        if (&cyclotomic_scalar.field() != field_)
            throw Error(ErrorKind::invalid_argument, "cyclotomic scalar lives in a different field");
        if (cyclotomic_scalar.is_zero()) throw Error(ErrorKind::invalid_argument, "cyclotomic scalar must be a unit");
        cyclotomic_scalar_ = cyclotomic_scalar;
    }
}

int Context::reduce(long long n) const noexcept { return reduce_mod(n, p_ - 1); }

InertialChar1::InertialChar1(long long exponent, int p) : p_(p) {
    check_prime(p);
    exponent_ = reduce_mod(exponent, p - 1);
}

InertialChar2::InertialChar2(long long exponent, int p) : p_(p) {
    check_prime(p);
    exponent_ = reduce_mod(exponent, static_cast<long long>(p) * p - 1);
}

FullChar make_char(const Context& ctx, long long exponent, FieldElem frob) {
    if (!frob.valid() || &frob.field() != &ctx.field())
        throw Error(ErrorKind::invalid_argument, "character scalar lives in a different field");
    if (frob.is_zero()) throw Error(ErrorKind::invalid_argument, "character Frobenius value must be a unit");
    return {InertialChar1(exponent, ctx.p()), frob};
}

FullChar make_char(const Context& ctx, long long exponent, long long frob) {
    return make_char(ctx, exponent, ctx.field().from_int(frob));
}

FullChar trivial_char(const Context& ctx) { return make_char(ctx, 0, ctx.field().one()); }

FullChar char_mul(const FullChar& a, const FullChar& b) {
    const int p = a.inertial.p();
    return {InertialChar1(static_cast<long long>(a.exponent()) + b.exponent(), p), a.frob * b.frob};
}

FullChar char_inv(const FullChar& a) {
    return {InertialChar1(-static_cast<long long>(a.exponent()), a.inertial.p()), a.frob.inverse()};
}

FullChar char_pow(const FullChar& a, long long n) {
    return {InertialChar1(static_cast<long long>(a.exponent()) * n, a.inertial.p()), a.frob.pow(n)};
}

FullChar cyclotomic(const Context& ctx) { return make_char(ctx, ctx.e(), ctx.cyclotomic_scalar()); }

InertialChar2 niveau2_frobenius_conjugate(const InertialChar2& chi) {
    return InertialChar2(static_cast<long long>(chi.exponent()) * chi.p(), chi.p());
}

void validate_weight(const SerreWeight& a, int p) {
    if (!a.is_valid(p))
        throw Error(ErrorKind::invalid_weight, "Serre weight (" + std::to_string(a.a1) + "," + std::to_string(a.a2) +
                                                   ") needs 0 <= a1 - a2 <= p - 1 = " + std::to_string(p - 1));
}

bool weight_equivalent(const SerreWeight& a, const SerreWeight& b, const Context& ctx) {
    validate_weight(a, ctx.p());
    validate_weight(b, ctx.p());
    return a.a1 - a.a2 == b.a1 - b.a2 && ctx.reduce(a.a2) == ctx.reduce(b.a2);
}

}  // namespace crysext
