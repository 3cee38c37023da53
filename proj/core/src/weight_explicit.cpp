#include "crysext/weight_explicit.hpp"

#include "crysext/error.hpp"

#include <algorithm>

namespace crysext {

std::vector<JDelta> reducible_inertial_params(const ReducibleShape& shape, const SerreWeight& a, const Context& ctx) {
    validate_weight(a, ctx.p());
    std::vector<JDelta> out;
    for (bool full : {true, false}) {
        for (int delta = 0; delta <= ctx.e() - 1; ++delta) {
            const long long top = delta + (full ? a.a1 + 1 : a.a2);
            const long long bottom = (ctx.e() - 1 - delta) + (full ? a.a2 : a.a1 + 1);
            if (ctx.reduce(top) == shape.chi1.exponent() && ctx.reduce(bottom) == shape.chi2.exponent())
                out.push_back({full, delta});
        }
    }
    return out;
}

int lchi_dimension(const JDelta& jd, bool chars_equal, const Context& ctx) {
    if (jd.delta < 0 || jd.delta > ctx.e() - 1)
        throw Error(ErrorKind::invalid_argument, "delta must lie in [0, e-1]");
    return jd.j_size() + jd.delta + (chars_equal ? 1 : 0);
}

int h1_dimension(const FullChar& chi, const Context& ctx) {
    return ctx.e() + (chi.is_trivial() ? 1 : 0) + (chi == cyclotomic(ctx) ? 1 : 0);
}

bool is_exceptional(const ReducibleShape& shape, const SerreWeight& a, const Context& ctx) {
    return a.a1 - a.a2 == ctx.p() - 1 && char_mul(shape.chi1, char_inv(shape.chi2)) == cyclotomic(ctx);
}

LcrysResult lcrys_dimension(const ReducibleShape& shape, const SerreWeight& a, const Context& ctx) {
    const auto params = reducible_inertial_params(shape, a, ctx);
    if (params.empty())
        throw Error(ErrorKind::inertially_incompatible,
                    "weight not in inertial range: no (J, delta) matches chi1|I = omega^" +
                        std::to_string(shape.chi1.exponent()) + ", chi2|I = omega^" + std::to_string(shape.chi2.exponent()));
    if (is_exceptional(shape, a, ctx)) return {h1_dimension(cyclotomic(ctx), ctx), true};
    const bool equal = shape.chi1 == shape.chi2;
    int best = 0;
    for (const auto& jd : params) best = std::max(best, lchi_dimension(jd, equal, ctx));
    return {best, false};
}

bool irreducible_in_wexplicit(const InertialChar2& inertial_exp, const SerreWeight& a, const Context& ctx) {
    validate_weight(a, ctx.p());
    const int p = ctx.p();
    const InertialChar2 conj = niveau2_frobenius_conjugate(inertial_exp);
    for (int delta = 0; delta <= ctx.e() - 1; ++delta) {
        const InertialChar2 target(static_cast<long long>(a.a1 + 1 + delta) +
                                       static_cast<long long>(p) * (a.a2 + ctx.e() - 1 - delta),
                                   p);
        if (target == inertial_exp || target == conj) return true;
    }
    return false;
}

}  // namespace crysext
