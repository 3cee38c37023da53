#include "crysext/breuil.hpp"

#include "crysext/error.hpp"
#include "crysext/field_linalg.hpp"

#include <algorithm>
#include <string>

namespace crysext {

namespace {

TruncPoly one(const ChainRing& ring) { return TruncPoly::constant(ring, ring.field().one()); }

void check_ring(const TruncPoly& lambda, const Context& ctx) {
    if (!(lambda.ring() == ctx.ring()))
        throw Error(ErrorKind::invalid_argument, "lambda does not live in k_E[u]/u^{e'p} for this context");
}

// q and lambda share the degree residue l - k.
void check_residue(const TruncPoly& q, int residue, const Context& ctx, const char* what) {
    for (const auto& [deg, coeff] : q.terms()) {
        if (ctx.reduce(deg) != residue)
            throw Error(ErrorKind::inadmissible_lambda, std::string(what) + " term " + coeff.to_string() + "*u^" +
                                                            std::to_string(deg) + " has degree not congruent to " +
                                                            std::to_string(residue) + " mod p-1");
    }
}

FieldElem zeta(const Context& ctx) { return ctx.field().from_int(ctx.field().prime_field_generator()); }

}  // namespace

void validate_rank_one(const RankOneBM& m, const Context& ctx) {
    if (m.x < 0 || m.x > ctx.e()) throw Error(ErrorKind::invalid_argument, "x must lie in [0, e]");
    if (m.k < 0 || m.k >= ctx.p() - 1) throw Error(ErrorKind::invalid_argument, "k must lie in [0, p-1)");
    if (!m.c.valid() || &m.c.field() != &ctx.field())
        throw Error(ErrorKind::invalid_argument, "phi_1 scalar is not an element of k_E");
    if (m.c.is_zero()) throw Error(ErrorKind::invalid_argument, "phi_1 scalar must be a unit");
}

FullChar rank_one_generic_fibre(const RankOneBM& m, const Context& ctx) {
    return make_char(ctx, m.k + m.x, m.c.inverse());
}

int lambda_min_degree(int x, int y, const Context& ctx) { return std::max(0, (x + y - ctx.e()) * (ctx.p() - 1)); }

int lambda_residue(int k, int l, const Context& ctx) { return ctx.reduce(l - k); }

void validate_extension(const ExtBM& p, const Context& ctx) {
    validate_rank_one(p.sub, ctx);
    validate_rank_one(p.quot, ctx);
    check_ring(p.lambda, ctx);
    check_residue(p.lambda, lambda_residue(p.k(), p.l(), ctx), ctx, "lambda");
    const int m0 = lambda_min_degree(p.x(), p.y(), ctx);
    if (!p.lambda.is_zero() && p.lambda.valuation() < m0) {
        const int v = p.lambda.valuation();
        throw Error(ErrorKind::inadmissible_lambda, "lambda term " + p.lambda.coeff(v).to_string() + "*u^" +
                                                        std::to_string(v) + " is below the minimum degree " +
                                                        std::to_string(m0));
    }
}

FullChar sub_character(const ExtBM& p, const Context& ctx) { return rank_one_generic_fibre(p.sub, ctx); }
FullChar quotient_character(const ExtBM& p, const Context& ctx) { return rank_one_generic_fibre(p.quot, ctx); }
bool chars_equal(const ExtBM& p, const Context& ctx) { return sub_character(p, ctx) == quotient_character(p, ctx); }

BreuilModuleData module_data(const RankOneBM& m, const Context& ctx) {
    const ChainRing ring = ctx.ring();
    std::vector<RVector> gens{{TruncPoly::monomial(ring, m.x * (ctx.p() - 1))}};
    return BreuilModuleData{ring, 1, RSubmodule(ring, 1, std::move(gens)), {{TruncPoly::constant(ring, m.c)}}, {m.k}};
}

BreuilModuleData module_data(const ExtBM& p, const Context& ctx) {
    const ChainRing ring = ctx.ring();
    const int pm1 = ctx.p() - 1;
    std::vector<RVector> gens{
        {TruncPoly::monomial(ring, p.x() * pm1), TruncPoly(ring)},
        {p.lambda, TruncPoly::monomial(ring, p.y() * pm1)},
    };
    std::vector<RVector> images{
        {TruncPoly::constant(ring, p.c()), TruncPoly(ring)},
        {TruncPoly(ring), TruncPoly::constant(ring, p.d())},
    };
    return BreuilModuleData{ring, 2, RSubmodule(ring, 2, std::move(gens)), std::move(images), {p.k(), p.l()}};
}

RVector descent_apply(const BreuilModuleData& m, const RVector& element, const Context& ctx) {
    const int pm1 = ctx.p() - 1;
    std::vector<FieldElem> powers;
    powers.reserve(static_cast<std::size_t>(pm1));
    const FieldElem z = zeta(ctx);
    FieldElem acc = ctx.field().one();
    for (int i = 0; i < pm1; ++i, acc *= z) powers.push_back(acc);

    RVector out;
    out.reserve(element.size());
    for (std::size_t j = 0; j < element.size(); ++j) {
        TruncPoly t(m.ring);
        for (const auto& [deg, coeff] : element[j].terms())
            t.set_coeff(deg, coeff * powers[static_cast<std::size_t>(ctx.reduce(deg + m.descent_exponents[j]))]);
        out.push_back(std::move(t));
    }
    return out;
}

bool breuil_morphism_check(const RModuleMap& f, const BreuilModuleData& source, const BreuilModuleData& target,
                           const Context& ctx) {
    if (f.source_rank() != source.rank || f.target_rank() != target.rank) return false;
    const auto& gens = source.fil.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const RVector image = f.apply(gens[i]);
        const auto coeffs = target.fil.express(image);
        if (!coeffs) return false;
        RVector lhs = zero_vector(target.ring, target.rank);
        for (std::size_t j = 0; j < coeffs->size(); ++j)
            lhs = add(lhs, scale((*coeffs)[j].phi_twist(), target.phi1_images[j]));
        if (lhs != f.apply(source.phi1_images[i])) return false;
    }
    for (int j = 0; j < source.rank; ++j) {
        RVector basis = zero_vector(source.ring, source.rank);
        basis[static_cast<std::size_t>(j)] = one(source.ring);
        if (f.apply(descent_apply(source, basis, ctx)) != descent_apply(target, f.column(j), ctx)) return false;
    }
    return true;
}

bool breuil_morphism_check(const RModuleMap& f, const ExtBM& source, const ExtBM& target, const Context& ctx) {
    return breuil_morphism_check(f, module_data(source, ctx), module_data(target, ctx), ctx);
}

bool same_generic_fibre_witness(const RModuleMap& f, const BreuilModuleData& source, const BreuilModuleData& target,
                                const Context& ctx) {
    return breuil_morphism_check(f, source, target, ctx) && !contains_free_element(kernel(f));
}

bool same_generic_fibre_witness(const RModuleMap& f, const ExtBM& source, const ExtBM& target, const Context& ctx) {
    return same_generic_fibre_witness(f, module_data(source, ctx), module_data(target, ctx), ctx);
}

std::vector<ValidPair> valid_pairs(const FullChar& chi1, const FullChar& chi2, const SerreWeight& a, const Context& ctx) {
    validate_weight(a, ctx.p());
    const int alpha = chi1.exponent();
    const int beta = chi2.exponent();
    if (ctx.reduce(alpha + beta) != ctx.reduce(a.a1 + a.a2 + ctx.e()))
        throw Error(ErrorKind::determinant_mismatch,
                    "weight/determinant mismatch: alpha + beta = " + std::to_string(alpha + beta) +
                        " but a1 + a2 + e = " + std::to_string(a.a1 + a.a2 + ctx.e()) + " mod p-1");
    const int r1 = ctx.reduce(a.a1);
    const int r2 = ctx.reduce(a.a2);
    std::vector<ValidPair> out;
    for (int x = 0; x <= ctx.e(); ++x) {
        for (int y = 0; y <= ctx.e(); ++y) {
            const int k = ctx.reduce(alpha - x);
            const int l = ctx.reduce(beta - y);
            if ((k == r1 && l == r2) || (k == r2 && l == r1)) out.push_back({x, y, k, l});
        }
    }
    return out;
}

std::vector<ValidPair> valid_pairs_for(const ExtBM& p, const Context& ctx) {
    const SerreWeight a{std::max(p.k(), p.l()), std::min(p.k(), p.l())};
    return valid_pairs(sub_character(p, ctx), quotient_character(p, ctx), a, ctx);
}

ExtremalPair extremal_pair(const std::vector<ValidPair>& pairs, const Context& ctx) {
    if (pairs.empty()) throw Error(ErrorKind::no_valid_pairs, "no valid pairs");
    int X = pairs.front().x;
    int Y = pairs.front().y;
    for (const auto& vp : pairs) {
        X = std::max(X, vp.x);
        Y = std::min(Y, vp.y);
    }
    if (Y != ctx.e() - X)
        throw Error(ErrorKind::internal, "extremal pair (" + std::to_string(X) + ", " + std::to_string(Y) +
                                             ") does not satisfy Y = e - X");
    return {X, Y};
}

std::vector<int> extension_space_basis(int x, int y, int k, int l, bool chars_equal, const Context& ctx) {
    const int pm1 = ctx.p() - 1;
    const int r = lambda_residue(k, l, ctx);
    std::vector<int> out;
    for (int d = lambda_min_degree(x, y, ctx); d < x * pm1; ++d)
        if (ctx.reduce(d) == r) out.push_back(d);
    if (chars_equal && x >= y) {
        const int extra = ctx.p() * x - y;
        if (extra < ctx.ring_length() && std::find(out.begin(), out.end(), extra) == out.end()) out.push_back(extra);
    }
    return out;
}

ExtBM make_extension(int x, int y, const TruncPoly& lambda, const FullChar& chi1, const FullChar& chi2,
                     const SerreWeight& a, const Context& ctx) {
    const auto pairs = valid_pairs(chi1, chi2, a, ctx);
    const auto it = std::find_if(pairs.begin(), pairs.end(), [&](const ValidPair& vp) { return vp.x == x && vp.y == y; });
    if (it == pairs.end())
        throw Error(ErrorKind::invalid_pair,
                    "(x, y) = (" + std::to_string(x) + ", " + std::to_string(y) + ") is not a valid pair");
    ExtBM out{{x, chi1.frob.inverse(), it->k}, {y, chi2.frob.inverse(), it->l}, lambda};
    validate_extension(out, ctx);
    return out;
}

TruncPoly big_payload(const ExtBM& p, const Context& ctx) {
    return p.lambda.shifted_up(ctx.p() * (ctx.e() - p.x()) + p.y());
}

ComparisonModels transform_to_big_model(const ExtBM& p, const Context& ctx) {
    validate_extension(p, ctx);
    const ChainRing ring = ctx.ring();
    const int e = ctx.e();
    const int twist = ctx.p() * (e - p.x());
    const RankOneBM sub{e, p.c(), ctx.reduce(p.k() + p.x() - e)};

    ExtBM middle{sub, p.quot, p.lambda.shifted_up(twist)};
    ExtBM big{sub, {0, p.d(), ctx.reduce(p.l() + p.y())}, big_payload(p, ctx)};

    RModuleMap from_original(ring, 2, 2);
    from_original.at(0, 0) = TruncPoly::monomial(ring, twist);
    from_original.at(1, 1) = one(ring);
    RModuleMap from_big(ring, 2, 2);
    from_big.at(0, 0) = one(ring);
    from_big.at(1, 1) = TruncPoly::monomial(ring, ctx.p() * p.y());
    return {std::move(big), std::move(middle), std::move(from_original), std::move(from_big)};
}

ExtBM shift_valid_pair(const ExtBM& p, int x_new, int y_new, const Context& ctx) {
    validate_extension(p, ctx);
    if (x_new + y_new > ctx.e())
        throw Error(ErrorKind::shift_sum_exceeds_e, "x' + y' = " + std::to_string(x_new + y_new) + " exceeds e");
    const int shift = ctx.p() * (x_new - p.x()) + (p.y() - y_new);
    if (shift < 0)
        throw Error(ErrorKind::shift_negative_exponent,
                    "p(x' - x) + (y - y') = " + std::to_string(shift) + " is negative");
    const auto pairs = valid_pairs_for(p, ctx);
    const auto it = std::find_if(pairs.begin(), pairs.end(),
                                 [&](const ValidPair& vp) { return vp.x == x_new && vp.y == y_new; });
    if (it == pairs.end())
        throw Error(ErrorKind::invalid_pair,
                    "(x', y') = (" + std::to_string(x_new) + ", " + std::to_string(y_new) + ") is not a valid pair");
    ExtBM out{{x_new, p.c(), it->k}, {y_new, p.d(), it->l}, p.lambda.shifted_up(shift)};
    validate_extension(out, ctx);
    return out;
}

BasisChange apply_basis_change(const ExtBM& p, const TruncPoly& q, const Context& ctx) {
    check_ring(q, ctx);
    check_residue(q, lambda_residue(p.k(), p.l(), ctx), ctx, "basis change");
    const ChainRing ring = ctx.ring();
    const int pm1 = ctx.p() - 1;
    // new basis w' = w + h v; renormalise the second Fil generator by q G1 so
    // that phi_1 still sends it to d w'
    const TruncPoly h = (p.c() / p.d()) * q.phi_twist();
    ExtBM target = p;
    target.lambda = p.lambda - h.shifted_up(p.y() * pm1) + q.shifted_up(p.x() * pm1);

    RModuleMap map(ring, 2, 2);
    map.at(0, 0) = one(ring);
    map.at(0, 1) = -h;
    map.at(1, 1) = one(ring);
    return {std::move(target), std::move(map)};
}

TruncPoly coboundary(const ExtBM& p, const TruncPoly& q, const Context& ctx) {
    return p.lambda - apply_basis_change(p, q, ctx).target.lambda;
}

bool is_normal_form(const ExtBM& p, const Context& ctx) {
    validate_extension(p, ctx);
    const auto window = extension_space_basis(p.x(), p.y(), p.k(), p.l(), chars_equal(p, ctx), ctx);
    for (const auto& [deg, coeff] : p.lambda.terms())
        if (std::find(window.begin(), window.end(), deg) == window.end()) return false;
    return true;
}

ExtBM reduce_to_normal_form(const ExtBM& p, const Context& ctx) {
    validate_extension(p, ctx);
    const GaloisField& field = ctx.field();
    const ChainRing ring = ctx.ring();
    const int n = ctx.ring_length();
    const int r = lambda_residue(p.k(), p.l(), ctx);
    const auto window = extension_space_basis(p.x(), p.y(), p.k(), p.l(), chars_equal(p, ctx), ctx);

    std::vector<int> row_of(static_cast<std::size_t>(n), -1);
    int rows = 0;
    for (int d = lambda_min_degree(p.x(), p.y(), ctx); d < n; ++d)
        if (ctx.reduce(d) == r) row_of[static_cast<std::size_t>(d)] = rows++;

    ExtBM split = p;
    split.lambda = TruncPoly(ring);
    std::vector<TruncPoly> cobs;
    for (int i = r; i < n; i += ctx.p() - 1) {
        TruncPoly b = coboundary(split, TruncPoly::monomial(ring, i), ctx);
        if (!b.is_zero()) cobs.push_back(std::move(b));
    }

    const int wn = static_cast<int>(window.size());
    const int bn = static_cast<int>(cobs.size());
    FieldMatrix full(field, rows, wn + bn);
    FieldMatrix cob_only(field, rows, bn);
    for (int j = 0; j < wn; ++j) full.at(row_of[static_cast<std::size_t>(window[static_cast<std::size_t>(j)])], j) = 1;
    for (int j = 0; j < bn; ++j) {
        for (const auto& [deg, coeff] : cobs[static_cast<std::size_t>(j)].terms()) {
            const int row = row_of[static_cast<std::size_t>(deg)];
            if (row < 0) throw Error(ErrorKind::internal, "coboundary left the admissible space");
            full.at(row, wn + j) = coeff.code();
            cob_only.at(row, j) = coeff.code();
        }
    }
    if (full.rank() != rows || cob_only.rank() + wn != rows)
        throw Error(ErrorKind::internal, "normal-form window is not a complement of the coboundary space at (x, y) = (" +
                                             std::to_string(p.x()) + ", " + std::to_string(p.y()) + ")");

    std::vector<GaloisField::Code> rhs(static_cast<std::size_t>(rows), 0);
    for (const auto& [deg, coeff] : p.lambda.terms()) rhs[static_cast<std::size_t>(row_of[static_cast<std::size_t>(deg)])] = coeff.code();
    const auto sol = solve(full, rhs);
    if (!sol) throw Error(ErrorKind::internal, "normal-form projection has no solution");

    ExtBM out = p;
    out.lambda = TruncPoly(ring);
    for (int j = 0; j < wn; ++j)
        out.lambda.set_coeff(window[static_cast<std::size_t>(j)], field.from_code((*sol)[static_cast<std::size_t>(j)]));
    return out;
}

ExtBM to_extremal_normal_form(const ExtBM& p, const Context& ctx) {
    const auto [X, Y] = extremal_pair(valid_pairs_for(p, ctx), ctx);
    return reduce_to_normal_form(shift_valid_pair(p, X, Y, ctx), ctx);
}

int lflat_dimension(const FullChar& chi1, const FullChar& chi2, const SerreWeight& a, const Context& ctx) {
    const auto pairs = valid_pairs(chi1, chi2, a, ctx);
    if (pairs.empty()) throw Error(ErrorKind::no_valid_pairs, "no valid pairs for these characters and weight");
    const auto [X, Y] = extremal_pair(pairs, ctx);
    const int k = ctx.reduce(chi1.exponent() - X);
    const int l = ctx.reduce(chi2.exponent() - Y);
    return static_cast<int>(extension_space_basis(X, Y, k, l, chi1 == chi2, ctx).size());
}

TruncPoly projective_representative(const TruncPoly& lambda) {
    if (lambda.is_zero()) return lambda;
    return lambda.scaled(lambda.coeff(lambda.valuation()).inverse());
}

}  // namespace crysext
