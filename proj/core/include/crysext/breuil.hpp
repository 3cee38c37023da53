#pragma once

#include "crysext/characters.hpp"
#include "crysext/rmodule.hpp"
#include "crysext/trunc_poly.hpp"

#include <vector>

namespace crysext {

/// Rank-one Breuil module with descent data: M = R v, Fil^1 M = u^{x(p-1)} M,
/// phi_1(u^{x(p-1)} v) = c v, g(v) = omega(g)^k v.
struct RankOneBM {
    int x;
    FieldElem c;
    int k;

    friend bool operator==(const RankOneBM&, const RankOneBM&) = default;
};

void validate_rank_one(const RankOneBM& m, const Context& ctx);

/// omega^{k+x} * ur_{c^{-1}}.
FullChar rank_one_generic_fibre(const RankOneBM& m, const Context& ctx);

/// Extension P(x, y, lambda) of N = `quot` by M = `sub`, in the basis (v, w):
/// Fil^1 P = R u^{x(p-1)} v + R (u^{y(p-1)} w + lambda v),
/// phi_1 sends the two generators to c v and d w.
struct ExtBM {
    RankOneBM sub;
    RankOneBM quot;
    TruncPoly lambda;

    int x() const noexcept { return sub.x; }
    int y() const noexcept { return quot.x; }
    int k() const noexcept { return sub.k; }
    int l() const noexcept { return quot.k; }
    FieldElem c() const noexcept { return sub.c; }
    FieldElem d() const noexcept { return quot.c; }

    friend bool operator==(const ExtBM&, const ExtBM&) = default;
};

/// Least degree allowed in lambda: max(0, (x + y - e)(p - 1)).
int lambda_min_degree(int x, int y, const Context& ctx);
/// Residue (l - k) mod (p - 1) that every term of lambda must have.
int lambda_residue(int k, int l, const Context& ctx);

/// Checks the ranges of x, y, k, l, that c, d are units and that lambda
/// satisfies the degree congruence and the minimum-degree bound. Throws
/// inadmissible_lambda naming the offending term.
void validate_extension(const ExtBM& p, const Context& ctx);

FullChar sub_character(const ExtBM& p, const Context& ctx);
FullChar quotient_character(const ExtBM& p, const Context& ctx);
bool chars_equal(const ExtBM& p, const Context& ctx);

/// A Breuil module written out in a basis: the Fil^1 generators, their
/// phi_1-images, and the descent character exponent of each basis vector.
struct BreuilModuleData {
    ChainRing ring;
    int rank;
    RSubmodule fil;
    std::vector<RVector> phi1_images;
    std::vector<int> descent_exponents;
};

BreuilModuleData module_data(const RankOneBM& m, const Context& ctx);
BreuilModuleData module_data(const ExtBM& p, const Context& ctx);

/// The action of the chosen generator g of Gal(K_1/K) on a module element:
/// a u^i e_j -> a zeta^{i + k_j} u^i e_j, zeta = omega(g).
RVector descent_apply(const BreuilModuleData& m, const RVector& element, const Context& ctx);

/// f maps Fil into Fil, commutes with phi_1 on the Fil generators and with
/// the descent action of a generator of Gal(K_1/K).
bool breuil_morphism_check(const RModuleMap& f, const BreuilModuleData& source, const BreuilModuleData& target,
                           const Context& ctx);
bool breuil_morphism_check(const RModuleMap& f, const ExtBM& source, const ExtBM& target, const Context& ctx);

/// A morphism whose kernel contains no free R-submodule; such a morphism
/// induces an isomorphism on generic fibres.
bool same_generic_fibre_witness(const RModuleMap& f, const BreuilModuleData& source, const BreuilModuleData& target,
                                const Context& ctx);
bool same_generic_fibre_witness(const RModuleMap& f, const ExtBM& source, const ExtBM& target, const Context& ctx);

struct ValidPair {
    int x;
    int y;
    int k;
    int l;

    friend bool operator==(const ValidPair&, const ValidPair&) = default;
};

/// Every (x, y) in [0, e]^2 whose induced descent exponents
/// (alpha - x, beta - y) mod (p - 1) equal (a1, a2) or (a2, a1).
/// Throws determinant_mismatch unless alpha + beta = a1 + a2 + e mod (p - 1).
std::vector<ValidPair> valid_pairs(const FullChar& chi1, const FullChar& chi2, const SerreWeight& a, const Context& ctx);

/// Valid pairs for the characters and descent exponents carried by `p`.
std::vector<ValidPair> valid_pairs_for(const ExtBM& p, const Context& ctx);

struct ExtremalPair {
    int X;
    int Y;

    friend bool operator==(const ExtremalPair&, const ExtremalPair&) = default;
};

/// X = max x, Y = min y over the pairs; checks Y = e - X.
ExtremalPair extremal_pair(const std::vector<ValidPair>& pairs, const Context& ctx);

/// Degrees of the monomials spanning the normal-form space of lambda at (x, y).
std::vector<int> extension_space_basis(int x, int y, int k, int l, bool chars_equal, const Context& ctx);

/// P(x, y, lambda) for the characters chi1, chi2: c = chi1(Frob)^{-1},
/// d = chi2(Frob)^{-1}, k = alpha - x, l = beta - y.
ExtBM make_extension(int x, int y, const TruncPoly& lambda, const FullChar& chi1, const FullChar& chi2,
                     const SerreWeight& a, const Context& ctx);

/// u^{p(e-x)+y} lambda, the extension parameter of the comparison model with
/// (x, y) = (e, 0).
TruncPoly big_payload(const ExtBM& p, const Context& ctx);

/// The two comparison morphisms P -> P'' <- P' for a given P.
struct ComparisonModels {
    ExtBM big;                  ///< P' with parameters (e, 0, big_payload)
    ExtBM middle;               ///< P'' with parameters (e, y, u^{p(e-x)} lambda)
    RModuleMap from_original;   ///< v -> u^{p(e-x)} v'', w -> w''
    RModuleMap from_big;        ///< v' -> v'', w' -> u^{py} w''
};

ComparisonModels transform_to_big_model(const ExtBM& p, const Context& ctx);

/// P(x', y', u^{p(x'-x)+(y-y')} lambda).
ExtBM shift_valid_pair(const ExtBM& p, int x_new, int y_new, const Context& ctx);

/// The isomorphism of extensions induced by the basis change
/// w' = w + (c/d) phi(q) v, together with its target.
struct BasisChange {
    ExtBM target;
    RModuleMap map;  ///< P -> target
};

/// q must have all terms of degree = l - k mod (p - 1).
BasisChange apply_basis_change(const ExtBM& p, const TruncPoly& q, const Context& ctx);

/// lambda - lambda' for the basis change with parameter q.
TruncPoly coboundary(const ExtBM& p, const TruncPoly& q, const Context& ctx);

bool is_normal_form(const ExtBM& p, const Context& ctx);

/// The unique normal form at the same (x, y) isomorphic to `p` as an
/// extension.
ExtBM reduce_to_normal_form(const ExtBM& p, const Context& ctx);

/// Shift to the extremal pair (X, Y) and reduce.
ExtBM to_extremal_normal_form(const ExtBM& p, const Context& ctx);

/// Size of the normal-form space at (X, Y).
int lflat_dimension(const FullChar& chi1, const FullChar& chi2, const SerreWeight& a, const Context& ctx);

/// lambda scaled so that its lowest nonzero coefficient is 1; classes related
/// through the comparison models agree up to such a scalar.
TruncPoly projective_representative(const TruncPoly& lambda);

}  // namespace crysext
