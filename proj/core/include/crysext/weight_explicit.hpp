#pragma once

#include "crysext/characters.hpp"

#include <vector>

namespace crysext {

/// A decomposition Hom(F_p, Fbar_p) = J u J^c (J is either everything or
/// empty) together with 0 <= delta <= e - 1.
struct JDelta {
    bool j_full;
    int delta;

    int j_size() const noexcept { return j_full ? 1 : 0; }

    friend bool operator==(const JDelta&, const JDelta&) = default;
};

/// The diagonal characters of a reducible rhobar = (chi1 *; 0 chi2).
struct ReducibleShape {
    FullChar chi1;
    FullChar chi2;
};

/// All (J, delta) for which the inertial restriction of rhobar has the
/// shape predicted for weight `a`. An empty list means there is none.
std::vector<JDelta> reducible_inertial_params(const ReducibleShape& shape, const SerreWeight& a, const Context& ctx);

/// Dimension |J| + delta of L_{chi1,chi2}, plus one when chibar1 = chibar2.
int lchi_dimension(const JDelta& jd, bool chars_equal, const Context& ctx);

/// dim H^1(G_K, chi) = e + dim H^0(chi) + dim H^0(chi^{-1} epsbar).
int h1_dimension(const FullChar& chi, const Context& ctx);

/// True when a1 - a2 = p - 1 and chi1 chi2^{-1} equals the cyclotomic character.
bool is_exceptional(const ReducibleShape& shape, const SerreWeight& a, const Context& ctx);

struct LcrysResult {
    int dimension;
    bool exceptional;
};

/// dim L_crys. In the exceptional case L_crys is all of H^1(G_K, epsbar);
/// otherwise it is the largest L_{chi1,chi2}. Throws inertially_incompatible
/// when no (J, delta) exists.
LcrysResult lcrys_dimension(const ReducibleShape& shape, const SerreWeight& a, const Context& ctx);

/// Membership of `a` in the explicit weight set of an irreducible rhobar whose
/// inertial restriction is omega_2^n + omega_2^{pn}, n = `inertial_exp`.
bool irreducible_in_wexplicit(const InertialChar2& inertial_exp, const SerreWeight& a, const Context& ctx);

}  // namespace crysext
