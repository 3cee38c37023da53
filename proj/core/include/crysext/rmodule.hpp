#pragma once

#include "crysext/trunc_poly.hpp"

#include <optional>
#include <vector>

namespace crysext {

/// A vector in R^n, R = k_E[u]/u^N.
using RVector = std::vector<TruncPoly>;

RVector zero_vector(const ChainRing& ring, int n);
RVector add(const RVector& a, const RVector& b);
RVector sub(const RVector& a, const RVector& b);
RVector scale(const TruncPoly& r, const RVector& v);
bool is_zero(const RVector& v);

/// An R-linear map R^n -> R^m given by an m x n matrix; column j is the image
/// of the j-th basis vector.
class RModuleMap {
public:
    RModuleMap(const ChainRing& ring, int target_rank, int source_rank);

    static RModuleMap identity(const ChainRing& ring, int n);
    static RModuleMap zero(const ChainRing& ring, int target_rank, int source_rank);
    /// Builds from the images of the source basis vectors.
    static RModuleMap from_columns(const ChainRing& ring, int target_rank, const std::vector<RVector>& columns);

    const ChainRing& ring() const noexcept { return ring_; }
    int source_rank() const noexcept { return source_rank_; }
    int target_rank() const noexcept { return target_rank_; }

    const TruncPoly& at(int row, int col) const { return entries_[static_cast<std::size_t>(row) * source_rank_ + col]; }
    TruncPoly& at(int row, int col) { return entries_[static_cast<std::size_t>(row) * source_rank_ + col]; }

    RVector column(int col) const;
    RVector apply(const RVector& v) const;
    /// (*this) o other.
    RModuleMap compose(const RModuleMap& other) const;

    friend bool operator==(const RModuleMap&, const RModuleMap&) = default;

private:
    ChainRing ring_;
    int target_rank_;
    int source_rank_;
    std::vector<TruncPoly> entries_;
};

/// Echelon presentation of a submodule: pivot j has a column of the form
/// (0, ..., 0, u^{valuation}, *, ..., *) with the u^{valuation} at `row`,
/// rows strictly increasing. `coefficients` expresses the column in terms of
/// the original generators.
struct EchelonPivot {
    int row;
    int valuation;
    RVector column;
    RVector coefficients;
};

/// A submodule of R^n given by a finite generating set.
class RSubmodule {
public:
    RSubmodule(const ChainRing& ring, int rank, std::vector<RVector> generators);

    const ChainRing& ring() const noexcept { return ring_; }
    int rank() const noexcept { return rank_; }
    const std::vector<RVector>& generators() const noexcept { return generators_; }

    /// Valuation-pivot echelon form (computed once, then cached).
    const std::vector<EchelonPivot>& echelon() const;

    bool contains(const RVector& v) const { return express(v).has_value(); }
    /// Coefficients r with sum r_i g_i = v, when v lies in the submodule.
    std::optional<RVector> express(const RVector& v) const;

private:
    ChainRing ring_;
    int rank_;
    std::vector<RVector> generators_;
    mutable std::optional<std::vector<EchelonPivot>> echelon_;
};

/// Generators of {v : map(v) = 0}.
RSubmodule kernel(const RModuleMap& map);

/// True iff the submodule contains a vector with a unit coordinate, i.e. a
/// vector generating a free rank-one submodule.
bool contains_free_element(const RSubmodule& s);

/// phi_1 on an element of Fil, extended semilinearly from its values on
/// generators: sum r_i g_i -> sum phi(r_i) phi_1(g_i). Throws not_in_fil when
/// `element` is outside the span of `fil_generators`.
RVector semilinear_phi1_apply(const std::vector<RVector>& fil_generators, const std::vector<RVector>& phi1_images,
                              const RVector& element);
RVector semilinear_phi1_apply(const RSubmodule& fil, const std::vector<RVector>& phi1_images, const RVector& element);

}  // namespace crysext
