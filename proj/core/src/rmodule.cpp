#include "crysext/rmodule.hpp"

#include "crysext/error.hpp"

#include <algorithm>
#include <utility>

namespace crysext {

RVector zero_vector(const ChainRing& ring, int n) { return RVector(static_cast<std::size_t>(n), TruncPoly(ring)); }

RVector add(const RVector& a, const RVector& b) {
    RVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

RVector sub(const RVector& a, const RVector& b) {
    RVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

RVector scale(const TruncPoly& r, const RVector& v) {
    RVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(r * x);
    return out;
}

bool is_zero(const RVector& v) {
    return std::all_of(v.begin(), v.end(), [](const TruncPoly& x) { return x.is_zero(); });
}

RModuleMap::RModuleMap(const ChainRing& ring, int target_rank, int source_rank)
    : ring_(ring), target_rank_(target_rank), source_rank_(source_rank),
      entries_(static_cast<std::size_t>(target_rank) * source_rank, TruncPoly(ring)) {}

RModuleMap RModuleMap::identity(const ChainRing& ring, int n) {
    RModuleMap m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = TruncPoly::constant(ring, ring.field().one());
    return m;
}

RModuleMap RModuleMap::zero(const ChainRing& ring, int target_rank, int source_rank) {
    return RModuleMap(ring, target_rank, source_rank);
}

RModuleMap RModuleMap::from_columns(const ChainRing& ring, int target_rank, const std::vector<RVector>& columns) {
    RModuleMap m(ring, target_rank, static_cast<int>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (static_cast<int>(columns[j].size()) != target_rank)
            throw Error(ErrorKind::invalid_argument, "map column has wrong rank");
        for (int i = 0; i < target_rank; ++i) m.at(i, static_cast<int>(j)) = columns[j][static_cast<std::size_t>(i)];
    }
    return m;
}

RVector RModuleMap::column(int col) const {
    RVector c;
    for (int i = 0; i < target_rank_; ++i) c.push_back(at(i, col));
    return c;
}

RVector RModuleMap::apply(const RVector& v) const {
    if (static_cast<int>(v.size()) != source_rank_) throw Error(ErrorKind::invalid_argument, "apply: rank mismatch");
    RVector out = zero_vector(ring_, target_rank_);
    for (int j = 0; j < source_rank_; ++j) {
        if (v[static_cast<std::size_t>(j)].is_zero()) continue;
        for (int i = 0; i < target_rank_; ++i) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    }
    return out;
}

RModuleMap RModuleMap::compose(const RModuleMap& other) const {
    if (other.target_rank_ != source_rank_) throw Error(ErrorKind::invalid_argument, "compose: rank mismatch");
    std::vector<RVector> cols;
    for (int j = 0; j < other.source_rank_; ++j) cols.push_back(apply(other.column(j)));
    return from_columns(ring_, target_rank_, cols);
}

RSubmodule::RSubmodule(const ChainRing& ring, int rank, std::vector<RVector> generators)
    : ring_(ring), rank_(rank), generators_(std::move(generators)) {
    for (const auto& g : generators_)
        if (static_cast<int>(g.size()) != rank) throw Error(ErrorKind::invalid_argument, "generator has wrong rank");
}

// Column echelon over the chain ring: at each row pick the working column of
// least valuation there, normalise its entry to u^v, clear the row from the
// other columns, and feed u^{N-v} times the pivot back in (it lies in the
// module and vanishes on this row, so later rows must still see it).
const std::vector<EchelonPivot>& RSubmodule::echelon() const {
    if (echelon_) return *echelon_;
    const int n_gens = static_cast<int>(generators_.size());
    const int length = ring_.length();
    struct Work {
        RVector column;
        RVector coefficients;
    };
    std::vector<Work> work;
    for (int j = 0; j < n_gens; ++j) {
        RVector coeff = zero_vector(ring_, n_gens);
        coeff[static_cast<std::size_t>(j)] = TruncPoly::constant(ring_, ring_.field().one());
        if (!is_zero(generators_[static_cast<std::size_t>(j)])) work.push_back({generators_[static_cast<std::size_t>(j)], std::move(coeff)});
    }

    std::vector<EchelonPivot> pivots;
    for (int row = 0; row < rank_ && !work.empty(); ++row) {
        auto best = work.end();
        int best_val = length;
        for (auto it = work.begin(); it != work.end(); ++it) {
            const int v = it->column[static_cast<std::size_t>(row)].valuation();
            if (v < best_val) {
                best_val = v;
                best = it;
            }
        }
        if (best == work.end()) continue;
        Work pivot = std::move(*best);
        work.erase(best);

        // normalise the pivot entry to exactly u^v
        const TruncPoly unit = pivot.column[static_cast<std::size_t>(row)].shifted_down(best_val);
        const TruncPoly unit_inv = unit.inverse();
        pivot.column = scale(unit_inv, pivot.column);
        pivot.coefficients = scale(unit_inv, pivot.coefficients);

        std::vector<Work> next;
        for (auto& w : work) {
            const TruncPoly& entry = w.column[static_cast<std::size_t>(row)];
            if (!entry.is_zero()) {
                const TruncPoly q = entry.shifted_down(best_val);
                w.column = sub(w.column, scale(q, pivot.column));
                w.coefficients = sub(w.coefficients, scale(q, pivot.coefficients));
            }
            if (!is_zero(w.column)) next.push_back(std::move(w));
        }
        if (best_val > 0) {
            const TruncPoly ann = TruncPoly::monomial(ring_, length - best_val);
            Work extra{scale(ann, pivot.column), scale(ann, pivot.coefficients)};
            if (!is_zero(extra.column)) next.push_back(std::move(extra));
        }
        work = std::move(next);
        pivots.push_back({row, best_val, std::move(pivot.column), std::move(pivot.coefficients)});
    }
    echelon_ = std::move(pivots);
    return *echelon_;
}

std::optional<RVector> RSubmodule::express(const RVector& v) const {
    if (static_cast<int>(v.size()) != rank_) throw Error(ErrorKind::invalid_argument, "express: rank mismatch");
    const auto& pivots = echelon();
    RVector rest = v;
    RVector coeffs = zero_vector(ring_, static_cast<int>(generators_.size()));
    std::size_t next_pivot = 0;
    for (int row = 0; row < rank_; ++row) {
        const TruncPoly& entry = rest[static_cast<std::size_t>(row)];
        const EchelonPivot* pivot = nullptr;
        if (next_pivot < pivots.size() && pivots[next_pivot].row == row) pivot = &pivots[next_pivot++];
        if (entry.is_zero()) continue;
        if (pivot == nullptr || entry.valuation() < pivot->valuation) return std::nullopt;
        const TruncPoly q = entry.shifted_down(pivot->valuation);
        rest = sub(rest, scale(q, pivot->column));
        coeffs = add(coeffs, scale(q, pivot->coefficients));
    }
    if (!is_zero(rest)) return std::nullopt;
    return coeffs;
}

// Kernel via the same elimination applied to the columns of the map, with
// coordinates tracked in the source basis: every working column that is
// reduced to zero contributes its coordinate vector.
RSubmodule kernel(const RModuleMap& map) {
    const ChainRing& ring = map.ring();
    const int n = map.source_rank();
    const int m = map.target_rank();
    const int length = ring.length();
    struct Work {
        RVector image;
        RVector coords;
    };
    std::vector<Work> work;
    std::vector<RVector> kernel_gens;
    for (int j = 0; j < n; ++j) {
        RVector coords = zero_vector(ring, n);
        coords[static_cast<std::size_t>(j)] = TruncPoly::constant(ring, ring.field().one());
        RVector image = map.column(j);
        if (is_zero(image))
            kernel_gens.push_back(std::move(coords));
        else
            work.push_back({std::move(image), std::move(coords)});
    }
    for (int row = 0; row < m && !work.empty(); ++row) {
        auto best = work.end();
        int best_val = length;
        for (auto it = work.begin(); it != work.end(); ++it) {
            const int v = it->image[static_cast<std::size_t>(row)].valuation();
            if (v < best_val) {
                best_val = v;
                best = it;
            }
        }
        if (best == work.end()) continue;
        Work pivot = std::move(*best);
        work.erase(best);
        const TruncPoly unit_inv = pivot.image[static_cast<std::size_t>(row)].shifted_down(best_val).inverse();
        pivot.image = scale(unit_inv, pivot.image);
        pivot.coords = scale(unit_inv, pivot.coords);

        std::vector<Work> next;
        auto keep = [&](Work&& w) {
            if (is_zero(w.image)) {
                if (!is_zero(w.coords)) kernel_gens.push_back(std::move(w.coords));
            } else {
                next.push_back(std::move(w));
            }
        };
        for (auto& w : work) {
            const TruncPoly& entry = w.image[static_cast<std::size_t>(row)];
            if (!entry.is_zero()) {
                const TruncPoly q = entry.shifted_down(best_val);
                w.image = sub(w.image, scale(q, pivot.image));
                w.coords = sub(w.coords, scale(q, pivot.coords));
            }
            keep(std::move(w));
        }
        if (best_val > 0) {
            const TruncPoly ann = TruncPoly::monomial(ring, length - best_val);
            keep(Work{scale(ann, pivot.image), scale(ann, pivot.coords)});
        }
        work = std::move(next);
    }
    return RSubmodule(ring, n, std::move(kernel_gens));
}

bool contains_free_element(const RSubmodule& s) {
    for (const auto& g : s.generators())
        for (const auto& x : g)
            if (x.is_unit()) return true;
    return false;
}

RVector semilinear_phi1_apply(const RSubmodule& fil, const std::vector<RVector>& phi1_images, const RVector& element) {
    if (phi1_images.size() != fil.generators().size())
        throw Error(ErrorKind::invalid_argument, "phi_1 images do not match the Fil generators");
    auto coeffs = fil.express(element);
    if (!coeffs) throw Error(ErrorKind::not_in_fil, "element is not in Fil^1");
    RVector out = zero_vector(fil.ring(), fil.rank());
    for (std::size_t i = 0; i < phi1_images.size(); ++i) {
        const TruncPoly twisted = (*coeffs)[i].phi_twist();
        if (twisted.is_zero()) continue;
        out = add(out, scale(twisted, phi1_images[i]));
    }
    return out;
}

RVector semilinear_phi1_apply(const std::vector<RVector>& fil_generators, const std::vector<RVector>& phi1_images,
                              const RVector& element) {
    const ChainRing& ring = element.front().ring();
    return semilinear_phi1_apply(RSubmodule(ring, static_cast<int>(element.size()), fil_generators), phi1_images, element);
}

}  // namespace crysext
