#pragma once

#include "crysext/breuil.hpp"
#include "crysext/characters.hpp"
#include "crysext/weight_explicit.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crysext {

struct SweepPoint {
    int p;
    int e;
    int f;

    friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

/// Which Frobenius scalars the unramified parts of chi1, chi2 range over.
enum class FrobeniusRange {
    generator_pair,  ///< {1, zeta}, zeta the least primitive root mod p
    all_units,       ///< every element of k_E^x
};

struct SweepSpec {
    std::vector<SweepPoint> points;
    FrobeniusRange frobenius = FrobeniusRange::generator_pair;
    /// Wall-clock allowance in milliseconds; 0 means unlimited.
    std::int64_t budget_ms = 0;
    /// Upper bound on the number of extensions enumerated for one (M, N).
    std::int64_t max_extensions = 1 << 16;
};

/// {(3,1,1), (3,2,1), (5,1,1), (3,1,2)}.
SweepSpec default_sweep();

/// Throws invalid_argument unless p in {3, 5}, 1 <= e <= 3, 1 <= f <= 2.
void validate_sweep(const SweepSpec& spec);

/// Deadline tracker; check() throws budget_exceeded once it has passed.
class Budget {
public:
    Budget() = default;
    explicit Budget(std::int64_t ms);

    void check() const;
    bool limited() const noexcept { return deadline_.has_value(); }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

/// Every P(x, y, lambda) with sub M and quotient N and lambda ranging over
/// the whole admissible space (congruence and minimum degree, any degree below
/// e'p). Throws budget_exceeded when the count exceeds `max_count` or the
/// deadline passes.
std::vector<ExtBM> enumerate_extensions(const RankOneBM& m, const RankOneBM& n, const Context& ctx,
                                        std::int64_t max_count = 1 << 16, const Budget& budget = Budget());

/// Isomorphisms looked for: all triangular maps v -> s v, w -> t w + h v
/// (module), or only those with s = t = 1 (extension: identity on sub and
/// quotient).
enum class IsoScope { module, extension };

/// Exhaustive search over s, t and every descent-compatible h.
std::optional<RModuleMap> isomorphism_search(const ExtBM& a, const ExtBM& b, const Context& ctx,
                                             IsoScope scope = IsoScope::module, const Budget& budget = Budget());

/// Same search space as isomorphism_search, decided by solving the linear
/// conditions on h for each (s, t). The returned map is re-verified in both
/// directions.
std::optional<RModuleMap> isomorphism_solve(const ExtBM& a, const ExtBM& b, const Context& ctx,
                                            IsoScope scope = IsoScope::module);

/// Outcome of classifying every extension of N by M.
struct UniquenessCase {
    SweepPoint point{};
    RankOneBM sub{};
    RankOneBM quot{};
    int window_size = 0;
    std::int64_t extensions = 0;
    std::int64_t classes = 0;
    std::int64_t expected_classes = 0;
    std::int64_t failures = 0;
    /// Descriptions of the first few failures.
    std::vector<std::string> counterexamples;
};

/// Checks that the normal forms at (x, y) are pairwise non-isomorphic, that
/// each enumerated extension is isomorphic to its reduced form (and to no
/// other), that to_extremal_normal_form is constant on each class, and that
/// the class count is |k_E|^(window size).
UniquenessCase verify_normal_form_uniqueness(const RankOneBM& m, const RankOneBM& n, const Context& ctx,
                                             std::int64_t max_extensions = 1 << 16, const Budget& budget = Budget());

struct UniquenessReport {
    std::vector<UniquenessCase> cases;
    std::int64_t counterexamples = 0;
};

/// Runs verify_normal_form_uniqueness on every distinct (M, N) arising from a
/// valid pair of some swept (chi1, chi2, a).
UniquenessReport verify_uniqueness_sweep(const SweepSpec& spec);

/// One swept (chi1, chi2, a).
struct SweepInstance {
    SweepPoint point{};
    SerreWeight weight{};
    int alpha = 0;
    int beta = 0;
    std::string frob1;
    std::string frob2;
};

enum class CrossCheckStatus { ok, fail, skipped_exceptional, skipped_no_valid_pairs, skipped_no_jdelta };

const char* to_string(CrossCheckStatus s) noexcept;

struct CrossCheckRow {
    SweepInstance instance;
    CrossCheckStatus status = CrossCheckStatus::ok;
    std::optional<int> lflat;
    std::optional<int> lcrys;
    std::optional<int> extremal_x;
    bool chars_equal = false;
    std::string detail;
};

struct CrossCheckReport {
    std::vector<CrossCheckRow> rows;
    std::int64_t checked = 0;
    std::int64_t failures = 0;
    std::int64_t skipped = 0;
};

/// Enumerates all Serre weights (a2 in [0, p-2], 0 <= a1 - a2 <= p-1),
/// reduced exponents alpha, beta with alpha + beta = a1 + a2 + e mod (p-1)
/// and Frobenius scalars in the chosen range, calling `fn(ctx, chi1, chi2, a)`.
template <class Fn>
void for_each_instance(const SweepPoint& pt, FrobeniusRange range, Fn&& fn);

/// For each non-exceptional instance with valid pairs and some (J, delta):
/// lcrys = lflat, window size at (X, Y) = X (+1 for equal characters), and
/// the largest L_{chi1,chi2} has the same dimension.
CrossCheckReport cross_check_dimensions(const SweepSpec& spec);

/// The Frobenius scalars used for the given range.
std::vector<FieldElem> frobenius_values(const Context& ctx, FrobeniusRange range);

template <class Fn>
void for_each_instance(const SweepPoint& pt, FrobeniusRange range, Fn&& fn) {
    const Context ctx(pt.p, pt.e, pt.f);
    const int pm1 = pt.p - 1;
    const auto frobs = frobenius_values(ctx, range);
    for (int a2 = 0; a2 <= pm1 - 1; ++a2) {
        for (int d = 0; d <= pm1; ++d) {
            const SerreWeight a{a2 + d, a2};
            for (int alpha = 0; alpha < pm1; ++alpha) {
                const int beta = ctx.reduce(a.a1 + a.a2 + pt.e - alpha);
                for (const auto& f1 : frobs)
                    for (const auto& f2 : frobs) fn(ctx, make_char(ctx, alpha, f1), make_char(ctx, beta, f2), a);
            }
        }
    }
}

}  // namespace crysext
