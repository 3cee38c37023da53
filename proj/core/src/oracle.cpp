#include "crysext/oracle.hpp"

#include "crysext/error.hpp"
#include "crysext/field_linalg.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <set>
#include <thread>
#include <tuple>

namespace crysext {

namespace {

constexpr std::size_t kMaxRecorded = 16;

void record(UniquenessCase& c, std::string msg) {
    ++c.failures;
    if (c.counterexamples.size() < kMaxRecorded) c.counterexamples.push_back(std::move(msg));
}

// All polynomials with support in `degrees`, in lexicographic order of the
// coefficient codes.
std::vector<TruncPoly> all_supported(const ChainRing& ring, const std::vector<int>& degrees, std::int64_t max_count,
                                     const Budget& budget) {
    const std::uint32_t q = ring.field().order();
    std::int64_t total = 1;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        total *= q;
        if (total > max_count)
            throw Error(ErrorKind::budget_exceeded, "more than " + std::to_string(max_count) + " polynomials to enumerate");
    }
    std::vector<TruncPoly> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<GaloisField::Code> digits(degrees.size(), 0);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        if ((idx & 1023) == 0) budget.check();
        TruncPoly t(ring);
        for (std::size_t i = 0; i < degrees.size(); ++i)
            if (digits[i] != 0) t.set_coeff(degrees[i], ring.field().from_code(digits[i]));
        out.push_back(std::move(t));
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
    }
    return out;
}

std::vector<int> residue_degrees(int residue, int from, const Context& ctx) {
    std::vector<int> out;
    for (int d = from; d < ctx.ring_length(); ++d)
        if (ctx.reduce(d) == residue) out.push_back(d);
    return out;
}

std::vector<FieldElem> scalars(const Context& ctx, IsoScope scope) {
    if (scope == IsoScope::extension) return {ctx.field().one()};
    return frobenius_values(ctx, FrobeniusRange::all_units);
}

RModuleMap triangular(const ChainRing& ring, FieldElem s, FieldElem t, const TruncPoly& h) {
    RModuleMap f(ring, 2, 2);
    f.at(0, 0) = TruncPoly::constant(ring, s);
    f.at(0, 1) = h;
    f.at(1, 1) = TruncPoly::constant(ring, t);
    return f;
}

RModuleMap triangular_inverse(const ChainRing& ring, FieldElem s, FieldElem t, const TruncPoly& h) {
    return triangular(ring, s.inverse(), t.inverse(), -((s * t).inverse() * h));
}

// f(G_i) lies in Fil of the target and phi_1 commutes on it.
bool generator_compatible(const RModuleMap& f, const BreuilModuleData& src, const BreuilModuleData& tgt, std::size_t i) {
    const RVector image = f.apply(src.fil.generators()[i]);
    const auto coeffs = tgt.fil.express(image);
    if (!coeffs) return false;
    RVector lhs = zero_vector(tgt.ring, tgt.rank);
    for (std::size_t j = 0; j < coeffs->size(); ++j) lhs = add(lhs, scale((*coeffs)[j].phi_twist(), tgt.phi1_images[j]));
    return lhs == f.apply(src.phi1_images[i]);
}

using CaseKey = std::tuple<int, int, int, int, int, int, int, GaloisField::Code, GaloisField::Code>;

}  // namespace

SweepSpec default_sweep() {
    SweepSpec s;
    s.points = {{3, 1, 1}, {3, 2, 1}, {5, 1, 1}, {3, 1, 2}};
    return s;
}

void validate_sweep(const SweepSpec& spec) {
    for (const auto& pt : spec.points) {
        if (pt.p != 3 && pt.p != 5) throw Error(ErrorKind::invalid_argument, "sweep p must be 3 or 5");
        if (pt.e < 1 || pt.e > 3) throw Error(ErrorKind::invalid_argument, "sweep e must lie in [1, 3]");
        if (pt.f < 1 || pt.f > 2) throw Error(ErrorKind::invalid_argument, "sweep f must lie in [1, 2]");
    }
    if (spec.budget_ms < 0) throw Error(ErrorKind::invalid_argument, "budget must be non-negative");
    if (spec.max_extensions < 1) throw Error(ErrorKind::invalid_argument, "max_extensions must be positive");
}

Budget::Budget(std::int64_t ms) {
    if (ms > 0) deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
}

void Budget::check() const {
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
        throw Error(ErrorKind::budget_exceeded, "time budget exceeded");
}

std::vector<FieldElem> frobenius_values(const Context& ctx, FrobeniusRange range) {
    const GaloisField& field = ctx.field();
    if (range == FrobeniusRange::generator_pair) return {field.one(), field.from_int(field.prime_field_generator())};
    std::vector<FieldElem> out;
    for (GaloisField::Code c = 1; c < field.order(); ++c) out.push_back(field.from_code(c));
    return out;
}

std::vector<ExtBM> enumerate_extensions(const RankOneBM& m, const RankOneBM& n, const Context& ctx,
                                        std::int64_t max_count, const Budget& budget) {
    ExtBM base{m, n, TruncPoly(ctx.ring())};
    validate_extension(base, ctx);
    const auto degrees = residue_degrees(lambda_residue(m.k, n.k, ctx), lambda_min_degree(m.x, n.x, ctx), ctx);
    std::vector<ExtBM> out;
    for (auto& lambda : all_supported(ctx.ring(), degrees, max_count, budget)) {
        base.lambda = std::move(lambda);
        out.push_back(base);
    }
    return out;
}

std::optional<RModuleMap> isomorphism_search(const ExtBM& a, const ExtBM& b, const Context& ctx, IsoScope scope,
                                             const Budget& budget) {
    if (a.k() != b.k() || a.l() != b.l()) return std::nullopt;
    const ChainRing ring = ctx.ring();
    const BreuilModuleData da = module_data(a, ctx);
    const BreuilModuleData db = module_data(b, ctx);
    const auto hs = all_supported(ring, residue_degrees(lambda_residue(a.k(), a.l(), ctx), 0, ctx),
                                  std::int64_t{1} << 40, budget);
    std::int64_t tick = 0;
    for (const auto& s : scalars(ctx, scope)) {
        for (const auto& t : scalars(ctx, scope)) {
            for (const auto& h : hs) {
                if ((++tick & 255) == 0) budget.check();
                const RModuleMap f = triangular(ring, s, t, h);
                if (breuil_morphism_check(f, da, db, ctx) &&
                    breuil_morphism_check(triangular_inverse(ring, s, t, h), db, da, ctx))
                    return f;
            }
        }
    }
    return std::nullopt;
}

std::optional<RModuleMap> isomorphism_solve(const ExtBM& a, const ExtBM& b, const Context& ctx, IsoScope scope) {
    if (a.k() != b.k() || a.l() != b.l()) return std::nullopt;
    const GaloisField& field = ctx.field();
    const ChainRing ring = ctx.ring();
    const int n = ctx.ring_length();
    const int pm1 = ctx.p() - 1;
    const BreuilModuleData da = module_data(a, ctx);
    const BreuilModuleData db = module_data(b, ctx);

    // unknowns: h, and the coordinates r1, r2 of f(G2) in the target Fil
    // generators; only the descent-isotypic parts can contribute
    const int r = lambda_residue(a.k(), a.l(), ctx);
    const auto hdeg = residue_degrees(r, 0, ctx);
    const auto r1deg = residue_degrees(ctx.reduce(a.l() - b.k()), 0, ctx);
    const auto r2deg = residue_degrees(ctx.reduce(a.l() - b.l()), 0, ctx);
    const int nh = static_cast<int>(hdeg.size());
    const int n1 = static_cast<int>(r1deg.size());
    const int n2 = static_cast<int>(r2deg.size());

    const int xm = b.x() * pm1;
    const int ym_src = a.y() * pm1;
    const int ym_tgt = b.y() * pm1;

    for (const auto& s : scalars(ctx, scope)) {
        for (const auto& t : scalars(ctx, scope)) {
            if (!generator_compatible(triangular(ring, s, t, TruncPoly(ring)), da, db, 0)) continue;

            // rows: v-coordinate, w-coordinate, phi_1 v-part, phi_1 w-part
            FieldMatrix mat(field, 4 * n, nh + n1 + n2);
            auto put = [&](int block, const TruncPoly& poly, int col) {
                for (const auto& [deg, c] : poly.terms()) mat.at(block * n + deg, col) = field.add(mat.at(block * n + deg, col), c.code());
            };
            for (int j = 0; j < nh; ++j) {
                const int i = hdeg[static_cast<std::size_t>(j)];
                put(0, -TruncPoly::monomial(ring, i).shifted_up(ym_src), j);
                put(2, TruncPoly::monomial(ring, i, -a.d()), j);
            }
            for (int j = 0; j < n1; ++j) {
                const TruncPoly mono = TruncPoly::monomial(ring, r1deg[static_cast<std::size_t>(j)]);
                put(0, mono.shifted_up(xm), nh + j);
                put(2, b.c() * mono.phi_twist(), nh + j);
            }
            for (int j = 0; j < n2; ++j) {
                const TruncPoly mono = TruncPoly::monomial(ring, r2deg[static_cast<std::size_t>(j)]);
                put(0, mono * b.lambda, nh + n1 + j);
                put(1, mono.shifted_up(ym_tgt), nh + n1 + j);
                put(3, b.d() * mono.phi_twist(), nh + n1 + j);
            }
            std::vector<GaloisField::Code> rhs(static_cast<std::size_t>(4 * n), 0);
            for (const auto& [deg, c] : (s * a.lambda).terms()) rhs[static_cast<std::size_t>(deg)] = c.code();
            rhs[static_cast<std::size_t>(n + ym_src)] = t.code();
            rhs[static_cast<std::size_t>(3 * n)] = (a.d() * t).code();

            const auto sol = solve(mat, rhs);
            if (!sol) continue;
            TruncPoly h(ring);
            for (int j = 0; j < nh; ++j)
                h.set_coeff(hdeg[static_cast<std::size_t>(j)], field.from_code((*sol)[static_cast<std::size_t>(j)]));
            RModuleMap f = triangular(ring, s, t, h);
            if (!breuil_morphism_check(f, da, db, ctx) ||
                !breuil_morphism_check(triangular_inverse(ring, s, t, h), db, da, ctx))
                throw Error(ErrorKind::internal, "linear isomorphism conditions admit a non-isomorphism");
            return f;
        }
    }
    return std::nullopt;
}

UniquenessCase verify_normal_form_uniqueness(const RankOneBM& m, const RankOneBM& n, const Context& ctx,
                                             std::int64_t max_extensions, const Budget& budget) {
    UniquenessCase out;
    out.point = {ctx.p(), ctx.e(), ctx.f()};
    out.sub = m;
    out.quot = n;
    const ChainRing ring = ctx.ring();
    const ExtBM base{m, n, TruncPoly(ring)};
    validate_extension(base, ctx);
    const auto window = extension_space_basis(m.x, n.x, m.k, n.k, chars_equal(base, ctx), ctx);
    out.window_size = static_cast<int>(window.size());

    std::vector<ExtBM> forms;
    for (auto& lambda : all_supported(ring, window, max_extensions, budget)) {
        ExtBM nf = base;
        nf.lambda = std::move(lambda);
        forms.push_back(std::move(nf));
    }
    out.expected_classes = static_cast<std::int64_t>(forms.size());

    for (std::size_t i = 0; i < forms.size(); ++i) {
        budget.check();
        for (std::size_t j = i + 1; j < forms.size(); ++j)
            if (isomorphism_solve(forms[i], forms[j], ctx, IsoScope::extension))
                record(out, "normal forms " + forms[i].lambda.to_string() + " and " + forms[j].lambda.to_string() +
                                " are isomorphic");
    }

    std::map<TruncPoly, ExtBM> extremal;
    for (const auto& nf : forms) extremal.emplace(nf.lambda, to_extremal_normal_form(nf, ctx));

    std::set<TruncPoly> hit;
    const auto all = enumerate_extensions(m, n, ctx, max_extensions, budget);
    out.extensions = static_cast<std::int64_t>(all.size());
    std::int64_t tick = 0;
    for (const auto& ext : all) {
        if ((++tick & 63) == 0) budget.check();
        const ExtBM predicted = reduce_to_normal_form(ext, ctx);
        if (!is_normal_form(predicted, ctx)) {
            record(out, "reduction of " + ext.lambda.to_string() + " is not in normal form");
            continue;
        }
        if (!isomorphism_solve(ext, predicted, ctx, IsoScope::extension)) {
            std::string found = "none";
            for (const auto& nf : forms)
                if (isomorphism_solve(ext, nf, ctx, IsoScope::extension)) {
                    found = nf.lambda.to_string();
                    break;
                }
            record(out, "lambda = " + ext.lambda.to_string() + " reduces to " + predicted.lambda.to_string() +
                            " but is isomorphic to " + found);
            continue;
        }
        hit.insert(predicted.lambda);
        if (!(to_extremal_normal_form(ext, ctx) == extremal.at(predicted.lambda)))
            record(out, "extremal normal form of " + ext.lambda.to_string() + " differs from that of its class");
    }
    out.classes = static_cast<std::int64_t>(hit.size());
    if (out.classes != out.expected_classes)
        record(out, "found " + std::to_string(out.classes) + " classes, expected " + std::to_string(out.expected_classes));
    return out;
}

UniquenessReport verify_uniqueness_sweep(const SweepSpec& spec) {
    validate_sweep(spec);
    const Budget budget(spec.budget_ms);

    struct Job {
        SweepPoint point;
        RankOneBM sub;
        RankOneBM quot;
    };
    std::vector<Job> jobs;
    std::set<CaseKey> seen;
    for (const auto& pt : spec.points) {
        for_each_instance(pt, spec.frobenius, [&](const Context& ctx, const FullChar& chi1, const FullChar& chi2,
                                                  const SerreWeight& a) {
            for (const auto& vp : valid_pairs(chi1, chi2, a, ctx)) {
                const RankOneBM m{vp.x, chi1.frob.inverse(), vp.k};
                const RankOneBM n{vp.y, chi2.frob.inverse(), vp.l};
                const CaseKey key{pt.p, pt.e, pt.f, vp.x, vp.y, vp.k, vp.l, m.c.code(), n.c.code()};
                if (seen.insert(key).second) jobs.push_back({pt, m, n});
            }
        });
    }

    UniquenessReport report;
    report.cases.resize(jobs.size());
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> futures;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < std::min(workers, jobs.size()); ++w) {
        futures.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < jobs.size(); i = next++) {
                const Job& job = jobs[i];
                const Context ctx(job.point.p, job.point.e, job.point.f);
                report.cases[i] = verify_normal_form_uniqueness(job.sub, job.quot, ctx, spec.max_extensions, budget);
            }
        }));
    }
    for (auto& fut : futures) fut.get();
    for (const auto& c : report.cases) report.counterexamples += c.failures;
    return report;
}

const char* to_string(CrossCheckStatus s) noexcept {
    switch (s) {
        case CrossCheckStatus::ok: return "ok";
        case CrossCheckStatus::fail: return "fail";
        case CrossCheckStatus::skipped_exceptional: return "skipped-exceptional";
        case CrossCheckStatus::skipped_no_valid_pairs: return "skipped-no-valid-pairs";
        case CrossCheckStatus::skipped_no_jdelta: return "skipped-no-jdelta";
    }
    return "unknown";
}

CrossCheckReport cross_check_dimensions(const SweepSpec& spec) {
    validate_sweep(spec);
    const Budget budget(spec.budget_ms);
    CrossCheckReport report;
    for (const auto& pt : spec.points) {
        for_each_instance(pt, spec.frobenius, [&](const Context& ctx, const FullChar& chi1, const FullChar& chi2,
                                                  const SerreWeight& a) {
            budget.check();
            CrossCheckRow row;
            row.instance = {pt, a, chi1.exponent(), chi2.exponent(), chi1.frob.to_string(), chi2.frob.to_string()};
            row.chars_equal = chi1 == chi2;
            const auto pairs = valid_pairs(chi1, chi2, a, ctx);
            const ReducibleShape shape{chi1, chi2};
            if (pairs.empty()) {
                row.status = CrossCheckStatus::skipped_no_valid_pairs;
            } else if (is_exceptional(shape, a, ctx)) {
                row.status = CrossCheckStatus::skipped_exceptional;
            } else if (reducible_inertial_params(shape, a, ctx).empty()) {
                row.status = CrossCheckStatus::skipped_no_jdelta;
            }
            if (!pairs.empty()) {
                row.extremal_x = extremal_pair(pairs, ctx).X;
                row.lflat = lflat_dimension(chi1, chi2, a, ctx);
            }
            if (row.status == CrossCheckStatus::ok) {
                row.lcrys = lcrys_dimension(shape, a, ctx).dimension;
                const int expected = *row.extremal_x + (row.chars_equal ? 1 : 0);
                if (*row.lflat != *row.lcrys) {
                    row.status = CrossCheckStatus::fail;
                    row.detail = "lflat " + std::to_string(*row.lflat) + " != lcrys " + std::to_string(*row.lcrys);
                } else if (*row.lflat != expected) {
                    row.status = CrossCheckStatus::fail;
                    row.detail = "window size " + std::to_string(*row.lflat) + " != X" +
                                 (row.chars_equal ? " + 1 = " : " = ") + std::to_string(expected);
                }
            }
            if (row.status == CrossCheckStatus::ok || row.status == CrossCheckStatus::fail) ++report.checked;
            else ++report.skipped;
            if (row.status == CrossCheckStatus::fail) ++report.failures;
            report.rows.push_back(std::move(row));
        });
    }
    return report;
}

}  // namespace crysext
