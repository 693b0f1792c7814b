#include "boundent/seesaw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "boundent/errors.hpp"

namespace boundent {

double Rng::uniform01() {
    // Top 53 bits of the engine output, mapped to [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform01();
    } while (u1 <= 0.0);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * uniform01();
    cached_ = r * std::sin(t);
    has_cached_ = true;
    return r * std::cos(t);
}

cplx Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

std::uint64_t derive_stream(RngSeed seed, std::uint64_t index) {
    // splitmix64 finalizer over the index-th point of the golden-ratio walk.
    std::uint64_t z = seed.value + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

ComplexVector sample_local(std::size_t dim, Rng& stream) {
    ComplexVector v(dim);
    double nrm = 0.0;
    do {
        for (std::size_t i = 0; i < dim; ++i)
            v[i] = stream.complex_gaussian();
        nrm = norm(v);
    } while (nrm < 1e-12); // probability ~0; guards the normalization
    return normalized(v);
}

} // namespace

ProductState sample_product_state(std::size_t dim_a, std::size_t dim_b, Rng& stream) {
    if (dim_a < 2 || dim_b < 2)
        throw ContractViolation("sample_product_state requires local dims >= 2");
    ComplexVector a = sample_local(dim_a, stream);
    ComplexVector b = sample_local(dim_b, stream);
    return ProductState(std::move(a), std::move(b));
}

double product_overlap(const HermitianOperator& op, const ProductState& state) {
    const ComplexVector psi = state.joint();
    if (psi.dim() != op.dim())
        throw ContractViolation("product_overlap: state dimension mismatch");
    const ComplexVector mpsi = op.matrix() * psi;
    return inner(psi, mpsi).real();
}

namespace {

// (1_A (x) <f|) op (1_A (x) |f>): the A-side matrix left after pinning
// party B. Mirror of contract_party_A; kept private to this translation
// unit because nothing outside the see-saw iteration needs it.
ComplexMatrix contract_party_B(const HermitianOperator& op, const ComplexVector& f) {
    const std::size_t da = op.space().party_dim(Party::A);
    const std::size_t db = op.space().party_dim(Party::B);
    const ComplexMatrix& m = op.matrix();
    ComplexMatrix out(da, da);
    for (std::size_t j = 0; j < db; ++j) {
        const cplx fj = std::conj(f[j]);
        if (fj == cplx{0.0, 0.0})
            continue;
        for (std::size_t jp = 0; jp < db; ++jp) {
            const cplx w = fj * f[jp];
            if (w == cplx{0.0, 0.0})
                continue;
            for (std::size_t i = 0; i < da; ++i)
                for (std::size_t ip = 0; ip < da; ++ip)
                    out(i, ip) += w * m(i * db + j, ip * db + jp);
        }
    }
    return out;
}

struct TrajectoryResult {
    ProductState state;
    double value;
    std::size_t iterations;
    bool converged;
    bool degenerate;
    bool monotone_ok;
    std::vector<double> trace;
};

struct LeadingVector {
    ComplexVector vec;
    double value;
    bool degenerate;
};

// Top eigenpair of a small Hermitian contraction. Degeneracy of the leading
// eigenvalue is flagged; the eigenvector choice inside a degenerate cluster
// is whatever Jacobi produced, which is fine since any choice is feasible.
LeadingVector leading_eigenvector(const ComplexMatrix& m) {
    EigenDecomposition eig = hermitian_eig(m);
    const double top = eig.eigenvalues.front();
    bool degenerate = false;
    if (eig.eigenvalues.size() > 1) {
        const double gap = top - eig.eigenvalues[1];
        degenerate = gap <= 1e-12 * std::max(1.0, std::abs(top));
    }
    return {std::move(eig.eigenvectors.front()), top, degenerate};
}

TrajectoryResult run_trajectory(const HermitianOperator& op, ProductState start,
                                double tol, std::size_t max_iter, Rng& stream,
                                bool record_trace) {
    const std::size_t da = op.space().party_dim(Party::A);
    const std::size_t db = op.space().party_dim(Party::B);

    ComplexVector e = std::move(start.a_local);
    ComplexVector f = std::move(start.b_local);
    double value = -std::numeric_limits<double>::infinity();
    bool converged = false;
    bool degenerate = false;
    bool monotone_ok = true;
    std::vector<double> trace;
    std::size_t iter = 0;

    for (; iter < max_iter; ++iter) {
        const ComplexMatrix mb = contract_party_A(op, e);
        if (frobenius_norm(mb) < 1e-14) {
            // e fell out of the operator's range on the A side: the
            // objective is flat zero there, so restart this trajectory.
            ProductState fresh = sample_product_state(da, db, stream);
            e = std::move(fresh.a_local);
            f = std::move(fresh.b_local);
            value = -std::numeric_limits<double>::infinity();
            continue;
        }
        LeadingVector fb = leading_eigenvector(mb);
        f = std::move(fb.vec);
        degenerate = degenerate || fb.degenerate;
        if (record_trace)
            trace.push_back(fb.value);
        if (fb.value < value - 1e-12)
            monotone_ok = false;

        const ComplexMatrix ma = contract_party_B(op, f);
        if (frobenius_norm(ma) < 1e-14) {
            ProductState fresh = sample_product_state(da, db, stream);
            e = std::move(fresh.a_local);
            f = std::move(fresh.b_local);
            value = -std::numeric_limits<double>::infinity();
            continue;
        }
        LeadingVector ea = leading_eigenvector(ma);
        e = std::move(ea.vec);
        degenerate = degenerate || ea.degenerate;
        if (record_trace)
            trace.push_back(ea.value);
        if (ea.value < fb.value - 1e-12)
            monotone_ok = false;

        const double gain = ea.value - value;
        value = ea.value;
        if (std::isfinite(gain) && gain < tol) {
            converged = true;
            ++iter;
            break;
        }
    }

    ProductState state(std::move(e), std::move(f));
    // Report the recomputed overlap so the stored value is exactly the
    // objective of the stored state.
    const double reported = product_overlap(op, state);
    return {std::move(state), reported, iter, converged, degenerate, monotone_ok,
            std::move(trace)};
}

void require_seesaw_input(const HermitianOperator& op, const SeesawOptions& options) {
    if (!op.space().grouped())
        throw ContractViolation("seesaw_maximize requires grouped A|B factors");
    if (options.restarts == 0)
        throw ContractViolation("seesaw_maximize requires restarts >= 1");
    if (!(options.tol > 0.0))
        throw ContractViolation("seesaw_maximize requires tol > 0");
    if (options.max_iter == 0)
        throw ContractViolation("seesaw_maximize requires max_iter >= 1");

    // PSD precondition. Full spectrum check where it is cheap; for large
    // operators fall back to the necessary condition on the diagonal (the
    // callers building those pass tensor powers of verified-PSD operators).
    if (op.dim() <= 128) {
        const std::vector<double> evs = hermitian_eigenvalues(op.matrix());
        if (evs.back() < -1e-10)
            throw ContractViolation("seesaw_maximize requires a PSD operator");
    } else {
        for (std::size_t i = 0; i < op.dim(); ++i)
            if (op.matrix()(i, i).real() < -1e-10)
                throw ContractViolation("seesaw_maximize requires a PSD operator");
    }

    const std::size_t da = op.space().party_dim(Party::A);
    const std::size_t db = op.space().party_dim(Party::B);
    for (const ProductState& s : options.initial_states)
        if (s.a_local.dim() != da || s.b_local.dim() != db)
            throw ContractViolation("seesaw_maximize: warm start has wrong local dims");
}

} // namespace

SeesawOutcome seesaw_maximize(const HermitianOperator& op, const SeesawOptions& options) {
    require_seesaw_input(op, options);

    const std::size_t da = op.space().party_dim(Party::A);
    const std::size_t db = op.space().party_dim(Party::B);

    std::vector<double> restart_values;
    std::vector<std::size_t> iterations;
    std::vector<bool> converged_flags;
    std::vector<std::vector<double>> traces;
    restart_values.reserve(options.restarts);
    iterations.reserve(options.restarts);
    converged_flags.reserve(options.restarts);

    std::optional<ProductState> best_state;
    double best_value = -std::numeric_limits<double>::infinity();
    std::size_t best_restart = 0;
    bool any_degenerate = false;
    bool monotone_ok = true;

    for (std::size_t r = 0; r < options.restarts; ++r) {
        Rng stream(derive_stream(options.seed, r));
        ProductState start = r < options.initial_states.size()
                                 ? options.initial_states[r]
                                 : sample_product_state(da, db, stream);
        TrajectoryResult tr = run_trajectory(op, std::move(start), options.tol,
                                             options.max_iter, stream,
                                             options.record_traces);
        restart_values.push_back(tr.value);
        iterations.push_back(tr.iterations);
        converged_flags.push_back(tr.converged);
        any_degenerate = any_degenerate || tr.degenerate;
        monotone_ok = monotone_ok && tr.monotone_ok;
        if (options.record_traces)
            traces.push_back(std::move(tr.trace));
        if (tr.value > best_value) { // strict: ties keep the lowest restart index
            best_value = tr.value;
            best_state = std::move(tr.state);
            best_restart = r;
        }
    }

    return SeesawOutcome{best_value,
                         std::move(*best_state),
                         best_restart,
                         options.restarts,
                         std::move(restart_values),
                         std::move(iterations),
                         std::move(converged_flags),
                         any_degenerate,
                         monotone_ok,
                         std::move(traces)};
}

SeesawOutcome seesaw_maximize(const HermitianOperator& op, std::size_t restarts,
                              double tol, std::size_t max_iter, RngSeed seed) {
    SeesawOptions options;
    options.restarts = restarts;
    options.tol = tol;
    options.max_iter = max_iter;
    options.seed = seed;
    return seesaw_maximize(op, options);
}

namespace {

struct GridParams {
    std::size_t theta1, theta2, phi1, phi2;
};

ComplexVector grid_state(const GridParams& p, const std::vector<double>& polar,
                         const std::vector<double>& cph, const std::vector<double>& sph) {
    const double c1 = std::cos(polar[p.theta1]);
    const double s1 = std::sin(polar[p.theta1]);
    const double c2 = std::cos(polar[p.theta2]);
    const double s2 = std::sin(polar[p.theta2]);
    ComplexVector v(3);
    v[0] = cplx{c1, 0.0};
    v[1] = cplx{s1 * c2 * cph[p.phi1], s1 * c2 * sph[p.phi1]};
    v[2] = cplx{s1 * s2 * cph[p.phi2], s1 * s2 * sph[p.phi2]};
    return normalized(v);
}

} // namespace

double grid_oracle(const HermitianOperator& op, std::size_t resolution) {
    if (!op.space().grouped() || op.space().num_factors() != 2 ||
        op.space().party_dim(Party::A) != 3 || op.space().party_dim(Party::B) != 3)
        throw ContractViolation("grid_oracle requires a single 3x3 bipartition");
    if (resolution < 8)
        throw ContractViolation("grid_oracle requires resolution >= 8");
    {
        const std::vector<double> evs = hermitian_eigenvalues(op.matrix());
        if (evs.back() < -1e-10)
            throw ContractViolation("grid_oracle requires a PSD operator");
    }

    const std::size_t res = resolution;
    // Polar angles include both endpoints so the basis poles are on the grid;
    // phases cover [0, 2pi) half-open.
    std::vector<double> polar(res), cph(res), sph(res);
    for (std::size_t k = 0; k < res; ++k) {
        polar[k] = (std::numbers::pi / 2.0) * static_cast<double>(k) /
                   static_cast<double>(res - 1);
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(res);
        cph[k] = std::cos(phi);
        sph[k] = std::sin(phi);
    }

    // Amplitude triples (a0, a1, a2) for every polar pair, plus the pair
    // products the objective needs.
    struct Amp {
        double a0, a1, a2;
    };
    std::vector<Amp> amps(res * res);
    for (std::size_t t1 = 0; t1 < res; ++t1)
        for (std::size_t t2 = 0; t2 < res; ++t2) {
            const double c1 = std::cos(polar[t1]);
            const double s1 = std::sin(polar[t1]);
            amps[t1 * res + t2] = {c1, s1 * std::cos(polar[t2]), s1 * std::sin(polar[t2])};
        }

    double best = -std::numeric_limits<double>::infinity();
    GridParams best_e{0, 0, 0, 0};
    GridParams best_f{0, 0, 0, 0};

    std::vector<double> re01(res), r12c(res), i12c(res);
    for (std::size_t et = 0; et < res * res; ++et)
        for (std::size_t ep1 = 0; ep1 < res; ++ep1)
            for (std::size_t ep2 = 0; ep2 < res; ++ep2) {
                const GridParams pe{et / res, et % res, ep1, ep2};
                const ComplexVector e = grid_state(pe, polar, cph, sph);
                const ComplexMatrix me = contract_party_A(op, e);

                // For f = (a0, a1 e^{i phi1}, a2 e^{i phi2}) the objective is
                //   base(theta, phi1) + Re(w) cos(phi2) - Im(w) sin(phi2)
                // with w = 2 a2 (a0 M02 + a1 e^{-i phi1} M12); hoist the
                // phi1-only pieces into tables so the inner loop is flat.
                const double m00 = me(0, 0).real();
                const double m11 = me(1, 1).real();
                const double m22 = me(2, 2).real();
                const cplx m01 = me(0, 1);
                const cplx m02 = me(0, 2);
                const cplx m12 = me(1, 2);
                for (std::size_t k = 0; k < res; ++k) {
                    re01[k] = m01.real() * cph[k] - m01.imag() * sph[k];
                    r12c[k] = m12.real() * cph[k] + m12.imag() * sph[k];
                    i12c[k] = m12.imag() * cph[k] - m12.real() * sph[k];
                }

                for (std::size_t ft = 0; ft < res * res; ++ft) {
                    const Amp& a = amps[ft];
                    const double base0 =
                        m00 * a.a0 * a.a0 + m11 * a.a1 * a.a1 + m22 * a.a2 * a.a2;
                    const double p01 = 2.0 * a.a0 * a.a1;
                    const double q02r = 2.0 * a.a2 * a.a0 * m02.real();
                    const double q02i = 2.0 * a.a2 * a.a0 * m02.imag();
                    const double q12 = 2.0 * a.a2 * a.a1;
                    for (std::size_t k1 = 0; k1 < res; ++k1) {
                        const double base = base0 + p01 * re01[k1];
                        const double wr = q02r + q12 * r12c[k1];
                        const double wi = q02i + q12 * i12c[k1];
                        for (std::size_t k2 = 0; k2 < res; ++k2) {
                            const double val = base + wr * cph[k2] - wi * sph[k2];
                            if (val > best) {
                                best = val;
                                best_e = pe;
                                best_f = {ft / res, ft % res, k1, k2};
                            }
                        }
                    }
                }
            }

    // One see-saw polish from the best grid point; monotone, so the result
    // can only move up from the grid value (to solver tolerance).
    ProductState start(grid_state(best_e, polar, cph, sph),
                       grid_state(best_f, polar, cph, sph));
    Rng polish_stream(derive_stream(RngSeed{0}, 0));
    TrajectoryResult polished =
        run_trajectory(op, std::move(start), 1e-12, 500, polish_stream, false);
    return std::max(best, polished.value);
}

SeesawOutcome multicopy_overlap(std::size_t n_copies, std::size_t restarts, double tol,
                                std::size_t max_iter, RngSeed seed) {
    if (n_copies < 1 || n_copies > 3) {
        std::size_t requested = 1;
        for (std::size_t i = 0; i < n_copies && requested <= 6561; ++i)
            requested *= 9;
        throw SizeLimitError("multicopy_overlap supports 1 to 3 copies", requested, 6561);
    }

    const HermitianOperator p = tiles_projector();
    HermitianOperator power = p;
    for (std::size_t i = 1; i < n_copies; ++i)
        power = tensor_product(power, p);
    power = permute_factors(power, grouping_permutation(power.space()));

    SeesawOptions options;
    options.restarts = restarts;
    options.tol = tol;
    options.max_iter = max_iter;
    options.seed = seed;

    if (n_copies >= 2) {
        // Seed restart 0 with the tensor power of the single-copy optimizer:
        // a feasible point of value alpha_1^N, which the monotone iteration
        // can only improve on.
        const SeesawOutcome single = multicopy_overlap(1, restarts, tol, max_iter, seed);
        ComplexVector a = single.best_state.a_local;
        ComplexVector b = single.best_state.b_local;
        for (std::size_t i = 1; i < n_copies; ++i) {
            a = kron(a, single.best_state.a_local);
            b = kron(b, single.best_state.b_local);
        }
        options.initial_states.emplace_back(std::move(a), std::move(b));
    }

    return seesaw_maximize(power, options);
}

} // namespace boundent
