#include "thetaloci/theta_sum.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>

#include "thetaloci/errors.hpp"
#include "thetaloci/multi_index.hpp"

namespace thetaloci {

JetBasis JetBasis::build(int g, int order) {
    if (g < 1 || order < 0) throw ValidationError("JetBasis: g >= 1 and order >= 0 required");
    JetBasis basis;
    basis.g = g;
    basis.order = order;
    basis.levels.resize(order + 1);
    basis.levels[0].push_back({-1, -1});
    // children of a node append letters >= the node's last letter, which
    // enumerates non-decreasing multi-indices in lexicographic order
    for (int h = 1; h <= order; ++h) {
        const auto& prev = basis.levels[h - 1];
        auto& cur = basis.levels[h];
        cur.reserve(static_cast<std::size_t>(multi_index_count(g, h)));
        for (std::int32_t p = 0; p < static_cast<std::int32_t>(prev.size()); ++p) {
            const std::int32_t first = (h == 1) ? 0 : prev[p].letter;
            for (std::int32_t letter = first; letter < g; ++letter) {
                cur.push_back({p, letter});
            }
        }
    }
    basis.offsets.resize(order + 1);
    std::size_t off = 0;
    for (int h = 0; h <= order; ++h) {
        basis.offsets[h] = off;
        off += basis.levels[h].size();
    }
    basis.total = off;
    return basis;
}

namespace {

struct SliceContext {
    const ThetaSumParams* params;
    const JetBasis* basis;
    int g;
};

// Accumulates all lattice terms with first coordinate m0 into partial
// (and comp when Kahan accumulation is on), iterating the remaining
// coordinates in lexicographic order.
void accumulate_slice(const SliceContext& ctx, int m0, cdouble* partial, cdouble* comp) {
    const ThetaSumParams& p = *ctx.params;
    const JetBasis& basis = *ctx.basis;
    const int g = ctx.g;
    const int R = p.radius;
    const std::size_t total = basis.total;

    for (std::size_t e = 0; e < total; ++e) partial[e] = cdouble(0.0, 0.0);
    if (comp) {
        for (std::size_t e = 0; e < total; ++e) comp[e] = cdouble(0.0, 0.0);
    }

    std::vector<int> m(g);
    m[0] = m0;
    for (int j = 1; j < g; ++j) m[j] = -R;

    std::vector<double> x(g);
    std::vector<cdouble> f(g);
    std::vector<cdouble> prod(total);

    while (true) {
        // x = m + eps/2; term = exp(pi i (t(x) tau x + 2 t(x)(z + delta/2)))
        for (int j = 0; j < g; ++j) x[j] = m[j] + 0.5 * p.eps[j];
        cdouble expo(0.0, 0.0);
        for (int j = 0; j < g; ++j) {
            cdouble row(0.0, 0.0);
            for (int k = 0; k < g; ++k) row += p.tau(j, k) * x[k];
            expo += x[j] * (row + 2.0 * (p.z(j) + cdouble(0.5 * p.delta[j], 0.0)));
        }
        const cdouble term = std::exp(cdouble(0.0, kPi) * expo);

        // derivative factor per coordinate: pi i (2 m_j + eps_j)
        for (int j = 0; j < g; ++j) f[j] = cdouble(0.0, kPi * (2.0 * m[j] + p.eps[j]));

        prod[0] = term;
        for (int h = 1; h <= basis.order; ++h) {
            const auto& nodes = basis.levels[h];
            const std::size_t off = basis.offsets[h];
            const std::size_t poff = basis.offsets[h - 1];
            for (std::size_t t = 0; t < nodes.size(); ++t) {
                prod[off + t] = prod[poff + nodes[t].parent] * f[nodes[t].letter];
            }
        }

        if (comp) {
            for (std::size_t e = 0; e < total; ++e) {
                const cdouble y = prod[e] - comp[e];
                const cdouble s = partial[e] + y;
                comp[e] = (s - partial[e]) - y;
                partial[e] = s;
            }
        } else {
            for (std::size_t e = 0; e < total; ++e) partial[e] += prod[e];
        }

        // odometer over coordinates 1..g-1
        int j = g - 1;
        while (j >= 1 && m[j] == R) {
            m[j] = -R;
            --j;
        }
        if (j < 1) break;
        ++m[j];
    }
}

void combine(const JetBasis& basis, const std::vector<std::vector<cdouble>>& partials,
             bool compensated, cdouble* out) {
    const std::size_t total = basis.total;
    for (std::size_t e = 0; e < total; ++e) out[e] = cdouble(0.0, 0.0);
    if (compensated) {
        std::vector<cdouble> comp(total, cdouble(0.0, 0.0));
        for (const auto& part : partials) {
            for (std::size_t e = 0; e < total; ++e) {
                const cdouble y = part[e] - comp[e];
                const cdouble s = out[e] + y;
                comp[e] = (s - out[e]) - y;
                out[e] = s;
            }
        }
    } else {
        for (const auto& part : partials) {
            for (std::size_t e = 0; e < total; ++e) out[e] += part[e];
        }
    }
}

void check_params(const ThetaSumParams& p, const JetBasis& basis) {
    const int g = basis.g;
    if (static_cast<int>(p.eps.size()) != g || static_cast<int>(p.delta.size()) != g ||
        p.tau.rows() != g || p.tau.cols() != g || p.z.size() != g) {
        throw ValidationError("theta sum: dimension mismatch");
    }
    if (p.radius < 0) throw ValidationError("theta sum: radius >= 0 required");
}

}  // namespace

void theta_jet_sum_serial(const ThetaSumParams& params, const JetBasis& basis, cdouble* out) {
    check_params(params, basis);
    SliceContext ctx{&params, &basis, basis.g};
    const int R = params.radius;
    const int slices = 2 * R + 1;
    std::vector<std::vector<cdouble>> partials(1, std::vector<cdouble>(basis.total));
    std::vector<cdouble> comp(params.compensated ? basis.total : 0);
    std::vector<cdouble> acc_comp(params.compensated ? basis.total : 0, cdouble(0.0, 0.0));
    for (std::size_t e = 0; e < basis.total; ++e) out[e] = cdouble(0.0, 0.0);
    for (int s = 0; s < slices; ++s) {
        accumulate_slice(ctx, -R + s, partials[0].data(), params.compensated ? comp.data() : nullptr);
        if (params.compensated) {
            for (std::size_t e = 0; e < basis.total; ++e) {
                const cdouble y = partials[0][e] - acc_comp[e];
                const cdouble t = out[e] + y;
                acc_comp[e] = (t - out[e]) - y;
                out[e] = t;
            }
        } else {
            for (std::size_t e = 0; e < basis.total; ++e) out[e] += partials[0][e];
        }
    }
}

void theta_jet_sum_parallel(const ThetaSumParams& params, const JetBasis& basis, cdouble* out) {
    check_params(params, basis);
    SliceContext ctx{&params, &basis, basis.g};
    const int R = params.radius;
    const int slices = 2 * R + 1;
    std::vector<std::vector<cdouble>> partials(slices, std::vector<cdouble>(basis.total));
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<cdouble> comp(params.compensated ? basis.total : 0);
#pragma omp for schedule(static)
        for (int s = 0; s < slices; ++s) {
            accumulate_slice(ctx, -R + s, partials[s].data(),
                             params.compensated ? comp.data() : nullptr);
        }
    }
#else
    std::vector<cdouble> comp(params.compensated ? basis.total : 0);
    for (int s = 0; s < slices; ++s) {
        accumulate_slice(ctx, -R + s, partials[s].data(), params.compensated ? comp.data() : nullptr);
    }
#endif
    combine(basis, partials, params.compensated, out);
}

}  // namespace thetaloci
