#include "apolar/submodule.hpp"

namespace apolar {

Vec act(const ArtinLocalAlgebra& a, std::size_t w, const Vec& elem, const Vec& v) {
    const std::size_t da = a.dim();
    Vec out = zero_vec(a.field(), da * w);
    for (std::size_t i = 0; i < da; ++i) {
        if (elem[i].is_zero()) continue;
        for (std::size_t b = 0; b < da; ++b) {
            const auto& prod = a.product(i, b);
            if (prod.empty()) continue;
            for (std::size_t j = 0; j < w; ++j) {
                const Scalar& x = v[b * w + j];
                if (x.is_zero()) continue;
                Scalar c = elem[i] * x;
                for (const auto& t : prod) out[t.index * w + j] += c * t.coeff;
            }
        }
    }
    return out;
}

Subspace act_span(const ArtinLocalAlgebra& a, std::size_t w, const std::vector<Vec>& elems,
                  const std::vector<Vec>& vs) {
    std::vector<Vec> all;
    for (const auto& e : elems)
        for (const auto& v : vs) all.push_back(act(a, w, e, v));
    return Subspace::span(a.field(), a.dim() * w, all);
}

namespace {

std::vector<Vec> basis_elements(const ArtinLocalAlgebra& a, std::size_t from) {
    std::vector<Vec> out;
    for (std::size_t i = from; i < a.dim(); ++i) out.push_back(a.basis_vector(i));
    return out;
}

}  // namespace

SubmoduleOfFree::SubmoduleOfFree(AlgebraPtr a, std::size_t w, Subspace space)
    : alg_(std::move(a)), w_(w), space_(std::move(space)) {
    if (space_.ambient() != alg_->dim() * w_) throw DomainError("submodule: ambient dimension mismatch");
    for (std::size_t i = 1; i < alg_->dim(); ++i)
        for (const auto& v : space_.basis())
            if (!space_.contains(act(*alg_, w_, alg_->basis_vector(i), v)))
                throw DomainError("subspace is not closed under the algebra action");
}

SubmoduleOfFree SubmoduleOfFree::zero(AlgebraPtr a, std::size_t w) {
    Subspace s(a->field(), a->dim() * w);
    return SubmoduleOfFree(std::move(a), w, std::move(s));
}

SubmoduleOfFree SubmoduleOfFree::whole(AlgebraPtr a, std::size_t w) {
    Subspace s = Subspace::whole(a->field(), a->dim() * w);
    return SubmoduleOfFree(std::move(a), w, std::move(s));
}

SubmoduleOfFree a_span(const AlgebraPtr& a, std::size_t w, const std::vector<Vec>& generators) {
    return SubmoduleOfFree(a, w, act_span(*a, w, basis_elements(*a, 0), generators));
}

SubmoduleOfFree perp(const SubmoduleOfFree& m) {
    const auto& a = *m.algebra();
    const std::size_t da = a.dim(), w = m.rank_w();
    // Row block per basis vector of M: the A-valued pairing coefficients.
    ExactMatrix pairing(a.field(), m.dim() * da, da * w);
    std::size_t block = 0;
    for (const auto& v : m.space().basis()) {
        for (std::size_t c = 0; c < da; ++c)
            for (std::size_t j = 0; j < w; ++j) {
                // phi = e_c (x) e_j^*; pairing value = e_c * v_j with v_j = sum_b v[b*w+j] e_b.
                for (std::size_t b = 0; b < da; ++b) {
                    const Scalar& x = v[b * w + j];
                    if (x.is_zero()) continue;
                    for (const auto& t : a.product(c, b)) {
                        std::size_t row = block * da + t.index;
                        pairing.set(row, c * w + j, pairing(row, c * w + j) + x * t.coeff);
                    }
                }
            }
        ++block;
    }
    return SubmoduleOfFree(m.algebra(), w, Subspace::kernel(pairing));
}

Subspace maximal_times(const SubmoduleOfFree& m) {
    return act_span(*m.algebra(), m.rank_w(), basis_elements(*m.algebra(), 1), m.space().basis());
}

Subspace residue_image(const ArtinLocalAlgebra& a, std::size_t w, const Subspace& m) {
    std::vector<Vec> rows;
    for (const auto& v : m.basis()) rows.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(w));
    (void)a;
    return Subspace::span(m.field(), w, rows);
}

FreenessReport freeness_report(const SubmoduleOfFree& m, const Vec& s) {
    const auto& a = *m.algebra();
    if (!a.is_gorenstein()) throw DomainError("freeness criteria require a Gorenstein base algebra");
    if (!a.socle().contains(s) || is_zero_vec(s)) throw DomainError("s must be a nonzero socle element");
    const std::size_t w = m.rank_w();
    FreenessReport r;
    Subspace sM = act_span(a, w, {s}, m.space().basis());
    Subspace whole = Subspace::whole(a.field(), a.dim() * w);
    Subspace sF = act_span(a, w, {s}, whole.basis());
    Subspace mF = act_span(a, w, basis_elements(a, 1), whole.basis());
    Subspace M_cap_sF = m.space().intersect(sF);
    r.dim_sM = sM.dim();
    r.dim_M_over_mM = m.dim() - maximal_times(m).dim();
    r.dim_M_cap_sF = M_cap_sF.dim();
    r.dim_M_over_mF_cap_M = m.dim() - m.space().intersect(mF).dim();
    r.is_free = r.dim_sM == r.dim_M_over_mM;
    r.socle_criterion = sM == M_cap_sF;
    r.criteria_agree = r.is_free == r.socle_criterion;
    r.free_rank = r.dim_M_over_mM;
    return r;
}

bool is_free_local(const SubmoduleOfFree& m) {
    return m.dim() == (m.dim() - maximal_times(m).dim()) * m.algebra()->dim();
}

PartialReport partial_t(const SubmoduleOfFree& m) {
    const auto& a = *m.algebra();
    if (!a.is_dual_numbers()) throw DomainError("partial_t requires the base algebra k[t]/(t^2)");
    const std::size_t w = m.rank_w();
    std::vector<Vec> tparts;
    for (const auto& v : m.space().basis())
        tparts.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(w), v.end());
    Subspace partial = Subspace::span(a.field(), w, tparts);
    // M intersect W: elements of M whose t-part vanishes.
    ExactMatrix tproj(a.field(), w, 2 * w);
    for (std::size_t j = 0; j < w; ++j) tproj.set(j, w + j, a.field().one());
    Subspace flat = m.space().intersect(Subspace::kernel(tproj));
    std::vector<Vec> consts;
    for (const auto& v : flat.basis()) consts.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(w));
    return {partial, Subspace::span(a.field(), w, consts)};
}

}  // namespace apolar
