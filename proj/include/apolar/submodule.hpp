#ifndef APOLAR_SUBMODULE_HPP
#define APOLAR_SUBMODULE_HPP

#include "apolar/artinian.hpp"

namespace apolar {

/// A-submodule of the free module A (x) W, stored as a closed k-subspace.
/// Coordinates of A (x) W: index = algebra basis index * dim W + W index.
class SubmoduleOfFree {
public:
    /// Validates closure under the A-action.
    SubmoduleOfFree(AlgebraPtr a, std::size_t w, Subspace space);

    static SubmoduleOfFree zero(AlgebraPtr a, std::size_t w);
    static SubmoduleOfFree whole(AlgebraPtr a, std::size_t w);

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t rank_w() const { return w_; }
    const Subspace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    /// Columns are a k-basis of M.
    ExactMatrix basis_matrix() const { return space_.basis_matrix().transpose(); }

    bool contains(const SubmoduleOfFree& o) const { return space_.contains(o.space_); }
    bool operator==(const SubmoduleOfFree& o) const { return w_ == o.w_ && space_ == o.space_; }

private:
    AlgebraPtr alg_;
    std::size_t w_;
    Subspace space_;
};

/// a * v for a in A and v in A (x) W.
Vec act(const ArtinLocalAlgebra& a, std::size_t w, const Vec& elem, const Vec& v);
/// span of a*v over the given algebra elements and vectors.
Subspace act_span(const ArtinLocalAlgebra& a, std::size_t w, const std::vector<Vec>& elems, const std::vector<Vec>& vs);

SubmoduleOfFree a_span(const AlgebraPtr& a, std::size_t w, const std::vector<Vec>& generators);

/// M^perp inside A (x) W* for the A-bilinear pairing sum_i phi_i * m_i.
SubmoduleOfFree perp(const SubmoduleOfFree& m);

/// m * M, spanned by products with the non-unit basis elements.
Subspace maximal_times(const SubmoduleOfFree& m);
/// Residue images: the unit coefficient blocks of M, inside W.
Subspace residue_image(const ArtinLocalAlgebra& a, std::size_t w, const Subspace& m);

struct FreenessReport {
    std::size_t dim_sM = 0;
    std::size_t dim_M_over_mM = 0;
    std::size_t dim_M_cap_sF = 0;             // M intersect s*(A (x) W)
    std::size_t dim_M_over_mF_cap_M = 0;      // M / (m*(A (x) W) intersect M)
    bool is_free = false;                     // dim sM = dim M/mM
    bool socle_criterion = false;             // sM = M intersect s*(A (x) W)
    bool criteria_agree = false;
    std::size_t free_rank = 0;                // dim M/mM
};

/// Freeness over a Gorenstein base with socle generator s.
FreenessReport freeness_report(const SubmoduleOfFree& m, const Vec& s);

/// Freeness over any local base: dim M = dim(M/mM) * dim A.
bool is_free_local(const SubmoduleOfFree& m);

struct PartialReport {
    Subspace partial;       // inside W
    Subspace constant_part; // M intersect W, inside W
};

/// Derivative operator over k[t]/(t^2).
PartialReport partial_t(const SubmoduleOfFree& m);

}  // namespace apolar

#endif
