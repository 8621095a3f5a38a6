#ifndef APOLAR_APOLAR_HPP
#define APOLAR_APOLAR_HPP

#include <optional>
#include <vector>

#include "apolar/ideal.hpp"

namespace apolar {

/// Residue mod m of a tensor, as a tensor over the ground field.
DPOverA residue_tensor(const DPOverA& f);

struct TensorReport {
    Vec support;                 // residue of each coordinate, inside W
    std::size_t cotangent_dim = 0;  // dim m/m^2
    std::size_t derivative_rank = 0;  // rank of W* -> m/m^2
    bool embedding = false;
};

/// Affine tensor T = sum_j a_j (x) w_j in A (x) W, given by its coordinates a_j.
TensorReport tensor_report(const ArtinLocalAlgebra& a, const std::vector<Vec>& coords);
/// Same for a tensor written as a linear form a_0 x_0 + ... + a_n x_n.
TensorReport tensor_report(const DPOverA& linear);

/// Ann(F) up to the cap; pieces above deg F are everything.
GradedIdeal annihilator(const DPOverA& f, int cap);

/// h(k) = dim_k of (A (x) Sym V* / Ann F)_k for 0 <= k <= d, over any base.
std::vector<std::size_t> apolar_hilbert_function(const DPOverA& f);

struct DualityReport {
    std::vector<std::size_t> h;
    bool symmetric = false;
    std::vector<bool> free;
    std::vector<std::size_t> fiber_rank;
};
/// Requires a Gorenstein base.
DualityReport duality_report(const DPOverA& f);

/// Matrix with entries in A.
class AMatrix {
public:
    AMatrix(AlgebraPtr a, std::size_t rows, std::size_t cols);
    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Vec& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Vec v) { entries_[r * cols_ + c] = std::move(v); }
    ExactMatrix residue() const;
    AMatrix transpose() const;
    bool operator==(const AMatrix& o) const;
    /// Determinant of the submatrix on the given rows and columns.
    Vec minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

private:
    AlgebraPtr alg_;
    std::size_t rows_, cols_;
    std::vector<Vec> entries_;
};

/// Matrix of Theta -> Theta contracted into F from S^i V* to A (x) S^(d-i) V.
/// Rows are indexed by S^(d-i) monomials, columns by S^i monomials.
AMatrix catalecticant(const DPOverA& f, int i);

struct RankProfile {
    std::size_t residue_rank = 0;
    bool minors_vanish = false;       // all (r+1)-minors are zero in A
    bool exhaustive = true;           // false when the minor cap stopped the search
    bool constant_rank = false;       // minors vanish and residue rank = r
    std::size_t minors_checked = 0;
    std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> nonzero_minor;
};

inline constexpr std::size_t default_minor_cap = 200000;

RankProfile rank_profile(const AMatrix& m, int r, std::size_t minor_cap = default_minor_cap);
RankProfile rank_profile(const DPOverA& f, int i, int r, std::size_t minor_cap = default_minor_cap);

}  // namespace apolar

#endif
