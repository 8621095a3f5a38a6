#include "apolar/apolar.hpp"

#include "apolar/determinant.hpp"
#include "apolar/error.hpp"

namespace apolar {

DPOverA residue_tensor(const DPOverA& f) {
    AlgebraPtr k = ArtinLocalAlgebra::ground(f.algebra()->field());
    DPOverA out(k, f.nvars());
    for (const auto& [e, c] : f.terms()) out.add_term(e, Vec{c[0]});
    return out;
}

TensorReport tensor_report(const ArtinLocalAlgebra& a, const std::vector<Vec>& coords) {
    TensorReport r;
    const Field& f = a.field();
    for (const auto& c : coords) {
        if (c.size() != a.dim()) throw DomainError("tensor coordinate has wrong length");
        r.support.push_back(c[0]);
    }
    const Subspace& m2 = a.maximal_power(2);
    const std::size_t dim_m = a.dim() - 1;
    r.cotangent_dim = dim_m - m2.dim();
    std::vector<Vec> parts = m2.basis();
    for (const auto& c : coords) {
        Vec mpart = c;
        mpart[0] = f.zero();
        parts.push_back(mpart);
    }
    r.derivative_rank = Subspace::span(f, a.dim(), parts).dim() - m2.dim();
    r.embedding = r.derivative_rank == r.cotangent_dim;
    return r;
}

TensorReport tensor_report(const DPOverA& linear) {
    const auto& a = *linear.algebra();
    std::vector<Vec> coords(static_cast<std::size_t>(linear.nvars()), zero_vec(a.field(), a.dim()));
    for (const auto& [e, c] : linear.terms()) {
        if (total_degree(e) != 1) throw DomainError("tensor_report: tensor must be linear");
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] == 1) coords[i] = c;
    }
    return tensor_report(a, coords);
}

namespace {

int homogeneous_degree(const DPOverA& f) {
    auto d = f.degree();
    if (!d) throw DomainError("tensor must be homogeneous and nonzero");
    return *d;
}

}  // namespace

GradedIdeal annihilator(const DPOverA& f, int cap) {
    const int d = homogeneous_degree(f);
    if (cap < 0) throw DomainError("degree cap must be nonnegative");
    const auto& a = f.algebra();
    std::vector<Subspace> pieces;
    for (int k = 0; k <= cap; ++k) {
        const std::size_t amb = a->dim() * monomial_count(f.nvars(), k);
        if (k > d) pieces.push_back(Subspace::whole(a->field(), amb));
        else pieces.push_back(Subspace::kernel(contraction_matrix(f, k)));
    }
    return GradedIdeal::unchecked(a, f.nvars(), std::move(pieces));
}

std::vector<std::size_t> apolar_hilbert_function(const DPOverA& f) {
    const int d = homogeneous_degree(f);
    GradedIdeal ann = annihilator(f, d);
    return hilbert_function(ann).h;
}

DualityReport duality_report(const DPOverA& f) {
    if (!f.algebra()->is_gorenstein())
        throw DomainError(
            "duality requires a Gorenstein base; over k[s,t]/(s^2,st,t^2) the tensor s*x0^(d) + t*x1^(d) "
            "has h(0) = 1 but h(d) = 2");
    const int d = homogeneous_degree(f);
    HilbertReport hr = hilbert_function(annihilator(f, d));
    DualityReport r;
    r.h = hr.h;
    r.free = hr.quotient_free;
    r.fiber_rank = hr.fiber_rank;
    r.symmetric = true;
    for (int k = 0; k <= d; ++k)
        r.symmetric = r.symmetric && r.h[static_cast<std::size_t>(k)] == r.h[static_cast<std::size_t>(d - k)];
    return r;
}

AMatrix::AMatrix(AlgebraPtr a, std::size_t rows, std::size_t cols)
    : alg_(std::move(a)), rows_(rows), cols_(cols), entries_(rows * cols, zero_vec(alg_->field(), alg_->dim())) {}

ExactMatrix AMatrix::residue() const {
    ExactMatrix m(alg_->field(), rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.set(r, c, at(r, c)[0]);
    return m;
}

AMatrix AMatrix::transpose() const {
    AMatrix t(alg_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

bool AMatrix::operator==(const AMatrix& o) const {
    return alg_->same_as(*o.alg_) && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

Vec AMatrix::minor(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    if (rs.size() != cs.size()) throw DomainError("minor needs a square selection");
    const auto& a = *alg_;
    return subset_determinant<Vec>(
        rs.size(), zero_vec(a.field(), a.dim()), a.unit(), [&](std::size_t r, std::size_t c) { return at(rs[r], cs[c]); },
        [&](const Vec& x, const Vec& y) { return a.multiply(x, y); }, [](const Vec& x, const Vec& y) { return add(x, y); },
        [&](const Vec& x) { return scale(a.field().from_int(-1), x); });
}

AMatrix catalecticant(const DPOverA& f, int i) {
    const int d = homogeneous_degree(f);
    if (i < 0 || i > d) throw DomainError("catalecticant degree out of range");
    const auto& a = f.algebra();
    const int nv = f.nvars();
    const auto& cols = monomial_basis(nv, i);
    const auto& rows = monomial_basis(nv, d - i);
    AMatrix m(a, rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        DPOverA g = contract(PolyOverA::monomial(a, nv, cols.monomials[c], a->unit()), f);
        for (const auto& [e, coeff] : g.terms()) m.set(rows.index(e), c, coeff);
    }
    return m;
}

RankProfile rank_profile(const AMatrix& m, int r, std::size_t minor_cap) {
    if (r < 0) throw DomainError("rank must be nonnegative");
    const std::size_t size = static_cast<std::size_t>(r) + 1;
    if (size > m.rows() || size > m.cols())
        throw DomainError("minor size " + std::to_string(size) + " exceeds the matrix");
    RankProfile p;
    p.residue_rank = rank(m.residue());
    p.minors_vanish = true;
    p.minors_checked = for_each_minor(m.rows(), m.cols(), size, minor_cap,
                                      [&](const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
                                          if (is_zero_vec(m.minor(rs, cs))) return true;
                                          p.minors_vanish = false;
                                          p.nonzero_minor.emplace(rs, cs);
                                          return false;
                                      });
    if (p.minors_vanish) {
        // binomial(rows, size) * binomial(cols, size), saturating
        auto choose = [](std::size_t n, std::size_t k) {
            long double v = 1;
            for (std::size_t i = 1; i <= k; ++i) v = v * static_cast<long double>(n - k + i) / static_cast<long double>(i);
            return v;
        };
        p.exhaustive = choose(m.rows(), size) * choose(m.cols(), size) <= static_cast<long double>(p.minors_checked) + 0.5L;
    }
    p.constant_rank = p.minors_vanish && p.exhaustive && p.residue_rank == static_cast<std::size_t>(r);
    return p;
}

RankProfile rank_profile(const DPOverA& f, int i, int r, std::size_t minor_cap) {
    return rank_profile(catalecticant(f, i), r, minor_cap);
}

}  // namespace apolar
