#include "apolar/linalg.hpp"

#include <cstdint>

namespace apolar {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec out = v;
    for (auto& x : out) x = c * x;
    return out;
}

void axpy(Vec& a, const Scalar& c, const Vec& b) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) a[i] += c * b[i];
}

ExactMatrix::ExactMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

ExactMatrix ExactMatrix::identity(Field f, std::size_t n) {
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = f.one();
    return m;
}

ExactMatrix ExactMatrix::from_ints(Field f, const std::vector<std::vector<long long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    ExactMatrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DomainError("ragged matrix literal");
        for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = f.from_int(rows[r][c]);
    }
    return m;
}

ExactMatrix ExactMatrix::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
    ExactMatrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DomainError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

ExactMatrix ExactMatrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
    ExactMatrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DomainError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
    }
    return m;
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& s) {
    if (s.field() != field_)
        throw FieldMismatch("entry from " + s.field().name() + " placed in a matrix over " + field_.name());
    data_[r * cols_ + c] = s;
}

Vec ExactMatrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec ExactMatrix::column(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(data_[r * cols_ + c]);
    return v;
}

std::vector<Vec> ExactMatrix::row_list() const {
    std::vector<Vec> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

std::vector<Vec> ExactMatrix::column_list() const {
    std::vector<Vec> out;
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (field_ != o.field_) throw FieldMismatch("matrix product over different fields");
    if (cols_ != o.rows_) throw DomainError("matrix product dimension mismatch");
    ExactMatrix p(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = data_[r * cols_ + k];
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const Scalar& b = o.data_[k * o.cols_ + c];
                if (!b.is_zero()) p.data_[r * o.cols_ + c] += a * b;
            }
        }
    return p;
}

Vec ExactMatrix::operator*(const Vec& v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector dimension mismatch");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = data_[r * cols_ + c];
            if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
        }
    return out;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& o) const {
    if (field_ != o.field_) throw FieldMismatch("vstack over different fields");
    if (cols_ != o.cols_) throw DomainError("vstack column mismatch");
    ExactMatrix m(field_, rows_ + o.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(o.data_.begin(), o.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

struct RrefAccess {
    static const std::vector<Scalar>& data(const ExactMatrix& m) { return m.data_; }
    static std::vector<Scalar>& data(ExactMatrix& m) { return m.data_; }
};

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

Rref rref_prime(const ExactMatrix& m) {
    const std::uint32_t p = m.field().characteristic();
    const std::size_t R = m.rows(), C = m.cols();
    const auto& src = RrefAccess::data(m);
    std::vector<std::uint32_t> a(R * C);
    for (std::size_t i = 0; i < R * C; ++i) a[i] = src[i].residue();

    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t sel = row;
        while (sel < R && a[sel * C + col] == 0) ++sel;
        if (sel == R) continue;
        if (sel != row)
            for (std::size_t c = col; c < C; ++c) std::swap(a[sel * C + c], a[row * C + c]);
        std::uint64_t inv = inv_mod(a[row * C + col], p);
        for (std::size_t c = col; c < C; ++c) a[row * C + c] = static_cast<std::uint32_t>(a[row * C + c] * inv % p);
        for (std::size_t r = 0; r < R; ++r) {
            if (r == row) continue;
            std::uint64_t f = a[r * C + col];
            if (f == 0) continue;
            std::uint64_t neg = p - f;
            for (std::size_t c = col; c < C; ++c) {
                std::uint32_t b = a[row * C + c];
                if (b) a[r * C + c] = static_cast<std::uint32_t>((a[r * C + c] + neg * b) % p);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    ExactMatrix out(m.field(), row, C);
    auto& dst = RrefAccess::data(out);
    for (std::size_t i = 0; i < row * C; ++i) dst[i] = m.field().from_int(a[i]);
    return {std::move(out), std::move(pivots)};
}

Rref rref_generic(const ExactMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<Scalar> a = RrefAccess::data(m);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t sel = row;
        while (sel < R && a[sel * C + col].is_zero()) ++sel;
        if (sel == R) continue;
        if (sel != row)
            for (std::size_t c = col; c < C; ++c) std::swap(a[sel * C + c], a[row * C + c]);
        Scalar inv = a[row * C + col].inverse();
        for (std::size_t c = col; c < C; ++c) a[row * C + c] *= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == row || a[r * C + col].is_zero()) continue;
            Scalar f = a[r * C + col];
            for (std::size_t c = col; c < C; ++c)
                if (!a[row * C + c].is_zero()) a[r * C + c] -= f * a[row * C + c];
        }
        pivots.push_back(col);
        ++row;
    }
    ExactMatrix out(m.field(), row, C);
    auto& dst = RrefAccess::data(out);
    std::copy(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(row * C), dst.begin());
    return {std::move(out), std::move(pivots)};
}

}  // namespace

Rref rref(const ExactMatrix& m) {
    return m.field().is_rational() ? rref_generic(m) : rref_prime(m);
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivots.size(); }

ExactMatrix kernel_basis(const ExactMatrix& m) {
    Rref r = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> cols;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(m.field(), C);
        v[f] = m.field().one();
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
        cols.push_back(std::move(v));
    }
    return ExactMatrix::from_columns(m.field(), C, cols);
}

std::optional<Vec> solve_membership(const Vec& v, const ExactMatrix& s) {
    if (v.size() != s.rows()) throw DomainError("membership: height mismatch");
    // Row-reduce [S | v]; v is in the span iff the last column is not a pivot.
    ExactMatrix aug(s.field(), s.rows(), s.cols() + 1);
    for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t c = 0; c < s.cols(); ++c) aug.set(r, c, s(r, c));
        aug.set(r, s.cols(), v[r]);
    }
    Rref red = rref(aug);
    for (auto p : red.pivots)
        if (p == s.cols()) return std::nullopt;
    Vec coeffs = zero_vec(s.field(), s.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) coeffs[red.pivots[i]] = red.reduced(i, s.cols());
    return coeffs;
}

Subspace::Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(f, ambient);
    if (vectors.empty()) return s;
    Rref r = rref(ExactMatrix::from_rows(f, ambient, vectors));
    s.basis_ = r.reduced.row_list();
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::whole(Field f, std::size_t ambient) {
    return span(f, ambient, ExactMatrix::identity(f, ambient).row_list());
}

Subspace Subspace::kernel(const ExactMatrix& m) {
    return span(m.field(), m.cols(), kernel_basis(m).column_list());
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw DomainError("subspace: vector length mismatch");
    Vec out = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Scalar c = out[pivots_[i]];
        if (!c.is_zero()) axpy(out, -c, basis_[i]);
    }
    return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
    if (o.dim() > dim()) return false;
    for (const auto& b : o.basis_)
        if (!contains(b)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw DomainError("subspace sum: ambient mismatch");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(field_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw DomainError("subspace intersection: ambient mismatch");
    if (dim() == ambient_) return o;
    if (o.dim() == ambient_) return *this;
    return kernel(equations().vstack(o.equations()));
}

ExactMatrix Subspace::basis_matrix() const { return ExactMatrix::from_rows(field_, ambient_, basis_); }

ExactMatrix Subspace::equations() const {
    if (basis_.empty()) return ExactMatrix::identity(field_, ambient_);
    return kernel_basis(basis_matrix()).transpose();
}

bool Subspace::operator==(const Subspace& o) const {
    return field_ == o.field_ && ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

}  // namespace apolar
