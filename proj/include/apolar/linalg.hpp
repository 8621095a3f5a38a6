#ifndef APOLAR_LINALG_HPP
#define APOLAR_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "apolar/field.hpp"

namespace apolar {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);

/// Dense row-major matrix over one Field.
class ExactMatrix {
public:
    ExactMatrix(Field f, std::size_t rows, std::size_t cols);
    static ExactMatrix identity(Field f, std::size_t n);
    static ExactMatrix from_ints(Field f, const std::vector<std::vector<long long>>& rows);
    static ExactMatrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
    static ExactMatrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// Throws FieldMismatch when s lives in a different field.
    void set(std::size_t r, std::size_t c, const Scalar& s);

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;
    std::vector<Vec> row_list() const;
    std::vector<Vec> column_list() const;

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    Vec operator*(const Vec& v) const;
    /// Stacks o below this matrix.
    ExactMatrix vstack(const ExactMatrix& o) const;

    bool is_zero() const;
    bool operator==(const ExactMatrix& o) const;

private:
    friend struct RrefAccess;
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct Rref {
    ExactMatrix reduced;               // rank rows, pivot entries 1, zero above/below pivots
    std::vector<std::size_t> pivots;   // pivot column per row
};

/// Canonical reduced row echelon form; zero rows are dropped.
Rref rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
/// Columns form a basis of the right kernel, one per free column, with a 1
/// in that free position and 0 in the other free positions.
ExactMatrix kernel_basis(const ExactMatrix& m);
/// Coefficients c with S*c = v, or nullopt when v is outside the column span.
std::optional<Vec> solve_membership(const Vec& v, const ExactMatrix& s);

/// A k-subspace of k^n kept as canonical RREF rows, so equality of subspaces
/// is equality of bases.
class Subspace {
public:
    Subspace(Field f, std::size_t ambient);
    static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace whole(Field f, std::size_t ambient);
    /// Kernel of m, as a subspace of k^{cols(m)}.
    static Subspace kernel(const ExactMatrix& m);

    const Field& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    /// Residual of v after eliminating against the pivots; zero iff v is inside.
    Vec reduce(const Vec& v) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// Rows E with this = ker E.
    ExactMatrix equations() const;
    ExactMatrix basis_matrix() const;  // rows

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    Field field_;
    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace apolar

#endif
