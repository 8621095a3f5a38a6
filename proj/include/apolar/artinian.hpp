#ifndef APOLAR_ARTINIAN_HPP
#define APOLAR_ARTINIAN_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolar/linalg.hpp"

namespace apolar {

using Exponent = std::vector<int>;

/// k[t_1..t_m]/J with J generated by monomials.
struct MonomialQuotientPresentation {
    std::vector<std::string> var_names;
    std::vector<Exponent> generators;

    /// Parses monomial strings such as "s^2", "s*t" against var_names.
    static MonomialQuotientPresentation parse(std::vector<std::string> vars,
                                              const std::vector<std::string>& monomials);
};

class ArtinLocalAlgebra;
using AlgebraPtr = std::shared_ptr<const ArtinLocalAlgebra>;

/// A finite local k-algebra with a chosen basis. basis[0] is the unit and the
/// remaining basis vectors span the maximal ideal.
class ArtinLocalAlgebra {
public:
    struct Term {
        std::size_t index;
        Scalar coeff;
    };

    static AlgebraPtr from_presentation(const Field& f, const MonomialQuotientPresentation& p);
    /// The base field itself as a 1-dimensional algebra.
    static AlgebraPtr ground(const Field& f);
    /// Raw structure constants: table[i][j] is the product of basis i and j.
    /// Basis element 0 must be the unit and the others must span a nilpotent ideal.
    static AlgebraPtr from_table(const Field& f, std::vector<std::string> basis_names,
                                 const std::vector<std::vector<Vec>>& table);

    const Field& field() const { return field_; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    /// Present only for monomial presentations.
    const std::optional<MonomialQuotientPresentation>& presentation() const { return presentation_; }
    const std::vector<Exponent>& basis_monomials() const { return monomials_; }

    const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    Vec multiply(const Vec& a, const Vec& b) const;
    Vec unit() const;
    Vec basis_vector(std::size_t i) const;
    /// Matrix of x -> a*x.
    ExactMatrix multiplication_matrix(const Vec& a) const;

    bool in_maximal_ideal(const Vec& a) const { return a[0].is_zero(); }
    /// m^j as a subspace of A (m^0 = A).
    const Subspace& maximal_power(std::size_t j) const;
    /// Smallest j with m^{j+1} = 0.
    std::size_t socle_degree() const { return loewy_ - 1; }

    Subspace socle() const;
    bool is_gorenstein() const { return socle().dim() == 1; }
    /// Canonical spanning element of the socle of a Gorenstein algebra.
    Vec socle_generator() const;
    bool is_dual_numbers() const;

    /// Element of A named by a presentation variable or basis name.
    std::optional<Vec> element_for_name(const std::string& name) const;
    std::string format(const Vec& a) const;

    bool same_as(const ArtinLocalAlgebra& o) const;

private:
    ArtinLocalAlgebra(Field f) : field_(f) {}
    void finish();

    Field field_;
    std::vector<std::string> names_;
    std::vector<Exponent> monomials_;
    std::optional<MonomialQuotientPresentation> presentation_;
    std::vector<std::vector<Term>> table_;
    std::vector<Subspace> powers_;
    std::size_t loewy_ = 1;
};

/// Element of a fixed algebra; arithmetic checks that parents agree.
class AlgebraElement {
public:
    AlgebraElement(AlgebraPtr a, Vec coeffs);
    static AlgebraElement zero(AlgebraPtr a);
    static AlgebraElement one(AlgebraPtr a);

    const AlgebraPtr& algebra() const { return alg_; }
    const Vec& coeffs() const { return coeffs_; }
    bool is_zero() const { return is_zero_vec(coeffs_); }
    bool is_unit() const { return !coeffs_[0].is_zero(); }
    Scalar residue() const { return coeffs_[0]; }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }
    bool operator==(const AlgebraElement& o) const;

    std::string to_string() const { return alg_->format(coeffs_); }

private:
    void check(const AlgebraElement& o) const;
    AlgebraPtr alg_;
    Vec coeffs_;
};

/// b with b*a_i in the socle for every i and some b*a_i nonzero, found by
/// climbing the m-adic filtration one multiplication at a time.
Vec multiply_to_socle(const ArtinLocalAlgebra& a, const std::vector<Vec>& elements);

struct GorensteinWitness {
    Subspace ideal;          // I inside A
    AlgebraPtr quotient;     // B = A/I
    ExactMatrix surjection;  // dim B x dim A
    Vec image_of_f;          // generator of soc(B)
    std::size_t steps = 0;
};

/// Ideal I not containing f such that A/I is Gorenstein with socle spanned by f.
GorensteinWitness gorenstein_witness(const ArtinLocalAlgebra& a, const Vec& f);

struct AlgebraMap {
    AlgebraPtr target;
    ExactMatrix matrix;  // dim target x dim source
    Vec apply(const Vec& a) const { return matrix * a; }
};

/// A/(J + extra) for a monomial presentation.
AlgebraMap algebra_quotient(const AlgebraPtr& a, const std::vector<Exponent>& extra);
/// A/I for an ideal given as a subspace; basis of the quotient = non-pivot basis elements.
AlgebraMap quotient_by_ideal(const AlgebraPtr& a, const Subspace& ideal);
/// Algebra homomorphism A -> B given by images of the presentation variables.
AlgebraMap algebra_map_from_images(const AlgebraPtr& a, const AlgebraPtr& b, const std::vector<Vec>& images);

/// The five catalog algebras, named "t2", "t3", "s2t2", "s2stt2", "s3t3".
std::vector<std::pair<std::string, AlgebraPtr>> algebra_catalog(const Field& f);
AlgebraPtr catalog_algebra(const Field& f, const std::string& name);

}  // namespace apolar

#endif
