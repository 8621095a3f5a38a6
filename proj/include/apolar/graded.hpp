#ifndef APOLAR_GRADED_HPP
#define APOLAR_GRADED_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "apolar/artinian.hpp"

namespace apolar {

/// Graded order on exponents: lower total degree first; inside a degree the
/// exponent of variable 0 descends, then variable 1, and so on.
struct MonomialLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Ordered monomial basis of S^k in nvars variables.
struct MonomialBasis {
    int nvars = 0;
    int degree = 0;
    std::vector<Exponent> monomials;
    std::map<Exponent, std::size_t> position;

    std::size_t size() const { return monomials.size(); }
    std::size_t index(const Exponent& e) const;
};

/// Shared, thread-safe cache.
const MonomialBasis& monomial_basis(int nvars, int degree);
std::size_t monomial_count(int nvars, int degree);
int total_degree(const Exponent& e);

enum class GradedKind { Operator, State };

/// Finitely supported sum of (A-coefficient) x (monomial). Operators use the
/// ordinary monomials a_i; states use divided-power monomials x_i^(k).
template <GradedKind Kind>
class GradedElement {
public:
    using TermMap = std::map<Exponent, Vec, MonomialLess>;

    GradedElement(AlgebraPtr a, int nvars) : alg_(std::move(a)), nvars_(nvars) {}
    static GradedElement monomial(AlgebraPtr a, int nvars, const Exponent& e, const Vec& coeff);
    /// Homogeneous element of the given degree from a vector in A (x) S^k,
    /// index = algebra index * dim S^k + monomial index.
    static GradedElement from_vector(AlgebraPtr a, int nvars, int degree, const Vec& v);

    const AlgebraPtr& algebra() const { return alg_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponent& e, const Vec& coeff);
    bool is_zero() const { return terms_.empty(); }
    /// Degree when homogeneous and nonzero.
    std::optional<int> degree() const;
    int max_degree() const;
    GradedElement homogeneous_part(int k) const;
    Vec to_vector(int degree) const;
    /// Image mod m: the unit coefficient of every term.
    GradedElement residue() const;

    GradedElement operator+(const GradedElement& o) const;
    GradedElement operator-(const GradedElement& o) const;
    GradedElement scaled(const Vec& a) const;
    bool operator==(const GradedElement& o) const;

    /// Canonical terms sorted by (algebra basis index, monomial order).
    std::vector<std::tuple<std::size_t, Exponent, Scalar>> canonical_terms() const;
    std::string to_string() const;

    GradedElement map_coefficients(const AlgebraMap& f) const;

private:
    void check(const GradedElement& o) const;
    AlgebraPtr alg_;
    int nvars_;
    TermMap terms_;
};

using PolyOverA = GradedElement<GradedKind::Operator>;
using DPOverA = GradedElement<GradedKind::State>;

PolyOverA operator*(const PolyOverA& a, const PolyOverA& b);

/// Contraction: a^e applied to x^(f) is x^(f-e) when f >= e, else 0.
DPOverA contract(const PolyOverA& theta, const DPOverA& g);

/// Substitutes a_i -> (coefficient of x_i in T) for a linear tensor T.
Vec evaluate(const PolyOverA& theta, const DPOverA& t);

/// Matrix of multiplication by a homogeneous theta of degree g, from
/// A (x) S^k to A (x) S^{k+g}.
ExactMatrix multiplication_matrix(const AlgebraPtr& a, int nvars, int k, const PolyOverA& theta);

/// Matrix of Theta -> Theta contracted into F, from A (x) S^k to A (x) S^(d-k),
/// for F homogeneous of degree d.
ExactMatrix contraction_matrix(const DPOverA& f, int k);

/// Multiplication by an algebra element on A (x) S^k.
ExactMatrix algebra_action_matrix(const AlgebraPtr& a, std::size_t piece_dim, const Vec& elem);

/// Term parsers: "s*a0^2*a1 - 3*t*a1" and "x0^(3) + t*x1^(3)". nvars < 0 infers
/// the count from the largest index seen. Degree cap rejects states above it.
PolyOverA parse_operator(const AlgebraPtr& a, const std::string& text, int nvars = -1);
DPOverA parse_state(const AlgebraPtr& a, const std::string& text, int nvars = -1, int degree_cap = -1);

/// (x_0 + c_1 x_1 + ... )^(d) in divided powers, coefficients in A.
DPOverA divided_power_of_linear(const AlgebraPtr& a, const std::vector<Vec>& coeffs, int d);

}  // namespace apolar

#endif
