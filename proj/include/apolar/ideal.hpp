#ifndef APOLAR_IDEAL_HPP
#define APOLAR_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/graded.hpp"
#include "apolar/submodule.hpp"

namespace apolar {

/// Homogeneous ideal of A (x) Sym V*, stored degree by degree up to a cap.
/// Piece k lives in A (x) S^k with the algebra-outer coordinate order.
class GradedIdeal {
public:
    /// Validates A-closure and V* I_k inside I_{k+1}.
    GradedIdeal(AlgebraPtr a, int nvars, std::vector<Subspace> pieces);

    const AlgebraPtr& algebra() const { return alg_; }
    int nvars() const { return nvars_; }
    int cap() const { return static_cast<int>(pieces_.size()) - 1; }
    const Subspace& piece(int k) const { return pieces_.at(static_cast<std::size_t>(k)); }
    const std::vector<Subspace>& pieces() const { return pieces_; }
    std::size_t ambient_dim(int k) const;

    bool contains(const PolyOverA& p) const;
    /// Degreewise containment over the common range.
    bool contains(const GradedIdeal& o) const;
    bool operator==(const GradedIdeal& o) const;
    GradedIdeal truncate(int cap) const;
    std::vector<PolyOverA> basis_polys(int k) const;
    /// Span of V* * I_{k-1} (the part of I_k not needing new generators).
    Subspace generated_part(int k) const;
    /// Canonical minimal generators: per degree, pivot-ordered basis vectors of
    /// I_k not in V* I_{k-1}.
    std::vector<PolyOverA> minimal_generators() const;

    static GradedIdeal zero(AlgebraPtr a, int nvars, int cap);
    static GradedIdeal unchecked(AlgebraPtr a, int nvars, std::vector<Subspace> pieces);

private:
    struct NoCheck {};
    GradedIdeal(AlgebraPtr a, int nvars, std::vector<Subspace> pieces, NoCheck);
    AlgebraPtr alg_;
    int nvars_;
    std::vector<Subspace> pieces_;
};

/// Multiplies a vector of A (x) S^k by the variable a_j.
Vec times_variable(int nvars, std::size_t alg_dim, int k, int j, const Vec& v);

GradedIdeal ideal_generate(const AlgebraPtr& a, int nvars, const std::vector<PolyOverA>& gens, int cap);
/// Generators given as vectors per degree (gens[k] inside A (x) S^k).
GradedIdeal ideal_generate_vectors(const AlgebraPtr& a, int nvars, const std::vector<std::vector<Vec>>& gens,
                                   int cap);
/// (I)_{<= i} extended to the cap of I.
GradedIdeal generated_in_degrees(const GradedIdeal& ideal, int max_degree);
GradedIdeal intersect(const GradedIdeal& i, const GradedIdeal& j);

/// (I : n) with the cap lowered by one.
GradedIdeal colon_irrelevant(const GradedIdeal& ideal);

struct SaturationResult {
    GradedIdeal ideal;
    int certified_through = 0;
    int steps = 0;
};

/// Iterates the colon until two consecutive results agree on the shrinking
/// window; the result is certified through the final cap.
SaturationResult saturate(const GradedIdeal& ideal);

struct HilbertReport {
    std::vector<std::size_t> h;             // dim_k of the quotient piece
    std::vector<std::size_t> fiber_rank;    // dim of the quotient mod m
    std::vector<bool> quotient_free;        // h = fiber_rank * dim A
};
HilbertReport hilbert_function(const GradedIdeal& ideal);

struct FiberIdeals {
    GradedIdeal special;  // I mod m
    GradedIdeal socle;    // {Phi : s Phi in I}
    bool contained = false;
};
FiberIdeals fiber_ideals(const GradedIdeal& ideal, const Vec& s);
GradedIdeal special_fiber(const GradedIdeal& ideal);

enum class Verdict { Holds, Fails, NotApplicable, Inconclusive };
std::string to_string(Verdict v);

struct ClassicalGrowth {
    Verdict macaulay_bound = Verdict::NotApplicable;  // h(k+1) <= h(k)^<k> for all k >= 1
    Verdict macaulay_ok = Verdict::NotApplicable;     // the two monotonicity claims
    Verdict gotzmann_persists = Verdict::NotApplicable;
    Verdict saturated_in_degrees = Verdict::NotApplicable;
    Verdict weak_lefschetz_ok = Verdict::NotApplicable;
    Verdict weak_lefschetz_saturated = Verdict::NotApplicable;
    int weak_lefschetz_forms_tried = 0;
};

struct RelativeGrowth {
    bool hypotheses = false;  // pieces i and j free of rank r
    Verdict relative_flat_range = Verdict::NotApplicable;
    Verdict no_new_generators_range = Verdict::NotApplicable;
    Verdict truncation_matches_saturation = Verdict::NotApplicable;  // (S/J)_k = (S/J^sat)_k, free, k >= i
    Verdict saturation_flat_from_r_minus_1 = Verdict::NotApplicable;
    int certified_through = 0;
};

struct GrowthReport {
    std::vector<std::size_t> h;
    ClassicalGrowth classical;
    std::optional<RelativeGrowth> relative;
};

/// Classical checks from a Hilbert function alone (generation degrees unknown).
GrowthReport growth_report(const std::vector<std::size_t>& h, int r, int i);
/// Classical checks for ideals over k; relative checks over local Gorenstein A when j is given.
GrowthReport growth_report(const GradedIdeal& ideal, int r, int i, std::optional<int> j, std::uint64_t seed);

/// Macaulay's upper bound h^<k>.
std::size_t macaulay_bound(std::size_t h, int k);

struct SaturationProbe {
    bool saturation_is_linear_up_to_cap = false;
    std::optional<int> witness_degree;
    int certified_through = 0;
    GradedIdeal saturation;
};
/// For I generated in degrees 0 and 1: is I^sat again generated in degrees 0 and 1?
SaturationProbe saturation_probe(const GradedIdeal& ideal);

/// Degree-wise equality of I with the ideal generated by its pieces of degree <= 1.
bool is_linear(const GradedIdeal& ideal, std::optional<int>* first_extra = nullptr);

}  // namespace apolar

#endif
