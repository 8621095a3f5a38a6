#ifndef APOLAR_FAMILIES_HPP
#define APOLAR_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apolar/apolar.hpp"

namespace apolar {

struct FamiliarReport {
    int r = 0;
    std::vector<std::size_t> special_h;  // Hilbert function of the saturated special fiber
    int certified_through = 0;
    int stable_from = 0;                 // first degree of the final constant run
    bool finite = false;
    bool degree_r = false;
    bool flat = false;

    /// The special fiber of nu_d(R) spans P^{r-1}.
    bool independent_at(int d) const;
};

/// Needs a cap large enough for the special fiber to stabilize.
FamiliarReport familiar_report(const GradedIdeal& ideal, int r);

/// Linear span over A: I_0 inside A, I_1 inside A (x) (linear forms in nvars variables).
struct SpanOverA {
    AlgebraPtr algebra;
    int nvars = 0;
    Subspace i0;
    Subspace i1;

    /// Dimension of the special fiber of the span; nullopt when I_0 has a unit.
    std::optional<std::size_t> fiber_dimension() const;
    /// The linear ideal (I_0, I_1) up to the cap.
    GradedIdeal ideal(int cap) const;
    std::vector<PolyOverA> linear_generators() const;
};

/// Span of nu_d(R); the ambient variables are the degree-d monomials in order.
SpanOverA veronese_span(const GradedIdeal& ideal, int d);

struct SpanRankReport {
    std::size_t fiber_dimension = 0;
    bool holds = false;                // I_d has corank r and a free complement
    std::vector<Exponent> complement;  // monomials spanning a free complement of I_d
};

/// Throws DomainError when R is not independent at d.
SpanRankReport span_rank_check(const GradedIdeal& ideal, int d, int r);

/// {Theta over k : 1 (x) Theta in J}, degree by degree.
GradedIdeal relative_span_ideal(const GradedIdeal& j);

struct ApolarityReport {
    bool ideal_side = false;
    bool span_side = false;
    bool agree() const { return ideal_side == span_side; }
};

/// F needs a nonzero residue and I a cap of at least deg F.
ApolarityReport apolarity_check(const DPOverA& f, const GradedIdeal& ideal);

struct LiftResult {
    GradedIdeal ideal;
    bool ok = false;
    int certified_through = 0;
    FamiliarReport report{};
    bool ann_contains = false;      // I(R) inside Ann(F) through deg F
    bool in_span = false;           // F in the relative span of nu_d(R)
    bool generated_matches = false; // I(R) agrees with J through degree i
    std::string diagnostics{};
};

/// cap < 0 means 2d + 2. Throws DomainError when the constant-rank precondition fails.
LiftResult lift_to_familiar(const DPOverA& f, int r, int i, int cap = -1);

struct PartialIdealReport {
    GradedIdeal partial;
    int certified_through = 0;
    Verdict special_inside = Verdict::NotApplicable;  // (i)
    Verdict inside_ann = Verdict::NotApplicable;      // (ii), when F is given
    Verdict saturated = Verdict::NotApplicable;       // (iii) from degree 2r-1
    Verdict differs = Verdict::NotApplicable;         // (iv)
};

/// Base k[t]/(t^2) only. F, when given, is a tensor over the ground field.
PartialIdealReport partial_ideal(const GradedIdeal& ideal, int r, const std::optional<DPOverA>& f = std::nullopt);

struct StratumReport {
    std::size_t rank = 0;
    bool certified = false;
};

StratumReport cactus_stratum(const DPOverA& f);

/// Membership of F (over F_p, p <= 7) in the cactus variety by enumerating
/// subschemes of degree <= r. P^1 takes any r, larger ambients only r <= 2.
bool brute_force_cactus(const DPOverA& f, int r);

/// Pullback of an ideal along a base change A -> A'.
GradedIdeal base_change(const GradedIdeal& ideal, const AlgebraMap& xi);

struct ScanPoint {
    std::vector<long long> coefficients;
    std::size_t rank = 0;
    std::optional<int> brute_class;  // smallest r' <= r with brute-force membership
};

struct ScanReport {
    std::size_t points = 0;
    std::vector<std::size_t> rank_counts;  // by catalecticant rank
    std::vector<ScanPoint> disagreements;
};

/// Points of P(S^(d) k^{n+1}) over F_p; fans out over jobs workers.
ScanReport scan(int n, int d, int r, std::uint32_t p, unsigned jobs = 1);

inline constexpr std::uint64_t scan_point_limit = 10'000'000;

}  // namespace apolar

#endif
