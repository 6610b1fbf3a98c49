#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digifix/exact.hpp"
#include "digifix/maps.hpp"
#include "digifix/metrics.hpp"
#include "digifix/psi.hpp"

namespace digifix {

/// Largest ratio d(fx,fy)/d(x,y) over distinct pairs. The ratio is kept
/// as an exact rational on root_index-th powers; lambda_star is its root.
struct ContractionCertificate {
    Rational ratio_power{0};
    unsigned index = 1;
    Real lambda_star;
    bool feasible = true;  // lambda_star < 1
    std::optional<IndexPair> witness;
};

ContractionCertificate contraction_certificate(const SelfMap& f, const DistanceTable& table);

/// Smallest ratio over distinct pairs. A singleton has no pair: alpha_star
/// is absent (infinite) and the certificate is vacuously feasible.
struct ExpansiveCertificate {
    std::optional<Rational> ratio_power;
    unsigned index = 1;
    std::optional<Real> alpha_star;
    bool feasible = true;  // alpha_star > 1
    std::optional<IndexPair> witness;
};

ExpansiveCertificate expansive_certificate(const SelfMap& f, const DistanceTable& table);

struct ThetaLevel {
    Distance t;         // realized positive distance
    Distance m;         // max d(fx,fy) over pairs at distance t
    Distance envelope;  // running max of m
    IndexPair witness;  // first pair attaining m
};

struct ThetaEnvelope {
    std::vector<ThetaLevel> levels;  // increasing t
    bool feasible = true;            // envelope(t) < sqrt(t) at every level
    std::optional<std::size_t> failing_level;
};

ThetaEnvelope theta_envelope(const SelfMap& f, const DistanceTable& table);

/// theta given by its values at finitely many t.
struct ThetaSamples {
    std::vector<std::pair<Real, Real>> points;  // (t, theta(t))
};

/// The piecewise interpolant through (t, (M(t) + sqrt t) / 2) for a
/// feasible envelope; throws PreconditionError when infeasible.
ThetaSamples theta_witness(const ThetaEnvelope& envelope);

/// d(fx,fy) <= theta(d(x,y)) for all pairs. Throws InputError naming the
/// clause when the samples break membership (strictly increasing,
/// theta(t) < sqrt t, theta(t) = 0 iff t = 0) or miss a realized distance.
bool verify_theta(const SelfMap& f, const DistanceTable& table, const ThetaSamples& theta);

/// beta: X x X -> [0, inf), total.
class AdmissibilityWeight {
public:
    /// Row-major n x n table. Throws InputError on a wrong size or a
    /// negative entry.
    AdmissibilityWeight(std::size_t n, std::vector<Rational> values);

    static AdmissibilityWeight constant(std::size_t n, const Rational& value);
    /// 1 on the diagonal, 0 elsewhere.
    static AdmissibilityWeight diagonal(std::size_t n);
    /// 1 at (i, j) only.
    static AdmissibilityWeight pair(std::size_t n, std::size_t i, std::size_t j);

    std::size_t size() const { return n_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
    const std::vector<Rational>& values() const { return values_; }
    std::string name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

private:
    std::size_t n_;
    std::vector<Rational> values_;
    std::string name_ = "table";
};

/// beta(x,y) >= 1 implies beta(fx,fy) >= 1, every ordered pair.
bool is_beta_admissible(const SelfMap& f, const AdmissibilityWeight& beta);
std::optional<IndexPair> admissibility_violation(const SelfMap& f, const AdmissibilityWeight& beta);

/// Checks beta(x,y) d(fx,fy) <= psi(d(x,y)) on one table, with psi
/// validated once on the realized distances and psi values cached.
class BetaPsiChecker {
public:
    static constexpr unsigned kDefaultKMax = 20;

    /// Throws InputError naming the failed clause when psi fails
    /// psi_class_check on the realized distances plus `extra_grid`.
    BetaPsiChecker(const DistanceTable& table, PsiSpec psi, const std::vector<Real>& extra_grid = {},
                   unsigned k_max = kDefaultKMax);

    bool operator()(const SelfMap& f, const AdmissibilityWeight& beta) const;
    std::optional<IndexPair> violation(const SelfMap& f, const AdmissibilityWeight& beta) const;

    const PsiReport& report() const { return report_; }

private:
    const DistanceTable& table_;
    PsiSpec psi_;
    PsiReport report_;
    std::map<Integer, Real> psi_of_power_;
};

bool beta_psi_contractive(const SelfMap& f, const DistanceTable& table, const AdmissibilityWeight& beta,
                          const PsiSpec& psi);

enum class JainVariant {
    HalvedCross,  // (d(x,Sy) + d(y,Sx)) / 2
    FullCross,    // d(x,Sy) and d(y,Sx) separately
};

Real jain_mu(const SelfMap& f, const DistanceTable& table, std::size_t x, std::size_t y,
             JainVariant variant = JainVariant::HalvedCross);

struct PremiseResult {
    bool holds = true;
    std::optional<IndexPair> witness;  // first failing pair
};

/// d(fx,fy) >= alpha * mu(x,y) over distinct pairs. Throws InputError for
/// alpha <= 1.
PremiseResult jain_premise(const SelfMap& f, const DistanceTable& table, const Rational& alpha,
                           JainVariant variant = JainVariant::HalvedCross);

/// Evaluator only; no fixed-point statement is attached to it.
Real gupta_mu(const SelfMap& f, const DistanceTable& table, std::size_t x, std::size_t y);

/// d(Tx,Ty) < mu(x,y) for x != y.
PremiseResult gupta_premise(const SelfMap& f, const DistanceTable& table);

class RationalContractionParams {
public:
    /// Throws InputError naming the clause: "xi1 > 0", "xi2 > 0",
    /// "xi1 + xi2 < 1" or "eta < 1".
    static RationalContractionParams make(Rational xi1, Rational xi2);

    const Rational& xi1() const { return xi1_; }
    const Rational& xi2() const { return xi2_; }
    Rational eta() const { return xi2_ / (1 - xi1_); }

private:
    RationalContractionParams(Rational xi1, Rational xi2) : xi1_(std::move(xi1)), xi2_(std::move(xi2)) {}

    Rational xi1_;
    Rational xi2_;
};

struct RationalPairCheck {
    std::size_t u;
    std::size_t v;
    Real lhs;
    Real rhs;
    bool holds;
};

/// d(Ku,Kv) <= xi1 d(v,Kv) [1 + d(u,Ku)] / (1 + d(u,v)) + xi2 d(u,v), all
/// ordered pairs (u, v) including u = v.
PremiseResult rational_contraction_check(const SelfMap& f, const DistanceTable& table,
                                         const RationalContractionParams& params);
std::vector<RationalPairCheck> rational_contraction_pairs(const SelfMap& f, const DistanceTable& table,
                                                          const RationalContractionParams& params);

struct MishraReport {
    bool commuting = true;
    bool range_inclusion = true;  // g(X) subset of f(X)
    bool inequality = true;       // d(gx,gy) <= alpha d(fx,fy)
    std::optional<std::size_t> commuting_witness;
    std::optional<std::size_t> inclusion_witness;
    std::optional<IndexPair> inequality_witness;
    std::vector<std::size_t> common_fixed_points;

    bool premises_hold() const { return commuting && range_inclusion && inequality; }
};

/// Throws InputError for alpha outside (0, 1) or maps on different images.
MishraReport mishra_premises(const SelfMap& f, const SelfMap& g, const DistanceTable& table, const Rational& alpha);

}  // namespace digifix
