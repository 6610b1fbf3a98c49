#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "digifix/exact.hpp"

namespace digifix {

/// A comparison function psi: [0, inf) -> [0, inf) from a fixed catalogue.
class PsiFunction {
public:
    enum class Kind { Linear, Saturating, Table };

    /// psi(t) = c * t.
    static PsiFunction linear(Rational c);
    /// psi(t) = t / (1 + t).
    static PsiFunction saturating();
    /// Piecewise linear through (t, psi(t)) breakpoints, strictly
    /// increasing in t; extended past the ends by the outer segments.
    /// Throws InputError on an empty or unsorted table.
    static PsiFunction table(std::vector<std::pair<Rational, Rational>> breakpoints);

    Kind kind() const { return kind_; }
    const Rational& slope() const { return slope_; }
    const std::vector<std::pair<Rational, Rational>>& breakpoints() const { return breakpoints_; }

    Real operator()(const Real& t) const;
    /// k-fold iterate; iterate(t, 0) == t.
    Real iterate(const Real& t, unsigned k) const;

    /// "t*1/2", "t/(1+t)", "table[...]".
    std::string name() const;

private:
    Kind kind_ = Kind::Linear;
    Rational slope_{0};
    std::vector<std::pair<Rational, Rational>> breakpoints_;
};

/// Nonnegative sequence nu_k. Geometric terms scale * ratio^k with
/// 0 <= ratio < 1 have a convergent sum.
struct NuSeries {
    enum class Kind { Zero, Geometric };
    Kind kind = Kind::Zero;
    Rational scale{0};
    Rational ratio{0};

    static NuSeries zero() { return {}; }
    static NuSeries geometric(Rational scale, Rational ratio) { return {Kind::Geometric, scale, ratio}; }

    Rational term(unsigned k) const;
    std::string name() const;
};

struct PsiSpec {
    PsiFunction psi;
    Rational a{1, 2};
    unsigned k0 = 1;
    NuSeries nu;
};

struct PsiClause {
    std::string name;
    bool passed = true;
    std::string witness;  // first failing sample, empty when passed
};

struct PsiReport {
    std::vector<PsiClause> clauses;

    bool passed() const;
    const PsiClause* failed_clause() const;
};

/// Checks the defining inequalities and their consequences on the given
/// samples:
///   parameters       a in (0,1), k0 >= 1, k_max >= k0, nu convergent
///   psi(0)=0
///   nondecreasing    across the sorted grid
///   domination       psi^{k+1}(t) <= a psi^k(t) + nu_k, k0 <= k <= k_max
///   psi(t)<t         for t > 0
///   iterates->0      psi^k(t) strictly decreasing while positive, k <= k_max
/// Failures are reported, never thrown.
PsiReport psi_class_check(const PsiSpec& spec, const std::vector<Real>& t_grid, unsigned k_max);

/// Grid 0, 1/4, 1/2, ..., t_max used when no explicit grid is given.
std::vector<Real> default_psi_grid(const Rational& t_max);

}  // namespace digifix
