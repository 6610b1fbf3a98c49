#include "digifix/psi.hpp"

#include <algorithm>

#include "digifix/errors.hpp"

namespace digifix {

PsiFunction PsiFunction::linear(Rational c)
{
    if (c < 0) throw InputError("linear psi needs a nonnegative slope, got " + format_rational(c));
    PsiFunction out;
    out.kind_ = Kind::Linear;
    out.slope_ = std::move(c);
    return out;
}

PsiFunction PsiFunction::saturating()
{
    PsiFunction out;
    out.kind_ = Kind::Saturating;
    return out;
}

PsiFunction PsiFunction::table(std::vector<std::pair<Rational, Rational>> breakpoints)
{
    if (breakpoints.empty()) throw InputError("psi table is empty");
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (breakpoints[i].first < 0 || breakpoints[i].second < 0) {
            throw InputError("psi table entries must be nonnegative");
        }
        if (i > 0 && !(breakpoints[i - 1].first < breakpoints[i].first)) {
            throw InputError("psi table breakpoints must be strictly increasing in t");
        }
    }
    PsiFunction out;
    out.kind_ = Kind::Table;
    out.breakpoints_ = std::move(breakpoints);
    return out;
}

Real PsiFunction::operator()(const Real& t) const
{
    switch (kind_) {
    case Kind::Linear:
        return Real(slope_) * t;
    case Kind::Saturating:
        return t / (Real(1) + t);
    case Kind::Table:
        break;
    }
    const auto& bp = breakpoints_;
    if (bp.size() == 1) return Real(bp.front().second);
    // segment [s, s+1] containing t, outer segments extended
    std::size_t s = 0;
    while (s + 2 < bp.size() && t > Real(bp[s + 1].first)) ++s;
    const auto& [t0, v0] = bp[s];
    const auto& [t1, v1] = bp[s + 1];
    const Rational slope = (v1 - v0) / (t1 - t0);
    return Real(v0) + Real(slope) * (t - Real(t0));
}

Real PsiFunction::iterate(const Real& t, unsigned k) const
{
    Real value = t;
    for (unsigned i = 0; i < k; ++i) value = (*this)(value);
    return value;
}

std::string PsiFunction::name() const
{
    switch (kind_) {
    case Kind::Linear:
        return "t*" + format_rational(slope_);
    case Kind::Saturating:
        return "t/(1+t)";
    case Kind::Table:
        break;
    }
    std::string out = "table[";
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(breakpoints_[i].first) + "->" + format_rational(breakpoints_[i].second);
    }
    return out + "]";
}

Rational NuSeries::term(unsigned k) const
{
    if (kind == Kind::Zero) return 0;
    return scale * rational_pow(ratio, k);
}

std::string NuSeries::name() const
{
    if (kind == Kind::Zero) return "0";
    return format_rational(scale) + "*(" + format_rational(ratio) + ")^k";
}

bool PsiReport::passed() const
{
    return std::all_of(clauses.begin(), clauses.end(), [](const PsiClause& c) { return c.passed; });
}

const PsiClause* PsiReport::failed_clause() const
{
    for (const auto& clause : clauses) {
        if (!clause.passed) return &clause;
    }
    return nullptr;
}

namespace {

void fail(PsiClause& clause, std::string witness)
{
    if (clause.passed) {
        clause.passed = false;
        clause.witness = std::move(witness);
    }
}

}  // namespace

PsiReport psi_class_check(const PsiSpec& spec, const std::vector<Real>& t_grid, unsigned k_max)
{
    PsiClause params{"parameters", true, {}};
    PsiClause at_zero{"psi(0)=0", true, {}};
    PsiClause monotone{"nondecreasing", true, {}};
    PsiClause domination{"domination", true, {}};
    PsiClause below{"psi(t)<t", true, {}};
    PsiClause vanishing{"iterates->0", true, {}};

    if (!(spec.a > 0 && spec.a < 1)) fail(params, "a=" + format_rational(spec.a));
    else if (spec.k0 < 1) fail(params, "k0=0");
    else if (k_max < spec.k0) fail(params, "k_max=" + std::to_string(k_max) + " < k0");
    else if (t_grid.empty()) fail(params, "empty grid");
    else if (spec.nu.kind == NuSeries::Kind::Geometric &&
             (spec.nu.scale < 0 || spec.nu.ratio < 0 || !(spec.nu.ratio < 1))) {
        fail(params, "nu=" + spec.nu.name());
    }

    std::vector<Real> grid = t_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (const Real& t : grid) {
        if (t < Real(0)) fail(params, "t=" + t.to_string());
    }

    if (!spec.psi(Real(0)).is_zero()) fail(at_zero, "psi(0)=" + spec.psi(Real(0)).to_string());

    if (params.passed) {
        std::vector<Real> values;
        values.reserve(grid.size());
        for (const Real& t : grid) values.push_back(spec.psi(t));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (values[i] < Real(0)) fail(monotone, "psi(" + grid[i].to_string() + ") < 0");
            if (i > 0 && values[i] < values[i - 1]) {
                fail(monotone, "t=" + grid[i - 1].to_string() + ".." + grid[i].to_string());
            }
            if (grid[i].sign() > 0 && !(values[i] < grid[i])) {
                fail(below, "t=" + grid[i].to_string() + ", psi=" + values[i].to_string());
            }
        }

        for (const Real& t : grid) {
            std::vector<Real> iterates{t};  // iterates[k] = psi^k(t)
            for (unsigned k = 0; k <= k_max; ++k) {
                iterates.push_back(iterates.back().is_zero() ? Real(0) : spec.psi(iterates.back()));
            }
            for (unsigned k = spec.k0; k <= k_max; ++k) {
                if (iterates[k + 1] > Real(spec.a) * iterates[k] + Real(spec.nu.term(k))) {
                    fail(domination, "t=" + t.to_string() + ", k=" + std::to_string(k));
                    break;
                }
            }
            for (unsigned k = 0; k <= k_max; ++k) {
                if (iterates[k].sign() > 0 && !(iterates[k + 1] < iterates[k])) {
                    fail(vanishing, "t=" + t.to_string() + ", k=" + std::to_string(k));
                    break;
                }
            }
        }
    }

    return PsiReport{{params, at_zero, monotone, domination, below, vanishing}};
}

std::vector<Real> default_psi_grid(const Rational& t_max)
{
    std::vector<Real> grid;
    for (Rational t = 0; t <= t_max; t += Rational(1, 4)) grid.emplace_back(t);
    return grid;
}

}  // namespace digifix
