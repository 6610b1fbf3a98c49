#include "digifix/classifiers.hpp"

#include <algorithm>

#include "digifix/errors.hpp"

namespace digifix {

namespace {

Rational power_ratio(const DistanceTable& table, std::size_t fi, std::size_t fj, std::size_t i, std::size_t j)
{
    return Rational(table.power(fi, fj), table.power(i, j));
}

}  // namespace

ContractionCertificate contraction_certificate(const SelfMap& f, const DistanceTable& table)
{
    ContractionCertificate cert;
    cert.index = table.root_index();
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
            Rational ratio = power_ratio(table, f(i), f(j), i, j);
            if (!cert.witness || ratio > cert.ratio_power) {
                cert.ratio_power = std::move(ratio);
                cert.witness = IndexPair{i, j};
            }
        }
    }
    cert.lambda_star = Real::root(cert.ratio_power, cert.index);
    cert.feasible = cert.ratio_power < 1;
    return cert;
}

ExpansiveCertificate expansive_certificate(const SelfMap& f, const DistanceTable& table)
{
    ExpansiveCertificate cert;
    cert.index = table.root_index();
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
            Rational ratio = power_ratio(table, f(i), f(j), i, j);
            if (!cert.ratio_power || ratio < *cert.ratio_power) {
                cert.ratio_power = std::move(ratio);
                cert.witness = IndexPair{i, j};
            }
        }
    }
    if (cert.ratio_power) {
        cert.alpha_star = Real::root(*cert.ratio_power, cert.index);
        cert.feasible = *cert.ratio_power > 1;
    }
    return cert;
}

ThetaEnvelope theta_envelope(const SelfMap& f, const DistanceTable& table)
{
    const unsigned index = table.root_index();
    std::map<Integer, std::pair<Integer, IndexPair>> worst;  // t power -> (m power, witness)
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
            const Integer& t = table.power(i, j);
            const Integer& m = table.power(f(i), f(j));
            auto it = worst.find(t);
            if (it == worst.end()) {
                worst.emplace(t, std::pair{m, IndexPair{i, j}});
            } else if (m > it->second.first) {
                it->second = {m, IndexPair{i, j}};
            }
        }
    }
    ThetaEnvelope out;
    Integer running = 0;
    for (const auto& [t, entry] : worst) {
        if (entry.first > running) running = entry.first;
        out.levels.push_back({Distance{t, index}, Distance{entry.first, index}, Distance{running, index}, entry.second});
        // M < sqrt(t)  <=>  M_pow^2 < t_pow at a common index
        if (out.feasible && !(running * running < t)) {
            out.feasible = false;
            out.failing_level = out.levels.size() - 1;
        }
    }
    return out;
}

ThetaSamples theta_witness(const ThetaEnvelope& envelope)
{
    if (!envelope.feasible) throw PreconditionError("no theta witness for an infeasible envelope");
    ThetaSamples out;
    out.points.emplace_back(Real(0), Real(0));
    for (const auto& level : envelope.levels) {
        const Real t = level.t.value();
        out.points.emplace_back(t, (level.envelope.value() + t.sqrt()) / Real(2));
    }
    return out;
}

namespace {

void check_theta_membership(const ThetaSamples& theta)
{
    auto points = theta.points;
    std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto& [t, v] = points[k];
        if (t.sign() < 0) throw InputError("theta sample at negative t=" + t.to_string());
        if (k > 0 && points[k - 1].first == t) throw InputError("theta sampled twice at t=" + t.to_string());
        if (t.is_zero()) {
            if (!v.is_zero()) throw InputError("theta violates theta(0)=0: theta(0)=" + v.to_string());
            continue;
        }
        if (v.sign() <= 0) throw InputError("theta violates theta(t)>0 for t>0 at t=" + t.to_string());
        if (!(v * v < t)) throw InputError("theta violates theta(t)<sqrt(t) at t=" + t.to_string());
        if (k > 0 && !(points[k - 1].second < v)) {
            throw InputError("theta violates strictly increasing between t=" + points[k - 1].first.to_string() +
                             " and t=" + t.to_string());
        }
    }
}

}  // namespace

bool verify_theta(const SelfMap& f, const DistanceTable& table, const ThetaSamples& theta)
{
    check_theta_membership(theta);
    std::map<Integer, Real> at_power;
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
            const Integer& p = table.power(i, j);
            if (at_power.contains(p)) continue;
            const Real& t = table.value(i, j);
            auto it = std::find_if(theta.points.begin(), theta.points.end(),
                                   [&](const auto& sample) { return sample.first == t; });
            if (it == theta.points.end()) {
                throw InputError("theta not supplied at realized distance " + t.to_string());
            }
            at_power.emplace(p, it->second);
        }
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
            if (table.value(f(i), f(j)) > at_power.at(table.power(i, j))) return false;
        }
    }
    return true;
}

AdmissibilityWeight::AdmissibilityWeight(std::size_t n, std::vector<Rational> values)
    : n_(n), values_(std::move(values))
{
    if (values_.size() != n_ * n_) {
        throw InputError("beta table needs " + std::to_string(n_ * n_) + " entries, got " +
                         std::to_string(values_.size()));
    }
    for (const auto& v : values_) {
        if (v < 0) throw InputError("beta takes nonnegative values, got " + format_rational(v));
    }
}

AdmissibilityWeight AdmissibilityWeight::constant(std::size_t n, const Rational& value)
{
    AdmissibilityWeight out(n, std::vector<Rational>(n * n, value));
    out.name_ = "constant " + format_rational(value);
    return out;
}

AdmissibilityWeight AdmissibilityWeight::diagonal(std::size_t n)
{
    std::vector<Rational> values(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) values[i * n + i] = 1;
    AdmissibilityWeight out(n, std::move(values));
    out.name_ = "diagonal";
    return out;
}

AdmissibilityWeight AdmissibilityWeight::pair(std::size_t n, std::size_t i, std::size_t j)
{
    if (i >= n || j >= n) throw InputError("beta pair index out of range");
    std::vector<Rational> values(n * n, Rational(0));
    values[i * n + j] = 1;
    AdmissibilityWeight out(n, std::move(values));
    out.name_ = "pair " + std::to_string(i) + "," + std::to_string(j);
    return out;
}

std::optional<IndexPair> admissibility_violation(const SelfMap& f, const AdmissibilityWeight& beta)
{
    if (beta.size() != f.size()) throw InputError("beta table size does not match the image");
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (beta(i, j) >= 1 && beta(f(i), f(j)) < 1) return IndexPair{i, j};
        }
    }
    return std::nullopt;
}

bool is_beta_admissible(const SelfMap& f, const AdmissibilityWeight& beta)
{
    return !admissibility_violation(f, beta);
}

BetaPsiChecker::BetaPsiChecker(const DistanceTable& table, PsiSpec psi, const std::vector<Real>& extra_grid,
                               unsigned k_max)
    : table_(table), psi_(std::move(psi))
{
    std::vector<Real> grid = extra_grid;
    std::vector<Integer> powers;
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = 0; j < table.size(); ++j) {
            if (!psi_of_power_.contains(table.power(i, j))) {
                psi_of_power_.emplace(table.power(i, j), Real(0));
                powers.push_back(table.power(i, j));
                grid.push_back(table.value(i, j));
            }
        }
    }
    report_ = psi_class_check(psi_, grid, std::max(k_max, psi_.k0));
    if (!report_.passed()) {
        std::string failed;
        for (const auto& clause : report_.clauses) {
            if (clause.passed) continue;
            if (!failed.empty()) failed += ", ";
            failed += "'" + clause.name + "' (" + clause.witness + ")";
        }
        throw InputError("psi " + psi_.psi.name() + " fails " + failed);
    }
    for (const auto& p : powers) psi_of_power_[p] = psi_.psi(Distance{p, table.root_index()}.value());
}

std::optional<IndexPair> BetaPsiChecker::violation(const SelfMap& f, const AdmissibilityWeight& beta) const
{
    if (beta.size() != f.size() || f.size() != table_.size()) {
        throw InputError("beta table, map and distance table sizes differ");
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < f.size(); ++j) {
            const Rational& b = beta(i, j);
            if (b == 0) continue;
            const Integer& image_power = table_.power(f(i), f(j));
            if (image_power == 0) continue;
            if (Real(b) * table_.value(f(i), f(j)) > psi_of_power_.at(table_.power(i, j))) return IndexPair{i, j};
        }
    }
    return std::nullopt;
}

bool BetaPsiChecker::operator()(const SelfMap& f, const AdmissibilityWeight& beta) const
{
    return !violation(f, beta);
}

bool beta_psi_contractive(const SelfMap& f, const DistanceTable& table, const AdmissibilityWeight& beta,
                          const PsiSpec& psi)
{
    return BetaPsiChecker(table, psi)(f, beta);
}

Real jain_mu(const SelfMap& f, const DistanceTable& table, std::size_t x, std::size_t y, JainVariant variant)
{
    const Real& dxy = table.value(x, y);
    const Real own = (table.value(x, f(x)) + table.value(y, f(y))) / Real(2);
    Real out = std::max(dxy, own);
    if (variant == JainVariant::HalvedCross) {
        out = std::max(out, (table.value(x, f(y)) + table.value(y, f(x))) / Real(2));
    } else {
        out = std::max({out, table.value(x, f(y)), table.value(y, f(x))});
    }
    return out;
}

PremiseResult jain_premise(const SelfMap& f, const DistanceTable& table, const Rational& alpha, JainVariant variant)
{
    if (alpha <= 1) throw InputError("expansive constant alpha must exceed 1, got " + format_rational(alpha));
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
            if (table.value(f(i), f(j)) < Real(alpha) * jain_mu(f, table, i, j, variant)) {
                return {false, IndexPair{i, j}};
            }
        }
    }
    return {};
}

Real gupta_mu(const SelfMap& f, const DistanceTable& table, std::size_t x, std::size_t y)
{
    const Real& dxy = table.value(x, y);
    const Real& dxfx = table.value(x, f(x));
    const Real& dyfy = table.value(y, f(y));
    const Real& dfxfy = table.value(f(x), f(y));
    const Real first = (dyfy * (Real(1) + dxfx) / (Real(1) + dxy) + dfxfy + dxy) / Real(2);
    const Real second = dxfx * (Real(1) + dyfy) / (Real(1) + dfxfy);
    return std::max(first, second);
}

PremiseResult gupta_premise(const SelfMap& f, const DistanceTable& table)
{
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = 0; j < table.size(); ++j) {
            if (i == j) continue;
            if (!(table.value(f(i), f(j)) < gupta_mu(f, table, i, j))) return {false, IndexPair{i, j}};
        }
    }
    return {};
}

RationalContractionParams RationalContractionParams::make(Rational xi1, Rational xi2)
{
    if (xi1 <= 0) throw InputError("rational contraction parameters violate xi1 > 0");
    if (xi2 <= 0) throw InputError("rational contraction parameters violate xi2 > 0");
    if (xi1 + xi2 >= 1) throw InputError("rational contraction parameters violate xi1 + xi2 < 1");
    if (xi2 / (1 - xi1) >= 1) throw InputError("rational contraction parameters violate eta < 1");
    return RationalContractionParams(std::move(xi1), std::move(xi2));
}

namespace {

RationalPairCheck rational_pair(const SelfMap& f, const DistanceTable& table, const RationalContractionParams& params,
                                std::size_t u, std::size_t v)
{
    Real lhs = table.value(f(u), f(v));
    Real rhs = Real(params.xi1()) * table.value(v, f(v)) * (Real(1) + table.value(u, f(u))) /
                   (Real(1) + table.value(u, v)) +
               Real(params.xi2()) * table.value(u, v);
    const bool holds = lhs <= rhs;
    return {u, v, std::move(lhs), std::move(rhs), holds};
}

}  // namespace

std::vector<RationalPairCheck> rational_contraction_pairs(const SelfMap& f, const DistanceTable& table,
                                                          const RationalContractionParams& params)
{
    std::vector<RationalPairCheck> out;
    for (std::size_t u = 0; u < table.size(); ++u) {
        for (std::size_t v = 0; v < table.size(); ++v) out.push_back(rational_pair(f, table, params, u, v));
    }
    return out;
}

PremiseResult rational_contraction_check(const SelfMap& f, const DistanceTable& table,
                                         const RationalContractionParams& params)
{
    for (std::size_t u = 0; u < table.size(); ++u) {
        for (std::size_t v = 0; v < table.size(); ++v) {
            if (!rational_pair(f, table, params, u, v).holds) return {false, IndexPair{u, v}};
        }
    }
    return {};
}

MishraReport mishra_premises(const SelfMap& f, const SelfMap& g, const DistanceTable& table, const Rational& alpha)
{
    if (!(alpha > 0 && alpha < 1)) {
        throw InputError("alpha must lie in (0,1), got " + format_rational(alpha));
    }
    if (!same_image(f, g)) throw InputError("f and g live on different images");
    MishraReport report;
    const std::size_t n = f.size();
    for (std::size_t x = 0; x < n; ++x) {
        if (f(g(x)) != g(f(x))) {
            report.commuting = false;
            report.commuting_witness = x;
            break;
        }
    }
    std::vector<bool> in_f_range(n, false);
    for (std::size_t x = 0; x < n; ++x) in_f_range[f(x)] = true;
    for (std::size_t x = 0; x < n; ++x) {
        if (!in_f_range[g(x)]) {
            report.range_inclusion = false;
            report.inclusion_witness = x;
            break;
        }
    }
    // d(gx,gy) <= alpha d(fx,fy)  <=>  d(gx,gy)^k <= alpha^k d(fx,fy)^k
    const Rational alpha_power = rational_pow(alpha, table.root_index());
    for (std::size_t x = 0; x < n && report.inequality; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (Rational(table.power(g(x), g(y))) > alpha_power * Rational(table.power(f(x), f(y)))) {
                report.inequality = false;
                report.inequality_witness = IndexPair{x, y};
                break;
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (f(x) == x && g(x) == x) report.common_fixed_points.push_back(x);
    }
    return report;
}

}  // namespace digifix
