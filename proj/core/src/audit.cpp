#include "digifix/audit.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "digifix/classifiers.hpp"
#include "digifix/errors.hpp"
#include "digifix/expression.hpp"
#include "digifix/maps.hpp"
#include "digifix/psi.hpp"
#include "digifix/solvers.hpp"

namespace digifix {

std::string to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::ConfirmsTheorem: return "CONFIRMS_THEOREM";
    case Verdict::CounterexampleConfirmed: return "COUNTEREXAMPLE_CONFIRMED";
    case Verdict::FlawDemonstrated: return "FLAW_DEMONSTRATED";
    }
    return "?";
}

Verdict parse_verdict(const std::string& text)
{
    for (Verdict v : {Verdict::ConfirmsTheorem, Verdict::CounterexampleConfirmed, Verdict::FlawDemonstrated}) {
        if (to_string(v) == text) return v;
    }
    throw InputError("unknown verdict '" + text + "'");
}

std::shared_ptr<const DigitalImage> segment_image(int k)
{
    std::vector<Point> points;
    for (int x = 0; x <= k; ++x) points.push_back(Point{x});
    return make_image(std::move(points), 1);
}

std::shared_ptr<const DigitalImage> rectangle_image(int width, int height, int u)
{
    std::vector<Point> points;
    for (int x = 0; x < width; ++x) {
        for (int y = 0; y < height; ++y) points.push_back(Point{x, y});
    }
    return make_image(std::move(points), u);
}

std::shared_ptr<const DigitalImage> square_image(int u) { return rectangle_image(2, 2, u); }

std::shared_ptr<const DigitalImage> gap_image() { return make_image({Point{0}, Point{1}, Point{3}}, 1); }

std::string describe_image(const DigitalImage& image)
{
    const auto& pts = image.points();
    if (image.dimension() == 1) {
        bool segment = pts.front()[0] == 0;
        for (std::size_t i = 0; i < pts.size() && segment; ++i) segment = pts[i][0] == static_cast<Coord>(i);
        if (segment) return "[0," + std::to_string(pts.size() - 1) + "]";
    }
    if (image.dimension() == 2 && pts.front() == Point{0, 0}) {
        const Coord w = pts.back()[0] + 1;
        const Coord h = pts.back()[1] + 1;
        bool rect = static_cast<Coord>(pts.size()) == w * h;
        for (std::size_t i = 0; i < pts.size() && rect; ++i) {
            rect = pts[i] == Point{static_cast<Coord>(i) / h, static_cast<Coord>(i) % h};
        }
        if (rect) {
            const std::string u = " u=" + std::to_string(image.u());
            if (w == 2 && h == 2) return "square" + u;
            return "[0," + std::to_string(w - 1) + "]x[0," + std::to_string(h - 1) + "]" + u;
        }
    }
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ",";
        out += image.dimension() == 1 ? std::to_string(pts[i][0]) : pts[i].to_string();
    }
    out += "}";
    if (image.dimension() > 1) out += " u=" + std::to_string(image.u());
    return out;
}

SweepStats make_stats(const DigitalImage& image, const std::string& metric, const std::string& premise,
                      const std::string& conclusion, const SweepResult& result)
{
    return {describe_image(image), metric,         premise,        conclusion,
            result.exhaustive,     result.space,   result.visited, result.premise_held,
            result.violations};
}

namespace {

Json table_json(const DigitalImage& image, std::span<const std::size_t> table)
{
    Json out = Json::object();
    for (std::size_t i = 0; i < table.size(); ++i) out[image.point(i).to_string()] = image.point(table[i]).to_string();
    return out;
}

Json points_json(const DigitalImage& image, const std::vector<std::size_t>& indices)
{
    Json out = Json::array();
    for (std::size_t i : indices) out.push_back(image.point(i).to_string());
    return out;
}

void decide(AuditReport& report)
{
    const bool premises = std::all_of(report.premises.begin(), report.premises.end(),
                                      [](const Check& c) { return c.passed; });
    if (!premises) report.verdict = Verdict::FlawDemonstrated;
    else if (!report.conclusion.passed) report.verdict = Verdict::CounterexampleConfirmed;
    else report.verdict = Verdict::ConfirmsTheorem;
}

struct Space {
    std::shared_ptr<const DigitalImage> image;
    std::optional<MetricSpec> metric;

    std::string metric_name() const { return metric ? metric->name() : "none"; }
};

/// Family members with |X| in [lo, hi].
std::vector<std::shared_ptr<const DigitalImage>> family(std::size_t lo, std::size_t hi)
{
    std::vector<std::shared_ptr<const DigitalImage>> out;
    for (int k = 0; static_cast<std::size_t>(k) + 1 <= hi; ++k) {
        if (static_cast<std::size_t>(k) + 1 >= lo) out.push_back(segment_image(k));
    }
    if (lo <= 4 && hi >= 4) {
        out.push_back(square_image(1));
        out.push_back(square_image(2));
    }
    if (lo <= 3 && hi >= 3) out.push_back(gap_image());
    return out;
}

/// lp metrics on every image, plus shortest-path on the connected ones.
std::vector<Space> metric_spaces(const std::vector<std::shared_ptr<const DigitalImage>>& images,
                                 const std::vector<unsigned>& ps, bool shortest_path)
{
    std::vector<Space> out;
    for (const auto& image : images) {
        for (unsigned p : ps) out.push_back({image, MetricSpec::lp(p)});
        if (shortest_path && is_connected(*image)) out.push_back({image, MetricSpec::shortest_path()});
    }
    return out;
}

struct SweepCase {
    std::string premise;
    std::string conclusion;
    std::vector<Space> spaces;
    std::optional<Sampling> sampling;
};

/// Shared shape of sweep-backed audits: every space is enumerated and each
/// premise-satisfying map must meet the conclusion.
AuditReport sweep_case(const std::string& id, const std::vector<SweepCase>& cases, const AuditOptions& options,
                       const std::function<MapPredicate(const Space&, const std::string&)>& custom = {})
{
    AuditReport report;
    report.case_id = id;
    std::uint64_t visited = 0;
    std::uint64_t held = 0;
    std::uint64_t violations = 0;
    bool all_exhaustive = true;
    for (const auto& c : cases) {
        for (const auto& space : c.spaces) {
            std::shared_ptr<const DistanceTable> table;
            if (space.metric) table = std::make_shared<const DistanceTable>(space.image, *space.metric);
            MapPredicate premise = make_premise(c.premise, table);
            MapPredicate conclusion = custom ? custom(space, c.conclusion) : MapPredicate{};
            if (!conclusion) conclusion = make_conclusion(c.conclusion, *space.image);
            const SweepResult result = sweep_maps(space.image, premise, conclusion, SweepSpec{}.budget, c.sampling,
                                                  SweepSpec{}.max_counterexamples, options.workers);
            report.sweeps.push_back(make_stats(*space.image, space.metric_name(), c.premise, c.conclusion, result));
            visited += result.visited;
            held += result.premise_held;
            violations += result.violations;
            all_exhaustive = all_exhaustive && result.exhaustive;
            for (const auto& table_entries : result.counterexamples) {
                if (report.counterexamples.size() >= SweepSpec{}.max_counterexamples) break;
                report.counterexamples.push_back({{"image", describe_image(*space.image)},
                                                  {"metric", space.metric_name()},
                                                  {"premise", c.premise},
                                                  {"conclusion", c.conclusion},
                                                  {"map", table_json(*space.image, table_entries)}});
            }
        }
    }
    std::string premises;
    std::string conclusions;
    for (const auto& c : cases) {
        if (premises.find(c.premise) == std::string::npos) premises += (premises.empty() ? "" : ", ") + c.premise;
        if (conclusions.find(c.conclusion) == std::string::npos) {
            conclusions += (conclusions.empty() ? "" : ", ") + c.conclusion;
        }
    }
    report.premises.push_back({"map space enumerated", true,
                               Json{{"maps_visited", visited}, {"exhaustive", all_exhaustive}}});
    report.premises.push_back({"premise: " + premises, true, Json{{"maps_satisfying", held}}});
    report.conclusion = {"conclusion holds on every map satisfying the premise: " + conclusions, violations == 0,
                         Json{{"violations", violations}}};
    decide(report);
    return report;
}

AuditReport khan_3_3()
{
    AuditReport report;
    report.case_id = "khan-3.3";
    auto image = segment_image(1);
    const DistanceTable table(image, MetricSpec::lp(1u));
    const SelfMap P = SelfMap::constant(image, 0);
    const SelfMap Q(image, {1, 0});
    const unsigned k = 1;
    const Rational alpha(1, 2);

    SelfMap Pk = P;
    for (unsigned i = 1; i < k; ++i) Pk = Pk.compose(P);

    std::vector<bool> in_q(image->size(), false);
    for (std::size_t x = 0; x < image->size(); ++x) in_q[Q(x)] = true;
    bool inclusion = true;
    for (std::size_t x = 0; x < image->size(); ++x) inclusion = inclusion && in_q[P(x)];
    std::vector<std::size_t> p_range;
    std::vector<std::size_t> q_range;
    for (std::size_t x = 0; x < image->size(); ++x) {
        if (std::find(p_range.begin(), p_range.end(), P(x)) == p_range.end()) p_range.push_back(P(x));
        if (in_q[x]) q_range.push_back(x);
    }
    std::sort(p_range.begin(), p_range.end());

    bool inequality = true;
    Json worst = nullptr;
    for (std::size_t x = 0; x < image->size() && inequality; ++x) {
        for (std::size_t y = 0; y < image->size(); ++y) {
            if (Rational(table.power(Pk(x), Pk(y))) > alpha * Rational(table.power(Q(x), Q(y)))) {
                inequality = false;
                worst = Json::array({image->point(x).to_string(), image->point(y).to_string()});
                break;
            }
        }
    }

    report.premises.push_back({"alpha in (0,1) and k >= 1", true, Json{{"alpha", format_rational(alpha)}, {"k", k}}});
    report.premises.push_back(
        {"P(X) subset of Q(X)", inclusion, Json{{"P(X)", points_json(*image, p_range)}, {"Q(X)", points_json(*image, q_range)}}});
    report.premises.push_back({"d(P^k x, P^k y) <= alpha d(Qx, Qy) for all x, y", inequality, worst});

    const auto common = common_fixed_points(P, Q);
    report.conclusion = {"P and Q have a unique common fixed point", common.size() == 1,
                         Json{{"Fix(P)", points_json(*image, fixed_point_indices(P))},
                              {"Fix(Q)", points_json(*image, fixed_point_indices(Q))},
                              {"common", points_json(*image, common)}}};
    decide(report);
    return report;
}

AuditReport closure_audit(const std::string& id, const std::string& formula_text, int n)
{
    AuditReport report;
    report.case_id = id;
    auto image = segment_image(n);
    const Expression formula = Expression::parse(formula_text);
    const MapCandidate candidate = MapCandidate::from_formula(image, formula);
    const auto validated = validate_selfmap(candidate);

    Json offending = Json::array();
    if (const auto* failure = std::get_if<ClosureFailure>(&validated)) {
        for (const auto& v : failure->violations) {
            offending.push_back({{"x", v.at.to_string()}, {"value", v.value}, {"reason", v.reason}});
        }
    }
    const bool closed = std::holds_alternative<SelfMap>(validated);
    report.premises.push_back({"T(x) = " + formula_text + " maps [0," + std::to_string(n) + "] into itself", closed,
                               Json{{"offending", offending}}});

    // fixed points among the points where T does land in X
    std::vector<std::size_t> fixed;
    for (std::size_t i = 0; i < image->size(); ++i) {
        const auto& raw = candidate.assignment.at(image->point(i));
        if (const auto* p = std::get_if<Point>(&raw); p && *p == image->point(i)) fixed.push_back(i);
    }
    report.conclusion = {"T has a fixed point in X", !fixed.empty(), Json{{"fixed_points", points_json(*image, fixed)}}};
    decide(report);
    return report;
}

AuditReport jain_discontinuous_expansive()
{
    AuditReport report;
    report.case_id = "jain-discontinuous-expansive";
    auto domain = segment_image(2);
    auto codomain = segment_image(4);
    std::vector<std::size_t> table;
    Json assignment = Json::object();
    for (const Point& x : domain->points()) {
        const Point y{2 * x[0]};
        table.push_back(codomain->require_index(y));
        assignment[x.to_string()] = y.to_string();
    }
    report.premises.push_back({"S(x) = 2x maps {0,1,2} into [0,4]", true, Json{{"map", assignment}}});

    const Rational alpha(2);
    bool expansive = true;
    for (std::size_t i = 0; i < domain->size(); ++i) {
        for (std::size_t j = i + 1; j < domain->size(); ++j) {
            const Distance before = lp_distance(domain->point(i), domain->point(j), 1u);
            const Distance after = lp_distance(codomain->point(table[i]), codomain->point(table[j]), 1u);
            if (Rational(after.power) < alpha * Rational(before.power)) expansive = false;
        }
    }
    report.premises.push_back({"d(Sx, Sy) >= alpha d(x, y) with alpha > 1 (l1)", expansive,
                               Json{{"alpha", format_rational(alpha)}}});

    Json edge = nullptr;
    for (auto [i, j] : domain->edges()) {
        if (table[i] != table[j] && !codomain->adjacent(table[i], table[j])) {
            edge = {{"edge", Json::array({domain->point(i).to_string(), domain->point(j).to_string()})},
                    {"images", Json::array({codomain->point(table[i]).to_string(),
                                            codomain->point(table[j]).to_string()})}};
            break;
        }
    }
    report.conclusion = {"S is digitally continuous (edge criterion)",
                         is_continuous_edgewise(*domain, *codomain, table), edge};
    decide(report);
    return report;
}

std::vector<Space> c1_spaces()
{
    std::vector<std::shared_ptr<const DigitalImage>> images;
    for (int k = 1; k <= 4; ++k) images.push_back(segment_image(k));
    images.push_back(square_image(1));
    return metric_spaces(images, {1, 2, 3}, false);
}

std::vector<Space> sp_spaces()
{
    std::vector<Space> out;
    for (const auto& image : {square_image(2), rectangle_image(2, 3, 2), segment_image(2), segment_image(3),
                              square_image(1)}) {
        out.push_back({image, MetricSpec::shortest_path()});
    }
    return out;
}

AuditReport theta_trivial(const AuditOptions& options)
{
    std::vector<Space> spaces = c1_spaces();
    const auto sp = sp_spaces();
    spaces.insert(spaces.end(), sp.begin(), sp.end());
    auto witness_check = [](const Space& space, const std::string& conclusion) -> MapPredicate {
        if (conclusion != "theta-witness-verifies") return {};
        auto table = std::make_shared<const DistanceTable>(space.image, *space.metric);
        return [table](const SelfMap& f) {
            return verify_theta(f, *table, theta_witness(theta_envelope(f, *table)));
        };
    };
    return sweep_case("theta-trivial",
                      {{"theta", "constant", spaces, std::nullopt},
                       {"theta", "theta-witness-verifies", spaces, std::nullopt}},
                      options, witness_check);
}

AuditReport continuity_equivalence(const AuditOptions& options)
{
    std::vector<Space> spaces;
    for (const auto& image : family(1, 8)) spaces.push_back({image, std::nullopt});
    return sweep_case("continuity-equivalence",
                      {{"true", "continuity-agree", spaces, Sampling{20000, 1}}}, options);
}

AuditReport expansive_none_finite(const AuditOptions& options)
{
    const auto spaces = metric_spaces(family(2, 4), {1, 2}, true);
    return sweep_case("expansive-none-finite",
                      {{"expansive", "false", spaces, std::nullopt},
                       {"expansive-onto", "false", spaces, std::nullopt}},
                      options);
}

/// Calls visit(table) for every self-map of an n-point image in
/// lexicographic order.
void for_each_map(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> table(n, 0);
    while (true) {
        visit(table);
        std::size_t k = n;
        while (k > 0) {
            if (++table[k - 1] < n) break;
            table[k - 1] = 0;
            --k;
        }
        if (k == 0) return;
    }
}

std::vector<PsiSpec> psi_catalogue()
{
    return {
        PsiSpec{PsiFunction::linear(Rational(1, 2)), Rational(1, 2), 1, NuSeries::zero()},
        PsiSpec{PsiFunction::linear(Rational(1, 3)), Rational(1, 2), 1, NuSeries::zero()},
        PsiSpec{PsiFunction::saturating(), Rational(1, 2), 1, NuSeries::geometric(Rational(1), Rational(9, 10))},
    };
}

std::vector<AdmissibilityWeight> beta_catalogue(std::size_t n)
{
    std::vector<AdmissibilityWeight> out{AdmissibilityWeight::constant(n, Rational(1)), AdmissibilityWeight::diagonal(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.push_back(AdmissibilityWeight::pair(n, i, j));
    }
    return out;
}

AuditReport jyotirani_3_3()
{
    AuditReport report;
    report.case_id = "jyotirani-3.3";
    std::uint64_t triples = 0;
    std::uint64_t satisfying = 0;
    std::uint64_t failures = 0;
    std::uint64_t runs = 0;
    Json psi_names = Json::array();
    for (const auto& psi : psi_catalogue()) psi_names.push_back(psi.psi.name());

    for (const auto& space : metric_spaces(family(1, 4), {1, 2}, true)) {
        const DistanceTable table(space.image, *space.metric);
        const std::size_t n = space.image->size();
        std::vector<BetaPsiChecker> checkers;
        for (const auto& psi : psi_catalogue()) checkers.emplace_back(table, psi, default_psi_grid(Rational(4)));
        const auto betas = beta_catalogue(n);
        SweepStats stats{describe_image(*space.image), space.metric_name(), "admissible+seed+beta-psi",
                         "picard-stabilizes", true, map_space_size(n) * betas.size() * checkers.size(), 0, 0, 0};
        for_each_map(n, [&](const std::vector<std::size_t>& entries) {
            const SelfMap f(space.image, entries);
            for (const auto& beta : betas) {
                for (std::size_t c = 0; c < checkers.size(); ++c) {
                    ++triples;
                    ++stats.visited;
                    if (!is_beta_admissible(f, beta)) continue;
                    std::vector<std::size_t> seeds;
                    for (std::size_t x = 0; x < n; ++x) {
                        if (beta(x, f(x)) >= 1) seeds.push_back(x);
                    }
                    if (seeds.empty() || !checkers[c](f, beta)) continue;
                    ++satisfying;
                    ++stats.premise_held;
                    for (std::size_t x0 : seeds) {
                        ++runs;
                        const Orbit orbit = picard(f, x0);
                        if (orbit.status == Orbit::Status::Stabilized && f(*orbit.fixed_point()) == *orbit.fixed_point()) {
                            continue;
                        }
                        ++failures;
                        ++stats.violations;
                        if (report.counterexamples.size() < 10) {
                            report.counterexamples.push_back({{"image", stats.image},
                                                              {"metric", stats.metric},
                                                              {"map", table_json(*space.image, f.table())},
                                                              {"beta", beta.name()},
                                                              {"psi", psi_names[c]},
                                                              {"x0", space.image->point(x0).to_string()}});
                        }
                    }
                }
            }
        });
        report.sweeps.push_back(stats);
    }
    report.premises.push_back({"psi catalogue passes the class check on every grid", true, Json{{"psi", psi_names}}});
    report.premises.push_back({"triples satisfying admissibility, seed and beta-psi inequality", true,
                               Json{{"triples_visited", triples}, {"triples_satisfying", satisfying}}});
    report.conclusion = {"picard from every seed stabilizes at a fixed point", failures == 0,
                         Json{{"runs", runs}, {"failures", failures}}};
    decide(report);
    return report;
}

AuditReport saljh_3()
{
    AuditReport report;
    report.case_id = "saljh-3";
    const auto params = RationalContractionParams::make(Rational(1, 5), Rational(3, 5));
    report.premises.push_back({"xi1, xi2 > 0, xi1 + xi2 < 1 and eta = xi2/(1 - xi1) < 1", true,
                               Json{{"xi1", format_rational(params.xi1())},
                                    {"xi2", format_rational(params.xi2())},
                                    {"eta", format_rational(params.eta())}}});

    // worked instance on {0,1,3}
    {
        auto image = gap_image();
        const DistanceTable table(image, MetricSpec::lp(1u));
        const SelfMap f(image, {0, 0, 1});
        Json pairs = Json::array();
        bool all = true;
        for (const auto& pair : rational_contraction_pairs(f, table, params)) {
            all = all && pair.holds;
            pairs.push_back({{"u", image->point(pair.u).to_string()},
                             {"v", image->point(pair.v).to_string()},
                             {"lhs", pair.lhs.to_string()},
                             {"rhs", pair.rhs.to_string()},
                             {"holds", pair.holds}});
        }
        report.premises.push_back({"worked instance on {0,1,3}: all ordered pairs satisfy the inequality", all,
                                   Json{{"map", table_json(*image, f.table())}, {"pairs", pairs}}});
    }

    std::uint64_t satisfying = 0;
    std::uint64_t failures = 0;
    for (const auto& space : metric_spaces(family(1, 4), {1, 2}, true)) {
        const DistanceTable table(space.image, *space.metric);
        const std::size_t n = space.image->size();
        SweepStats stats{describe_image(*space.image), space.metric_name(), "rational", "unique-fixed-point+picard",
                         true, map_space_size(n), 0, 0, 0};
        for_each_map(n, [&](const std::vector<std::size_t>& entries) {
            const SelfMap f(space.image, entries);
            ++stats.visited;
            if (!rational_contraction_check(f, table, params).holds) return;
            ++stats.premise_held;
            ++satisfying;
            const FixedPointClass fp = unique_fixed_point(f);
            bool ok = fp.kind == FixedPointClass::Kind::Unique;
            for (std::size_t x = 0; x < n && ok; ++x) ok = picard(f, x).fixed_point() == fp.points.front();
            if (ok) return;
            ++failures;
            ++stats.violations;
            if (report.counterexamples.size() < 10) {
                report.counterexamples.push_back({{"image", stats.image},
                                                  {"metric", stats.metric},
                                                  {"map", table_json(*space.image, f.table())}});
            }
        });
        report.sweeps.push_back(stats);
    }
    report.premises.push_back({"maps satisfying the rational contraction condition", true,
                               Json{{"maps_satisfying", satisfying}}});
    report.conclusion = {"unique fixed point, reached by picard from every start", failures == 0,
                         Json{{"failures", failures}}};
    decide(report);
    return report;
}

AuditReport mishra_5()
{
    AuditReport report;
    report.case_id = "mishra-5";
    const Rational alpha(1, 2);
    std::uint64_t pairs = 0;
    std::uint64_t satisfying = 0;
    std::uint64_t failures = 0;
    for (const auto& space : metric_spaces(family(1, 3), {1}, true)) {
        const DistanceTable table(space.image, *space.metric);
        const std::size_t n = space.image->size();
        std::vector<SelfMap> maps;
        for_each_map(n, [&](const std::vector<std::size_t>& entries) { maps.emplace_back(space.image, entries); });
        SweepStats stats{describe_image(*space.image), space.metric_name(), "commuting+inclusion+inequality",
                         "unique-common-fixed-point", true, map_space_size(n) * map_space_size(n), 0, 0, 0};
        for (const auto& f : maps) {
            for (const auto& g : maps) {
                ++pairs;
                ++stats.visited;
                const MishraReport premises = mishra_premises(f, g, table, alpha);
                if (!premises.premises_hold()) continue;
                ++satisfying;
                ++stats.premise_held;
                if (premises.common_fixed_points.size() == 1) continue;
                ++failures;
                ++stats.violations;
                if (report.counterexamples.size() < 10) {
                    report.counterexamples.push_back({{"image", stats.image},
                                                      {"metric", stats.metric},
                                                      {"f", table_json(*space.image, f.table())},
                                                      {"g", table_json(*space.image, g.table())}});
                }
            }
        }
        report.sweeps.push_back(stats);
    }
    report.premises.push_back({"alpha in (0,1)", true, Json{{"alpha", format_rational(alpha)}}});
    report.premises.push_back({"pairs (f, g) satisfying commuting, g(X) subset of f(X) and d(gx,gy) <= alpha d(fx,fy)",
                               true, Json{{"pairs_visited", pairs}, {"pairs_satisfying", satisfying}}});
    report.conclusion = {"f and g have a unique common fixed point", failures == 0, Json{{"failures", failures}}};
    decide(report);
    return report;
}

struct Entry {
    const char* id;
    Verdict expected;
};

constexpr Entry kRegistry[] = {
    {"khan-3.3", Verdict::CounterexampleConfirmed},
    {"botmart-4.4", Verdict::FlawDemonstrated},
    {"botmart-4.5", Verdict::FlawDemonstrated},
    {"jain-discontinuous-expansive", Verdict::CounterexampleConfirmed},
    {"contraction-trivial-c1", Verdict::ConfirmsTheorem},
    {"contraction-trivial-sp", Verdict::ConfirmsTheorem},
    {"theta-trivial", Verdict::ConfirmsTheorem},
    {"expansive-none-finite", Verdict::ConfirmsTheorem},
    {"continuity-equivalence", Verdict::ConfirmsTheorem},
    {"jyotirani-3.3", Verdict::ConfirmsTheorem},
    {"saljh-3", Verdict::ConfirmsTheorem},
    {"mishra-5", Verdict::ConfirmsTheorem},
};

AuditReport dispatch(const std::string& id, const AuditOptions& options)
{
    if (id == "khan-3.3") return khan_3_3();
    if (id == "botmart-4.4") return closure_audit(id, "x/2 + 3", 10);
    if (id == "botmart-4.5") return closure_audit(id, "sqrt(x^2 - 8*x + 40)", 10);
    if (id == "jain-discontinuous-expansive") return jain_discontinuous_expansive();
    if (id == "contraction-trivial-c1") {
        return sweep_case(id, {{"contraction", "constant", c1_spaces(), std::nullopt}}, options);
    }
    if (id == "contraction-trivial-sp") {
        return sweep_case(id, {{"contraction", "constant", sp_spaces(), std::nullopt}}, options);
    }
    if (id == "theta-trivial") return theta_trivial(options);
    if (id == "expansive-none-finite") return expansive_none_finite(options);
    if (id == "continuity-equivalence") return continuity_equivalence(options);
    if (id == "jyotirani-3.3") return jyotirani_3_3();
    if (id == "saljh-3") return saljh_3();
    if (id == "mishra-5") return mishra_5();
    throw InputError("unknown audit case '" + id + "'");
}

}  // namespace

const std::vector<std::string>& audit_case_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& e : kRegistry) out.emplace_back(e.id);
        return out;
    }();
    return ids;
}

Verdict expected_verdict(const std::string& case_id)
{
    for (const auto& e : kRegistry) {
        if (case_id == e.id) return e.expected;
    }
    throw InputError("unknown audit case '" + case_id + "'");
}

AuditReport run_named_audit(const std::string& case_id, const AuditOptions& options)
{
    expected_verdict(case_id);
    const auto start = std::chrono::steady_clock::now();
    AuditReport report = dispatch(case_id, options);
    if (options.timing) {
        report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

Json to_json(const AuditReport& report)
{
    auto check_json = [](const Check& c) {
        return Json{{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}};
    };
    Json out;
    out["case_id"] = report.case_id;
    out["verdict"] = to_string(report.verdict);
    out["expected_verdict"] = to_string(expected_verdict(report.case_id));
    out["premises"] = Json::array();
    for (const auto& p : report.premises) out["premises"].push_back(check_json(p));
    out["conclusion"] = check_json(report.conclusion);
    out["sweeps"] = Json::array();
    for (const auto& s : report.sweeps) {
        out["sweeps"].push_back({{"image", s.image},
                                 {"metric", s.metric},
                                 {"premise", s.premise},
                                 {"conclusion", s.conclusion},
                                 {"exhaustive", s.exhaustive},
                                 {"space", s.space},
                                 {"visited", s.visited},
                                 {"premise_held", s.premise_held},
                                 {"violations", s.violations}});
    }
    out["counterexamples"] = report.counterexamples;
    if (report.runtime_ms) out["runtime_ms"] = *report.runtime_ms;
    return out;
}

}  // namespace digifix
