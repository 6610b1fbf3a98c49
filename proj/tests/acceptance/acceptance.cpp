// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "digifix/audit.hpp"
#include "digifix/classifiers.hpp"
#include "digifix/solvers.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace digifix;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

struct Space {
    std::shared_ptr<const DigitalImage> image;
    MetricSpec metric;
};

std::vector<std::shared_ptr<const DigitalImage>> family()
{
    return {segment_image(1), segment_image(2), segment_image(3), square_image(1), square_image(2), gap_image()};
}

std::vector<Space> spaces(std::size_t min_size, std::size_t max_size)
{
    std::vector<Space> out;
    for (const auto& img : family()) {
        if (img->size() < min_size || img->size() > max_size) continue;
        out.push_back({img, MetricSpec::lp(1u)});
        out.push_back({img, MetricSpec::lp(2u)});
        if (is_connected(*img)) out.push_back({img, MetricSpec::shortest_path()});
    }
    return out;
}

const Check* find_premise(const AuditReport& r, const std::string& prefix)
{
    for (const auto& p : r.premises) {
        if (p.name.rfind(prefix, 0) == 0) return &p;
    }
    return nullptr;
}

bool all_premises_pass(const AuditReport& r)
{
    return std::all_of(r.premises.begin(), r.premises.end(), [](const Check& c) { return c.passed; });
}

std::uint64_t counterexamples(const AuditReport& r)
{
    std::uint64_t n = 0;
    for (const auto& s : r.sweeps) n += s.violations;
    return n + r.counterexamples.size();
}

Outcome continuity_equivalence()
{
    std::uint64_t maps = 0, mismatches = 0;
    for (const auto& img : {segment_image(2), square_image(1), square_image(2)}) {
        testkit::for_each_table(img->size(), [&](const std::vector<std::size_t>& t) {
            const SelfMap f(img, t);
            ++maps;
            const bool edge = is_continuous_edgewise(f);
            const bool subsets = oracle::continuous_by_subsets(img->points(), img->u(), t);
            if (edge != subsets || edge != is_continuous_global(f)) ++mismatches;
        });
    }
    return {maps == 27 + 256 + 256 && mismatches == 0,
            std::to_string(maps) + " maps, " + std::to_string(mismatches) + " mismatches"};
}

Outcome contraction_triviality()
{
    const auto c1 = run_named_audit("contraction-trivial-c1");
    const auto sp = run_named_audit("contraction-trivial-sp");
    const auto seg = segment_image(2);
    const DistanceTable table(seg, MetricSpec::lp(1u));
    std::size_t feasible = 0, constant = 0;
    testkit::for_each_table(3, [&](const std::vector<std::size_t>& t) {
        const SelfMap f(seg, t);
        if (!contraction_certificate(f, table).feasible) return;
        ++feasible;
        if (f.is_constant()) ++constant;
    });
    const bool ok = c1.verdict == Verdict::ConfirmsTheorem && sp.verdict == Verdict::ConfirmsTheorem &&
                    counterexamples(c1) == 0 && counterexamples(sp) == 0 && feasible == 3 && constant == 3;
    return {ok, "counterexamples c1=" + std::to_string(counterexamples(c1)) + " sp=" +
                    std::to_string(counterexamples(sp)) + ", [0,2] feasible=" + std::to_string(feasible) +
                    " constant=" + std::to_string(constant)};
}

Outcome theta_triviality()
{
    const auto r = run_named_audit("theta-trivial");
    std::uint64_t feasible = 0, verified = 0;
    for (const auto& img : {segment_image(1), segment_image(2), segment_image(3), segment_image(4), square_image(1),
                            square_image(2), gap_image()}) {
        std::vector<MetricSpec> metrics{MetricSpec::lp(1u), MetricSpec::lp(2u), MetricSpec::lp(3u)};
        if (is_connected(*img)) metrics.push_back(MetricSpec::shortest_path());
        for (const auto& m : metrics) {
            const DistanceTable table(img, m);
            testkit::for_each_table(img->size(), [&](const std::vector<std::size_t>& t) {
                const SelfMap f(img, t);
                const auto env = theta_envelope(f, table);
                if (!env.feasible) return;
                ++feasible;
                if (verify_theta(f, table, theta_witness(env))) ++verified;
            });
        }
    }
    const bool ok = r.verdict == Verdict::ConfirmsTheorem && counterexamples(r) == 0 && feasible > 0 &&
                    verified == feasible;
    return {ok, "counterexamples=" + std::to_string(counterexamples(r)) + ", witness verifies " +
                    std::to_string(verified) + "/" + std::to_string(feasible)};
}

Outcome expansive_impossibility()
{
    const auto r = run_named_audit("expansive-none-finite");
    std::uint64_t maps = 0, onto = 0, feasible = 0;
    for (const auto& s : spaces(2, 4)) {
        const DistanceTable table(s.image, s.metric);
        testkit::for_each_table(s.image->size(), [&](const std::vector<std::size_t>& t) {
            const SelfMap f(s.image, t);
            ++maps;
            if (is_onto(f)) ++onto;
            if (expansive_certificate(f, table).feasible) ++feasible;
        });
    }
    std::uint64_t held = 0;
    for (const auto& s : r.sweeps) held += s.premise_held;
    const bool ok = r.verdict == Verdict::ConfirmsTheorem && held == 0 && feasible == 0 && maps > 0 && onto > 0;
    return {ok, std::to_string(maps) + " maps (" + std::to_string(onto) + " onto), feasible=" + std::to_string(feasible) +
                    ", audit premise held=" + std::to_string(held)};
}

Outcome khan()
{
    const auto r = run_named_audit("khan-3.3");
    const bool ok = r.verdict == Verdict::CounterexampleConfirmed && all_premises_pass(r) && !r.conclusion.passed &&
                    r.conclusion.witness.contains("Fix(Q)") && r.conclusion.witness["Fix(Q)"].empty();
    return {ok, to_string(r.verdict) + ", Fix(Q)=" + r.conclusion.witness.value("Fix(Q)", Json::array()).dump()};
}

Outcome botmart()
{
    auto first_at_one = [](const AuditReport& r) -> Json {
        const Check* closure = find_premise(r, "T(x)");
        if (!closure || closure->passed) return nullptr;
        for (const auto& v : closure->witness["offending"]) {
            if (v["x"] == "(1)") return v;
        }
        return nullptr;
    };
    const auto r44 = run_named_audit("botmart-4.4");
    const auto r45 = run_named_audit("botmart-4.5");
    const Json v44 = first_at_one(r44);
    const Json v45 = first_at_one(r45);
    const bool ok = r44.verdict == Verdict::FlawDemonstrated && r45.verdict == Verdict::FlawDemonstrated &&
                    !v44.is_null() && v44["value"] == "7/2" && !v45.is_null() && v45["value"] == "sqrt(33)" &&
                    v45["reason"] == "irrational";
    return {ok, "4.4 T(1)=" + (v44.is_null() ? std::string("?") : v44["value"].get<std::string>()) + ", 4.5 T(1)=" +
                    (v45.is_null() ? std::string("?") : v45["value"].get<std::string>() + " (" +
                                                             v45["reason"].get<std::string>() + ")")};
}

Outcome jyotirani()
{
    const auto r = run_named_audit("jyotirani-3.3");
    const Json& w = r.conclusion.witness;
    const bool ok = r.verdict == Verdict::ConfirmsTheorem && r.conclusion.passed && w.value("failures", 1) == 0 &&
                    w.value("runs", 0) > 0;
    return {ok, "runs=" + std::to_string(w.value("runs", 0)) + " failures=" + std::to_string(w.value("failures", -1))};
}

Outcome saljh()
{
    const auto r = run_named_audit("saljh-3");
    const Check* worked = find_premise(r, "worked instance");
    const bool worked_ok = worked && worked->passed && worked->witness["pairs"].size() == 9;

    const auto params = RationalContractionParams::make(Rational(1, 5), Rational(3, 5));
    std::uint64_t passing = 0, failures = 0;
    for (const auto& s : spaces(1, 4)) {
        const DistanceTable table(s.image, s.metric);
        testkit::for_each_table(s.image->size(), [&](const std::vector<std::size_t>& t) {
            const SelfMap f(s.image, t);
            if (!rational_contraction_check(f, table, params).holds) return;
            ++passing;
            std::vector<std::size_t> fix;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i] == i) fix.push_back(i);
            }
            if (fix.size() != 1) {
                ++failures;
                return;
            }
            for (std::size_t x0 = 0; x0 < t.size(); ++x0) {
                if (picard(f, x0).fixed_point() != fix.front()) ++failures;
            }
        });
    }
    const bool ok = r.verdict == Verdict::ConfirmsTheorem && worked_ok && passing > 0 && failures == 0;
    return {ok, "worked instance 9/9 " + std::string(worked_ok ? "ok" : "FAILED") + ", " + std::to_string(passing) +
                    " passing maps, " + std::to_string(failures) + " failures"};
}

Outcome solver_agreement()
{
    const auto all = spaces(1, 6);
    std::mt19937_64 rng(2024);
    std::uint64_t stabilized = 0, bad = 0, monotone_checked = 0;
    for (int sample = 0; sample < 10000; ++sample) {
        const Space& s = all[rng() % all.size()];
        const DistanceTable table(s.image, s.metric);
        const SelfMap f = testkit::random_map(rng, s.image);
        std::vector<bool> fixed(f.size(), false);
        for (std::size_t i = 0; i < f.size(); ++i) fixed[i] = f(i) == i;
        const bool contraction = contraction_certificate(f, table).feasible;
        const std::size_t x0 = rng() % f.size();
        std::vector<Orbit> orbits{picard(f, x0)};
        if (is_onto(f)) orbits.push_back(preimage_chain(f, x0));
        for (const Orbit& orbit : orbits) {
            if (orbit.status != Orbit::Status::Stabilized) continue;
            ++stabilized;
            if (!fixed[*orbit.fixed_point()]) ++bad;
        }
        if (contraction) {
            ++monotone_checked;
            const auto& pts = orbits.front().points;
            for (std::size_t k = 0; k + 2 < pts.size(); ++k) {
                if (table.distance(pts[k + 1], pts[k + 2]) > table.distance(pts[k], pts[k + 1])) ++bad;
            }
        }
    }
    return {bad == 0 && stabilized > 0 && monotone_checked > 0,
            "10000 maps, " + std::to_string(stabilized) + " stabilized orbits, " + std::to_string(monotone_checked) +
                " contraction orbits, " + std::to_string(bad) + " disagreements"};
}

Outcome determinism()
{
    auto registry = [] {
        std::string out;
        for (const auto& id : audit_case_ids()) out += to_json(run_named_audit(id)).dump(2) + "\n";
        return out;
    };
    const std::string first = registry();
    const std::string second = registry();
    return {first == second, std::to_string(first.size()) + " bytes per run, " +
                                 (first == second ? "identical" : "DIFFERENT")};
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "continuity equivalence", 1.0, continuity_equivalence},
        {2, "contraction triviality", 1.0, contraction_triviality},
        {3, "theta-contraction triviality", 5.0, theta_triviality},
        {4, "expansive impossibility", 10.0, expansive_impossibility},
        {5, "khan-3.3 refutation", 0.1, khan},
        {6, "botmart closure flaws", 0.2, botmart},
        {7, "corrected beta-psi theorem", 30.0, jyotirani},
        {8, "corrected rational contraction theorem", 10.0, saljh},
        {9, "solver/oracle agreement", 30.0, solver_agreement},
        {10, "registry determinism", 60.0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.budget_s;
        const bool ok = outcome.passed && in_time;
        if (!ok) ++failed;
        std::printf("criterion %2d %s: %s (%s; %.3f s of %.1f s)\n", c.id, ok ? "PASS" : "FAIL", c.name,
                    outcome.detail.c_str(), seconds, c.budget_s);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
