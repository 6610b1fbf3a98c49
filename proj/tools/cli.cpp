#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "digifix/audit.hpp"
#include "digifix/classifiers.hpp"
#include "digifix/errors.hpp"
#include "digifix/io.hpp"
#include "digifix/solvers.hpp"
#include "digifix/sweep.hpp"

namespace digifix::cli {

namespace {

struct Options {
    std::string image;
    std::string metric;
    std::string map;
    std::string map2;
    std::string classifier;
    std::string alpha;
    std::string xi1;
    std::string xi2;
    std::string beta;
    std::string psi;
    std::string theta;
    std::string x;
    std::string y;
    std::string variant = "halved";
    std::string method = "picard";
    std::string start;
    std::size_t max_steps = 0;
    std::string case_id;
    bool all = false;
    bool timing = false;
    std::string premise;
    std::string conclusion;
    unsigned parallel = 1;
    std::uint64_t budget = 10'000'000;
    std::uint64_t sample = 0;
    std::uint64_t seed = 1;
    bool json = false;
};

void emit(std::ostream& out, const Json& report, bool json)
{
    if (json) {
        out << report.dump(2) << "\n";
        return;
    }
    for (auto it = report.begin(); it != report.end(); ++it) {
        out << it.key() << ": ";
        if (it.value().is_string()) out << it.value().get<std::string>();
        else out << it.value().dump();
        out << "\n";
    }
}

std::shared_ptr<const DigitalImage> load_image(const std::string& path)
{
    if (path.empty()) throw InputError("--image is required");
    try {
        return io::parse_image(io::load_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

MetricSpec load_metric(const std::string& path)
{
    if (path.empty()) throw InputError("--metric is required; no metric is assumed by default");
    try {
        return io::parse_metric(io::load_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

SelfMap load_map(const std::string& path, std::shared_ptr<const DigitalImage> image, const char* flag)
{
    if (path.empty()) throw InputError(std::string(flag) + " is required");
    try {
        return io::parse_map(io::load_file(path), std::move(image));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

template <class Parse>
auto load_with(const std::string& path, const char* flag, Parse parse)
{
    if (path.empty()) throw InputError(std::string(flag) + " is required");
    try {
        return parse(io::load_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Rational required_rational(const std::string& text, const char* flag)
{
    if (text.empty()) throw InputError(std::string(flag) + " is required");
    return parse_rational(text);
}

std::size_t point_index(const DigitalImage& image, const std::string& text, const char* flag)
{
    if (text.empty()) throw InputError(std::string(flag) + " is required");
    return image.require_index(Point::parse(text));
}

int run_check_image(const Options& o, std::ostream& out)
{
    const auto image = load_image(o.image);
    const auto labels = component_labels(*image);
    const std::size_t components = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    Json report{{"valid", true},
                {"points", image->size()},
                {"dimension", image->dimension()},
                {"u", image->u()},
                {"edges", image->edges().size()},
                {"connected", is_connected(*image)},
                {"components", components}};
    if (!o.metric.empty()) {
        const DistanceTable table(image, load_metric(o.metric));
        const Diameter diam = diameter(table);
        const DiscretenessGap gap = discreteness_gap(table);
        report["metric"] = table.metric().name();
        report["diameter"] = diam.value.to_string();
        report["discreteness_gap"] = gap.is_infinite() ? std::string("infinity") : gap.value->to_string();
        report["metric_axioms"] = check_metric_axioms(table).ok();
    }
    emit(out, report, o.json);
    return kExitOk;
}

int run_classify(const Options& o, std::ostream& out)
{
    const auto image = load_image(o.image);
    const DistanceTable table(image, load_metric(o.metric));
    const SelfMap f = load_map(o.map, image, "--map");
    const std::string& c = o.classifier;
    Json report;
    if (c == "contraction") {
        report = io::to_json(contraction_certificate(f, table), *image);
    } else if (c == "expansive") {
        report = io::to_json(expansive_certificate(f, table), *image);
    } else if (c == "theta") {
        const ThetaEnvelope envelope = theta_envelope(f, table);
        report = io::to_json(envelope, *image);
        if (!o.theta.empty()) {
            const ThetaSamples theta = load_with(o.theta, "--theta", io::parse_theta);
            report["verify_theta"] = verify_theta(f, table, theta);
        } else if (envelope.feasible) {
            Json witness = Json::array();
            for (const auto& [t, v] : theta_witness(envelope).points) witness.push_back({t.to_string(), v.to_string()});
            report["theta_witness"] = witness;
        }
    } else if (c == "beta-psi") {
        const AdmissibilityWeight beta = load_with(o.beta, "--beta", [&](const Json& j) { return io::parse_beta(j, *image); });
        const PsiSpec psi = load_with(o.psi, "--psi", io::parse_psi);
        const BetaPsiChecker checker(table, psi);
        const auto violation = checker.violation(f, beta);
        const auto admissibility = admissibility_violation(f, beta);
        auto pair = [&](const std::optional<IndexPair>& p) {
            return p ? Json::array({image->point(p->first).to_string(), image->point(p->second).to_string()}) : Json();
        };
        report = {{"classifier", "beta-psi"},
                  {"psi", psi.psi.name()},
                  {"psi_class", io::to_json(checker.report())},
                  {"beta_admissible", !admissibility},
                  {"admissibility_witness", pair(admissibility)},
                  {"contractive", !violation},
                  {"witness", pair(violation)}};
    } else if (c == "jain-mu") {
        JainVariant variant = JainVariant::HalvedCross;
        if (o.variant == "full") variant = JainVariant::FullCross;
        else if (o.variant != "halved") throw InputError("--variant must be halved or full");
        report = {{"classifier", "jain-mu"}, {"variant", o.variant}};
        if (!o.x.empty() || !o.y.empty()) {
            report["mu"] = jain_mu(f, table, point_index(*image, o.x, "--x"), point_index(*image, o.y, "--y"), variant).to_string();
        }
        if (!o.alpha.empty()) {
            const PremiseResult premise = jain_premise(f, table, parse_rational(o.alpha), variant);
            report["alpha"] = o.alpha;
            report["premise"] = premise.holds;
            report["witness"] = premise.witness ? Json::array({image->point(premise.witness->first).to_string(),
                                                                image->point(premise.witness->second).to_string()})
                                                : Json();
        }
        if (report.size() == 2) throw InputError("jain-mu needs --x and --y, or --alpha");
    } else if (c == "gupta-mu") {
        report = {{"classifier", "gupta-mu"}};
        if (!o.x.empty() || !o.y.empty()) {
            report["mu"] = gupta_mu(f, table, point_index(*image, o.x, "--x"), point_index(*image, o.y, "--y")).to_string();
        }
        const PremiseResult premise = gupta_premise(f, table);
        report["premise"] = premise.holds;
        report["witness"] = premise.witness ? Json::array({image->point(premise.witness->first).to_string(),
                                                            image->point(premise.witness->second).to_string()})
                                            : Json();
    } else if (c == "rational") {
        const auto params = RationalContractionParams::make(required_rational(o.xi1, "--xi1"),
                                                            required_rational(o.xi2, "--xi2"));
        const PremiseResult premise = rational_contraction_check(f, table, params);
        report = {{"classifier", "rational"},
                  {"xi1", format_rational(params.xi1())},
                  {"xi2", format_rational(params.xi2())},
                  {"eta", format_rational(params.eta())},
                  {"holds", premise.holds},
                  {"witness", premise.witness ? Json::array({image->point(premise.witness->first).to_string(),
                                                             image->point(premise.witness->second).to_string()})
                                              : Json()}};
    } else if (c == "mishra") {
        const SelfMap g = load_map(o.map2, image, "--map2");
        report = io::to_json(mishra_premises(f, g, table, required_rational(o.alpha, "--alpha")), *image);
    } else {
        throw InputError("unknown classifier '" + c + "'");
    }
    emit(out, report, o.json);
    return kExitOk;
}

int run_fix(const Options& o, std::ostream& out)
{
    const auto image = load_image(o.image);
    const SelfMap f = load_map(o.map, image, "--map");
    const std::optional<std::size_t> steps = o.max_steps ? std::optional<std::size_t>(o.max_steps) : std::nullopt;
    Json report;
    if (o.method == "oracle") {
        report = io::to_json(unique_fixed_point(f), *image);
    } else {
        const std::size_t start = point_index(*image, o.start, "--start");
        const Orbit orbit = o.method == "picard" ? picard(f, start, steps) : preimage_chain(f, start, steps);
        report = io::to_json(orbit, *image);
    }
    report["method"] = o.method;
    emit(out, report, o.json);
    return kExitOk;
}

int run_audit(const Options& o, std::ostream& out)
{
    std::vector<std::string> ids;
    if (o.all) ids = audit_case_ids();
    else if (!o.case_id.empty()) ids.push_back(o.case_id);
    else throw InputError("audit needs --case <id> or --all");
    for (const auto& id : ids) expected_verdict(id);

    const AuditOptions options{std::max(1u, o.parallel), o.timing};
    bool as_expected = true;
    Json reports = Json::array();
    for (const auto& id : ids) {
        const AuditReport report = run_named_audit(id, options);
        as_expected = as_expected && report.verdict == expected_verdict(id);
        if (o.json) {
            reports.push_back(to_json(report));
        } else {
            out << id << ": " << to_string(report.verdict)
                << (report.verdict == expected_verdict(id) ? "" : " (expected " + to_string(expected_verdict(id)) + ")")
                << "\n";
            for (const auto& p : report.premises) {
                out << "  premise " << (p.passed ? "[pass] " : "[fail] ") << p.name << "\n";
            }
            out << "  conclusion " << (report.conclusion.passed ? "[pass] " : "[fail] ") << report.conclusion.name
                << "\n";
            if (report.runtime_ms) out << "  runtime_ms: " << *report.runtime_ms << "\n";
        }
    }
    if (o.json) out << (ids.size() == 1 ? reports.front() : reports).dump(2) << "\n";
    return as_expected ? kExitOk : kExitViolation;
}

int run_sweep(const Options& o, std::ostream& out)
{
    SweepSpec spec;
    spec.image = load_image(o.image);
    if (!o.metric.empty()) spec.metric = load_metric(o.metric);
    else if (o.premise != "true") throw InputError("--metric is required for premise '" + o.premise + "'");
    spec.premise = o.premise;
    spec.conclusion = o.conclusion;
    if (!o.xi1.empty()) spec.params.xi1 = parse_rational(o.xi1);
    if (!o.xi2.empty()) spec.params.xi2 = parse_rational(o.xi2);
    spec.budget = o.budget;
    if (o.sample > 0) spec.sampling = Sampling{o.sample, o.seed};
    spec.workers = std::max(1u, o.parallel);
    const SweepResult result = sweep(spec);
    Json report = io::to_json(result, *spec.image);
    emit(out, report, o.json);
    return result.violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"digifix: digital images, self-map classifiers, fixed points and audits", "digifix"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check-image", "Validate an image and report its structure");
    check->add_option("--image,--points", o.image, "Image JSON file")->required();
    check->add_option("--metric", o.metric, "Metric JSON file (adds diameter and gap)");
    check->add_flag("--json", o.json, "Machine-readable output");

    auto* classify = app.add_subcommand("classify", "Classify a self-map against a contraction condition");
    classify->add_option("--image", o.image, "Image JSON file")->required();
    classify->add_option("--metric", o.metric, "Metric JSON file")->required();
    classify->add_option("--map", o.map, "Map JSON file")->required();
    classify->add_option("--map2", o.map2, "Second map (mishra)");
    classify->add_option("--classifier", o.classifier, "Classifier")
        ->required()
        ->check(CLI::IsMember({"contraction", "theta", "expansive", "beta-psi", "jain-mu", "gupta-mu", "rational",
                               "mishra"}));
    classify->add_option("--alpha", o.alpha, "Constant alpha (jain-mu, mishra)");
    classify->add_option("--xi1", o.xi1, "xi1 (rational)");
    classify->add_option("--xi2", o.xi2, "xi2 (rational)");
    classify->add_option("--beta", o.beta, "beta JSON file (beta-psi)");
    classify->add_option("--psi", o.psi, "psi JSON file (beta-psi)");
    classify->add_option("--theta", o.theta, "theta samples JSON file (theta)");
    classify->add_option("--x", o.x, "Point x for mu evaluation");
    classify->add_option("--y", o.y, "Point y for mu evaluation");
    classify->add_option("--variant", o.variant, "jain-mu variant: halved or full");
    classify->add_flag("--json", o.json, "Machine-readable output");

    auto* fix = app.add_subcommand("fix", "Search for fixed points");
    fix->add_option("--image", o.image, "Image JSON file")->required();
    fix->add_option("--map", o.map, "Map JSON file")->required();
    fix->add_option("--method", o.method, "picard, preimage or oracle")
        ->check(CLI::IsMember({"picard", "preimage", "oracle"}));
    fix->add_option("--start", o.start, "Start point, e.g. \"(3)\"");
    fix->add_option("--max-steps", o.max_steps, "Iteration budget (default |X|+1)");
    fix->add_flag("--json", o.json, "Machine-readable output");

    auto* audit = app.add_subcommand("audit", "Run a named audit");
    audit->add_option("--case", o.case_id, "Audit case id");
    audit->add_flag("--all", o.all, "Run every registered case");
    audit->add_flag("--timing", o.timing, "Include runtime in reports");
    audit->add_option("--parallel", o.parallel, "Worker threads for sweeps");
    audit->add_flag("--json", o.json, "Machine-readable output");

    auto* sweep_cmd = app.add_subcommand("sweep", "Enumerate self-maps and test premise => conclusion");
    sweep_cmd->add_option("--image", o.image, "Image JSON file")->required();
    sweep_cmd->add_option("--metric", o.metric, "Metric JSON file");
    sweep_cmd->add_option("--premise", o.premise, "Premise")->required()->check(CLI::IsMember(premise_names()));
    sweep_cmd->add_option("--conclusion", o.conclusion, "Conclusion")
        ->required()
        ->check(CLI::IsMember(conclusion_names()));
    sweep_cmd->add_option("--xi1", o.xi1, "xi1 for the rational premise");
    sweep_cmd->add_option("--xi2", o.xi2, "xi2 for the rational premise");
    sweep_cmd->add_option("--parallel", o.parallel, "Worker threads");
    sweep_cmd->add_option("--budget", o.budget, "Largest exhaustive map count");
    sweep_cmd->add_option("--sample", o.sample, "Sample this many maps when over budget");
    sweep_cmd->add_option("--seed", o.seed, "Sampling seed");
    sweep_cmd->add_flag("--json", o.json, "Machine-readable output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (check->parsed()) return run_check_image(o, out);
        if (classify->parsed()) return run_classify(o, out);
        if (fix->parsed()) return run_fix(o, out);
        if (audit->parsed()) return run_audit(o, out);
        return run_sweep(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitInput;
}

}  // namespace digifix::cli
