#include "digifix/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "digifix/errors.hpp"
#include "digifix/expression.hpp"

namespace digifix::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message)
{
    throw InputError((path.empty() ? "/" : path) + ": " + message);
}

const Json& member(const Json& j, const std::string& path, const char* key)
{
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "/" + key, "missing field");
    return *it;
}

const Json* optional_member(const Json& j, const std::string& path, const char* key)
{
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::string string_at(const Json& j, const std::string& path)
{
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

std::int64_t integer_at(const Json& j, const std::string& path)
{
    if (!j.is_number_integer()) fail(path, "expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        fail(path, "integer out of range");
    }
    return j.get<std::int64_t>();
}

/// Rationals travel as strings; plain JSON integers are accepted too.
Rational rational_at(const Json& j, const std::string& path)
{
    if (j.is_number_integer()) return Rational(integer_at(j, path));
    if (!j.is_string()) fail(path, "expected a rational as a string, e.g. \"1/2\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
        fail(path, e.what());
    }
}

Point point_at(const Json& j, const std::string& path)
{
    try {
        return Point::parse(string_at(j, path));
    } catch (const InputError& e) {
        fail(path, e.what());
    }
}

template <class F>
auto with_path(const std::string& path, F&& body) -> decltype(body())
{
    try {
        return body();
    } catch (const InputError& e) {
        const std::string what = e.what();
        if (!what.empty() && what.front() == '/') throw;
        fail(path, what);
    }
}

Json pair_json(const DigitalImage& image, const std::optional<IndexPair>& pair)
{
    if (!pair) return nullptr;
    return Json::array({image.point(pair->first).to_string(), image.point(pair->second).to_string()});
}

}  // namespace

Json load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": invalid JSON: " + e.what());
    }
}

std::shared_ptr<const DigitalImage> parse_image(const Json& j)
{
    const Json& points = member(j, "", "points");
    if (!points.is_array()) fail("/points", "expected an array of integer arrays");
    std::vector<Point> parsed;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::string path = "/points/" + std::to_string(i);
        if (!points[i].is_array()) fail(path, "expected an array of integers");
        std::vector<Coord> coords;
        for (std::size_t k = 0; k < points[i].size(); ++k) {
            coords.push_back(integer_at(points[i][k], path + "/" + std::to_string(k)));
        }
        parsed.emplace_back(std::move(coords));
    }
    const std::int64_t u = integer_at(member(j, "", "u"), "/u");
    if (u < 1 || u > std::numeric_limits<int>::max()) fail("/u", "u must be a positive integer");
    return with_path("/points", [&] { return make_image(std::move(parsed), static_cast<int>(u)); });
}

MetricSpec parse_metric(const Json& j)
{
    const std::string kind = string_at(member(j, "", "kind"), "/kind");
    if (kind == "shortest_path") return MetricSpec::shortest_path();
    if (kind != "lp") fail("/kind", "expected \"lp\" or \"shortest_path\", got \"" + kind + "\"");
    const Rational p = rational_at(member(j, "", "p"), "/p");
    return with_path("/p", [&] { return MetricSpec::lp(p); });
}

MapCandidate parse_map_candidate(const Json& j, std::shared_ptr<const DigitalImage> image)
{
    if (const Json* formula = optional_member(j, "", "formula")) {
        const std::string text = string_at(*formula, "/formula");
        return with_path("/formula", [&] { return MapCandidate::from_formula(image, Expression::parse(text)); });
    }
    const Json& table = member(j, "", "table");
    if (!table.is_object()) fail("/table", "expected an object mapping points to points");
    std::vector<std::pair<Point, Point>> entries;
    for (auto it = table.begin(); it != table.end(); ++it) {
        const std::string path = "/table/" + it.key();
        Point from;
        try {
            from = Point::parse(it.key());
        } catch (const InputError& e) {
            fail(path, e.what());
        }
        entries.emplace_back(from, point_at(it.value(), path));
    }
    return with_path("/table", [&] { return MapCandidate::from_table(image, entries); });
}

SelfMap parse_map(const Json& j, std::shared_ptr<const DigitalImage> image)
{
    const MapCandidate candidate = parse_map_candidate(j, image);
    auto result = with_path("", [&] { return validate_selfmap(candidate); });
    if (auto* failure = std::get_if<ClosureFailure>(&result)) {
        const auto& first = failure->violations.front();
        fail(j.contains("formula") ? "/formula" : "/table/" + first.at.to_string(),
             "map leaves the image at " + first.at.to_string() + " (value " + first.value + ", " + first.reason +
                 "; " + std::to_string(failure->violations.size()) + " offending points)");
    }
    return std::get<SelfMap>(std::move(result));
}

AdmissibilityWeight parse_beta(const Json& j, const DigitalImage& image)
{
    const std::size_t n = image.size();
    const std::string kind = string_at(member(j, "", "kind"), "/kind");
    if (kind == "constant") return AdmissibilityWeight::constant(n, rational_at(member(j, "", "value"), "/value"));
    if (kind == "diagonal") return AdmissibilityWeight::diagonal(n);
    auto index = [&](const Json& p, const std::string& path) {
        const Point point = point_at(p, path);
        auto i = image.index_of(point);
        if (!i) fail(path, point.to_string() + " is not in the image");
        return *i;
    };
    if (kind == "pair") {
        return AdmissibilityWeight::pair(n, index(member(j, "", "x"), "/x"), index(member(j, "", "y"), "/y"));
    }
    if (kind != "table") fail("/kind", "expected constant, diagonal, pair or table");
    const Json& entries = member(j, "", "entries");
    if (!entries.is_array()) fail("/entries", "expected an array of [x, y, value]");
    std::vector<Rational> values(n * n, Rational(0));
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string path = "/entries/" + std::to_string(k);
        if (!entries[k].is_array() || entries[k].size() != 3) fail(path, "expected [x, y, value]");
        const std::size_t x = index(entries[k][0], path + "/0");
        const std::size_t y = index(entries[k][1], path + "/1");
        values[x * n + y] = rational_at(entries[k][2], path + "/2");
    }
    return with_path("/entries", [&] { return AdmissibilityWeight(n, std::move(values)); });
}

PsiSpec parse_psi(const Json& j)
{
    const Json& fn = member(j, "", "function");
    const std::string kind = string_at(member(fn, "/function", "kind"), "/function/kind");
    PsiSpec spec;
    if (kind == "linear") {
        const Rational c = rational_at(member(fn, "/function", "c"), "/function/c");
        spec.psi = with_path("/function/c", [&] { return PsiFunction::linear(c); });
    } else if (kind == "saturating") {
        spec.psi = PsiFunction::saturating();
    } else if (kind == "table") {
        const Json& pts = member(fn, "/function", "points");
        if (!pts.is_array()) fail("/function/points", "expected an array of [t, psi(t)]");
        std::vector<std::pair<Rational, Rational>> breakpoints;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const std::string path = "/function/points/" + std::to_string(k);
            if (!pts[k].is_array() || pts[k].size() != 2) fail(path, "expected [t, psi(t)]");
            breakpoints.emplace_back(rational_at(pts[k][0], path + "/0"), rational_at(pts[k][1], path + "/1"));
        }
        spec.psi = with_path("/function/points", [&] { return PsiFunction::table(std::move(breakpoints)); });
    } else {
        fail("/function/kind", "expected linear, saturating or table");
    }
    if (const Json* a = optional_member(j, "", "a")) spec.a = rational_at(*a, "/a");
    if (const Json* k0 = optional_member(j, "", "k0")) {
        const std::int64_t v = integer_at(*k0, "/k0");
        if (v < 0 || v > 1000) fail("/k0", "expected an integer in [0, 1000]");
        spec.k0 = static_cast<unsigned>(v);
    }
    if (const Json* nu = optional_member(j, "", "nu")) {
        const std::string nu_kind = string_at(member(*nu, "/nu", "kind"), "/nu/kind");
        if (nu_kind == "geometric") {
            spec.nu = NuSeries::geometric(rational_at(member(*nu, "/nu", "scale"), "/nu/scale"),
                                          rational_at(member(*nu, "/nu", "ratio"), "/nu/ratio"));
        } else if (nu_kind != "zero") {
            fail("/nu/kind", "expected zero or geometric");
        }
    }
    return spec;
}

ThetaSamples parse_theta(const Json& j)
{
    const Json& samples = member(j, "", "samples");
    if (!samples.is_array()) fail("/samples", "expected an array of [t, theta(t)]");
    ThetaSamples out;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const std::string path = "/samples/" + std::to_string(k);
        if (!samples[k].is_array() || samples[k].size() != 2) fail(path, "expected [t, theta(t)]");
        const std::string t = string_at(samples[k][0], path + "/0");
        const std::string v = string_at(samples[k][1], path + "/1");
        out.points.emplace_back(with_path(path + "/0", [&] { return parse_real(t); }),
                                with_path(path + "/1", [&] { return parse_real(v); }));
    }
    return out;
}

Json to_json(const DigitalImage& image)
{
    Json points = Json::array();
    for (const Point& p : image.points()) points.push_back(Json(std::vector<Coord>(p.coords().begin(), p.coords().end())));
    return {{"points", points}, {"u", image.u()}};
}

Json to_json(const MetricSpec& metric)
{
    if (metric.kind() == MetricSpec::Kind::ShortestPath) return {{"kind", "shortest_path"}};
    return {{"kind", "lp"}, {"p", std::to_string(metric.p())}};
}

Json to_json(const SelfMap& f)
{
    Json table = Json::object();
    for (std::size_t i = 0; i < f.size(); ++i) table[f.image().point(i).to_string()] = f.image().point(f(i)).to_string();
    return {{"table", table}};
}

Json to_json(const ClosureFailure& failure)
{
    Json violations = Json::array();
    for (const auto& v : failure.violations) {
        violations.push_back({{"x", v.at.to_string()}, {"value", v.value}, {"reason", v.reason}});
    }
    return {{"closed", false}, {"provenance", failure.provenance}, {"violations", violations}};
}

Json to_json(const ContractionCertificate& cert, const DigitalImage& image)
{
    return {{"classifier", "contraction"},
            {"lambda_star", cert.lambda_star.to_string()},
            {"lambda_star_power", format_rational(cert.ratio_power)},
            {"root_index", cert.index},
            {"feasible", cert.feasible},
            {"witness", pair_json(image, cert.witness)}};
}

Json to_json(const ExpansiveCertificate& cert, const DigitalImage& image)
{
    return {{"classifier", "expansive"},
            {"alpha_star", cert.alpha_star ? Json(cert.alpha_star->to_string()) : Json("infinity")},
            {"alpha_star_power", cert.ratio_power ? Json(format_rational(*cert.ratio_power)) : Json("infinity")},
            {"root_index", cert.index},
            {"feasible", cert.feasible},
            {"witness", pair_json(image, cert.witness)}};
}

Json to_json(const ThetaEnvelope& envelope, const DigitalImage& image)
{
    Json levels = Json::array();
    for (const auto& level : envelope.levels) {
        levels.push_back({{"t", level.t.to_string()},
                          {"m", level.m.to_string()},
                          {"envelope", level.envelope.to_string()},
                          {"witness", pair_json(image, level.witness)}});
    }
    Json out{{"classifier", "theta"}, {"levels", levels}, {"feasible", envelope.feasible}};
    out["failing_t"] = envelope.failing_level ? Json(envelope.levels[*envelope.failing_level].t.to_string()) : Json();
    return out;
}

Json to_json(const PsiReport& report)
{
    Json clauses = Json::array();
    for (const auto& c : report.clauses) clauses.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    return {{"passed", report.passed()}, {"clauses", clauses}};
}

Json to_json(const MishraReport& report, const DigitalImage& image)
{
    auto point_or_null = [&](const std::optional<std::size_t>& i) { return i ? Json(image.point(*i).to_string()) : Json(); };
    Json common = Json::array();
    for (std::size_t i : report.common_fixed_points) common.push_back(image.point(i).to_string());
    return {{"classifier", "mishra"},
            {"commuting", report.commuting},
            {"commuting_witness", point_or_null(report.commuting_witness)},
            {"range_inclusion", report.range_inclusion},
            {"inclusion_witness", point_or_null(report.inclusion_witness)},
            {"inequality", report.inequality},
            {"inequality_witness", pair_json(image, report.inequality_witness)},
            {"common_fixed_points", common}};
}

Json to_json(const Orbit& orbit, const DigitalImage& image)
{
    Json points = Json::array();
    for (std::size_t i : orbit.points) points.push_back(image.point(i).to_string());
    Json out{{"orbit", points}, {"status", to_string(orbit.status)}};
    if (orbit.status == Orbit::Status::Stabilized) {
        out["fixed_point"] = image.point(*orbit.fixed_point()).to_string();
        out["step"] = orbit.step;
    } else if (orbit.status == Orbit::Status::Cycle) {
        out["entry_step"] = orbit.step;
        out["period"] = orbit.period;
    }
    return out;
}

Json to_json(const FixedPointClass& fp, const DigitalImage& image)
{
    Json points = Json::array();
    for (std::size_t i : fp.points) points.push_back(image.point(i).to_string());
    return {{"status", to_string(fp.kind)}, {"fixed_points", points}};
}

Json to_json(const SweepResult& result, const DigitalImage& image)
{
    Json counterexamples = Json::array();
    for (const auto& table : result.counterexamples) {
        Json entry = Json::object();
        for (std::size_t i = 0; i < table.size(); ++i) entry[image.point(i).to_string()] = image.point(table[i]).to_string();
        counterexamples.push_back(entry);
    }
    return {{"verdict", result.violations == 0 ? "CONFIRMS_THEOREM" : "COUNTEREXAMPLE_CONFIRMED"},
            {"exhaustive", result.exhaustive},
            {"space", result.space},
            {"visited", result.visited},
            {"premise_held", result.premise_held},
            {"violations", result.violations},
            {"counterexamples", counterexamples}};
}

}  // namespace digifix::io
