#pragma once

#include <memory>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "digifix/audit.hpp"
#include "digifix/classifiers.hpp"
#include "digifix/image.hpp"
#include "digifix/maps.hpp"
#include "digifix/metrics.hpp"
#include "digifix/psi.hpp"
#include "digifix/solvers.hpp"
#include "digifix/sweep.hpp"

namespace digifix::io {

/// Reads and parses a JSON file. Throws InputError on I/O or syntax errors.
Json load_file(const std::string& path);

// Every parser throws InputError whose message starts with the JSON path of
// the offending field, e.g. "/points/2/0: expected an integer".

/// {"points": [[int, ...], ...], "u": int}
std::shared_ptr<const DigitalImage> parse_image(const Json& j);
/// {"kind": "lp", "p": "2"} or {"kind": "shortest_path"}
MetricSpec parse_metric(const Json& j);
/// {"table": {"(0)": "(1)", ...}} or {"formula": "x/2 + 3"}
MapCandidate parse_map_candidate(const Json& j, std::shared_ptr<const DigitalImage> image);
/// Validates the candidate as well; closure failures become InputError.
SelfMap parse_map(const Json& j, std::shared_ptr<const DigitalImage> image);
/// {"kind": "constant", "value": "1"}, {"kind": "diagonal"},
/// {"kind": "pair", "x": "(0)", "y": "(1)"} or
/// {"kind": "table", "entries": [["(0)", "(1)", "1"], ...]} (missing pairs are 0)
AdmissibilityWeight parse_beta(const Json& j, const DigitalImage& image);
/// {"function": {"kind": "linear", "c": "1/2"} | {"kind": "saturating"} |
///   {"kind": "table", "points": [["0", "0"], ...]},
///  "a": "1/2", "k0": 1, "nu": {"kind": "zero"} | {"kind": "geometric", "scale": "1", "ratio": "1/2"}}
PsiSpec parse_psi(const Json& j);
/// {"samples": [["1", "1/2"], ["sqrt(2)", "1"], ...]}
ThetaSamples parse_theta(const Json& j);

Json to_json(const DigitalImage& image);
Json to_json(const MetricSpec& metric);
Json to_json(const SelfMap& f);  // {"table": {...}}, parses back through parse_map
Json to_json(const ClosureFailure& failure);
Json to_json(const ContractionCertificate& cert, const DigitalImage& image);
Json to_json(const ExpansiveCertificate& cert, const DigitalImage& image);
Json to_json(const ThetaEnvelope& envelope, const DigitalImage& image);
Json to_json(const PsiReport& report);
Json to_json(const MishraReport& report, const DigitalImage& image);
Json to_json(const Orbit& orbit, const DigitalImage& image);
Json to_json(const FixedPointClass& fp, const DigitalImage& image);
Json to_json(const SweepResult& result, const DigitalImage& image);

}  // namespace digifix::io
