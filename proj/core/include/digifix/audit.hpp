#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "digifix/image.hpp"
#include "digifix/metrics.hpp"
#include "digifix/sweep.hpp"

namespace digifix {

/// Insertion-ordered JSON so reports list points in image order.
using Json = nlohmann::ordered_json;

enum class Verdict { ConfirmsTheorem, CounterexampleConfirmed, FlawDemonstrated };

std::string to_string(Verdict verdict);
/// Throws InputError for an unknown verdict name.
Verdict parse_verdict(const std::string& text);

struct Check {
    std::string name;
    bool passed = true;
    Json witness;  // null when there is nothing to show
};

/// One exhaustive (or sampled) pass of the sweep engine inside an audit.
struct SweepStats {
    std::string image;
    std::string metric;
    std::string premise;
    std::string conclusion;
    bool exhaustive = true;
    std::uint64_t space = 0;
    std::uint64_t visited = 0;
    std::uint64_t premise_held = 0;
    std::uint64_t violations = 0;
};

struct AuditReport {
    std::string case_id;
    std::vector<Check> premises;
    Check conclusion;
    Verdict verdict = Verdict::ConfirmsTheorem;
    std::vector<SweepStats> sweeps;
    Json counterexamples = Json::array();
    std::optional<double> runtime_ms;  // only filled on request; reports stay byte-identical otherwise
};

struct AuditOptions {
    unsigned workers = 1;
    bool timing = false;
};

/// Registry ids in a fixed order.
const std::vector<std::string>& audit_case_ids();

/// Verdict the registry expects for a case. Throws InputError for an
/// unknown id.
Verdict expected_verdict(const std::string& case_id);

/// Throws InputError for an unknown id.
AuditReport run_named_audit(const std::string& case_id, const AuditOptions& options = {});

Json to_json(const AuditReport& report);

/// Sweep image family.
std::shared_ptr<const DigitalImage> segment_image(int k);                       // [0,k], u = 1
std::shared_ptr<const DigitalImage> square_image(int u);                        // [0,1]^2
std::shared_ptr<const DigitalImage> rectangle_image(int width, int height, int u);  // [0,w-1] x [0,h-1]
std::shared_ptr<const DigitalImage> gap_image();                                // {0,1,3}, u = 1

/// "[0,3]", "square u=2", "{0,1,3}", or the point list for other images.
std::string describe_image(const DigitalImage& image);

/// Wraps one sweep into stats for a report.
SweepStats make_stats(const DigitalImage& image, const std::string& metric, const std::string& premise,
                      const std::string& conclusion, const SweepResult& result);

}  // namespace digifix
