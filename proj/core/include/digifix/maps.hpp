#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "digifix/expression.hpp"
#include "digifix/image.hpp"

namespace digifix {

/// A total self-map of a digital image, stored as a table of point
/// indices. Only validated maps exist as SelfMap values.
class SelfMap {
public:
    /// Throws InputError unless `table` has one in-range entry per point.
    SelfMap(std::shared_ptr<const DigitalImage> image, std::vector<std::size_t> table);

    static SelfMap identity(std::shared_ptr<const DigitalImage> image);
    static SelfMap constant(std::shared_ptr<const DigitalImage> image, std::size_t value);

    const DigitalImage& image() const { return *image_; }
    const std::shared_ptr<const DigitalImage>& image_ptr() const { return image_; }
    std::size_t size() const { return table_.size(); }
    std::span<const std::size_t> table() const { return table_; }

    std::size_t operator()(std::size_t i) const { return table_[i]; }
    const Point& apply(const Point& p) const { return image_->point(table_[image_->require_index(p)]); }

    /// (*this) o inner. Throws InputError if the images differ.
    SelfMap compose(const SelfMap& inner) const;

    bool is_constant() const;

    bool operator==(const SelfMap& other) const
    {
        return table_ == other.table_ && *image_ == *other.image_;
    }

private:
    std::shared_ptr<const DigitalImage> image_;
    std::vector<std::size_t> table_;
};

/// True when both maps live on the same image (same points and u).
bool same_image(const SelfMap& f, const SelfMap& g);

/// A value that cannot be a lattice point of the image: a non-integral
/// rational, an irrational, or an undefined expression.
struct NonLatticeValue {
    std::string value;   // exact text, e.g. "7/2", "sqrt(33)"
    std::string reason;  // "non-integral", "irrational", "not real", "undefined", "unsupported"
};

using RawValue = std::variant<Point, NonLatticeValue>;

/// An assignment awaiting closure validation.
struct MapCandidate {
    std::shared_ptr<const DigitalImage> image;
    std::map<Point, RawValue> assignment;
    std::string provenance;

    static MapCandidate from_table(std::shared_ptr<const DigitalImage> image,
                                   const std::vector<std::pair<Point, Point>>& entries);
    /// Evaluates `formula` at every point of a one-dimensional image.
    /// Throws InputError for images of dimension > 1.
    static MapCandidate from_formula(std::shared_ptr<const DigitalImage> image, const Expression& formula);
};

struct ClosureViolation {
    Point at;
    std::string value;
    std::string reason;  // NonLatticeValue::reason, or "outside image"
};

struct ClosureFailure {
    std::string provenance;
    std::vector<ClosureViolation> violations;  // in point order
};

/// Accepts exactly the candidates whose every value is a point of X.
/// Throws InputError when the assignment is partial (or names points
/// outside the image).
std::variant<SelfMap, ClosureFailure> validate_selfmap(const MapCandidate& candidate);

/// Edge-preservation criterion: x <-> y implies f(x) = f(y) or f(x) <-> f(y).
bool is_continuous_edgewise(const SelfMap& f);

/// First edge (i < j) whose images are neither equal nor adjacent.
std::optional<std::pair<std::size_t, std::size_t>> continuity_violation(const SelfMap& f);

/// Edge criterion for a map between two images; table[i] indexes codomain.
bool is_continuous_edgewise(const DigitalImage& domain, const DigitalImage& codomain,
                            std::span<const std::size_t> table);

struct ContinuityOptions {
    /// Largest |X| for which connected subsets are enumerated.
    std::size_t exhaustive_bound = 14;
    /// Enumerate even above the bound; throws ResourceError instead of
    /// falling back to the edge criterion.
    bool force_exhaustive = false;
};

/// Connectedness-preservation definition: f(A) is connected for every
/// connected A of X. Enumerates connected subsets up to the bound and
/// falls back to the (equivalent) edge criterion above it.
bool is_continuous_global(const SelfMap& f, const ContinuityOptions& options = {});

/// Connected-subset tables of one image, reusable across many maps.
class ConnectedSubsets {
public:
    static constexpr std::size_t kMaxPoints = 24;

    /// Throws ResourceError for images above kMaxPoints.
    explicit ConnectedSubsets(const DigitalImage& image);

    std::span<const std::uint32_t> connected_masks() const { return connected_; }
    bool is_connected_mask(std::uint32_t mask) const { return is_connected_[mask] != 0; }

    /// True iff the image of every connected subset is connected.
    bool preserves_connectedness(std::span<const std::size_t> table) const;

private:
    std::vector<std::uint8_t> is_connected_;
    std::vector<std::uint32_t> connected_;
};

std::vector<std::size_t> fixed_point_indices(const SelfMap& f);
std::vector<Point> fixed_points(const SelfMap& f);
bool is_onto(const SelfMap& f);

/// x_j with j counted from 1. Throws InputError outside [1, n].
Coord projection(const Point& x, std::size_t j);

}  // namespace digifix
