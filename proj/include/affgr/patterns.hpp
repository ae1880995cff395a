#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "affgr/core.hpp"
#include "affgr/reflections.hpp"

namespace affgr {

enum class PatternKind { Imaginary, RealFirst, RealSecond, ExcFirst, ExcSecond };

const char* to_string(PatternKind k);

/// A local configuration in L(w) producing a singular point w_P below w.
/// indices are L-positions in [1, 2n]: (i, j) for imaginary patterns,
/// (i, g, j, k) / (i, j, g, k) for the four-index kinds.
struct Pattern {
    PatternKind kind;
    std::vector<int> indices;
    Point host;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// All pattern occurrences of the requested kinds.  Imaginary patterns are
/// canonicalized to j - i < n (an occurrence at (i, j+n) has the same w_P).
std::vector<Pattern> find_patterns(const Point& w);
std::vector<Pattern> find_patterns(const Point& w, const std::set<PatternKind>& kinds);

void validate_pattern(const Pattern& p);

/// The constructed point(s) w_P: one point per kind, except the exceptional
/// second kind which yields the pair (w_{P,1}, w_{P,2}).
std::vector<Point> apply_pattern(const Pattern& p);

enum class WitnessKind { ExcessCurves, LargeReflection, ImaginaryTangent };

const char* to_string(WitnessKind k);

/// Certificate that `point` is singular in X(host): either more curves than
/// dim X(host), a large reflection moving the point up within X(host), or an
/// imaginary-weight tangent line (exact tangent classes only).
struct SingularWitness {
    SingularWitness(WitnessKind k, Point p) : kind(k), point(std::move(p)) {}

    WitnessKind kind;
    Point point;
    // ExcessCurves
    int curves = 0;
    int dim = 0;
    // LargeReflection
    std::optional<Reflection> reflection;
    // ImaginaryTangent
    std::pair<int, int> residues{0, 0};
    int level = 0;
};

/// Certificate for the which_point-th point of apply_pattern (0 except for the
/// exceptional second kind, where 1 addresses w_{P,2}).  w_{P,2} carries a
/// certificate only when L_i < L_j - 1.
SingularWitness pattern_certificate(const Pattern& p, int which_point = 0);

/// Re-check a witness payload against the host from first principles.
bool verify_witness(const SingularWitness& w, const Point& host);

/// First large reflection r (canonical order) with x < r.x <= host, if any.
std::optional<Reflection> find_large_up(const Point& x, const Point& host);

}  // namespace affgr
