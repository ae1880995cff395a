#pragma once

#include <optional>
#include <vector>

#include "affgr/core.hpp"

namespace affgr {

/// The real affine root (i j) + h*delta, i and j residues in [1, n].
struct AffineRoot {
    int i = 0;
    int j = 0;
    int h = 0;

    AffineRoot() = default;
    AffineRoot(int i_, int j_, int h_) : i(i_), j(j_), h(h_) {}

    AffineRoot negated() const { return AffineRoot(j, i, -h); }
    /// h > 0, or h = 0 and the finite part is positive ((i j) with i > j).
    bool is_positive() const { return h > 0 || (h == 0 && i > j); }

    friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/// s_{-a} = s_a: a reflection is the root up to negation, canonicalized to i < j.
class Reflection {
public:
    explicit Reflection(const AffineRoot& r);
    Reflection(int i, int j, int h) : Reflection(AffineRoot(i, j, h)) {}

    int i() const { return root_.i; }
    int j() const { return root_.j; }
    int h() const { return root_.h; }
    const AffineRoot& root() const { return root_; }

    friend bool operator==(const Reflection&, const Reflection&) = default;
    friend bool operator<(const Reflection& a, const Reflection& b);

private:
    AffineRoot root_;  // i < j
};

std::string to_string(const Reflection& r);

/// Action on string lengths: l'_i = l_j - h, l'_j = l_i + h, rest unchanged.
/// Present exactly when both candidates lie in [0, d] ("defined at x"); the
/// fixed-point case s.x = x returns x itself.
std::optional<Point> reflection_apply(const Point& x, const Reflection& r);

/// Every moved tuple entry is displaced by +-((i-j) + h*n); small means |.| < n.
/// Precondition: reflection_apply(x, r) present and != x.
bool is_small(const Point& x, const Reflection& r);

/// All reflections defined at x with s.x != x, in canonical order.
std::vector<Reflection> reflections_at(const Point& x);

/// Down-exchange of residues [a], [b] (a, b in [1, 2n]).  Canonical L-positions
/// (i, j) with i < j < i + n and L_i > L_j are selected; if none exist the
/// exchange is the identity and x is returned unchanged.
Point down_exchange(const Point& x, int a, int b);
/// Inverse move; absent exactly when the source string is empty.
std::optional<Point> up_exchange(const Point& x, int a, int b);

/// The reflections realizing the exchanges (absent when identity / undefined).
std::optional<Reflection> down_exchange_reflection(const Point& x, int a, int b);
std::optional<Reflection> up_exchange_reflection(const Point& x, int a, int b);

/// codim of the down-exchange result: 1 + g_>= + g_> counted strictly between
/// the canonical representatives.  Precondition: the exchange is not the identity.
int down_exchange_codim(const Point& x, int a, int b);

/// The reflections corresponding to the down-exchange: the exchange itself plus
/// one or two per index in G_>=; cardinality 1 + g_>= + g_>.
std::vector<Reflection> corresponding_reflections(const Point& x, int a, int b);

/// E(X(w), x): all reflections r with r.x present, != x, and r.x <= w.
std::vector<Reflection> curve_set(const Point& x, const Point& w);

/// The unique small reflection s' with x < s'x <= sx (resp. x > s'x >= sx) and
/// the same finite part; r itself when already small.
Reflection small_companion(const Point& x, const Reflection& r);

/// Brute-force permutation action on |x| (test oracle for the length rule):
/// applies the permutation entrywise, including tail entries shifted into range.
std::optional<ITuple> permutation_apply(const Point& x, const Reflection& r);

}  // namespace affgr
