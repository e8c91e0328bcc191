#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "sgt/signed_graph.hpp"
#include "sgt/structure.hpp"

namespace sgt {

// -- Family labels -----------------------------------------------------------

struct CycleFamily {
  int n = 0;
  bool balanced = true;
  friend bool operator==(const CycleFamily&, const CycleFamily&) = default;
};

struct PathFamily {
  int n = 0;
  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

struct StarFamily {
  int leaves = 0;
  friend bool operator==(const StarFamily&, const StarFamily&) = default;
};

// Balanced complete multipartite graph; parts are ascending sizes.
struct CompleteMultipartiteFamily {
  std::vector<int> parts;
  friend bool operator==(const CompleteMultipartiteFamily&,
                         const CompleteMultipartiteFamily&) = default;
};

// A cycle with t >= 1 pendant stars: gaps[i] counts the bare cycle vertices
// between starred vertex i and starred vertex i+1 (cyclically), leaves[i]
// counts pendants at starred vertex i. Rotation/reflection-normalized.
struct StarDecomposition {
  int t = 0;
  std::vector<int> gaps;
  std::vector<int> leaves;
  friend bool operator==(const StarDecomposition&, const StarDecomposition&) = default;
};

struct CanonicalUnicyclicFamily {
  int girth = 0;
  bool balanced = true;
  StarDecomposition stars;
  friend bool operator==(const CanonicalUnicyclicFamily&,
                         const CanonicalUnicyclicFamily&) = default;
};

// A cycle with one star of t >= 1 pendant edges attached through a cut
// vertex adjacent to exactly one cycle vertex.
struct PendantStarCycleFamily {
  int girth = 0;
  bool balanced = true;
  int leaves = 0;
  friend bool operator==(const PendantStarCycleFamily&, const PendantStarCycleFamily&) = default;
};

struct ThetaCycle {
  int length = 0;
  int sign = +1;
  friend auto operator<=>(const ThetaCycle&, const ThetaCycle&) = default;
};

// Two degree-3 hubs joined by three internally disjoint paths. orders[] are
// the path orders (vertex counts, ascending); cycles[] are the (length,
// sign) pairs of the three circuits, sorted.
struct ThetaFamily {
  std::array<int, 3> orders{};
  std::array<ThetaCycle, 3> cycles{};
  friend bool operator==(const ThetaFamily&, const ThetaFamily&) = default;
};

struct OtherFamily {
  friend bool operator==(const OtherFamily&, const OtherFamily&) = default;
};

using FamilyLabel = std::variant<CycleFamily, PathFamily, StarFamily, CompleteMultipartiteFamily,
                                 CanonicalUnicyclicFamily, PendantStarCycleFamily, ThetaFamily,
                                 OtherFamily>;

std::string to_string(const FamilyLabel& label);

// -- Constructors -------------------------------------------------------------

// Cycle 0-1-...-(n-1)-0; the unbalanced variant negates the closing edge.
SignedGraph make_cycle(int n, bool balanced);
SignedGraph make_path(int n);            // n >= 1 vertices, all-positive
SignedGraph make_star(int leaves);       // center 0, leaves >= 1, all-positive
SignedGraph make_complete_multipartite(const std::vector<int>& parts);  // all-positive

// One pendant star per entry: `position` on the cycle (0-based), `leaves`
// pendant edges attached there. All edges positive except, when balanced is
// false, the negated closing cycle edge.
struct PendantStarSpec {
  int position = 0;
  int leaves = 0;
};
SignedGraph make_canonical_unicyclic(int girth, const std::vector<PendantStarSpec>& stars,
                                     bool balanced = true);

// Cycle plus a single cut vertex adjacent to cycle vertex 0 carrying
// `leaves` pendant edges.
SignedGraph make_cycle_with_pendant_star(int girth, bool balanced, int leaves);

// Two hubs joined by internally disjoint paths of orders k, l, m (each >= 2,
// at most one equal to 2). sign_kl / sign_lm set the signs of the circuits
// through path pairs (k,l) and (l,m); the third circuit's sign follows.
SignedGraph make_theta(int k, int l, int m, int sign_kl = +1, int sign_lm = +1);

// -- Recognition --------------------------------------------------------------

// Identifies which family a connected signed graph belongs to, checking in a
// fixed precedence order (cycle first, Other last) so overlapping families
// resolve deterministically.
FamilyLabel recognize(const SignedGraph& g);

// Present iff g is a cycle with at least one pendant star attached directly
// to cycle vertices (every off-cycle vertex a pendant of a cycle vertex).
std::optional<StarDecomposition> star_decomposition(const SignedGraph& g);

// Ascending part sizes if the underlying graph is complete multipartite with
// at least two parts.
std::optional<std::vector<int>> complete_multipartite_parts(const SignedGraph& g);

bool is_balanced_complete_multipartite(const SignedGraph& g);

// Parity classification of a star decomposition, used by the equality
// analysis of unicyclic graphs.
enum class ParityCondition {
  single_star,    // t == 1
  all_gaps_odd,   // t >= 2 and every gap odd
  one_even_gap,   // t >= 2 and exactly one gap even
  neither,
};
const char* to_string(ParityCondition c);
ParityCondition parity_condition(const StarDecomposition& sd);

}  // namespace sgt
