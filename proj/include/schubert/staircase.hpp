#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/affine_permutation.hpp"
#include "schubert/bigint.hpp"

namespace schubert {

enum class GraphKind { path, cycle };

/// The Coxeter graph of finite type A_n (path on s_1..s_n) or of affine type
/// A~ with n nodes (cycle on s_0..s_{n-1}). Internally vertices are numbered
/// 0..n-1; `label` gives the s-index used in output.
struct CoxGraph {
  GraphKind kind = GraphKind::path;
  int n = 0;

  static CoxGraph path(int n);
  static CoxGraph cycle(int n);

  int label(int vertex) const { return kind == GraphKind::path ? vertex + 1 : vertex; }
  /// Inverse of `label`; throws Error(index_out_of_range).
  int vertex(int label) const;
  std::uint64_t all() const;
  bool adjacent(int a, int b) const;
  bool connected(std::uint64_t mask) const;
  /// Vertices adjacent to some vertex of the mask, the mask included.
  std::uint64_t closed_neighbourhood(std::uint64_t mask) const;

  /// Period of the affine symmetric group realising this graph: the path
  /// Gamma_n sits inside S~_{n+1} as the proper parabolic {s_1..s_n}.
  int period() const { return kind == GraphKind::path ? n + 1 : n; }
  int reflection(int vertex) const { return label(vertex); }

  std::string to_string() const;
  friend bool operator==(const CoxGraph&, const CoxGraph&) = default;
  friend auto operator<=>(const CoxGraph&, const CoxGraph&) = default;
};

using BlockMask = std::uint64_t;

/// A partially ordered collection of vertex subsets (blocks). The order is
/// given by generating pairs (a, b) meaning block a precedes block b; the
/// reflexive-transitive closure is computed on construction and the cover
/// relation derived from it.
class StaircaseDiagram {
 public:
  /// Throws Error(malformed_relation) when the pairs are out of range or
  /// generate a cycle, and Error(invalid_argument) for more than 64 blocks or
  /// vertices outside the graph.
  StaircaseDiagram(CoxGraph graph, std::vector<BlockMask> blocks,
                   const std::vector<std::pair<int, int>>& relations);

  static StaircaseDiagram empty(CoxGraph graph) {
    return StaircaseDiagram(graph, std::vector<BlockMask>{}, std::vector<std::pair<int, int>>{});
  }

  const CoxGraph& graph() const noexcept { return graph_; }
  int size() const noexcept { return static_cast<int>(blocks_.size()); }
  bool empty() const noexcept { return blocks_.empty(); }
  const std::vector<BlockMask>& blocks() const noexcept { return blocks_; }
  BlockMask block(int i) const { return blocks_.at(i); }

  /// Strict order a < b.
  bool less(int a, int b) const { return (above_[a] >> b) & 1u; }
  bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }
  BlockMask above(int a) const { return above_[a]; }
  std::vector<std::pair<int, int>> covers() const;
  bool is_minimal(int a) const;
  bool is_maximal(int a) const;

  BlockMask support() const;
  bool fully_supported() const { return support() == graph_.all(); }

  /// Same diagram with blocks sorted by mask; equal diagrams have equal
  /// canonical forms.
  StaircaseDiagram canonical() const;
  StaircaseDiagram reversed() const;

  friend bool operator==(const StaircaseDiagram& a, const StaircaseDiagram& b);
  friend std::strong_ordering operator<=>(const StaircaseDiagram& a,
                                          const StaircaseDiagram& b);

 private:
  struct ClosedTag {};
  StaircaseDiagram(ClosedTag, CoxGraph graph, std::vector<BlockMask> blocks,
                   std::vector<BlockMask> above);

  CoxGraph graph_;
  std::vector<BlockMask> blocks_;
  std::vector<BlockMask> above_;  // bit b of above_[a]: a < b
};

// --------------------------------------------------------------------------
// Axioms

enum class Axiom {
  none,
  empty_block,
  duplicate_block,
  connected,         // (1) blocks and covering unions connected
  chain,             // (2) D_s is a chain
  adjacent_chain,    // (3) D_s | D_t a chain with saturated D_s, D_t
  extremal,          // (4) every block is a min of some D_s and a max of some D_s'
};

const char* to_string(Axiom axiom);

struct ValidationReport {
  bool valid = true;
  Axiom violated = Axiom::none;
  std::string detail;
};

ValidationReport validate(const StaircaseDiagram& d);
inline bool is_staircase(const StaircaseDiagram& d) { return validate(d).valid; }

/// Reverses the order.
StaircaseDiagram flip(const StaircaseDiagram& d);
/// On the cycle every block must be proper; on the path always true.
bool is_spherical(const StaircaseDiagram& d);

// --------------------------------------------------------------------------
// Interval structure on the path

/// Closed interval [lo, hi] of path labels (1-based).
struct Interval {
  int lo = 1;
  int hi = 1;
  int size() const { return hi - lo + 1; }
  bool subset_of(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

enum class Direction { increasing, decreasing };
const char* to_string(Direction d);
inline Direction opposite(Direction d) {
  return d == Direction::increasing ? Direction::decreasing : Direction::increasing;
}

/// Fully supported path diagram whose blocks form a chain B_1 < ... < B_m
/// (increasing) or B_1 > ... > B_m (decreasing) with s_1 in B_1.
bool is_monotone(const StaircaseDiagram& d, Direction direction);

/// A chain diagram on Gamma_n given by intervals listed left to right.
StaircaseDiagram chain_diagram(int n, const std::vector<Interval>& blocks,
                               Direction direction);

struct DyckPath {
  std::vector<std::pair<int, int>> steps;  ///< (right, up) runs
  int size() const;
  bool valid() const;
  friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

/// Needs a fully supported increasing diagram on a path.
DyckPath to_dyck(const StaircaseDiagram& d);
StaircaseDiagram from_dyck(const DyckPath& p, int n);
std::vector<DyckPath> all_dyck_paths(int n);
/// M^+(n) through the Dyck bijection.
std::vector<StaircaseDiagram> increasing_staircases(int n);

/// Intersection of a fully supported increasing/decreasing diagram on
/// Gamma_{n+1} with {s_1..s_n}. Blocks are listed left to right (chain order);
/// the last one may be a proper subset of its predecessor.
struct BrokenStaircase {
  int n = 0;
  Direction direction = Direction::increasing;
  std::vector<Interval> blocks;

  /// Last block strictly inside the previous one.
  bool has_fragment() const;
  friend bool operator==(const BrokenStaircase&, const BrokenStaircase&) = default;
  friend auto operator<=>(const BrokenStaircase&, const BrokenStaircase&) = default;
};

/// `d` must be monotone in `direction` on Gamma_{n+1}, n >= 1.
BrokenStaircase break_staircase(const StaircaseDiagram& d, Direction direction);
/// The one or two diagrams on Gamma_{n+1} that break to `b`.
std::vector<StaircaseDiagram> unbreak(const BrokenStaircase& b);
/// All broken staircases on Gamma_n with the given direction, sorted.
std::vector<BrokenStaircase> broken_staircases(int n, Direction direction);

/// Alternating sequence of broken staircases around the cycle and the
/// 1-based position of s_{n-1} inside the last piece.
struct CycleDecomposition {
  std::vector<BrokenStaircase> pieces;
  int marked = 1;
  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

/// Needs a fully supported spherical diagram on the cycle.
CycleDecomposition cycle_decompose(const StaircaseDiagram& d);
StaircaseDiagram cycle_glue(const CycleDecomposition& c);

/// Broken staircases (alternating, the last one decreasing) followed by an
/// increasing staircase.
struct LineDecomposition {
  std::vector<BrokenStaircase> broken;
  StaircaseDiagram tail;
};

/// Needs a fully supported diagram on a path.
LineDecomposition line_decompose(const StaircaseDiagram& d);
StaircaseDiagram line_glue(const LineDecomposition& l);

// --------------------------------------------------------------------------
// Enumeration

struct DiagramBudget {
  int max_path = 12;
  int max_cycle = 8;
};

struct DiagramQuery {
  bool spherical_only = true;
  bool fully_supported_only = false;
};

/// Constructive generation: Dyck paths, broken staircases and their gluings,
/// and disjoint placement on support components. Every diagram is produced
/// exactly once; throws Error(budget_exceeded) past the budget.
void for_each_diagram(const CoxGraph& g, const DiagramQuery& query,
                      const std::function<void(const StaircaseDiagram&)>& visit,
                      const DiagramBudget& budget = {});
std::vector<StaircaseDiagram> enumerate_diagrams(const CoxGraph& g,
                                                 const DiagramQuery& query,
                                                 const DiagramBudget& budget = {});
BigInt count_diagrams(const CoxGraph& g, const DiagramQuery& query,
                      const DiagramBudget& budget = {});

// --------------------------------------------------------------------------
// Group elements

/// Element with the complete maximal BP decomposition encoded by a spherical
/// diagram: blocks are processed bottom-up along a linear extension, each
/// block B contributing w_0(B) w_0(B & L) on the left, where L is the union of
/// the blocks already processed.
AffinePermutation to_element(const StaircaseDiagram& d);

/// Rows of blocks by height, highest first; the cycle is cut at s_0, which
/// appears as both the first and the last column.
std::string render_ascii(const StaircaseDiagram& d);

}  // namespace schubert
