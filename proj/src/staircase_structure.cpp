#include <algorithm>
#include <bit>
#include <map>

#include "schubert/error.hpp"
#include "schubert/staircase.hpp"

namespace schubert {

namespace {

bool has(BlockMask m, int v) { return (m >> v) & 1u; }

BlockMask interval_mask(int lo, int hi) {  // 0-based, inclusive
  BlockMask m = 0;
  for (int v = lo; v <= hi; ++v) m |= BlockMask{1} << v;
  return m;
}

/// Path blocks as 1-based intervals, paired with their block index and
/// sorted by left end.
std::vector<std::pair<Interval, int>> path_intervals(const StaircaseDiagram& d) {
  if (d.graph().kind != GraphKind::path)
    throw Error(ErrorKind::invalid_argument, "diagram must live on a path");
  std::vector<std::pair<Interval, int>> out;
  for (int i = 0; i < d.size(); ++i) {
    BlockMask b = d.block(i);
    if (b == 0) throw Error(ErrorKind::invalid_argument, "empty block");
    int lo = std::countr_zero(b), hi = 63 - std::countl_zero(b);
    if (b != interval_mask(lo, hi))
      throw Error(ErrorKind::invalid_argument, "block is not an interval");
    out.push_back({{lo + 1, hi + 1}, i});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A piece of a glued diagram: consecutive positions, blocks as local
/// 1-based intervals left to right, optionally ending with a fragment that
/// belongs to the next piece's first block.
struct Segment {
  int size = 0;
  Direction direction = Direction::increasing;
  const std::vector<Interval>* blocks = nullptr;
  bool fragment = false;
};

/// Lays the segments out left to right from position 0 and maps position x
/// to vertex label_of(x).
template <class LabelOf>
StaircaseDiagram glue(const CoxGraph& g, const std::vector<Segment>& segs, bool cyclic,
                      LabelOf label_of) {
  std::vector<BlockMask> pos_blocks;
  std::vector<std::pair<int, int>> rel;
  std::vector<int> first(segs.size()), last(segs.size());
  int offset = 0;
  for (std::size_t j = 0; j < segs.size(); ++j) {
    const Segment& s = segs[j];
    int genuine = static_cast<int>(s.blocks->size()) - (s.fragment ? 1 : 0);
    first[j] = static_cast<int>(pos_blocks.size());
    for (int i = 0; i < genuine; ++i) {
      const Interval& iv = (*s.blocks)[i];
      pos_blocks.push_back(interval_mask(offset + iv.lo - 1, offset + iv.hi - 1));
    }
    last[j] = static_cast<int>(pos_blocks.size()) - 1;
    offset += s.size;
  }
  offset = 0;
  for (std::size_t j = 0; j < segs.size(); ++j) {
    const Segment& s = segs[j];
    bool has_next = cyclic || j + 1 < segs.size();
    std::size_t nj = (j + 1) % segs.size();
    if (s.fragment) {
      if (!has_next) throw Error(ErrorKind::invalid_argument, "trailing fragment");
      const Interval& iv = s.blocks->back();
      pos_blocks[first[nj]] |= interval_mask(offset + iv.lo - 1, offset + iv.hi - 1);
    }
    auto link = [&](int a, int b) {
      if (s.direction == Direction::increasing) rel.emplace_back(a, b);
      else rel.emplace_back(b, a);
    };
    for (int i = first[j]; i < last[j]; ++i) link(i, i + 1);
    if (has_next) link(last[j], first[nj]);
    offset += s.size;
  }
  std::vector<BlockMask> blocks;
  blocks.reserve(pos_blocks.size());
  for (BlockMask pm : pos_blocks) {
    BlockMask m = 0;
    for (int x = 0; x < g.n; ++x)
      if (has(pm, x)) m |= BlockMask{1} << label_of(x);
    blocks.push_back(m);
  }
  return StaircaseDiagram(g, std::move(blocks), rel).canonical();
}

/// Blocks of d meeting the arc of `len` vertices starting at `start`, as
/// local intervals sorted left to right.
std::vector<Interval> restrict_to(const StaircaseDiagram& d, int start, int len) {
  const int n = d.graph().n;
  std::vector<Interval> out;
  for (BlockMask b : d.blocks()) {
    int lo = -1, hi = -1;
    bool broken = false;
    for (int t = 0; t < len; ++t) {
      if (!has(b, (start + t) % n)) continue;
      if (lo < 0) lo = t;
      else if (hi != t - 1) broken = true;
      hi = t;
    }
    if (broken) throw Error(ErrorKind::invalid_argument, "diagram is not a staircase");
    if (lo >= 0) out.push_back({lo + 1, hi + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Leftmost vertex of the block (walking from its start) in no other block.
int leftmost_private(const StaircaseDiagram& d, int a, int start) {
  const int n = d.graph().n;
  for (int t = 0; t < n; ++t) {
    int v = (start + t) % n;
    if (!has(d.block(a), v)) break;
    bool shared = false;
    for (int b = 0; b < d.size() && !shared; ++b)
      shared = b != a && has(d.block(b), v);
    if (!shared) return v;
  }
  throw Error(ErrorKind::invalid_argument, "extremal block without a private vertex");
}

int arc_start(const CoxGraph& g, BlockMask b) {
  for (int v = 0; v < g.n; ++v)
    if (has(b, v) && !has(b, (v + g.n - 1) % g.n)) return v;
  throw Error(ErrorKind::not_spherical, "block covers the whole cycle");
}

void check_broken(const BrokenStaircase& b) {
  if (b.n < 1 || b.blocks.empty())
    throw Error(ErrorKind::invalid_argument, "broken staircase needs n >= 1 and a block");
  for (const Interval& iv : b.blocks)
    if (iv.lo < 1 || iv.hi > b.n || iv.lo > iv.hi)
      throw Error(ErrorKind::invalid_argument, "broken block out of range");
}

}  // namespace

// --------------------------------------------------------------------------
// Monotone diagrams and Dyck paths

bool is_monotone(const StaircaseDiagram& d, Direction direction) {
  if (d.graph().kind != GraphKind::path || !d.fully_supported() || d.empty()) return false;
  if (!validate(d).valid) return false;
  auto iv = path_intervals(d);
  for (std::size_t i = 0; i < iv.size(); ++i)
    for (std::size_t j = i + 1; j < iv.size(); ++j) {
      bool ok = direction == Direction::increasing ? d.less(iv[i].second, iv[j].second)
                                                   : d.less(iv[j].second, iv[i].second);
      if (!ok) return false;
    }
  return true;
}

StaircaseDiagram chain_diagram(int n, const std::vector<Interval>& blocks, Direction direction) {
  CoxGraph g = CoxGraph::path(n);
  std::vector<BlockMask> masks;
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Interval& iv = blocks[i];
    if (iv.lo < 1 || iv.hi > n || iv.lo > iv.hi)
      throw Error(ErrorKind::invalid_argument, "interval out of range");
    masks.push_back(interval_mask(iv.lo - 1, iv.hi - 1));
    int a = static_cast<int>(i);
    if (i + 1 < blocks.size()) {
      if (direction == Direction::increasing) rel.emplace_back(a, a + 1);
      else rel.emplace_back(a + 1, a);
    }
  }
  return StaircaseDiagram(g, std::move(masks), rel);
}

int DyckPath::size() const {
  int s = 0;
  for (auto [r, u] : steps) s += r;
  return s;
}

bool DyckPath::valid() const {
  int R = 0, U = 0;
  for (auto [r, u] : steps) {
    if (r < 1 || u < 1) return false;
    R += r;
    U += u;
    if (U > R) return false;
  }
  return R == U;
}

DyckPath to_dyck(const StaircaseDiagram& d) {
  if (d.graph().kind != GraphKind::path)
    throw Error(ErrorKind::invalid_argument, "Dyck paths need a path graph");
  if (!d.fully_supported()) throw Error(ErrorKind::not_fully_supported, "diagram is not fully supported");
  if (!is_monotone(d, Direction::increasing))
    throw Error(ErrorKind::not_increasing, "diagram is not increasing");
  auto iv = path_intervals(d);
  DyckPath p;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    BlockMask b = d.block(iv[i].second);
    BlockMask prev = i > 0 ? d.block(iv[i - 1].second) : 0;
    BlockMask next = i + 1 < iv.size() ? d.block(iv[i + 1].second) : 0;
    p.steps.emplace_back(std::popcount(b & ~prev), std::popcount(b & ~next));
  }
  return p;
}

StaircaseDiagram from_dyck(const DyckPath& p, int n) {
  if (!p.valid() || p.size() != n) throw Error(ErrorKind::invalid_argument, "not a Dyck path of size n");
  std::vector<Interval> blocks;
  int R = 0, U = 0;
  for (auto [r, u] : p.steps) {
    R += r;
    blocks.push_back({U + 1, R});
    U += u;
  }
  return chain_diagram(n, blocks, Direction::increasing);
}

std::vector<DyckPath> all_dyck_paths(int n) {
  std::vector<DyckPath> out;
  DyckPath cur;
  auto rec = [&](auto& self, int R, int U) -> void {
    if (R == n && U == n) {
      out.push_back(cur);
      return;
    }
    for (int r = 1; R + r <= n; ++r)
      for (int u = 1; U + u <= R + r; ++u) {
        if (R + r == n && U + u != n) continue;
        cur.steps.emplace_back(r, u);
        self(self, R + r, U + u);
        cur.steps.pop_back();
      }
  };
  if (n >= 1) rec(rec, 0, 0);
  return out;
}

std::vector<StaircaseDiagram> increasing_staircases(int n) {
  std::vector<StaircaseDiagram> out;
  for (const DyckPath& p : all_dyck_paths(n)) out.push_back(from_dyck(p, n));
  return out;
}

// --------------------------------------------------------------------------
// Broken staircases

bool BrokenStaircase::has_fragment() const {
  return blocks.size() >= 2 && blocks.back().subset_of(blocks[blocks.size() - 2]);
}

BrokenStaircase break_staircase(const StaircaseDiagram& d, Direction direction) {
  if (d.graph().kind != GraphKind::path || d.graph().n < 2)
    throw Error(ErrorKind::invalid_argument, "break needs a path with at least two vertices");
  if (!d.fully_supported()) throw Error(ErrorKind::not_fully_supported, "diagram is not fully supported");
  if (!is_monotone(d, direction))
    throw Error(ErrorKind::not_increasing, std::string("diagram is not ") + to_string(direction));
  BrokenStaircase b{d.graph().n - 1, direction, {}};
  for (auto& [iv, idx] : path_intervals(d)) {
    Interval cut{iv.lo, std::min(iv.hi, b.n)};
    if (cut.lo <= cut.hi) b.blocks.push_back(cut);
  }
  return b;
}

std::vector<StaircaseDiagram> unbreak(const BrokenStaircase& b) {
  check_broken(b);
  std::vector<StaircaseDiagram> out;
  std::vector<Interval> ext = b.blocks;
  ext.back().hi = b.n + 1;
  out.push_back(chain_diagram(b.n + 1, ext, b.direction));
  if (!b.has_fragment()) {
    std::vector<Interval> add = b.blocks;
    add.push_back({b.n + 1, b.n + 1});
    out.push_back(chain_diagram(b.n + 1, add, b.direction));
  }
  return out;
}

std::vector<BrokenStaircase> broken_staircases(int n, Direction direction) {
  std::vector<BrokenStaircase> out;
  if (n < 1) return out;
  for (const StaircaseDiagram& d : increasing_staircases(n + 1)) {
    BrokenStaircase b = break_staircase(d, Direction::increasing);
    b.direction = direction;
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --------------------------------------------------------------------------
// Cycle decomposition

CycleDecomposition cycle_decompose(const StaircaseDiagram& d) {
  const CoxGraph& g = d.graph();
  if (g.kind != GraphKind::cycle) throw Error(ErrorKind::invalid_argument, "diagram must live on a cycle");
  if (!d.fully_supported()) throw Error(ErrorKind::not_fully_supported, "diagram is not fully supported");
  if (!is_spherical(d)) throw Error(ErrorKind::not_spherical, "diagram is not spherical");
  const int n = g.n;
  std::vector<std::pair<int, bool>> cuts;  // (vertex, starts increasing)
  for (int a = 0; a < d.size(); ++a) {
    bool mn = d.is_minimal(a), mx = d.is_maximal(a);
    if (!mn && !mx) continue;
    if (mn && mx) throw Error(ErrorKind::invalid_argument, "isolated block in a fully supported cycle diagram");
    cuts.emplace_back(leftmost_private(d, a, arc_start(g, d.block(a))), mn);
  }
  std::sort(cuts.begin(), cuts.end());
  if (cuts.size() < 2 || cuts.size() % 2)
    throw Error(ErrorKind::invalid_argument, "diagram is not a staircase");
  CycleDecomposition out;
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    int c = cuts[j].first;
    int next = cuts[(j + 1) % cuts.size()].first;
    int len = ((next - c) % n + n) % n;
    if (len == 0) throw Error(ErrorKind::invalid_argument, "diagram is not a staircase");
    BrokenStaircase b{len, cuts[j].second ? Direction::increasing : Direction::decreasing,
                      restrict_to(d, c, len)};
    out.pieces.push_back(std::move(b));
  }
  out.marked = (n - 1 - cuts.back().first) + 1;
  return out;
}

StaircaseDiagram cycle_glue(const CycleDecomposition& c) {
  const auto& ps = c.pieces;
  if (ps.size() < 2 || ps.size() % 2)
    throw Error(ErrorKind::invalid_argument, "need an even positive number of pieces");
  int n = 0;
  std::vector<Segment> segs;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    check_broken(ps[j]);
    if (ps[j].direction == ps[(j + 1) % ps.size()].direction)
      throw Error(ErrorKind::invalid_argument, "pieces must alternate direction");
    n += ps[j].n;
    segs.push_back({ps[j].n, ps[j].direction, &ps[j].blocks, ps[j].has_fragment()});
  }
  const int nl = ps.back().n;
  if (c.marked < 1 || c.marked > nl) throw Error(ErrorKind::invalid_argument, "marked vertex out of range");
  CoxGraph g = CoxGraph::cycle(n);
  return glue(g, segs, true, [&](int x) { return (x + nl - c.marked) % n; });
}

// --------------------------------------------------------------------------
// Line decomposition

LineDecomposition line_decompose(const StaircaseDiagram& d) {
  if (d.graph().kind != GraphKind::path) throw Error(ErrorKind::invalid_argument, "diagram must live on a path");
  if (!d.fully_supported() || d.empty())
    throw Error(ErrorKind::not_fully_supported, "diagram is not fully supported");
  const int n = d.graph().n;
  auto iv = path_intervals(d);
  std::vector<std::pair<int, bool>> cuts;  // (0-based vertex, minimal)
  int m = -1;
  for (auto& [in, a] : iv) {
    bool mn = d.is_minimal(a), mx = d.is_maximal(a);
    if (!mn && !mx) continue;
    if (mn) m = static_cast<int>(cuts.size());
    cuts.emplace_back(leftmost_private(d, a, in.lo - 1), mn);
  }
  if (m < 0) throw Error(ErrorKind::invalid_argument, "diagram is not a staircase");
  LineDecomposition out{{}, StaircaseDiagram::empty(CoxGraph::path(0))};
  for (int j = 0; j < m; ++j) {
    int c = cuts[j].first, len = cuts[j + 1].first - c;
    out.broken.push_back({len, cuts[j].second ? Direction::increasing : Direction::decreasing,
                          restrict_to(d, c, len)});
  }
  int c = cuts[m].first;
  out.tail = chain_diagram(n - c, restrict_to(d, c, n - c), Direction::increasing);
  return out;
}

StaircaseDiagram line_glue(const LineDecomposition& l) {
  auto tail = path_intervals(l.tail);
  if (!is_monotone(l.tail, Direction::increasing))
    throw Error(ErrorKind::not_increasing, "tail is not an increasing staircase");
  std::vector<Interval> tail_blocks;
  for (auto& [in, a] : tail) tail_blocks.push_back(in);
  std::vector<Segment> segs;
  int n = 0;
  for (std::size_t j = 0; j < l.broken.size(); ++j) {
    const BrokenStaircase& b = l.broken[j];
    check_broken(b);
    Direction want = (l.broken.size() - 1 - j) % 2 == 0 ? Direction::decreasing : Direction::increasing;
    if (b.direction != want)
      throw Error(ErrorKind::invalid_argument, "broken pieces must alternate and end decreasing");
    segs.push_back({b.n, b.direction, &b.blocks, b.has_fragment()});
    n += b.n;
  }
  segs.push_back({l.tail.graph().n, Direction::increasing, &tail_blocks, false});
  n += l.tail.graph().n;
  return glue(CoxGraph::path(n), segs, false, [](int x) { return x; });
}

// --------------------------------------------------------------------------
// Enumeration

namespace {

/// Diagram stored by masks on a path of its own and its covers.
struct Shape {
  std::vector<BlockMask> blocks;
  std::vector<std::pair<int, int>> covers;
};

class Generator {
 public:
  explicit Generator(int max_n) : broken_(max_n + 1), increasing_(max_n + 1) {
    for (int k = 1; k <= max_n; ++k) {
      broken_[k] = broken_staircases(k, Direction::increasing);
      for (const StaircaseDiagram& d : increasing_staircases(k)) {
        std::vector<Interval> iv;
        for (auto& [in, a] : path_intervals(d)) iv.push_back(in);
        increasing_[k].push_back(std::move(iv));
      }
    }
  }

  template <class Visit>
  void full_path(int n, Visit&& visit) {
    std::vector<Segment> segs;
    for (int t = 1; t <= n; ++t) {
      for (const auto& tail : increasing_[t]) {
        // compositions of n - t into broken pieces, the last one decreasing
        compose(n - t, segs, [&](std::vector<Segment>& pre) {
          std::vector<Segment> all = pre;
          for (std::size_t j = 0; j < all.size(); ++j)
            all[j].direction = (all.size() - 1 - j) % 2 == 0 ? Direction::decreasing
                                                             : Direction::increasing;
          all.push_back({t, Direction::increasing, &tail, false});
          visit(glue(CoxGraph::path(n), all, false, [](int x) { return x; }));
        });
      }
    }
  }

  template <class Visit>
  void full_cycle(int n, Visit&& visit) {
    std::vector<Segment> segs;
    compose(n, segs, [&](std::vector<Segment>& pieces) {
      if (pieces.size() < 2 || pieces.size() % 2) return;
      for (Direction start : {Direction::increasing, Direction::decreasing}) {
        std::vector<Segment> all = pieces;
        Direction d = start;
        for (Segment& s : all) {
          s.direction = d;
          d = opposite(d);
        }
        const int nl = all.back().size;
        for (int p = 1; p <= nl; ++p)
          visit(glue(CoxGraph::cycle(n), all, true, [&](int x) { return (x + nl - p) % n; }));
      }
    });
  }

 private:
  /// All sequences of broken staircases with total size n (directions
  /// assigned by the caller).
  template <class F>
  void compose(int n, std::vector<Segment>& segs, F&& f) {
    if (n == 0) {
      f(segs);
      return;
    }
    for (int k = 1; k <= n; ++k)
      for (const BrokenStaircase& b : broken_[k]) {
        segs.push_back({k, Direction::increasing, &b.blocks, b.has_fragment()});
        compose(n - k, segs, f);
        segs.pop_back();
      }
  }

  std::vector<std::vector<BrokenStaircase>> broken_;
  std::vector<std::vector<std::vector<Interval>>> increasing_;
};

/// Runs of consecutive vertices of U: path runs, or cycle arcs when U is a
/// proper subset of the cycle. Each is (start, length).
std::vector<std::pair<int, int>> runs(const CoxGraph& g, BlockMask u) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < g.n; ++v) {
    if (!has(u, v)) continue;
    int prev = v - 1;
    if (g.kind == GraphKind::cycle) prev = (v + g.n - 1) % g.n;
    if (prev >= 0 && has(u, prev)) continue;
    int len = 0;
    int reach = g.kind == GraphKind::cycle ? g.n : g.n - v;
    while (len < reach && has(u, (v + len) % g.n)) ++len;
    out.emplace_back(v, len);
  }
  return out;
}

void place_products(const CoxGraph& g, const std::vector<std::pair<int, int>>& rs,
                    const std::vector<std::vector<Shape>>& shapes, std::size_t i,
                    std::vector<BlockMask>& blocks, std::vector<std::pair<int, int>>& rel,
                    const std::function<void(const StaircaseDiagram&)>& visit) {
  if (i == rs.size()) {
    visit(StaircaseDiagram(g, blocks, rel).canonical());
    return;
  }
  auto [start, len] = rs[i];
  for (const Shape& s : shapes[len]) {
    std::size_t nb = blocks.size(), nr = rel.size();
    int base = static_cast<int>(nb);
    for (BlockMask m : s.blocks) {
      BlockMask placed = 0;
      for (int t = 0; t < len; ++t)
        if (has(m, t)) placed |= BlockMask{1} << ((start + t) % g.n);
      blocks.push_back(placed);
    }
    for (auto [a, b] : s.covers) rel.emplace_back(a + base, b + base);
    place_products(g, rs, shapes, i + 1, blocks, rel, visit);
    blocks.resize(nb);
    rel.resize(nr);
  }
}

}  // namespace

void for_each_diagram(const CoxGraph& g, const DiagramQuery& query,
                      const std::function<void(const StaircaseDiagram&)>& visit,
                      const DiagramBudget& budget) {
  const int n = g.n;
  int limit = g.kind == GraphKind::path ? budget.max_path : budget.max_cycle;
  if (n > limit)
    throw Error(ErrorKind::budget_exceeded,
                "enumeration of " + g.to_string() + " exceeds the budget n <= " + std::to_string(limit));
  if (n == 0) {
    visit(StaircaseDiagram::empty(g));
    return;
  }
  Generator gen(n);
  if (g.kind == GraphKind::path) gen.full_path(n, visit);
  else {
    gen.full_cycle(n, visit);
    if (!query.spherical_only) visit(StaircaseDiagram(g, std::vector<BlockMask>{g.all()}, {}));
  }
  if (query.fully_supported_only) return;

  std::vector<std::vector<Shape>> shapes(n);
  for (int k = 1; k < n; ++k)
    gen.full_path(k, [&](const StaircaseDiagram& d) { shapes[k].push_back({d.blocks(), d.covers()}); });
  std::vector<BlockMask> blocks;
  std::vector<std::pair<int, int>> rel;
  for (BlockMask u = 0; u < g.all(); ++u)
    place_products(g, runs(g, u), shapes, 0, blocks, rel, visit);
}

std::vector<StaircaseDiagram> enumerate_diagrams(const CoxGraph& g, const DiagramQuery& query,
                                                 const DiagramBudget& budget) {
  std::vector<StaircaseDiagram> out;
  for_each_diagram(g, query, [&](const StaircaseDiagram& d) { out.push_back(d.canonical()); }, budget);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt count_diagrams(const CoxGraph& g, const DiagramQuery& query, const DiagramBudget& budget) {
  BigInt count = 0;
  for_each_diagram(g, query, [&](const StaircaseDiagram&) { ++count; }, budget);
  return count;
}

}  // namespace schubert
