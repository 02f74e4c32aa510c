#include "schubert/staircase.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "schubert/coxeter.hpp"
#include "schubert/error.hpp"

namespace schubert {

namespace {

bool has(BlockMask m, int v) { return (m >> v) & 1u; }

std::string mask_string(const CoxGraph& g, BlockMask m) {
  std::string s = "{";
  bool first = true;
  for (int v = 0; v < g.n; ++v) {
    if (!has(m, v)) continue;
    if (!first) s += ",";
    s += "s" + std::to_string(g.label(v));
    first = false;
  }
  return s + "}";
}

}  // namespace

// --------------------------------------------------------------------------
// CoxGraph

CoxGraph CoxGraph::path(int n) {
  if (n < 0 || n > 63) throw Error(ErrorKind::invalid_argument, "path size out of range");
  return {GraphKind::path, n};
}

CoxGraph CoxGraph::cycle(int n) {
  if (n < 2 || n > 63) throw Error(ErrorKind::invalid_argument, "cycle needs 2 <= n <= 63");
  return {GraphKind::cycle, n};
}

int CoxGraph::vertex(int lab) const {
  int v = kind == GraphKind::path ? lab - 1 : lab;
  if (v < 0 || v >= n)
    throw Error(ErrorKind::index_out_of_range,
                "vertex s" + std::to_string(lab) + " not in " + to_string());
  return v;
}

std::uint64_t CoxGraph::all() const {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

bool CoxGraph::adjacent(int a, int b) const {
  if (a == b) return false;
  int d = std::abs(a - b);
  if (d == 1) return true;
  return kind == GraphKind::cycle && d == n - 1;
}

std::uint64_t CoxGraph::closed_neighbourhood(std::uint64_t m) const {
  std::uint64_t r = m | (m << 1) | (m >> 1);
  if (kind == GraphKind::cycle && n > 0) {
    if (has(m, 0)) r |= std::uint64_t{1} << (n - 1);
    if (has(m, n - 1)) r |= 1u;
  }
  return r & all();
}

bool CoxGraph::connected(std::uint64_t m) const {
  if (m == 0) return true;
  std::uint64_t seen = m & (~m + 1);
  for (;;) {
    std::uint64_t next = closed_neighbourhood(seen) & m;
    if (next == seen) break;
    seen = next;
  }
  return seen == m;
}

std::string CoxGraph::to_string() const {
  return (kind == GraphKind::path ? "path(" : "cycle(") + std::to_string(n) + ")";
}

// --------------------------------------------------------------------------
// StaircaseDiagram

StaircaseDiagram::StaircaseDiagram(CoxGraph graph, std::vector<BlockMask> blocks,
                                   const std::vector<std::pair<int, int>>& relations)
    : graph_(graph), blocks_(std::move(blocks)) {
  const int k = size();
  if (k > 64) throw Error(ErrorKind::invalid_argument, "at most 64 blocks");
  for (BlockMask b : blocks_)
    if (b & ~graph_.all())
      throw Error(ErrorKind::invalid_argument, "block outside " + graph_.to_string());
  above_.assign(k, 0);
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= k || b >= k)
      throw Error(ErrorKind::malformed_relation, "relation index out of range");
    if (a != b) above_[a] |= BlockMask{1} << b;
  }
  for (int m = 0; m < k; ++m)
    for (int i = 0; i < k; ++i)
      if (has(above_[i], m)) above_[i] |= above_[m];
  for (int i = 0; i < k; ++i)
    if (has(above_[i], i))
      throw Error(ErrorKind::malformed_relation, "relation is not a partial order");
}

StaircaseDiagram::StaircaseDiagram(ClosedTag, CoxGraph graph, std::vector<BlockMask> blocks,
                                   std::vector<BlockMask> above)
    : graph_(graph), blocks_(std::move(blocks)), above_(std::move(above)) {}

std::vector<std::pair<int, int>> StaircaseDiagram::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    BlockMask indirect = 0;
    for (int c = 0; c < size(); ++c)
      if (has(above_[a], c)) indirect |= above_[c];
    BlockMask direct = above_[a] & ~indirect;
    for (int b = 0; b < size(); ++b)
      if (has(direct, b)) out.emplace_back(a, b);
  }
  return out;
}

bool StaircaseDiagram::is_minimal(int a) const {
  for (int b = 0; b < size(); ++b)
    if (less(b, a)) return false;
  return true;
}

bool StaircaseDiagram::is_maximal(int a) const { return above_[a] == 0; }

BlockMask StaircaseDiagram::support() const {
  BlockMask m = 0;
  for (BlockMask b : blocks_) m |= b;
  return m;
}

StaircaseDiagram StaircaseDiagram::canonical() const {
  std::vector<int> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return blocks_[a] < blocks_[b]; });
  std::vector<int> pos(size());
  for (int i = 0; i < size(); ++i) pos[order[i]] = i;
  std::vector<BlockMask> blocks(size()), above(size(), 0);
  for (int i = 0; i < size(); ++i) {
    blocks[i] = blocks_[order[i]];
    for (int b = 0; b < size(); ++b)
      if (has(above_[order[i]], b)) above[i] |= BlockMask{1} << pos[b];
  }
  return {ClosedTag{}, graph_, std::move(blocks), std::move(above)};
}

StaircaseDiagram StaircaseDiagram::reversed() const {
  std::vector<BlockMask> above(size(), 0);
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (has(above_[a], b)) above[b] |= BlockMask{1} << a;
  return {ClosedTag{}, graph_, blocks_, std::move(above)};
}

namespace {

bool sorted_blocks(const std::vector<BlockMask>& b) {
  return std::is_sorted(b.begin(), b.end());
}

std::strong_ordering raw_compare(const StaircaseDiagram& a, const StaircaseDiagram& b) {
  if (auto c = a.graph() <=> b.graph(); c != 0) return c;
  if (auto c = a.blocks() <=> b.blocks(); c != 0) return c;
  for (int i = 0; i < a.size(); ++i)
    if (auto c = a.above(i) <=> b.above(i); c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const StaircaseDiagram& a, const StaircaseDiagram& b) {
  if (sorted_blocks(a.blocks_) && sorted_blocks(b.blocks_)) return raw_compare(a, b);
  return raw_compare(a.canonical(), b.canonical());
}

bool operator==(const StaircaseDiagram& a, const StaircaseDiagram& b) {
  return (a <=> b) == 0;
}

// --------------------------------------------------------------------------
// Axioms

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::none: return "none";
    case Axiom::empty_block: return "empty-block";
    case Axiom::duplicate_block: return "duplicate-block";
    case Axiom::connected: return "axiom-1";
    case Axiom::chain: return "axiom-2";
    case Axiom::adjacent_chain: return "axiom-3";
    case Axiom::extremal: return "axiom-4";
  }
  return "?";
}

namespace {

BlockMask containing(const StaircaseDiagram& d, int v) {
  BlockMask m = 0;
  for (int i = 0; i < d.size(); ++i)
    if (has(d.block(i), v)) m |= BlockMask{1} << i;
  return m;
}

bool is_chain(const StaircaseDiagram& d, BlockMask set) {
  for (int a = 0; a < d.size(); ++a) {
    if (!has(set, a)) continue;
    for (int b = a + 1; b < d.size(); ++b)
      if (has(set, b) && !d.comparable(a, b)) return false;
  }
  return true;
}

/// No element of `outer` lies strictly between two elements of `inner`.
bool is_saturated(const StaircaseDiagram& d, BlockMask inner, BlockMask outer) {
  for (int z = 0; z < d.size(); ++z) {
    if (!has(outer, z) || has(inner, z)) continue;
    bool below = false, above = false;
    for (int x = 0; x < d.size(); ++x) {
      if (!has(inner, x)) continue;
      if (d.less(x, z)) below = true;
      if (d.less(z, x)) above = true;
    }
    if (below && above) return false;
  }
  return true;
}

ValidationReport fail(Axiom a, std::string detail) {
  return {false, a, std::move(detail)};
}

}  // namespace

ValidationReport validate(const StaircaseDiagram& d) {
  const CoxGraph& g = d.graph();
  const int k = d.size();
  for (int i = 0; i < k; ++i)
    if (d.block(i) == 0) return fail(Axiom::empty_block, "block " + std::to_string(i) + " is empty");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (d.block(i) == d.block(j))
        return fail(Axiom::duplicate_block, "blocks " + std::to_string(i) + " and " +
                                                std::to_string(j) + " coincide");

  for (int i = 0; i < k; ++i)
    if (!g.connected(d.block(i)))
      return fail(Axiom::connected, "block " + mask_string(g, d.block(i)) + " is not connected");
  for (auto [a, b] : d.covers())
    if (!g.connected(d.block(a) | d.block(b)))
      return fail(Axiom::connected, "cover " + mask_string(g, d.block(a)) + " < " +
                                        mask_string(g, d.block(b)) + " has disconnected union");

  std::vector<BlockMask> ds(g.n);
  for (int v = 0; v < g.n; ++v) ds[v] = containing(d, v);
  for (int v = 0; v < g.n; ++v)
    if (!is_chain(d, ds[v]))
      return fail(Axiom::chain, "blocks containing s" + std::to_string(g.label(v)) +
                                    " are not a chain");

  for (int s = 0; s < g.n; ++s) {
    for (int t = s + 1; t < g.n; ++t) {
      if (!g.adjacent(s, t)) continue;
      BlockMask u = ds[s] | ds[t];
      std::string edge = "s" + std::to_string(g.label(s)) + ", s" + std::to_string(g.label(t));
      if (!is_chain(d, u)) return fail(Axiom::adjacent_chain, "blocks meeting " + edge + " are not a chain");
      if (!is_saturated(d, ds[s], u) || !is_saturated(d, ds[t], u))
        return fail(Axiom::adjacent_chain, "blocks at " + edge + " are not saturated");
    }
  }

  for (int i = 0; i < k; ++i) {
    bool is_min = false, is_max = false;
    for (int v = 0; v < g.n; ++v) {
      if (!has(d.block(i), v)) continue;
      bool lo = true, hi = true;
      for (int j = 0; j < k; ++j) {
        if (!has(ds[v], j)) continue;
        if (d.less(j, i)) lo = false;
        if (d.less(i, j)) hi = false;
      }
      is_min = is_min || lo;
      is_max = is_max || hi;
    }
    if (!is_min || !is_max)
      return fail(Axiom::extremal, "block " + mask_string(g, d.block(i)) + " is not " +
                                       (is_min ? "a maximum" : "a minimum") + " of any D_s");
  }
  return {};
}

StaircaseDiagram flip(const StaircaseDiagram& d) { return d.reversed(); }

bool is_spherical(const StaircaseDiagram& d) {
  if (d.graph().kind == GraphKind::path) return true;
  for (BlockMask b : d.blocks())
    if (b == d.graph().all()) return false;
  return true;
}

const char* to_string(Direction d) {
  return d == Direction::increasing ? "increasing" : "decreasing";
}

// --------------------------------------------------------------------------
// Group elements and pictures

namespace {

/// Blocks in a linear extension, smallest index first among the available.
std::vector<int> linear_extension(const StaircaseDiagram& d) {
  std::vector<int> out;
  BlockMask done = 0;
  while (static_cast<int>(out.size()) < d.size()) {
    for (int a = 0; a < d.size(); ++a) {
      if (has(done, a)) continue;
      bool ready = true;
      for (int b = 0; b < d.size() && ready; ++b)
        if (!has(done, b) && d.less(b, a)) ready = false;
      if (ready) {
        out.push_back(a);
        done |= BlockMask{1} << a;
        break;
      }
    }
  }
  return out;
}

ReflectionSet to_reflections(const CoxGraph& g, BlockMask m) {
  ReflectionSet r(g.period());
  for (int v = 0; v < g.n; ++v)
    if (has(m, v)) r.insert(g.reflection(v));
  return r;
}

}  // namespace

AffinePermutation to_element(const StaircaseDiagram& d) {
  if (!is_spherical(d)) throw Error(ErrorKind::not_spherical, "diagram has a non-spherical block");
  const CoxGraph& g = d.graph();
  if (g.period() < 2) return AffinePermutation::identity(std::max(g.period(), 1));
  AffinePermutation w = AffinePermutation::identity(g.period());
  BlockMask seen = 0;
  for (int a : linear_extension(d)) {
    BlockMask b = d.block(a);
    AffinePermutation v = longest_element(to_reflections(g, b)) *
                          longest_element(to_reflections(g, b & seen)).inverse();
    w = v * w;
    seen |= b;
  }
  return w;
}

std::string render_ascii(const StaircaseDiagram& d) {
  const CoxGraph& g = d.graph();
  const bool cyc = g.kind == GraphKind::cycle;
  const int cols = cyc ? g.n + 1 : g.n;
  auto column_vertex = [&](int c) { return cyc ? c % g.n : c; };

  std::vector<int> height(d.size(), 0);
  int top = -1;
  for (int a : linear_extension(d)) {
    for (int b = 0; b < d.size(); ++b)
      if (d.less(b, a)) height[a] = std::max(height[a], height[b] + 1);
    top = std::max(top, height[a]);
  }
  auto name = [](int i) {
    std::string s;
    do {
      s.insert(s.begin(), static_cast<char>('A' + i % 26));
      i = i / 26 - 1;
    } while (i >= 0);
    return s;
  };
  int width = 3;
  for (int c = 0; c < cols; ++c)
    width = std::max<int>(width, 2 + std::to_string(g.label(column_vertex(c))).size());
  for (int i = 0; i < d.size(); ++i)
    width = std::max<int>(width, 1 + name(i).size());

  std::ostringstream out;
  auto cell = [&](const std::string& s) {
    out << std::string(width - s.size(), ' ') << s;
  };
  for (int h = top; h >= 0; --h) {
    for (int c = 0; c < cols; ++c) {
      std::string s = ".";
      for (int i = 0; i < d.size(); ++i)
        if (height[i] == h && has(d.block(i), column_vertex(c))) s = name(i);
      cell(s);
    }
    out << '\n';
  }
  for (int c = 0; c < cols; ++c) cell("s" + std::to_string(g.label(column_vertex(c))));
  out << '\n';
  return out.str();
}

}  // namespace schubert
