#include "schubert/acceptance.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "schubert/bp.hpp"
#include "schubert/coxeter.hpp"
#include "schubert/error.hpp"
#include "schubert/series.hpp"
#include "schubert/smoothness.hpp"
#include "schubert/staircase.hpp"

namespace schubert {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

BigInt catalan(int n) {
  BigInt c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::string str(const BigInt& x) { return x.str(); }

Check table_values(const AcceptanceOptions&) {
  Check c;
  const long long want[] = {5, 31, 173, 891, 4373, 20833, 97333, 448663};
  IntSeries a = series_A_closed(9);
  for (int n = 2; n <= 9; ++n)
    c.expect(a[n] == want[n - 2], "a_" + std::to_string(n) + " = " + str(a[n]));
  c.note << "a_2..a_9 = 5 .. 448663";
  return c;
}

Check formula_consistency(const AcceptanceOptions& o) {
  Check c;
  int order = o.reduced ? 30 : 60;
  IntSeries closed = series_A_closed(order), assembled = series_A_assembled(order);
  for (int k = 0; k <= order; ++k)
    c.expect(closed[k] == assembled[k], "differ at t^" + std::to_string(k));
  c.note << "equal through order " << order;
  return c;
}

Check cycle_enumeration(const AcceptanceOptions& o) {
  Check c;
  int top = o.reduced ? 6 : 7;
  IntSeries a = series_A_closed(top);
  for (int n = 2; n <= top; ++n) {
    auto ds = enumerate_diagrams(CoxGraph::cycle(n), {});
    c.expect(BigInt(ds.size()) == a[n],
             "n=" + std::to_string(n) + ": " + std::to_string(ds.size()) + " vs " + str(a[n]));
    if (n == top) c.note << "n=" << n << " gives " << ds.size();
  }
  return c;
}

Check avoider_agreement(const AcceptanceOptions& o) {
  Check c;
  const int want[] = {5, 31, 173};
  EnumerationOptions eo;
  eo.workers = o.workers;
  int top = o.reduced ? 3 : 4;
  for (int n = 2; n <= top; ++n) {
    auto sm = enumerate_smooth(n, eo);
    c.expect(static_cast<int>(sm.size()) == want[n - 2],
             "|smooth(" + std::to_string(n) + ")| = " + std::to_string(sm.size()));
    if (n > 3) continue;
    std::set<AffinePermutation> image;
    for (const auto& d : enumerate_diagrams(CoxGraph::cycle(n), {})) image.insert(to_element(d));
    c.expect(image == std::set<AffinePermutation>(sm.begin(), sm.end()),
             "to_element image differs at n=" + std::to_string(n));
  }
  c.note << "5, 31" << (top > 3 ? ", 173" : "") << "; images equal for n = 2, 3";
  return c;
}

Check catalan_identity(const AcceptanceOptions& o) {
  Check c;
  IntSeries am = series_AM(14);
  for (int n = 1; n <= 14; ++n)
    c.expect(am[n] == catalan(n), "m_" + std::to_string(n) + " = " + str(am[n]));
  int top = o.reduced ? 7 : 8;
  for (int n = 1; n <= top; ++n) {
    std::size_t count = 0;
    for (const auto& d : enumerate_diagrams(CoxGraph::path(n), {true, true})) {
      if (!is_monotone(d, Direction::increasing)) continue;
      ++count;
      c.expect(from_dyck(to_dyck(d), n) == d, "Dyck roundtrip fails on n=" + std::to_string(n));
    }
    c.expect(BigInt(count) == catalan(n), "increasing count differs at n=" + std::to_string(n));
  }
  c.note << "series n <= 14, Dyck roundtrip n <= " << top;
  return c;
}

Check broken_identity(const AcceptanceOptions& o) {
  Check c;
  IntSeries ab = series_AB(13), am = series_AM(14);
  for (int n = 1; n <= 13; ++n)
    c.expect(ab[n] == am[n + 1] - am[n], "series b_" + std::to_string(n));
  int top = o.reduced ? 8 : 9;
  for (int n = 1; n <= top; ++n) {
    auto bs = broken_staircases(n, Direction::increasing);
    c.expect(BigInt(bs.size()) == am[n + 1] - am[n], "enumerated b_" + std::to_string(n));
    std::set<StaircaseDiagram> pre;
    std::size_t total = 0;
    for (const auto& b : bs)
      for (const auto& d : unbreak(b)) {
        ++total;
        pre.insert(d.canonical());
        c.expect(break_staircase(d, Direction::increasing) == b, "break(unbreak(b)) != b");
      }
    auto inc = increasing_staircases(n + 1);
    std::set<StaircaseDiagram> all;
    for (const auto& d : inc) all.insert(d.canonical());
    c.expect(total == pre.size() && pre == all,
             "unbreak does not partition M+(" + std::to_string(n + 1) + ")");
  }
  c.note << "series n <= 13, break/unbreak n <= " << top;
  return c;
}

Check bp_factorization(const AcceptanceOptions& o) {
  Check c;
  EnumerationOptions eo;
  eo.workers = o.workers;
  int checked = 0, top = o.reduced ? 3 : 4;
  for (int n = 2; n <= top; ++n)
    for (const auto& w : enumerate_smooth(n, eo)) {
      if (length(w) > 12) continue;
      ReflectionSet none(n);
      Polynomial pw = poincare_polynomial(w, none);
      for (const auto& bp : all_grassmannian_bps(w, none)) {
        ++checked;
        Polynomial rhs = poincare_polynomial(bp.v, bp.K) * poincare_polynomial(bp.u, none);
        c.expect(pw == rhs, "factorization fails for " + w.to_string());
      }
    }
  c.expect(checked > 0, "no decompositions found");
  c.note << checked << " decompositions checked";
  return c;
}

Check complete_decompositions(const AcceptanceOptions& o) {
  Check c;
  EnumerationOptions eo;
  eo.workers = o.workers;
  int count = 0, top = o.reduced ? 3 : 4;
  for (int n = 2; n <= top; ++n)
    for (const auto& w : enumerate_smooth(n, eo)) {
      ++count;
      auto dec = complete_bp_decomposition(w, ReflectionSet(n));
      c.expect(dec.has_value(), "no complete decomposition for " + w.to_string());
      if (!dec) continue;
      AffinePermutation prod = AffinePermutation::identity(n);
      std::int64_t len = 0;
      for (const auto& f : dec->factors) {
        c.expect(f.maximal && support(f.v).is_finite_type(), "non-maximal factor in " + w.to_string());
        prod = prod * f.v;
        len += length(f.v);
      }
      c.expect(prod == w && len == length(w), "length not additive for " + w.to_string());
    }
  c.note << count << " smooth elements decomposed";
  return c;
}

Check palindromic_smooth(const AcceptanceOptions& o) {
  Check c;
  int max_len = o.reduced ? 8 : 10;
  int count = 0;
  for (const auto& layer : elements_up_to_length(3, max_len))
    for (const auto& w : layer) {
      ++count;
      bool pal = is_palindromic(poincare_polynomial(w));
      c.expect(pal == (is_smooth(w) || is_twisted_spiral(w)), "mismatch at " + w.to_string());
    }
  AffinePermutation t = twisted_spiral({0, 2, SpiralDirection::x}, 3);
  c.expect(length(t) == 7 && is_palindromic(poincare_polynomial(t)) && !is_smooth(t),
           "k=2 twisted spiral is not a palindromic singular element");
  c.note << count << " elements of length <= " << max_len << "; " << t.to_string()
         << " palindromic and singular";
  return c;
}

Check flip_duality(const AcceptanceOptions& o) {
  Check c;
  int top = o.reduced ? 4 : 5, count = 0;
  for (int n = 1; n <= top; ++n)
    for (CoxGraph g : {CoxGraph::path(n), CoxGraph::cycle(std::max(n, 2))}) {
      if (g.kind == GraphKind::cycle && n < 2) continue;
      for (const auto& d : enumerate_diagrams(g, {})) {
        ++count;
        c.expect(to_element(flip(d)) == to_element(d).inverse(), "flip fails on " + g.to_string());
      }
    }
  c.note << count << " diagrams";
  return c;
}

Check asymptotics(const AcceptanceOptions&) {
  Check c;
  AsymptoticReport r = asymptotic_check(60, {60});
  c.expect(r.residual <= HighPrecision("1e-12"), "residual too large");
  c.expect(abs(r.alpha - HighPrecision("0.228155")) <= HighPrecision("1e-6"), "alpha off");
  HighPrecision s = r.samples.at(0).scaled;
  c.expect(s >= HighPrecision("0.98") && s <= HighPrecision("1.02"), "a_60 alpha^60 out of range");
  c.note << "alpha = " << r.alpha.str(10) << ", a_60 alpha^60 = " << s.str(6);
  return c;
}

struct Entry {
  const char* name;
  Check (*run)(const AcceptanceOptions&);
  double limit;  // seconds, 0 for none
};

const Entry entries[acceptance_count] = {
    {"table values from the closed form", table_values, 1},
    {"closed form equals assembled series", formula_consistency, 5},
    {"cycle diagram counts", cycle_enumeration, 0},
    {"pattern avoiders match diagrams", avoider_agreement, 0},
    {"Catalan identity", catalan_identity, 0},
    {"broken staircase identity", broken_identity, 0},
    {"BP Poincare factorization", bp_factorization, 0},
    {"complete maximal BP decompositions", complete_decompositions, 0},
    {"palindromic iff smooth or twisted spiral", palindromic_smooth, 0},
    {"flip is inversion", flip_duality, 0},
    {"asymptotics", asymptotics, 0},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  if (id < 1 || id > acceptance_count)
    throw Error(ErrorKind::invalid_argument, "no criterion " + std::to_string(id));
  const Entry& e = entries[id - 1];
  CriterionResult r{id, e.name, false, {}, 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    Check c = e.run(opts);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = c.ok;
    r.detail = c.note.str();
    if (e.limit > 0 && r.seconds > e.limit) {
      r.passed = false;
      r.detail += "; took " + std::to_string(r.seconds) + "s";
    }
  } catch (const std::exception& ex) {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.detail = std::string("exception: ") + ex.what();
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= acceptance_count; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

}  // namespace schubert
