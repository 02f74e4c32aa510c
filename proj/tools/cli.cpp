#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "schubert/acceptance.hpp"
#include "schubert/bp.hpp"
#include "schubert/coxeter.hpp"
#include "schubert/error.hpp"
#include "schubert/json_io.hpp"
#include "schubert/series.hpp"
#include "schubert/smoothness.hpp"
#include "schubert/staircase.hpp"

namespace schubert::cli {

namespace {

struct Global {
  std::string format;  // empty: the command's own default
  int workers = 1;
  double budget_seconds = 0;
};

struct ElementArgs {
  int n = 0;
  std::string window, word, file;
};

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_argument, msg); }

std::vector<long long> parse_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      invalid("not an integer: " + tok);
    }
    if (used != tok.size()) invalid("not an integer: " + tok);
    out.push_back(v);
  }
  return out;
}

Json read_json(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) invalid("cannot open " + path);
    in = &file;
  }
  try {
    return Json::parse(*in);
  } catch (const nlohmann::json::exception& e) {
    invalid(std::string("bad JSON: ") + e.what());
  }
}

AffinePermutation element(const ElementArgs& a) {
  if (!a.file.empty()) return element_from_json(read_json(a.file));
  if (a.window.empty() == a.word.empty()) invalid("give exactly one of --window and --word");
  Json j;
  j["n"] = a.n;
  if (!a.window.empty()) j["window"] = parse_list(a.window);
  else j["word"] = parse_list(a.word);
  return element_from_json(j);
}

void add_element_options(CLI::App* cmd, ElementArgs& a) {
  cmd->add_option("--n", a.n, "period");
  auto* w = cmd->add_option("--window", a.window, "window entries, comma separated");
  auto* r = cmd->add_option("--word", a.word, "reflection indices, comma separated");
  auto* f = cmd->add_option("--file", a.file, "element JSON file, - for stdin");
  w->excludes(r);
  f->excludes(w)->excludes(r);
}

std::string fmt(const Global& g, const std::string& fallback) {
  return g.format.empty() ? fallback : g.format;
}

Json number(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Json indices(const ReflectionSet& s) { return s.indices(); }

std::string join(std::span<const AffinePermutation::value_type> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_flat(std::ostream& out, const Json& j, const std::string& format) {
  const char* sep = format == "tsv" ? "\t" : ": ";
  for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << sep << it.value().dump() << '\n';
}

// ---------------------------------------------------------------------------

int cmd_smooth(const Global& g, const ElementArgs& a, std::ostream& out) {
  AffinePermutation w = element(a);
  Json j;
  j["n"] = w.period();
  j["window"] = element_to_json(w)["window"];
  j["smooth"] = is_smooth(w);
  j["rationally_smooth"] = is_rationally_smooth(w);
  j["twisted_spiral"] = is_twisted_spiral(w);
  j["length"] = length(w);
  std::string f = fmt(g, "json");
  if (f == "json") print_json(out, j);
  else print_flat(out, j, f);
  return ok;
}

int cmd_decompose(const Global& g, const ElementArgs& a, const std::string& J_text, std::ostream& out) {
  AffinePermutation w = element(a);
  const int n = w.period();
  std::vector<int> J_idx;
  for (long long x : parse_list(J_text)) J_idx.push_back(static_cast<int>(x));
  ReflectionSet J(n, J_idx);
  if (!in_quotient(w, J)) throw Error(ErrorKind::not_in_quotient, "element has a right descent in J");
  auto dec = complete_bp_decomposition(w, J);
  Json j;
  j["n"] = n;
  j["window"] = element_to_json(w)["window"];
  j["J"] = indices(J);
  j["complete"] = dec.has_value();
  j["factors"] = Json::array();
  if (dec)
    for (const auto& f : dec->factors) {
      Json fj;
      fj["word"] = reduced_word(f.v);
      fj["K"] = indices(f.K_after);
      fj["maximal"] = f.maximal;
      if (f.grassmannian) {
        Json gj;
        gj["nodes"] = f.grassmannian->nodes;
        gj["missing"] = f.grassmannian->missing;
        gj["gr"] = {f.grassmannian->gr_k(), f.grassmannian->gr_n()};
        fj["grassmannian"] = gj;
      } else {
        fj["grassmannian"] = nullptr;
      }
      j["factors"].push_back(fj);
    }
  j["smooth"] = J.empty() ? is_smooth(w) : is_smooth_partial(w, J);
  std::string f = fmt(g, "json");
  if (f == "json") {
    print_json(out, j);
  } else {
    out << "smooth" << (f == "tsv" ? "\t" : ": ") << (j["smooth"].get<bool>() ? "true" : "false") << '\n';
    for (const auto& fj : j["factors"])
      out << fj["word"].dump() << (f == "tsv" ? "\t" : " K=") << fj["K"].dump()
          << (f == "tsv" ? "\t" : " maximal=") << (fj["maximal"].get<bool>() ? "true" : "false") << '\n';
  }
  return ok;
}

int cmd_enumerate(const Global& g, int n, bool count_only, const std::string& method, std::ostream& out) {
  std::vector<AffinePermutation> els;
  if (method == "avoiders") {
    EnumerationOptions o;
    o.workers = g.workers;
    o.budget_seconds = g.budget_seconds;
    els = enumerate_smooth(n, o);
  } else if (method == "diagrams") {
    if (n < 2) throw Error(ErrorKind::invalid_period, "n must be at least 2");
    for (const auto& d : enumerate_diagrams(CoxGraph::cycle(n), {})) els.push_back(to_element(d));
    std::sort(els.begin(), els.end(), [](const AffinePermutation& x, const AffinePermutation& y) {
      auto lx = length(x), ly = length(y);
      return lx != ly ? lx < ly : x < y;
    });
  } else {
    invalid("unknown method " + method);
  }
  std::string f = fmt(g, count_only ? "text" : "tsv");
  if (count_only) {
    if (f == "json") {
      Json j;
      j["n"] = n;
      j["count"] = els.size();
      print_json(out, j);
    } else {
      out << els.size() << '\n';
    }
    return ok;
  }
  if (f == "json") {
    Json arr = Json::array();
    for (const auto& w : els) {
      Json e = element_to_json(w);
      e["length"] = length(w);
      arr.push_back(e);
    }
    print_json(out, arr);
  } else {
    for (const auto& w : els) out << length(w) << '\t' << join(w.window()) << '\n';
  }
  return ok;
}

/// Combinatorial count behind one coefficient, or nothing when out of reach.
std::optional<BigInt> enumerated(SeriesName name, int n) {
  DiagramBudget wide{12, 9};
  switch (name) {
    case SeriesName::A:
      if (n < 2 || n > wide.max_cycle) return std::nullopt;
      return count_diagrams(CoxGraph::cycle(n), {}, wide);
    case SeriesName::ABAR:
      if (n < 2 || n > wide.max_cycle) return std::nullopt;
      return count_diagrams(CoxGraph::cycle(n), {true, true}, wide);
    case SeriesName::AM:
      if (n < 1 || n > 12) return std::nullopt;
      return BigInt(increasing_staircases(n).size());
    case SeriesName::AB:
      if (n < 1 || n > 11) return std::nullopt;
      return BigInt(broken_staircases(n, Direction::increasing).size());
    case SeriesName::AF:
      if (n < 1 || n > wide.max_path) return std::nullopt;
      return count_diagrams(CoxGraph::path(n), {true, true}, wide);
    case SeriesName::ASTAR: {
      if (n < 1 || n > wide.max_path + 1) return std::nullopt;
      BigInt s = 0;
      for (int j = 1; j < n; ++j) s += count_diagrams(CoxGraph::path(j), {true, true}, wide);
      return s;
    }
  }
  return std::nullopt;
}

int cmd_series(const Global& g, const std::string& which, int order, const std::string& method, bool diff,
               std::ostream& out, std::ostream& err) {
  if (order < 1) invalid("order must be positive");
  if (order > 2000) invalid("order is limited to 2000");
  SeriesName name = parse_series_name(which);
  std::vector<std::string> methods;
  if (method == "all") methods = {"closed", "assembled", "enumerate"};
  else if (method == "closed" || method == "assembled" || method == "enumerate") methods = {method};
  else invalid("unknown method " + method);

  std::vector<std::vector<std::optional<BigInt>>> cols;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& m : methods) {
    std::vector<std::optional<BigInt>> col(order + 1);
    if (m == "enumerate") {
      bool out_of_time = false;
      for (int n = 1; n <= order; ++n) {
        double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (g.budget_seconds > 0 && spent > g.budget_seconds) out_of_time = true;
        if (!out_of_time) col[n] = enumerated(name, n);
      }
      if (out_of_time) err << "note: enumeration stopped by --budget-seconds\n";
    } else {
      IntSeries s = series_by_formula(name, order, m == "closed");
      for (int n = 1; n <= order; ++n) col[n] = s[n];
    }
    cols.push_back(std::move(col));
  }

  bool mismatch = false;
  for (int n = 1; n <= order; ++n) {
    std::optional<BigInt> ref;
    for (const auto& c : cols) {
      if (!c[n]) continue;
      if (ref && *ref != *c[n]) mismatch = true;
      if (!ref) ref = c[n];
    }
  }

  bool outside = name == SeriesName::A || name == SeriesName::ABAR;
  std::string f = fmt(g, "tsv");
  if (f == "json") {
    Json j;
    j["series"] = to_string(name);
    j["order"] = order;
    j["methods"] = methods;
    j["rows"] = Json::array();
    for (int n = 1; n <= order; ++n) {
      Json row;
      row["n"] = n;
      for (std::size_t k = 0; k < methods.size(); ++k)
        row[methods[k]] = cols[k][n] ? number(*cols[k][n]) : Json(nullptr);
      if (outside && n < 2) row["outside_domain"] = true;
      j["rows"].push_back(row);
    }
    if (diff) j["agree"] = !mismatch;
    print_json(out, j);
  } else {
    for (int n = 1; n <= order; ++n) {
      out << n;
      for (const auto& c : cols) out << '\t' << (c[n] ? c[n]->str() : std::string("NA"));
      out << '\n';
    }
    if (outside) err << "note: n = 1 lies outside the domain of " << to_string(name) << " (the cycle needs n >= 2)\n";
  }
  if (diff && mismatch) {
    err << "error: methods disagree\n";
    return cross_check_failed;
  }
  return ok;
}

Json broken_json(const BrokenStaircase& b) {
  Json j;
  j["n"] = b.n;
  j["direction"] = to_string(b.direction);
  j["blocks"] = Json::array();
  for (const auto& iv : b.blocks) j["blocks"].push_back({iv.lo, iv.hi});
  j["fragment"] = b.has_fragment();
  return j;
}

int cmd_staircase(const Global& g, const std::string& action, const std::string& file, std::ostream& out) {
  if (file.empty()) invalid("--file is required");
  StaircaseDiagram d = diagram_from_json(read_json(file));
  if (action == "validate") {
    ValidationReport r = validate(d);
    Json j;
    j["valid"] = r.valid;
    j["axiom"] = r.valid ? Json(nullptr) : Json(to_string(r.violated));
    j["detail"] = r.detail;
    j["spherical"] = is_spherical(d);
    j["fully_supported"] = d.fully_supported();
    std::string f = fmt(g, "json");
    if (f == "json") print_json(out, j);
    else print_flat(out, j, f);
    return ok;
  }
  ValidationReport r = validate(d);
  if (!r.valid) throw Error(ErrorKind::invalid_argument, std::string("not a staircase diagram (") +
                                                              to_string(r.violated) + "): " + r.detail);
  if (action == "render") {
    out << render_ascii(d);
    return ok;
  }
  if (action == "dyck") {
    DyckPath p = to_dyck(d);
    Json j;
    j["steps"] = Json::array();
    for (auto [r2, u] : p.steps) j["steps"].push_back({r2, u});
    std::string f = fmt(g, "json");
    if (f == "json") print_json(out, j);
    else
      for (auto [r2, u] : p.steps) out << r2 << '\t' << u << '\n';
    return ok;
  }
  if (action == "decompose") {
    Json j;
    if (d.graph().kind == GraphKind::cycle) {
      CycleDecomposition c = cycle_decompose(d);
      j["kind"] = "cycle";
      j["pieces"] = Json::array();
      for (const auto& b : c.pieces) j["pieces"].push_back(broken_json(b));
      j["marked"] = c.marked;
    } else {
      LineDecomposition l = line_decompose(d);
      j["kind"] = "path";
      j["broken"] = Json::array();
      for (const auto& b : l.broken) j["broken"].push_back(broken_json(b));
      j["tail"] = diagram_to_json(l.tail);
    }
    print_json(out, j);
    return ok;
  }
  invalid("unknown staircase action " + action);
}

int cmd_selftest(const Global& g, const std::string& scale, std::ostream& out) {
  if (scale != "small" && scale != "full") invalid("scale must be small or full");
  AcceptanceOptions o;
  o.reduced = scale == "small";
  o.workers = g.workers;
  auto results = run_acceptance(o);
  bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  std::string f = fmt(g, "text");
  if (f == "json") {
    Json j;
    j["scale"] = scale;
    j["criteria"] = Json::array();
    for (const auto& r : results) {
      Json c;
      c["id"] = r.id;
      c["name"] = r.name;
      c["passed"] = r.passed;
      c["detail"] = r.detail;
      j["criteria"].push_back(c);
    }
    j["passed"] = all;
    print_json(out, j);
  } else {
    for (const auto& r : results)
      out << (r.passed ? "PASS" : "FAIL") << (f == "tsv" ? "\t" : " ") << r.id << (f == "tsv" ? "\t" : " ")
          << r.name << (f == "tsv" ? "\t" : " (") << r.detail << (f == "tsv" ? "" : ")") << '\n';
  }
  return all ? ok : cross_check_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smooth Schubert varieties of affine type A: smoothness tests, BP decompositions, "
               "staircase diagrams and counts"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "tsv", "text"}));
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--budget-seconds", g.budget_seconds, "time budget, 0 for none")->check(CLI::NonNegativeNumber);

  ElementArgs smooth_args, dec_args;
  auto* smooth = app.add_subcommand("smooth", "pattern and rational smoothness of one element");
  add_element_options(smooth, smooth_args);

  std::string J_text;
  auto* decompose = app.add_subcommand("decompose", "complete BP decomposition of one element");
  add_element_options(decompose, dec_args);
  decompose->add_option("--J", J_text, "parabolic subset, comma separated");

  int en_n = 0;
  bool count_only = false;
  std::string en_method = "avoiders";
  auto* enumerate = app.add_subcommand("enumerate", "smooth elements of the affine group");
  enumerate->add_option("--n", en_n, "period")->required();
  enumerate->add_flag("--count-only", count_only, "print only the number of elements");
  enumerate->add_option("--method", en_method, "avoiders or diagrams")
      ->check(CLI::IsMember({"avoiders", "diagrams"}));

  std::string which = "A", se_method = "closed";
  int order = 9;
  bool diff = false;
  auto* series = app.add_subcommand("series", "generating function coefficients");
  series->add_option("--which", which, "A, AM, AB, AF, ABAR or ASTAR");
  series->add_option("--order", order, "last coefficient");
  series->add_option("--method", se_method, "closed, assembled, enumerate or all");
  series->add_flag("--diff", diff, "exit 2 when methods disagree");

  std::string st_file;
  auto* staircase = app.add_subcommand("staircase", "staircase diagram tools");
  staircase->require_subcommand(1);
  std::string st_action;
  for (const char* name : {"validate", "render", "dyck", "decompose"}) {
    auto* sub = staircase->add_subcommand(name, std::string(name) + " a diagram");
    sub->add_option("--file", st_file, "diagram JSON file, - for stdin")->required();
    sub->callback([&st_action, name] { st_action = name; });
  }

  std::string scale = "small";
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--scale", scale, "small or full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  }

  try {
    if (*smooth) return cmd_smooth(g, smooth_args, out);
    if (*decompose) return cmd_decompose(g, dec_args, J_text, out);
    if (*enumerate) return cmd_enumerate(g, en_n, count_only, en_method, out);
    if (*series) return cmd_series(g, which, order, se_method, diff, out, err);
    if (*staircase) return cmd_staircase(g, st_action, st_file, out);
    if (*selftest) return cmd_selftest(g, scale, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return invalid_input;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  }
  return invalid_input;
}

}  // namespace schubert::cli
