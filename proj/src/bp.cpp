#include "schubert/bp.hpp"

#include <algorithm>

#include "schubert/error.hpp"
#include "schubert/smoothness.hpp"

namespace schubert {

namespace {

void require_quotient(const AffinePermutation& w, const ReflectionSet& J) {
  if (!in_quotient(w, J)) {
    throw Error(ErrorKind::not_in_quotient,
                w.to_string() + " is not a minimal coset representative for " +
                    J.to_string());
  }
}

std::vector<int> candidate_order(const AffinePermutation& w, const ReflectionSet& J) {
  const ReflectionSet free_nodes = support(w) - J;
  const ReflectionSet descents = right_descents(w);
  std::vector<int> order;
  for (int s : (free_nodes - descents).indices()) order.push_back(s);
  for (int s : (free_nodes & descents).indices()) order.push_back(s);
  return order;
}

std::optional<GrassmannianBP> try_node(const AffinePermutation& w, const ReflectionSet& J,
                                       int s, int cap) {
  ReflectionSet K = support(w) | J;
  K.erase(s);
  auto [v, u] = coset_decompose(w, K);
  if ((support(u) | J) != K) return std::nullopt;
  if (!is_bp(w, K, J, cap)) return std::nullopt;
  return GrassmannianBP{std::move(v), std::move(u), K, s};
}

}  // namespace

bool is_bp(const AffinePermutation& w, const ReflectionSet& K, const ReflectionSet& J,
           int cap) {
  if (!J.subset_of(K)) {
    throw Error(ErrorKind::invalid_argument, "is_bp needs J to be a subset of K");
  }
  require_quotient(w, J);
  const auto [v, u] = coset_decompose(w, K);
  if (J.empty()) return (support(v) & K).subset_of(left_descents(u));
  return poincare_polynomial(w, J, cap) ==
         poincare_polynomial(v, K, cap) * poincare_polynomial(u, J, cap);
}

std::vector<GrassmannianBP> all_grassmannian_bps(const AffinePermutation& w,
                                                 const ReflectionSet& J, int cap) {
  require_quotient(w, J);
  std::vector<GrassmannianBP> out;
  for (int s : candidate_order(w, J)) {
    if (auto bp = try_node(w, J, s, cap)) out.push_back(std::move(*bp));
  }
  return out;
}

std::optional<GrassmannianBP> find_grassmannian_bp(const AffinePermutation& w,
                                                   const ReflectionSet& J, int cap) {
  require_quotient(w, J);
  for (int s : candidate_order(w, J)) {
    if (auto bp = try_node(w, J, s, cap)) return bp;
  }
  return std::nullopt;
}

bool is_maximal_coset_element(const AffinePermutation& v, const ReflectionSet& K) {
  const ReflectionSet sv = support(v);
  if (sv.is_full()) return false;
  return length(v) == longest_length(sv) - longest_length(K & sv);
}

namespace {

GrassmannianLabel label_for(const AffinePermutation& v, int missing) {
  for (const auto& component : support(v).components()) {
    auto it = std::find(component.begin(), component.end(), missing);
    if (it == component.end()) continue;
    GrassmannianLabel label;
    label.nodes = component;
    label.missing = missing;
    label.a = static_cast<int>(it - component.begin()) + 1;
    label.p = static_cast<int>(component.size());
    return label;
  }
  throw Error(ErrorKind::invalid_argument, "missing node not in the factor's support");
}

}  // namespace

bool BPDecomposition::all_maximal() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const BPFactor& f) { return f.maximal; });
}

std::vector<AffinePermutation> BPDecomposition::tails() const {
  std::vector<AffinePermutation> out(factors.size() + 1,
                                     AffinePermutation::identity(w.period()));
  for (std::size_t i = factors.size(); i-- > 0;) out[i] = factors[i].v * out[i + 1];
  return out;
}

std::vector<AffinePermutation> BPDecomposition::heads() const {
  std::vector<AffinePermutation> out{AffinePermutation::identity(w.period())};
  for (const auto& f : factors) out.push_back(out.back() * f.v);
  return out;
}

std::optional<BPDecomposition> complete_bp_decomposition(const AffinePermutation& w,
                                                         const ReflectionSet& J, int cap) {
  require_quotient(w, J);
  BPDecomposition result{w, J, {}};
  AffinePermutation u = w;
  ReflectionSet K_before = support(w) | J;
  while (!support(u).subset_of(J)) {
    auto bp = find_grassmannian_bp(u, J, cap);
    if (!bp) return std::nullopt;
    BPFactor factor{bp->v, K_before, bp->K, false, std::nullopt};
    factor.maximal = is_maximal_coset_element(bp->v, bp->K);
    if (factor.maximal) factor.grassmannian = label_for(bp->v, bp->removed);
    result.factors.push_back(std::move(factor));
    K_before = bp->K;
    u = bp->u;
  }
  return result;
}

std::vector<GrassmannianLabel> fibre_tower(const AffinePermutation& w,
                                           const ReflectionSet& J, int cap) {
  const auto decomposition = complete_bp_decomposition(w, J, cap);
  if (!decomposition || !decomposition->all_maximal()) {
    throw Error(ErrorKind::not_smooth,
                w.to_string() + " has no complete maximal BP decomposition");
  }
  std::vector<GrassmannianLabel> tower;
  for (const auto& f : decomposition->factors) tower.push_back(*f.grassmannian);
  return tower;
}

bool is_smooth_partial(const AffinePermutation& w, const ReflectionSet& J) {
  require_quotient(w, J);
  if (J.is_full()) {
    throw Error(ErrorKind::infinite_group, "J must be a proper subset");
  }
  return is_smooth(w * longest_element(J & support(w)));
}

}  // namespace schubert
