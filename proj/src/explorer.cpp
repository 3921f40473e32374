#include "bcrystal/explorer.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bcrystal {

namespace {

template <typename Elem>
Elem start_element(LieType t);

template <>
MLTableau start_element<MLTableau>(LieType t) {
  return MLTableau::highest_weight(t);
}

template <>
KostantPartition start_element<KostantPartition>(LieType t) {
  return KostantPartition::zero(t);
}

template <typename Elem>
CrystalGraph<Elem> generate_graph(LieType t, int depth, long vertex_cap) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  CrystalGraph<Elem> graph{t, depth, {}, {}};
  graph.vertices.push_back(start_element<Elem>(t));

  std::vector<int> frontier = {0};
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::map<Elem, std::vector<std::pair<int, int>>> images;  // elem -> (src,i)
    for (int src : frontier)
      for (int i = 1; i <= t.rank; ++i)
        images[graph.vertices[src].f(i)].push_back({src, i});

    std::vector<int> next;
    std::vector<std::array<int, 3>> level_edges;
    for (auto& [elem, preds] : images) {
      const int dst = static_cast<int>(graph.vertices.size());
      graph.vertices.push_back(elem);
      next.push_back(dst);
      for (auto [src, i] : preds) level_edges.push_back({src, i, dst});
      if (static_cast<long>(graph.vertices.size()) > vertex_cap)
        throw ResourceLimitExceeded("vertex cap exceeded at depth " +
                                    std::to_string(level + 1));
    }
    std::sort(level_edges.begin(), level_edges.end());
    graph.edges.insert(graph.edges.end(), level_edges.begin(), level_edges.end());
    frontier = std::move(next);
  }
  return graph;
}

template <typename Elem>
std::string dot_of(const CrystalGraph<Elem>& graph) {
  std::ostringstream out;
  out << "digraph crystal {\n  node [shape=box];\n";
  for (size_t v = 0; v < graph.vertices.size(); ++v)
    out << "  v" << v << " [label=\"" << graph.vertices[v].to_text() << "\"];\n";
  for (const auto& [src, i, dst] : graph.edges)
    out << "  v" << src << " -> v" << dst << " [label=\"" << i << "\"];\n";
  out << "}\n";
  return out.str();
}

// Capped violation log; the harness expects zero entries anyway.
void report(CheckReport& rep, const std::string& what) {
  if (rep.violations.size() < 100) rep.violations.push_back(what);
}

}  // namespace

TableauGraph generate_tableau_graph(LieType t, int depth, long vertex_cap) {
  return generate_graph<MLTableau>(t, depth, vertex_cap);
}

KostantGraph generate_kostant_graph(LieType t, int depth, long vertex_cap) {
  return generate_graph<KostantPartition>(t, depth, vertex_cap);
}

std::string export_dot(const TableauGraph& graph) { return dot_of(graph); }
std::string export_dot(const KostantGraph& graph) { return dot_of(graph); }

long count_root_decompositions(LieType t, const std::vector<int>& target) {
  const RootSystem& rs = RootSystem::get(t);
  const auto& roots = rs.positive_roots();
  const int n = t.rank;

  std::vector<int> remaining = target;
  auto spent = [&remaining]() {
    return std::all_of(remaining.begin(), remaining.end(),
                       [](int c) { return c == 0; });
  };

  std::function<long(size_t)> walk = [&](size_t idx) -> long {
    if (idx == roots.size()) return spent() ? 1 : 0;
    const RootVector& v = rs.simple_expansion(roots[idx]);
    int max_copies = -1;
    for (int j = 0; j < n; ++j)
      if (v[j] > 0) {
        const int cap = remaining[j] / v[j];
        if (max_copies < 0 || cap < max_copies) max_copies = cap;
      }
    long total = 0;
    for (int c = 0; c <= max_copies; ++c) {
      if (c > 0)
        for (int j = 0; j < n; ++j) remaining[j] -= v[j];
      total += walk(idx + 1);
    }
    for (int j = 0; j < n; ++j) remaining[j] += max_copies * v[j];
    return total;
  };
  return walk(0);
}

std::map<Weight, std::pair<long, long>> weight_census(LieType t, int depth) {
  std::map<Weight, std::pair<long, long>> census;
  for (const MLTableau& T : generate_tableau_graph(t, depth).vertices)
    census[T.weight()].first += 1;
  for (const KostantPartition& a : generate_kostant_graph(t, depth).vertices)
    census[a.weight()].second += 1;
  return census;
}

CheckReport verify_commutation(LieType t, int depth) {
  CheckReport rep;
  rep.name = "commutation";
  TableauGraph graph = generate_tableau_graph(t, depth);
  for (const MLTableau& T : graph.vertices) {
    ++rep.elements;
    const KostantPartition image = to_kostant(T);
    if (image.weight() != T.weight())
      report(rep, "wt mismatch at " + T.to_text());
    ++rep.checks;
    for (int i = 1; i <= t.rank; ++i) {
      if (to_kostant(T.f(i)) != image.f(i))
        report(rep, "f_" + std::to_string(i) + " does not commute at " +
                        T.to_text());
      ++rep.checks;

      const auto eT = T.e(i);
      const auto ea = image.e(i);
      if (eT.has_value() != ea.has_value())
        report(rep, "e_" + std::to_string(i) + " definedness differs at " +
                        T.to_text());
      else if (eT && to_kostant(*eT) != *ea)
        report(rep, "e_" + std::to_string(i) + " does not commute at " +
                        T.to_text());
      ++rep.checks;

      if (T.epsilon(i) != image.epsilon(i) || T.phi(i) != image.phi(i))
        report(rep, "epsilon/phi mismatch at " + T.to_text() + " i=" +
                        std::to_string(i));
      ++rep.checks;
    }
  }
  return rep;
}

CheckReport verify_readings(LieType t, int depth) {
  CheckReport rep;
  rep.name = "readings";
  TableauGraph graph = generate_tableau_graph(t, depth);
  for (const MLTableau& T : graph.vertices) {
    ++rep.elements;
    for (int i = 1; i <= t.rank; ++i) {
      if (T.f(i, ReadingMode::ME) != T.f(i, ReadingMode::FE))
        report(rep, "f_" + std::to_string(i) + " differs between readings at " +
                        T.to_text());
      const auto me = T.e(i, ReadingMode::ME);
      const auto fe = T.e(i, ReadingMode::FE);
      if (me != fe)
        report(rep, "e_" + std::to_string(i) + " differs between readings at " +
                        T.to_text());
      rep.checks += 2;
    }
  }
  return rep;
}

CheckReport verify_roundtrip(LieType t, int depth) {
  CheckReport rep;
  rep.name = "roundtrip";
  TableauGraph graph = generate_tableau_graph(t, depth);
  std::map<Weight, std::vector<KostantPartition>> fibers;
  for (const MLTableau& T : graph.vertices) {
    ++rep.elements;
    const KostantPartition image = to_kostant(T);
    if (to_tableau(image) != T)
      report(rep, "inverse round trip fails at " + T.to_text());
    ++rep.checks;
    fibers[T.weight()].push_back(image);
  }
  // Injectivity per weight fiber; surjectivity is the census check.
  for (auto& [wt, images] : fibers) {
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      report(rep, "psi not injective on a weight fiber");
    ++rep.checks;
  }
  return rep;
}

CheckReport verify_census(LieType t, int depth) {
  CheckReport rep;
  rep.name = "census";
  for (const auto& [wt, cells] : weight_census(t, depth)) {
    ++rep.elements;
    const auto [mlt_count, kp_count] = cells;
    if (mlt_count != kp_count)
      report(rep, "realization counts differ at weight height " +
                      std::to_string(-coefficient_sum(wt)));
    std::vector<int> target(wt.size());
    for (size_t j = 0; j < wt.size(); ++j) target[j] = -wt[j];
    if (kp_count != count_root_decompositions(t, target))
      report(rep, "brute-force decomposition count differs at height " +
                      std::to_string(-coefficient_sum(wt)));
    rep.checks += 2;
  }
  return rep;
}

namespace {

template <typename Elem>
void check_axioms(const Elem& x, LieType t, CheckReport& rep,
                  const std::string& tag) {
  const Weight wt = x.weight();
  for (int i = 1; i <= t.rank; ++i) {
    const Elem fx = x.f(i);
    if (fx.e(i) != std::optional<Elem>(x))
      report(rep, tag + ": e_i f_i != id, i=" + std::to_string(i));
    Weight expected = wt;
    expected[i - 1] -= 1;
    if (fx.weight() != expected)
      report(rep, tag + ": wt(f_i x) != wt(x) - a_i, i=" + std::to_string(i));

    const auto ex = x.e(i);
    if (ex && ex->f(i) != x)
      report(rep, tag + ": f_i e_i != id, i=" + std::to_string(i));

    // Upper normality: epsilon counts the e_i applications exactly.
    int steps = 0;
    Elem cursor = x;
    while (auto up = cursor.e(i)) {
      cursor = *up;
      ++steps;
    }
    if (steps != x.epsilon(i))
      report(rep, tag + ": epsilon_i is not the e_i depth, i=" +
                      std::to_string(i));
    rep.checks += 4;
  }
}

}  // namespace

CheckReport verify_axioms(LieType t, int depth) {
  CheckReport rep;
  rep.name = "axioms";
  for (const MLTableau& T : generate_tableau_graph(t, depth).vertices) {
    ++rep.elements;
    check_axioms(T, t, rep, "tableau " + T.to_text());
  }
  for (const KostantPartition& a : generate_kostant_graph(t, depth).vertices) {
    ++rep.elements;
    check_axioms(a, t, rep, "kostant " + a.to_text());
  }
  return rep;
}

}  // namespace bcrystal
