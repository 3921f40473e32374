// Acceptance suite: exact reproduction of the worked examples plus the
// exhaustive cross-realization property checks, one pass/fail line per
// criterion.  Exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "bcrystal/explorer.hpp"
#include "bcrystal/isomorphism.hpp"
#include "bcrystal/json_io.hpp"
#include "bcrystal/stacks.hpp"
#include "bcrystal/tableau.hpp"

using namespace bcrystal;

namespace {

const LieType B2{Kind::B, 2}, B3{Kind::B, 3}, C2{Kind::C, 2}, C3{Kind::C, 3};

Entry L(int k) { return Entry::letter(k); }
Entry Z() { return Entry::zero(); }
Entry Bar(int k) { return Entry::bar(k); }

int failures = 0;

void criterion(const std::string& id, const std::string& what, bool ok) {
  std::printf("[%s] %-3s %s\n", ok ? "PASS" : "FAIL", id.c_str(), what.c_str());
  if (!ok) ++failures;
}

std::vector<Entry> row(int letter, int copies, std::vector<Entry> tail) {
  std::vector<Entry> out(copies, L(letter));
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

KostantPartition kp(LieType t, std::map<RootLabel, int> counts) {
  return KostantPartition::from_counts(t, std::move(counts));
}

MLTableau running_b3() {
  return MLTableau::from_rows(
      B3, {row(1, 9, {L(2), Z(), Bar(3), Bar(2), Bar(1), Bar(1)}),
           row(2, 4, {L(3), Z(), Bar(2), Bar(2)}),
           row(3, 1, {Bar(3), Bar(3)})});
}

MLTableau running_c3() {
  return MLTableau::from_rows(
      C3, {row(1, 9, {L(2), L(3), L(3), Bar(3), Bar(2), Bar(1)}),
           row(2, 4, {L(3), Bar(3), Bar(3), Bar(2)}),
           row(3, 1, {Bar(3), Bar(3)})});
}

MLTableau iso_c3() {
  return MLTableau::from_rows(
      C3, {row(1, 7, {L(2), L(2), L(3), L(3), L(3), L(3), Bar(3), Bar(3),
                      Bar(2), Bar(2)}),
           row(2, 3, {L(3), Bar(3), Bar(3)}), row(3, 1, {Bar(3)})});
}

KostantPartition c3_alpha1() {
  return kp(C3, {{beta(1, 2), 4},
                 {gamma(1, 3), 2},
                 {gamma(1, 1), 2},
                 {gamma(2, 2), 1},
                 {gamma(2, 3), 1},
                 {gamma(3, 3), 1}});
}

KostantPartition c3_alpha2() {
  return kp(C3, {{beta(1, 2), 2},
                 {gamma(1, 3), 2},
                 {gamma(1, 1), 3},
                 {gamma(2, 2), 1},
                 {gamma(2, 3), 1},
                 {gamma(3, 3), 1}});
}

void examples_b3_tableau() {
  MLTableau T = running_b3();
  MLTableau expected_f = MLTableau::from_rows(
      B3, {row(1, 10, {L(2), Z(), Bar(3), Bar(2), Bar(1), Bar(1)}),
           row(2, 5, {L(3), Z(), Bar(2), Bar(2)}),
           row(3, 1, {Z(), Bar(3), Bar(3)})});
  MLTableau expected_e = MLTableau::from_rows(
      B3, {row(1, 9, {L(2), Z(), Bar(3), Bar(2), Bar(1), Bar(1)}),
           row(2, 4, {L(3), Z(), Bar(2), Bar(2)}),
           row(3, 1, {Z(), Bar(3)})});
  criterion("1a", "B3 tableau example: f_3 and e_3 match the displays",
            T.f(3) == expected_f && T.e(3) == std::optional(expected_e));
}

void examples_c3_tableau() {
  MLTableau T = running_c3();
  MLTableau expected_f = MLTableau::from_rows(
      C3, {row(1, 10, {L(2), L(3), L(3), Bar(3), Bar(2), Bar(1)}),
           row(2, 5, {L(3), Bar(3), Bar(3), Bar(2)}),
           row(3, 1, {Bar(3), Bar(3), Bar(3)})});
  MLTableau expected_e = MLTableau::from_rows(
      C3, {row(1, 8, {L(2), L(3), L(3), Bar(3), Bar(2), Bar(1)}),
           row(2, 3, {L(3), Bar(3), Bar(3), Bar(2)}),
           row(3, 1, {Bar(3)})});
  criterion("1b", "C3 tableau example: f_3 and e_3 match the displays",
            T.f(3) == expected_f && T.e(3) == std::optional(expected_e));
}

void examples_kp_operators() {
  KostantPartition split = kp(C3, {{beta(1, 2), 2},
                                   {gamma(1, 3), 4},
                                   {gamma(1, 1), 2},
                                   {gamma(2, 2), 1},
                                   {gamma(2, 3), 1},
                                   {gamma(3, 3), 1}});
  criterion("1c", "Kostant operator examples: both type-C f_3 cases",
            c3_alpha1().f(3) == c3_alpha2() && c3_alpha2().f(3) == split);
}

void examples_isomorphism() {
  KostantPartition b3_image = kp(B3, {{beta(1, 1), 2},
                                      {beta(1, 2), 1},
                                      {beta(1, 3), 1},
                                      {gamma(1, 2), 2},
                                      {gamma(1, 3), 2},
                                      {beta(2, 2), 3},
                                      {beta(2, 3), 1},
                                      {gamma(2, 3), 2},
                                      {beta(3, 3), 4}});
  KostantPartition b3_lowered = b3_image.f(3);
  bool ok = to_kostant(running_b3()) == b3_image &&
            to_kostant(running_b3().f(3)) == b3_lowered &&
            b3_lowered.count(beta(3, 3)) == 5;
  ok = ok && to_kostant(iso_c3()) == c3_alpha1() &&
       to_kostant(iso_c3().f(3)) == c3_alpha2();
  criterion("1d", "isomorphism examples for B3 and C3 (beta(3,3) summand)", ok);
}

void examples_stacks() {
  KostantPartition plain = kp(C3, {{beta(1, 2), 3},
                                   {gamma(1, 3), 2},
                                   {gamma(1, 1), 2},
                                   {gamma(2, 2), 1},
                                   {gamma(2, 3), 1},
                                   {gamma(3, 3), 1}});
  KostantPartition plain_lowered = kp(C3, {{beta(1, 2), 2},
                                           {gamma(1, 3), 3},
                                           {gamma(1, 1), 2},
                                           {gamma(2, 2), 1},
                                           {gamma(2, 3), 1},
                                           {gamma(3, 3), 1}});
  KostantPartition split_lowered = kp(C3, {{beta(1, 2), 2},
                                           {gamma(1, 3), 4},
                                           {gamma(1, 1), 2},
                                           {gamma(2, 2), 1},
                                           {gamma(2, 3), 1},
                                           {gamma(3, 3), 1}});
  bool ok = plain.f(3) == plain_lowered &&
            add_top(C3, beta(1, 2), 3) == StackMove::to(gamma(1, 3));
  ok = ok && c3_alpha2().f(3) == split_lowered &&
       add_top(C3, gamma(1, 1), 3) == StackMove::split(gamma(1, 3));
  criterion("1e", "stack examples: plain add and the two-copy split", ok);
}

bool harness_passes(CheckReport (*check)(LieType, int)) {
  return check(B2, 10).passed() && check(C2, 10).passed() &&
         check(B3, 7).passed() && check(C3, 7).passed();
}

void root_data_checks() {
  bool ok = true;
  for (int n = 2; n <= 6 && ok; ++n)
    for (Kind kind : {Kind::B, Kind::C}) {
      const LieType t(kind, n);
      const RootSystem& rs = RootSystem::get(t);
      ok = ok && rs.positive_roots().size() == size_t(n) * n;
      for (const RootLabel& r : rs.positive_roots()) {
        const RootVector alpha = rs.simple_expansion(r);
        RootVector eps(n, 0);
        for (int j = 1; j < n; ++j) {
          eps[j - 1] += alpha[j - 1];
          eps[j] -= alpha[j - 1];
        }
        eps[n - 1] += (kind == Kind::B ? 1 : 2) * alpha[n - 1];
        ok = ok && eps == rs.epsilon_expansion(r);
      }
    }
  criterion("6a", "n^2 positive roots and epsilon consistency, n <= 6", ok);

  bool table_ok = true;
  for (int n = 2; n <= 6; ++n)
    for (Kind kind : {Kind::B, Kind::C}) {
      const LieType t(kind, n);
      std::vector<Entry> chain;
      for (int k = 1; k <= n; ++k) chain.push_back(L(k));
      if (kind == Kind::B) chain.push_back(Z());
      for (int k = n; k >= 1; --k) chain.push_back(Bar(k));
      std::vector<int> labels;
      for (int k = 1; k < n; ++k) labels.push_back(k);
      labels.push_back(n);
      if (kind == Kind::B) labels.push_back(n);
      for (int k = n - 1; k >= 1; --k) labels.push_back(k);
      for (int i = 1; i <= n; ++i)
        for (size_t pos = 0; pos < chain.size(); ++pos) {
          int entering = 0, leaving = 0;
          for (int p = int(pos) - 1; p >= 0 && labels[p] == i; --p) ++entering;
          for (size_t p = pos; p < labels.size() && labels[p] == i; ++p)
            ++leaving;
          table_ok = table_ok &&
                     entry_brackets(t, i, chain[pos]) ==
                         std::pair{entering, leaving};
        }
    }
  criterion("6b", "bracket table equals the fundamental-crystal arrow runs",
            table_ok);

  bool stacks_ok = true;
  for (int n = 2; n <= 4; ++n)
    for (Kind kind : {Kind::B, Kind::C}) {
      const LieType t(kind, n);
      for (int i = 1; i <= n; ++i) {
        std::map<std::pair<RootLabel, BracketSide>, int> factors;
        for (const PhiBlock& block : phi_blocks(t, i))
          factors[{block.root, block.side}] = block.factor;
        for (const RootLabel& r : positive_roots(t)) {
          int removes = 0, adds = 0;
          RootLabel cursor = r;
          for (StackMove m = remove_top(t, cursor, i); m.valid();
               m = remove_top(t, cursor, i)) {
            ++removes;
            if (m.kind != StackMoveKind::root) break;
            cursor = m.root;
          }
          cursor = r;
          for (StackMove m = add_top(t, cursor, i); m.valid();
               m = add_top(t, cursor, i)) {
            ++adds;
            if (m.kind != StackMoveKind::root) break;
            cursor = m.root;
          }
          auto close_it = factors.find({r, BracketSide::close});
          auto open_it = factors.find({r, BracketSide::open});
          stacks_ok = stacks_ok &&
                      removes == (close_it == factors.end() ? 0
                                                            : close_it->second) &&
                      adds == (open_it == factors.end() ? 0 : open_it->second);
        }
      }
    }
  criterion("6c", "Phi_i blocks equal the stack add/remove predicates, n <= 4",
            stacks_ok);
}

#ifdef BCRYSTAL_CLI_PATH
std::string run_cli(const std::string& args) {
  const std::string command =
      std::string(BCRYSTAL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<spawn failure>";
  std::string output;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    output.append(buffer, got);
  pclose(pipe);
  return output;
}
#endif

void determinism_check() {
  bool ok = export_json(generate_tableau_graph(C3, 5)) ==
            export_json(generate_tableau_graph(C3, 5));
#ifdef BCRYSTAL_CLI_PATH
  const std::string args =
      "generate --type B --rank 3 --realization kp --depth 5";
  const std::string first = run_cli(args);
  ok = ok && !first.empty() && first == run_cli(args);
#endif
  criterion("7", "repeated generation is byte-identical", ok);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  examples_b3_tableau();
  examples_c3_tableau();
  examples_kp_operators();
  examples_isomorphism();
  examples_stacks();

  criterion("2", "intertwining: B2/C2 depth 10, B3/C3 depth 7",
            harness_passes(verify_commutation));
  criterion("3", "reading equivalence at the same scales",
            harness_passes(verify_readings));
  criterion("4a", "inverse round trip and fiber injectivity",
            harness_passes(verify_roundtrip));
  criterion("4b", "weight census equals the brute-force counter",
            harness_passes(verify_census));
  criterion("5", "crystal axioms in both realizations",
            harness_passes(verify_axioms));

  root_data_checks();
  determinism_check();

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::printf("%d criteria failed (%lld ms)\n", failures,
              static_cast<long long>(elapsed.count()));
  return failures;
}
