#include "bcrystal/kostant.hpp"

#include <algorithm>
#include <sstream>

namespace bcrystal {

std::vector<PhiBlock> phi_blocks(LieType t, int i) {
  const int n = t.rank;
  if (i < 1 || i > n) throw std::out_of_range("operator index out of range");
  std::vector<PhiBlock> blocks;
  if (i < n) {
    for (int j = 1; j < i; ++j) {
      blocks.push_back({beta(j, i), BracketSide::close, 1});
      blocks.push_back({beta(j, i - 1), BracketSide::open, 1});
      blocks.push_back({gamma(j, i), BracketSide::close, 1});
      blocks.push_back({gamma(j, i + 1), BracketSide::open, 1});
    }
    blocks.push_back({beta(i, i), BracketSide::close, 1});
  } else if (t.kind == Kind::B) {
    for (int j = 1; j < n; ++j) {
      blocks.push_back({beta(j, n), BracketSide::close, 1});
      blocks.push_back({beta(j, n - 1), BracketSide::open, 2});
      blocks.push_back({gamma(j, n), BracketSide::close, 2});
      blocks.push_back({beta(j, n), BracketSide::open, 1});
    }
    blocks.push_back({beta(n, n), BracketSide::close, 1});
  } else {
    for (int j = 1; j < n; ++j) {
      blocks.push_back({gamma(j, j), BracketSide::close, 1});
      blocks.push_back({beta(j, n - 1), BracketSide::open, 1});
      blocks.push_back({gamma(j, n), BracketSide::close, 1});
      blocks.push_back({gamma(j, j), BracketSide::open, 1});
    }
    blocks.push_back({gamma(n, n), BracketSide::close, 1});
  }
  return blocks;
}

KostantPartition KostantPartition::from_counts(LieType t,
                                               std::map<RootLabel, int> counts) {
  for (const auto& [root, c] : counts) {
    if (!is_valid_root(t, root))
      throw std::invalid_argument("root " + to_string(root) +
                                  " is not valid in " + to_string(t));
    if (c < 1)
      throw std::invalid_argument("count for " + to_string(root) +
                                  " must be positive");
  }
  return KostantPartition(t, std::move(counts));
}

int KostantPartition::count(const RootLabel& r) const {
  auto it = counts_.find(r);
  return it == counts_.end() ? 0 : it->second;
}

void KostantPartition::bump(const RootLabel& r, int delta) {
  int& c = counts_[r];
  c += delta;
  if (c < 0) throw std::logic_error("count of " + to_string(r) + " went negative");
  if (c == 0) counts_.erase(r);
}

std::vector<KpBracket> KostantPartition::bracketing(int i) const {
  std::vector<KpBracket> seq;
  for (const PhiBlock& block : phi_blocks(type_, i)) {
    const int copies = block.factor * count(block.root);
    for (int copy = 0; copy < copies; ++copy)
      seq.push_back({block.side, {block.root, copy}});
  }
  return seq;
}

std::vector<KpBracket> KostantPartition::signature(int i) const {
  return cancel_brackets(bracketing(i));
}

static const KpBracket* leftmost_open(const std::vector<KpBracket>& sig) {
  for (const KpBracket& b : sig)
    if (b.side == BracketSide::open) return &b;
  return nullptr;
}

static const KpBracket* rightmost_close(const std::vector<KpBracket>& sig) {
  for (auto it = sig.rbegin(); it != sig.rend(); ++it)
    if (it->side == BracketSide::close) return &*it;
  return nullptr;
}

KostantPartition KostantPartition::f_generic(const std::vector<KpBracket>& sig,
                                             int i) const {
  KostantPartition out = *this;
  const KpBracket* open = leftmost_open(sig);
  if (!open) {
    out.bump(beta(i, i), 1);  // +(a_i)
    return out;
  }
  RootStep step = RootSystem::get(type_).step(open->source.root, i, StepDir::add);
  if (!step.is_root())
    throw std::logic_error("'(' root has no successor under a_" +
                           std::to_string(i));
  out.bump(open->source.root, -1);
  out.bump(step.root(), 1);
  return out;
}

KostantPartition KostantPartition::f_type_c_top(
    const std::vector<KpBracket>& sig) const {
  const int n = type_.rank;
  KostantPartition out = *this;
  const KpBracket* open = leftmost_open(sig);
  if (!open) {
    out.bump(gamma(n, n), 1);
    return out;
  }
  const RootLabel r = open->source.root;
  if (r.family == RootFamily::beta && r.k == n - 1) {
    const int k = r.i;
    if (count(gamma(k, n)) == count(r) - 1) {
      out.bump(r, -1);
      out.bump(gamma(k, n), 1);
    } else if (count(gamma(k, n)) < count(r) - 1) {
      out.bump(r, -2);
      out.bump(gamma(k, k), 1);
    } else {
      throw std::logic_error("uncanceled '(' on " + to_string(r) +
                             " contradicts its gamma count");
    }
    return out;
  }
  if (r.family == RootFamily::gamma && r.i == r.k && r.i < n) {
    out.bump(r, -1);
    out.bump(gamma(r.i, n), 2);
    return out;
  }
  throw std::logic_error("unexpected '(' root " + to_string(r) +
                         " in the type-C top signature");
}

KostantPartition KostantPartition::f(int i) const {
  std::vector<KpBracket> sig = signature(i);
  if (type_.kind == Kind::C && i == type_.rank) return f_type_c_top(sig);
  return f_generic(sig, i);
}

std::optional<KostantPartition> KostantPartition::e_generic(
    const std::vector<KpBracket>& sig, int i) const {
  const KpBracket* close = rightmost_close(sig);
  if (!close) return std::nullopt;
  KostantPartition out = *this;
  out.bump(close->source.root, -1);
  RootStep step = RootSystem::get(type_).step(close->source.root, i, StepDir::sub);
  if (step.is_root())
    out.bump(step.root(), 1);
  else if (!step.is_zero())
    throw std::logic_error("')' root has no predecessor under a_" +
                           std::to_string(i));
  return out;
}

std::optional<KostantPartition> KostantPartition::e_type_c_top(
    const std::vector<KpBracket>& sig) const {
  const int n = type_.rank;
  const KpBracket* close = rightmost_close(sig);
  if (!close) return std::nullopt;
  const RootLabel r = close->source.root;
  KostantPartition out = *this;
  if (r == gamma(n, n)) {
    out.bump(r, -1);
    return out;
  }
  if (r.family == RootFamily::gamma && r.k == n) {
    const int k = r.i;
    if (count(r) == count(beta(k, n - 1)) + 1) {
      out.bump(r, -1);
      out.bump(beta(k, n - 1), 1);
    } else if (count(r) > count(beta(k, n - 1)) + 1) {
      out.bump(r, -2);
      out.bump(gamma(k, k), 1);
    } else {
      throw std::logic_error("uncanceled ')' on " + to_string(r) +
                             " contradicts its beta count");
    }
    return out;
  }
  if (r.family == RootFamily::gamma && r.i == r.k) {
    out.bump(r, -1);
    out.bump(beta(r.i, n - 1), 2);
    return out;
  }
  throw std::logic_error("unexpected ')' root " + to_string(r) +
                         " in the type-C top signature");
}

std::optional<KostantPartition> KostantPartition::e(int i) const {
  std::vector<KpBracket> sig = signature(i);
  if (type_.kind == Kind::C && i == type_.rank) return e_type_c_top(sig);
  return e_generic(sig, i);
}

Weight KostantPartition::weight() const {
  const RootSystem& rs = RootSystem::get(type_);
  Weight w(type_.rank, 0);
  for (const auto& [root, c] : counts_) {
    const RootVector& v = rs.simple_expansion(root);
    for (int j = 0; j < type_.rank; ++j) w[j] -= c * v[j];
  }
  return w;
}

int KostantPartition::epsilon(int i) const {
  return count_side(signature(i), BracketSide::close);
}

int KostantPartition::phi(int i) const {
  return epsilon(i) + RootSystem::get(type_).pairing(i, weight());
}

std::string KostantPartition::to_text() const {
  if (counts_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [root, c] : counts_) {
    if (!first) out << '+';
    first = false;
    if (c != 1) out << c;
    out << '(' << to_string(root) << ')';
  }
  return out.str();
}

}  // namespace bcrystal
