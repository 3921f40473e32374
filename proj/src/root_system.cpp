#include "bcrystal/root_system.hpp"

#include <cstdio>
#include <memory>
#include <mutex>

namespace bcrystal {

std::string to_string(LieType t) {
  return (t.kind == Kind::B ? "B" : "C") + std::to_string(t.rank);
}

std::string to_string(const RootLabel& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%c(%d,%d)",
                r.family == RootFamily::beta ? 'B' : 'G', r.i, r.k);
  return buf;
}

RootLabel parse_root_label(const std::string& text) {
  char fam = 0;
  int i = 0, k = 0, consumed = 0;
  if (std::sscanf(text.c_str(), " %c(%d,%d)%n", &fam, &i, &k, &consumed) != 3 ||
      static_cast<size_t>(consumed) != text.size() || (fam != 'B' && fam != 'G'))
    throw std::invalid_argument("bad root label: " + text);
  return {fam == 'B' ? RootFamily::beta : RootFamily::gamma, i, k};
}

bool is_valid_root(LieType t, const RootLabel& r) {
  const int n = t.rank;
  if (r.i < 1 || r.k < r.i) return false;
  if (t.kind == Kind::B)
    return r.family == RootFamily::beta ? r.k <= n : (r.i < r.k && r.k <= n);
  return r.family == RootFamily::beta ? r.k < n : r.k <= n;
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight out(a);
  for (size_t j = 0; j < out.size(); ++j) out[j] += b[j];
  return out;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight out(a);
  for (size_t j = 0; j < out.size(); ++j) out[j] -= b[j];
  return out;
}

int coefficient_sum(const Weight& w) {
  int s = 0;
  for (int c : w) s += c;
  return s;
}

RootSystem::RootSystem(LieType t) : type_(t) {
  const int n = t.rank;

  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    cartan_[i][i] = 2;
    if (i + 1 < n) cartan_[i][i + 1] = -1;
    if (i > 0) cartan_[i][i - 1] = -1;
  }
  if (t.kind == Kind::B)
    cartan_[n - 1][n - 2] = -2;
  else
    cartan_[n - 2][n - 1] = -2;

  for (int i = 1; i <= n; ++i)
    for (int k = i; k <= n; ++k) {
      RootLabel b = beta(i, k);
      if (is_valid_root(t, b)) roots_.push_back(b);
    }
  for (int i = 1; i <= n; ++i)
    for (int k = i; k <= n; ++k) {
      RootLabel g = gamma(i, k);
      if (is_valid_root(t, g)) roots_.push_back(g);
    }

  expansions_.reserve(roots_.size());
  for (size_t idx = 0; idx < roots_.size(); ++idx) {
    const RootLabel& r = roots_[idx];
    RootVector v(n, 0);
    if (r.family == RootFamily::beta) {
      for (int j = r.i; j <= r.k; ++j) v[j - 1] = 1;
    } else if (t.kind == Kind::B) {
      for (int j = r.i; j < r.k; ++j) v[j - 1] = 1;
      for (int j = r.k; j <= n; ++j) v[j - 1] = 2;
    } else {
      for (int j = r.i; j < r.k; ++j) v[j - 1] = 1;
      for (int j = r.k; j <= n - 1; ++j) v[j - 1] = 2;
      v[n - 1] = 1;
    }
    expansions_.push_back(v);
    index_[r] = static_cast<int>(idx);
    by_vector_[v] = r;
  }
}

const RootSystem& RootSystem::get(LieType t) {
  static std::mutex mutex;
  static std::map<LieType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[t];
  if (!slot) slot = std::make_unique<RootSystem>(t);
  return *slot;
}

void RootSystem::check_root(const RootLabel& r) const {
  if (!is_valid_root(type_, r))
    throw std::invalid_argument("root " + to_string(r) + " is not valid in " +
                                to_string(type_));
}

int RootSystem::root_index(const RootLabel& r) const {
  check_root(r);
  return index_.at(r);
}

const RootVector& RootSystem::simple_expansion(const RootLabel& r) const {
  return expansions_[root_index(r)];
}

RootVector RootSystem::epsilon_expansion(const RootLabel& r) const {
  check_root(r);
  const int n = type_.rank;
  RootVector v(n, 0);
  if (r.family == RootFamily::beta) {
    v[r.i - 1] = 1;
    if (r.k < n) v[r.k] = -1;  // beta(i,n) in type B is epsilon_i alone
  } else {
    v[r.i - 1] += 1;
    v[r.k - 1] += 1;
  }
  return v;
}

int RootSystem::pairing(int i, const Weight& w) const {
  const int n = type_.rank;
  if (i < 1 || i > n) throw std::out_of_range("coroot index out of range");
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("weight has wrong length");
  int s = 0;
  for (int j = 0; j < n; ++j) s += cartan_[i - 1][j] * w[j];
  return s;
}

RootStep RootSystem::step(const RootLabel& r, int i, StepDir dir) const {
  RootVector v = simple_expansion(r);
  v[i - 1] += dir == StepDir::add ? 1 : -1;
  bool all_zero = true;
  for (int c : v) {
    if (c < 0) return RootStep::none();
    if (c != 0) all_zero = false;
  }
  if (all_zero) return RootStep::zero();
  auto it = by_vector_.find(v);
  return it == by_vector_.end() ? RootStep::none() : RootStep::to(it->second);
}

}  // namespace bcrystal
