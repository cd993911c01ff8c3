#include "regset/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace regset {

ElementSet::ElementSet(int parent_order, std::vector<int> members)
    : parent_order_(parent_order), mask_(parent_order, 0) {
  require(parent_order > 0, "ElementSet: parent order must be positive");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int x : members) {
    require(x >= 0 && x < parent_order, "ElementSet: member index out of range");
    mask_[x] = 1;
  }
  members_ = std::move(members);
}

ElementSet ElementSet::full(int parent_order) {
  std::vector<int> m(parent_order);
  for (int i = 0; i < parent_order; ++i) m[i] = i;
  return ElementSet(parent_order, std::move(m));
}

void ElementSet::insert(int x) {
  require(x >= 0 && x < parent_order_, "ElementSet: member index out of range");
  if (mask_[x]) return;
  mask_[x] = 1;
  members_.insert(std::upper_bound(members_.begin(), members_.end(), x), x);
}

void ElementSet::erase(int x) {
  if (!contains(x)) return;
  mask_[x] = 0;
  members_.erase(std::lower_bound(members_.begin(), members_.end(), x));
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
  if (parent_order_ != o.parent_order_) return false;
  for (int x : members_)
    if (!o.contains(x)) return false;
  return true;
}

namespace {

int imod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

std::string power_label(const std::string& base, int exp) {
  if (exp == 0) return "";
  if (exp == 1) return base;
  return base + "^" + std::to_string(exp);
}

}  // namespace

FiniteGroup FiniteGroup::finish(Data d, TableCheck check, unsigned seed) {
  const int n = d.order;
  require(n > 0, "group order must be positive");
  require(static_cast<int>(d.mul.size()) == n * n, "multiplication table size mismatch");

  // Latin square.
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = d.mul[static_cast<size_t>(r) * n + c];
      require(v >= 0 && v < n, "table entry out of range");
      require(!seen[v], "table row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = d.mul[static_cast<size_t>(r) * n + c];
      require(!seen[v], "table column is not a permutation");
      seen[v] = 1;
    }
  }

  // Identity.
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = d.mul[static_cast<size_t>(e) * n + x] == x && d.mul[static_cast<size_t>(x) * n + e] == x;
    if (ok) {
      id = e;
      break;
    }
  }
  require(id >= 0, "table has no identity element");
  d.identity = id;

  auto mul = [&](int x, int y) { return d.mul[static_cast<size_t>(x) * n + y]; };

  // Inverses.
  d.inv.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (mul(x, y) == id) {
        require(mul(y, x) == id, "one-sided inverse found");
        d.inv[x] = y;
        break;
      }
    }
    require(d.inv[x] >= 0, "element has no inverse");
  }

  // Associativity: exhaustive up to order 64, otherwise sampled or skipped.
  if (check == TableCheck::exhaustive || (check != TableCheck::exhaustive && n <= 64)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          require(mul(mul(x, y), z) == mul(x, mul(y, z)), "table is not associative");
  } else if (check == TableCheck::sampled) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    long long trials = 10LL * n * n;
    for (long long i = 0; i < trials; ++i) {
      int x = pick(rng), y = pick(rng), z = pick(rng);
      require(mul(mul(x, y), z) == mul(x, mul(y, z)), "table is not associative (sampled)");
    }
  }

  if (d.labels.empty()) {
    d.labels.resize(n);
    for (int i = 0; i < n; ++i) d.labels[i] = std::to_string(i);
  }
  require(static_cast<int>(d.labels.size()) == n, "label count mismatch");

  return FiniteGroup(std::make_shared<const Data>(std::move(d)));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  require(n >= 1, "cyclic: n must be >= 1");
  Data d;
  d.order = n;
  d.mul.resize(static_cast<size_t>(n) * n);
  d.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    d.labels[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) d.mul[static_cast<size_t>(i) * n + j] = imod(i + j, n);
  }
  return finish(std::move(d), TableCheck::trusted, 0);
}

FiniteGroup FiniteGroup::dihedral(int n) {
  require(n >= 3, "dihedral: n must be >= 3");
  const int ord = 2 * n;
  Data d;
  d.order = ord;
  d.mul.resize(static_cast<size_t>(ord) * ord);
  d.labels.resize(ord);
  auto idx = [&](int i, int j) { return imod(i, n) + n * (j & 1); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 2; ++j) {
      int x = idx(i, j);
      std::string la = power_label("a", i);
      std::string lb = j ? "b" : "";
      std::string lab = la.empty() ? (lb.empty() ? "e" : lb) : (lb.empty() ? la : la + " " + lb);
      d.labels[x] = lab;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < 2; ++l) {
          // (a^i b^j)(a^k b^l) = a^{i + (-1)^j k} b^{j+l}
          int e = j == 0 ? i + k : i - k;
          d.mul[static_cast<size_t>(x) * ord + idx(k, l)] = idx(e, j + l);
        }
      }
    }
  }
  return finish(std::move(d), TableCheck::trusted, 0);
}

FiniteGroup FiniteGroup::generalized_quaternion(int n) {
  require(n >= 2, "generalized_quaternion: n must be >= 2");
  const int m = 2 * n;  // order of a
  const int ord = 4 * n;
  Data d;
  d.order = ord;
  d.mul.resize(static_cast<size_t>(ord) * ord);
  d.labels.resize(ord);
  auto idx = [&](int i, int j) { return imod(i, m) + m * (j & 1); };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < 2; ++j) {
      int x = idx(i, j);
      std::string la = power_label("a", i);
      std::string lb = j ? "b" : "";
      std::string lab = la.empty() ? (lb.empty() ? "e" : lb) : (lb.empty() ? la : la + " " + lb);
      d.labels[x] = lab;
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < 2; ++l) {
          // b a^k = a^{-k} b, b^2 = a^n.
          int e, f;
          if (j == 0) {
            e = i + k;
            f = l;
          } else if (l == 0) {
            e = i - k;
            f = 1;
          } else {  // (a^i b)(a^k b) = a^{i-k} b^2 = a^{i-k+n}
            e = i - k + n;
            f = 0;
          }
          d.mul[static_cast<size_t>(x) * ord + idx(k, l)] = idx(e, f);
        }
      }
    }
  }
  return finish(std::move(d), TableCheck::trusted, 0);
}

FiniteGroup FiniteGroup::elementary_abelian(int p, int n) {
  require(p >= 2, "elementary_abelian: p must be prime");
  for (int q = 2; q * q <= p; ++q) require(p % q != 0, "elementary_abelian: p must be prime");
  require(n >= 1, "elementary_abelian: n must be >= 1");
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    ord *= p;
    require(ord <= 4096, "elementary_abelian: order too large for a multiplication table");
  }
  const int N = static_cast<int>(ord);
  Data d;
  d.order = N;
  d.mul.resize(static_cast<size_t>(N) * N);
  d.labels.resize(N);
  std::vector<int> dig(n);
  for (int x = 0; x < N; ++x) {
    int t = x;
    std::string lab;
    for (int i = 0; i < n; ++i) {
      dig[i] = t % p;
      t /= p;
      lab += std::to_string(dig[i]);
      if (p > 9 && i + 1 < n) lab += ",";
    }
    d.labels[x] = lab;
    for (int y = 0; y < N; ++y) {
      int ty = y, z = 0, pw = 1;
      for (int i = 0; i < n; ++i) {
        z += ((dig[i] + ty % p) % p) * pw;
        ty /= p;
        pw *= p;
      }
      d.mul[static_cast<size_t>(x) * N + y] = z;
    }
  }
  return finish(std::move(d), TableCheck::trusted, 0);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  long long ord = static_cast<long long>(n1) * n2;
  require(ord <= 4096, "direct_product: order too large for a multiplication table");
  const int N = static_cast<int>(ord);
  Data d;
  d.order = N;
  d.mul.resize(static_cast<size_t>(N) * N);
  d.labels.resize(N);
  auto idx = [&](int x1, int x2) { return x1 * n2 + x2; };
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = 0; x2 < n2; ++x2) {
      int x = idx(x1, x2);
      d.labels[x] = "(" + g1.label(x1) + "," + g2.label(x2) + ")";
      for (int y1 = 0; y1 < n1; ++y1)
        for (int y2 = 0; y2 < n2; ++y2)
          d.mul[static_cast<size_t>(x) * N + idx(y1, y2)] = idx(g1.op(x1, y1), g2.op(x2, y2));
    }
  return finish(std::move(d), TableCheck::trusted, 0);
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& mul,
                                    std::vector<std::string> labels, TableCheck check,
                                    unsigned seed) {
  const int n = static_cast<int>(mul.size());
  Data d;
  d.order = n;
  d.mul.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : mul) {
    require(static_cast<int>(row.size()) == n, "from_table: ragged table");
    d.mul.insert(d.mul.end(), row.begin(), row.end());
  }
  d.labels = std::move(labels);
  return finish(std::move(d), check, seed);
}

std::optional<int> FiniteGroup::find_label(const std::string& label) const {
  for (int i = 0; i < order(); ++i)
    if (d_->labels[i] == label) return i;
  return std::nullopt;
}

int FiniteGroup::element_order(int x) const {
  require(x >= 0 && x < order(), "element index out of range");
  int k = 1, y = x;
  while (y != identity()) {
    y = op(y, x);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int x = 0; x < order(); ++x)
    for (int y = x + 1; y < order(); ++y)
      if (op(x, y) != op(y, x)) return false;
  return true;
}

ElementSet FiniteGroup::involutions() const {
  std::vector<int> out;
  for (int x = 0; x < order(); ++x)
    if (x != identity() && op(x, x) == identity()) out.push_back(x);
  return ElementSet(order(), std::move(out));
}

bool FiniteGroup::is_inverse_closed(const ElementSet& x) const {
  require(x.parent_order() == order(), "set does not belong to this group");
  for (int m : x.members())
    if (!x.contains(inv(m))) return false;
  return true;
}

ElementSet FiniteGroup::inverse_of(const ElementSet& x) const {
  require(x.parent_order() == order(), "set does not belong to this group");
  std::vector<int> out;
  out.reserve(x.size());
  for (int m : x.members()) out.push_back(inv(m));
  return ElementSet(order(), std::move(out));
}

namespace {

std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems;
  std::vector<int> work;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
      work.push_back(x);
    }
  };
  add(g.identity());
  for (int x : seed) add(x);
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    add(g.inv(x));
    for (size_t i = 0; i < elems.size(); ++i) {
      add(g.op(x, elems[i]));
      add(g.op(elems[i], x));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_normal_in(const FiniteGroup& g, const ElementSet& h) {
  for (int x = 0; x < g.order(); ++x)
    for (int m : h.members())
      if (!h.contains(g.conjugate(x, m))) return false;
  return true;
}

}  // namespace

SubgroupInfo generated_subgroup(const FiniteGroup& g, const ElementSet& gens) {
  require(gens.parent_order() == g.order(), "generators do not belong to this group");
  require(!gens.is_empty(), "generator set must be nonempty");
  ElementSet elems(g.order(), closure(g, gens.members()));
  SubgroupInfo info;
  info.index = g.order() / elems.size();
  info.normal = is_normal_in(g, elems);
  info.elements = std::move(elems);
  return info;
}

SubgroupInfo subgroup_from_elements(const FiniteGroup& g, const ElementSet& elements) {
  require(elements.parent_order() == g.order(), "elements do not belong to this group");
  require(elements.contains(g.identity()), "subgroup must contain the identity");
  for (int x : elements.members()) {
    require(elements.contains(g.inv(x)), "set not closed under inverses");
    for (int y : elements.members())
      require(elements.contains(g.op(x, y)), "set not closed under products");
  }
  SubgroupInfo info;
  info.index = g.order() / elements.size();
  info.normal = is_normal_in(g, elements);
  info.elements = elements;
  return info;
}

std::vector<SubgroupInfo> all_subgroups(const FiniteGroup& g, int census_bound) {
  require(g.order() <= census_bound, "all_subgroups: group exceeds census bound");
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  std::vector<int> triv = {g.identity()};
  seen.insert(triv);
  work.push_back(triv);
  // Closure under one-generator extension reaches every subgroup.
  while (!work.empty()) {
    std::vector<int> h = work.back();
    work.pop_back();
    std::vector<char> in(g.order(), 0);
    for (int x : h) in[x] = 1;
    for (int x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<int> seed = h;
      seed.push_back(x);
      std::vector<int> bigger = closure(g, seed);
      if (seen.insert(bigger).second) work.push_back(bigger);
    }
  }
  std::vector<SubgroupInfo> out;
  out.reserve(seen.size());
  for (const auto& elems : seen) {
    ElementSet es(g.order(), elems);
    SubgroupInfo info;
    info.index = g.order() / es.size();
    info.normal = is_normal_in(g, es);
    info.elements = std::move(es);
    out.push_back(std::move(info));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupInfo& a, const SubgroupInfo& b) {
    return a.elements < b.elements;
  });
  return out;
}

std::vector<ElementSet> cosets(const FiniteGroup& g, const SubgroupInfo& h, Side side) {
  const ElementSet& H = h.elements;
  require(H.parent_order() == g.order(), "subgroup does not belong to this group");
  std::vector<char> done(g.order(), 0);
  std::vector<ElementSet> out;
  out.push_back(H);
  for (int x : H.members()) done[x] = 1;
  for (int x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<int> block;
    block.reserve(H.size());
    for (int m : H.members())
      block.push_back(side == Side::left ? g.op(x, m) : g.op(m, x));
    for (int y : block) done[y] = 1;
    out.emplace_back(g.order(), std::move(block));
  }
  return out;
}

SubgroupInfo normalizer(const FiniteGroup& g, const SubgroupInfo& h) {
  std::vector<int> elems;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int m : h.elements.members())
      if (!h.elements.contains(g.conjugate(x, m))) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(x);
  }
  return subgroup_from_elements(g, ElementSet(g.order(), std::move(elems)));
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const SubgroupInfo& h) {
  const auto& mem = h.elements.members();
  const int n = static_cast<int>(mem.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < n; ++i) pos[mem[i]] = i;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = g.label(mem[i]);
    for (int j = 0; j < n; ++j) {
      int z = pos[g.op(mem[i], mem[j])];
      require(z >= 0, "subgroup_as_group: set not closed");
      mul[i][j] = z;
    }
  }
  return FiniteGroup::from_table(mul, std::move(labels), TableCheck::trusted);
}

}  // namespace regset
