#include "regset/regular.hpp"

#include <algorithm>
#include <numeric>

namespace regset {

RegularCheck check_regular_set(const CayleyGraph& graph, const ElementSet& d, int a, int b) {
  require(d.parent_order() == graph.num_vertices(), "set does not belong to this graph");
  require(!d.is_empty(), "regular set must be nonempty");
  require(d.size() < graph.num_vertices(), "regular set must be a proper subset");
  require(a >= 0 && b >= 0, "parameters must be nonnegative");

  const FiniteGroup& g = graph.group();
  RegularCheck res;
  int inside = 0, outside = 0;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    int count = 0;
    for (int s : graph.connection().members())
      if (d.contains(g.op(s, v))) ++count;
    int want = d.contains(v) ? a : b;
    if (count != want) {
      res.failing_vertex = v;
      res.failing_count = count;
      return res;
    }
    d.contains(v) ? ++inside : ++outside;
  }
  res.certificate = RegularCertificate{graph, d, a, b, inside, outside};
  return res;
}

std::optional<RegularCertificate> verify_regular_set(const CayleyGraph& graph,
                                                     const ElementSet& d, int a, int b) {
  return check_regular_set(graph, d, a, b).certificate;
}

long long regular_set_size(long long num_vertices, long long degree, long long a, long long b) {
  require(b >= 1, "regular_set_size: b must be >= 1");
  require(degree >= a, "regular_set_size: degree must be >= a");
  long long num = num_vertices * b;
  long long den = b + degree - a;
  require(num % den == 0,
          "regular_set_size: |V|*b not divisible by b+d-a; no such regular set exists");
  return num / den;
}

namespace {

// Index of the coset (in the given coset list, block 0 = H) containing x.
std::vector<int> coset_index_map(const std::vector<ElementSet>& blocks, int order) {
  std::vector<int> idx(order, -1);
  for (size_t i = 0; i < blocks.size(); ++i)
    for (int x : blocks[i].members()) idx[x] = static_cast<int>(i);
  return idx;
}

}  // namespace

ElementSet extract_transversal(const CayleyGraph& graph, const SubgroupInfo& h) {
  const FiniteGroup& g = graph.group();
  require(h.index >= 2, "extract_transversal: H must be proper");
  const int n = h.index;
  int deg = graph.degree();
  require(deg % (n - 1) == 0, "extract_transversal: H is not a (0,k)-regular set");
  int k = deg / (n - 1);
  require(verify_regular_set(graph, h.elements, 0, k).has_value(),
          "extract_transversal: H is not a (0,k)-regular set");

  auto blocks = cosets(g, h, Side::left);
  auto which = coset_index_map(blocks, g.order());
  std::vector<int> best(blocks.size(), -1);
  for (int s : graph.connection().members()) {
    int c = which[s];
    if (best[c] < 0) best[c] = s;  // members ascend, first hit is minimal
  }
  std::vector<int> out;
  for (size_t c = 1; c < blocks.size(); ++c) {
    require(best[c] >= 0, "extract_transversal: some coset not covered by S");
    out.push_back(best[c]);
  }
  return ElementSet(g.order(), std::move(out));
}

std::optional<TransversalPartition> transversal_partition(const CayleyGraph& graph,
                                                          const SubgroupInfo& h, Side side) {
  const FiniteGroup& g = graph.group();
  if (h.index < 2) return std::nullopt;
  const int n = h.index;
  const ElementSet& s = graph.connection();
  if (s.size() % (n - 1) != 0) return std::nullopt;
  const int k = s.size() / (n - 1);
  if (k < 1) return std::nullopt;

  auto blocks = cosets(g, h, side);
  auto which = coset_index_map(blocks, g.order());
  // Condition (c): S misses H and hits every nontrivial coset exactly k times.
  std::vector<std::vector<int>> per_coset(blocks.size());
  for (int x : s.members()) per_coset[which[x]].push_back(x);
  if (!per_coset[0].empty()) return std::nullopt;
  for (size_t c = 1; c < blocks.size(); ++c)
    if (static_cast<int>(per_coset[c].size()) != k) return std::nullopt;

  TransversalPartition tp;
  tp.side = side;
  for (int i = 0; i < k; ++i) {
    std::vector<int> part;
    part.reserve(n - 1);
    for (size_t c = 1; c < blocks.size(); ++c) part.push_back(per_coset[c][i]);
    tp.parts.emplace_back(g.order(), std::move(part));
  }
  return tp;
}

namespace {

// A unit is a minimal inverse-closed piece of a candidate connection set:
// a single involution or an element paired with its inverse.
struct Unit {
  int x = 0;       // defining element (smallest in its home coset)
  int y = -1;      // inverse, or -1 for an involution
  int coset_a = 0; // coset of x
  int coset_b = 0; // coset of y (== coset_a for involutions and intra-coset pairs)
  int weight_a = 1;  // contribution to coset_a (2 for an intra-coset pair)
};

struct Search {
  const FiniteGroup& g;
  int k;
  int num_cosets;
  std::vector<std::vector<Unit>> units_at;  // by min touched coset
  std::vector<int> count;
  std::vector<char> chosen_flag;  // parallel to flat unit order
  std::vector<std::pair<int, int>> flat_of;  // (coset, pos) per flat id
  std::vector<int> result;
  bool found = false;

  bool fill(int c, size_t pos, int deficit) {
    if (deficit == 0) return next_coset(c + 1);
    const auto& cand = units_at[c];
    if (pos >= cand.size()) return false;
    // Upper bound on what the remaining candidates can still contribute.
    int avail = 0;
    for (size_t i = pos; i < cand.size(); ++i) avail += cand[i].weight_a;
    if (avail < deficit) return false;

    const Unit& u = cand[pos];
    bool usable = u.weight_a <= deficit;
    if (usable && u.coset_b != u.coset_a) usable = count[u.coset_b] < k;
    if (usable) {
      count[u.coset_a] += u.weight_a;
      if (u.coset_b != u.coset_a) count[u.coset_b] += 1;
      result.push_back(u.x);
      if (u.y >= 0) result.push_back(u.y);
      if (fill(c, pos + 1, deficit - u.weight_a)) return true;
      if (u.y >= 0) result.pop_back();
      result.pop_back();
      count[u.coset_a] -= u.weight_a;
      if (u.coset_b != u.coset_a) count[u.coset_b] -= 1;
    }
    return fill(c, pos + 1, deficit);
  }

  bool next_coset(int c) {
    if (c == num_cosets) return true;
    return fill(c, 0, k - count[c]);
  }
};

}  // namespace

std::optional<ElementSet> search_connection_set(const FiniteGroup& g, const SubgroupInfo& h,
                                                int k) {
  require(k >= 1 && k <= h.elements.size(), "search_connection_set: k out of range");
  require(h.index >= 2, "search_connection_set: H must be proper");

  auto blocks = cosets(g, h, Side::left);
  auto which = coset_index_map(blocks, g.order());
  const int num_cosets = static_cast<int>(blocks.size()) - 1;  // nontrivial ones

  Search s{g, k, num_cosets, {}, {}, {}, {}, {}, false};
  s.units_at.resize(num_cosets);
  s.count.assign(num_cosets, 0);
  std::vector<char> seen(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (h.elements.contains(x) || seen[x]) continue;
    int y = g.inv(x);
    Unit u;
    if (y == x) {
      u = Unit{x, -1, which[x] - 1, which[x] - 1, 1};
    } else {
      seen[y] = 1;
      int ca = which[x] - 1, cb = which[y] - 1;
      if (ca == cb) {
        u = Unit{x, y, ca, cb, 2};
      } else if (ca < cb) {
        u = Unit{x, y, ca, cb, 1};
      } else {
        u = Unit{y, x, cb, ca, 1};
      }
    }
    seen[u.x] = 1;
    s.units_at[u.coset_a].push_back(u);
  }
  for (auto& v : s.units_at)
    std::sort(v.begin(), v.end(), [](const Unit& a, const Unit& b) { return a.x < b.x; });

  if (!s.next_coset(0)) return std::nullopt;
  ElementSet out(g.order(), s.result);
  // On success k always divides |S|: one transversal-minus-identity per part.
  require(out.size() == k * num_cosets, "search_connection_set: internal size mismatch");
  return out;
}

namespace {

// Appends two new disjoint transversals-minus-identity to X, keeping the
// union inverse-closed and disjoint from the existing X. Follows the
// inductive step of the even-k construction, resolved per inverse-paired
// coset. H must be normal.
void add_transversal_pair(const FiniteGroup& g, const std::vector<ElementSet>& blocks,
                          const std::vector<int>& which, ElementSet& x_set) {
  const int nblocks = static_cast<int>(blocks.size());
  std::vector<char> done(nblocks, 0);
  done[0] = 1;
  std::vector<int> t0, t1;
  for (int c = 1; c < nblocks; ++c) {
    if (done[c]) continue;
    int cinv = which[g.inv(blocks[c].members().front())];
    if (cinv != c) {
      // Paired cosets: pick two fresh elements of C, mirror their inverses.
      int picked = 0;
      for (int m : blocks[c].members()) {
        if (x_set.contains(m)) continue;
        (picked == 0 ? t0 : t1).push_back(m);
        (picked == 0 ? t0 : t1).push_back(g.inv(m));
        if (++picked == 2) break;
      }
      require(picked == 2, "construct_normal: coset exhausted");
      done[c] = done[cinv] = 1;
    } else {
      // Self-paired coset: the fresh part is inverse-closed, so it holds
      // either a non-involution with its inverse or two involutions.
      int xm = -1;
      for (int m : blocks[c].members())
        if (!x_set.contains(m) && g.inv(m) != m) {
          xm = m;
          break;
        }
      if (xm >= 0) {
        t0.push_back(xm);
        t1.push_back(g.inv(xm));
      } else {
        int picked = 0;
        for (int m : blocks[c].members()) {
          if (x_set.contains(m)) continue;
          (picked == 0 ? t0 : t1).push_back(m);
          if (++picked == 2) break;
        }
        require(picked == 2, "construct_normal: coset exhausted");
      }
      done[c] = 1;
    }
  }
  for (int m : t0) x_set.insert(m);
  for (int m : t1) x_set.insert(m);
}

}  // namespace

ElementSet construct_normal_even(const FiniteGroup& g, const SubgroupInfo& h, int k) {
  require(h.normal, "construct_normal_even: H must be normal");
  require(h.elements.size() >= 2, "construct_normal_even: H must be nontrivial");
  require(h.index >= 2, "construct_normal_even: H must be proper");
  require(k >= 2 && k % 2 == 0, "construct_normal_even: k must be even and >= 2");
  require(k <= h.elements.size(), "construct_normal_even: k exceeds |H|");

  auto blocks = cosets(g, h, Side::right);
  auto which = coset_index_map(blocks, g.order());
  ElementSet s = ElementSet::empty(g.order());
  for (int step = 0; step < k / 2; ++step) add_transversal_pair(g, blocks, which, s);
  return s;
}

bool odd_criterion(const FiniteGroup& g, const SubgroupInfo& h) {
  require(h.normal, "odd_criterion: only proven for normal subgroups; use search instead");
  require(h.index >= 2, "odd_criterion: H must be proper");
  for (int x = 0; x < g.order(); ++x) {
    if (h.elements.contains(x)) continue;
    if (!h.elements.contains(g.op(x, x))) continue;
    bool ok = false;
    for (int m : h.elements.members()) {
      int y = g.op(x, m);
      if (g.op(y, y) == g.identity()) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::optional<ElementSet> construct_normal_odd(const FiniteGroup& g, const SubgroupInfo& h,
                                               int k) {
  require(h.normal, "construct_normal_odd: H must be normal");
  require(h.elements.size() >= 2, "construct_normal_odd: H must be nontrivial");
  require(h.index >= 2, "construct_normal_odd: H must be proper");
  require(k >= 1 && k % 2 == 1, "construct_normal_odd: k must be odd and >= 1");
  require(k <= h.elements.size(), "construct_normal_odd: k exceeds |H|");
  if (!odd_criterion(g, h)) return std::nullopt;

  auto blocks = cosets(g, h, Side::right);
  auto which = coset_index_map(blocks, g.order());
  const int nblocks = static_cast<int>(blocks.size());

  // Base (0,1) transversal: representative plus inverse for paired cosets,
  // an involution for self-paired cosets (exists by the criterion).
  ElementSet s = ElementSet::empty(g.order());
  std::vector<char> done(nblocks, 0);
  done[0] = 1;
  for (int c = 1; c < nblocks; ++c) {
    if (done[c]) continue;
    int rep = blocks[c].members().front();
    int cinv = which[g.inv(rep)];
    if (cinv != c) {
      s.insert(rep);
      s.insert(g.inv(rep));
      done[c] = done[cinv] = 1;
    } else {
      int found = -1;
      for (int m : blocks[c].members())
        if (g.inv(m) == m) {
          found = m;
          break;
        }
      require(found >= 0, "construct_normal_odd: criterion holds but no involution in coset");
      s.insert(found);
      done[c] = 1;
    }
  }
  for (int step = 0; step < (k - 1) / 2; ++step) add_transversal_pair(g, blocks, which, s);
  return s;
}

SubgroupInfo sylow_2_subgroup(const FiniteGroup& g) {
  require(g.is_abelian(), "sylow_2_subgroup: group must be abelian");
  std::vector<int> elems;
  for (int x = 0; x < g.order(); ++x) {
    int o = g.element_order(x);
    while (o % 2 == 0) o /= 2;
    if (o == 1) elems.push_back(x);
  }
  return subgroup_from_elements(g, ElementSet(g.order(), std::move(elems)));
}

std::vector<int> abelian_cyclic_decomposition(const FiniteGroup& p2group) {
  require(p2group.is_abelian(), "cyclic decomposition: group must be abelian");
  if (p2group.order() == 1) return {};
  require(p2group.order() <= 256, "cyclic decomposition: supported up to order 256");

  // Maximal-order generator, then a complement, recursively.
  int best = -1, best_ord = 0;
  for (int x = 0; x < p2group.order(); ++x) {
    int o = p2group.element_order(x);
    if (o > best_ord) {
      best_ord = o;
      best = x;
    }
  }
  if (best_ord == p2group.order()) return {best};

  ElementSet a_sub = generated_subgroup(p2group, ElementSet(p2group.order(), {best})).elements;
  auto subs = all_subgroups(p2group, 256);
  for (const auto& sub : subs) {
    if (sub.elements.size() * a_sub.size() != p2group.order()) continue;
    bool trivial_meet = true;
    for (int m : sub.elements.members())
      if (m != p2group.identity() && a_sub.contains(m)) {
        trivial_meet = false;
        break;
      }
    if (!trivial_meet) continue;
    FiniteGroup comp = subgroup_as_group(p2group, sub);
    std::vector<int> rest = abelian_cyclic_decomposition(comp);
    std::vector<int> out = {best};
    for (int r : rest) out.push_back(sub.elements.members()[r]);
    return out;
  }
  throw error("cyclic decomposition: no complement found (group not abelian?)");
}

bool abelian_sylow2_criterion(const FiniteGroup& g, const SubgroupInfo& h, int k) {
  require(g.is_abelian(), "abelian_sylow2_criterion: group must be abelian");
  require(k >= 1 && k % 2 == 1, "abelian_sylow2_criterion: k must be odd");
  require(k <= h.elements.size(), "abelian_sylow2_criterion: k exceeds |H|");
  require(h.index >= 2, "abelian_sylow2_criterion: H must be proper");

  SubgroupInfo p = sylow_2_subgroup(g);
  std::vector<int> meet;
  for (int m : h.elements.members())
    if (p.elements.contains(m)) meet.push_back(m);

  if (meet.size() == 1) return true;                       // |H| odd
  if (meet.size() == p.elements.size()) return true;       // |G:H| odd

  FiniteGroup pg = subgroup_as_group(g, p);
  std::vector<int> pos(g.order(), -1);
  for (size_t i = 0; i < p.elements.members().size(); ++i)
    pos[p.elements.members()[i]] = static_cast<int>(i);
  std::vector<int> meet_in_p;
  for (int m : meet) meet_in_p.push_back(pos[m]);
  SubgroupInfo hp = subgroup_from_elements(pg, ElementSet(pg.order(), meet_in_p));

  // Cyclic H ∩ P: decide by the projection criterion.
  int max_ord = 0;
  for (int m : hp.elements.members()) max_ord = std::max(max_ord, pg.element_order(m));
  if (max_ord == hp.elements.size()) {
    std::vector<int> gens = abelian_cyclic_decomposition(pg);
    std::vector<int> orders;
    for (int a : gens) orders.push_back(pg.element_order(a));
    // Coordinates of every element of P with respect to the decomposition.
    std::vector<std::vector<int>> coords(pg.order());
    std::vector<int> digits(gens.size(), 0);
    long long total = 1;
    for (int o : orders) total *= o;
    require(total == pg.order(), "cyclic decomposition: order mismatch");
    for (long long it = 0; it < total; ++it) {
      int elem = pg.identity();
      long long rem = it;
      for (size_t i = 0; i < gens.size(); ++i) {
        int c = static_cast<int>(rem % orders[i]);
        rem /= orders[i];
        digits[i] = c;
        for (int j = 0; j < c; ++j) elem = pg.op(elem, gens[i]);
      }
      coords[elem] = digits;
    }
    for (size_t i = 0; i < gens.size(); ++i) {
      for (int m : hp.elements.members()) {
        if (std::gcd(coords[m][i], orders[i]) == 1) return true;  // projects onto factor i
      }
    }
    return false;
  }

  // No closed form: fall back to the search oracle inside P (odd k reduces
  // to k = 1 for normal subgroups, and abelian groups are normal throughout).
  return search_connection_set(pg, hp, 1).has_value();
}

}  // namespace regset
