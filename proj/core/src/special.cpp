#include "regset/special.hpp"

#include <numeric>

#include "regset/regular.hpp"

namespace regset {

namespace {

int imod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

DihedralSubgroupSpec normalize(const DihedralSubgroupSpec& spec) {
  require(spec.n >= 3, "dihedral subgroup: n must be >= 3");
  require(spec.t >= 1 && spec.n % spec.t == 0, "dihedral subgroup: t must divide n");
  DihedralSubgroupSpec out = spec;
  out.s = out.kind == SubgroupKind::mixed ? imod(spec.s, spec.t) : 0;
  return out;
}

QuaternionSubgroupSpec normalize(const QuaternionSubgroupSpec& spec) {
  require(spec.n >= 2, "quaternion subgroup: n must be >= 2");
  require(spec.t >= 1 && (2 * spec.n) % spec.t == 0,
          "quaternion subgroup: t must divide 2n");
  QuaternionSubgroupSpec out = spec;
  if (out.kind == SubgroupKind::mixed) {
    // <a^t, a^s b> contains b^2 = a^n, hence a^gcd(t,n).
    out.t = std::gcd(spec.t, spec.n);
    out.s = imod(spec.s, out.t);
  } else {
    out.s = 0;
  }
  return out;
}

int dihedral_subgroup_order(const DihedralSubgroupSpec& spec) {
  DihedralSubgroupSpec sp = normalize(spec);
  int m = sp.n / sp.t;
  return sp.kind == SubgroupKind::cyclic ? m : 2 * m;
}

int quaternion_subgroup_order(const QuaternionSubgroupSpec& spec) {
  QuaternionSubgroupSpec sp = normalize(spec);
  return sp.kind == SubgroupKind::cyclic ? 2 * sp.n / sp.t : 4 * sp.n / sp.t;
}

ElementSet dihedral_subgroup_elements(const DihedralSubgroupSpec& spec) {
  DihedralSubgroupSpec sp = normalize(spec);
  const int n = sp.n;
  ElementSet out = ElementSet::empty(2 * n);
  for (int i = 0; i * sp.t < n; ++i) {
    out.insert(imod(static_cast<long long>(i) * sp.t, n));
    if (sp.kind == SubgroupKind::mixed)
      out.insert(imod(static_cast<long long>(i) * sp.t + sp.s, n) + n);
  }
  return out;
}

ElementSet quaternion_subgroup_elements(const QuaternionSubgroupSpec& spec) {
  QuaternionSubgroupSpec sp = normalize(spec);
  const int n2 = 2 * sp.n;
  ElementSet out = ElementSet::empty(4 * sp.n);
  for (int i = 0; i * sp.t < n2; ++i) {
    out.insert(imod(static_cast<long long>(i) * sp.t, n2));
    if (sp.kind == SubgroupKind::mixed)
      out.insert(imod(static_cast<long long>(i) * sp.t + sp.s, n2) + n2);
  }
  return out;
}

namespace {

void check_k_range(int k, int h_order, const char* what) {
  require(k >= 1 && k <= h_order, std::string(what) + ": k must lie between 1 and |H|");
}

}  // namespace

bool dihedral_classify(const DihedralSubgroupSpec& spec, int k) {
  DihedralSubgroupSpec sp = normalize(spec);
  if (sp.kind == SubgroupKind::mixed)
    require(sp.t >= 2, "dihedral_classify: H must be proper");
  check_k_range(k, dihedral_subgroup_order(sp), "dihedral_classify");
  if (k % 2 == 0) return true;
  if (sp.kind == SubgroupKind::mixed) return true;
  return sp.t % 2 == 1 || (sp.n / sp.t) % 2 == 1;
}

std::optional<ElementSet> dihedral_construct(const DihedralSubgroupSpec& spec, int k) {
  DihedralSubgroupSpec sp = normalize(spec);
  if (!dihedral_classify(sp, k)) return std::nullopt;
  const int n = sp.n, t = sp.t;

  if (sp.kind == SubgroupKind::cyclic) {
    FiniteGroup g = FiniteGroup::dihedral(n);
    if (t == n) {
      // Trivial subgroup; only k = 1 is in range, realized by S = G \ {e}.
      ElementSet s = ElementSet::full(2 * n);
      s.erase(g.identity());
      return s;
    }
    SubgroupInfo h = generated_subgroup(g, ElementSet(2 * n, {imod(t, n)}));
    if (k % 2 == 0) return construct_normal_even(g, h, k);
    auto s = construct_normal_odd(g, h, k);
    require(s.has_value(), "dihedral_construct: internal (criterion mismatch)");
    return s;
  }

  // Mixed subgroup <a^t, a^s b>, n = t*m: per-coset reflection blocks R_i
  // and rotation blocks T_i, each a transversal minus the identity.
  const int m = n / t;
  ElementSet s = ElementSet::empty(2 * n);
  auto add_r = [&](int i) {
    for (int j = 1; j <= t - 1; ++j)
      s.insert(imod(static_cast<long long>(i) * t + sp.s - j, n) + n);
  };
  auto add_t = [&](int i) {
    for (int j = 1; j <= t - 1; ++j) s.insert(imod(static_cast<long long>(i) * t + j, n));
  };
  if (k <= m) {
    for (int i = 0; i <= k - 1; ++i) add_r(i);
  } else {
    for (int i = 0; i <= m - 1; ++i) add_t(i);
    for (int i = 0; i <= k - m - 1; ++i) add_r(i);
  }
  require(s.size() == k * (t - 1), "dihedral_construct: internal size mismatch");
  return s;
}

bool quaternion_classify(const QuaternionSubgroupSpec& spec, int k) {
  QuaternionSubgroupSpec sp = normalize(spec);
  if (sp.kind == SubgroupKind::mixed)
    require(sp.t >= 2, "quaternion_classify: H must be proper");
  check_k_range(k, quaternion_subgroup_order(sp), "quaternion_classify");
  if (k % 2 == 0) return true;
  if (sp.kind == SubgroupKind::cyclic) return (2 * sp.n / sp.t) % 2 == 1;
  return sp.t % 2 == 1;
}

std::optional<ElementSet> quaternion_construct(const QuaternionSubgroupSpec& spec, int k) {
  QuaternionSubgroupSpec sp = normalize(spec);
  if (!quaternion_classify(sp, k)) return std::nullopt;
  const int n = sp.n, t = sp.t, n2 = 2 * n;

  if (sp.kind == SubgroupKind::cyclic) {
    FiniteGroup g = FiniteGroup::generalized_quaternion(n);
    if (t == n2) {
      // Trivial subgroup; only k = 1 is in range, realized by S = G \ {e}.
      ElementSet s = ElementSet::full(4 * n);
      s.erase(g.identity());
      return s;
    }
    SubgroupInfo h = generated_subgroup(g, ElementSet(4 * n, {imod(t, n2)}));
    if (k % 2 == 0) return construct_normal_even(g, h, k);
    auto s = construct_normal_odd(g, h, k);
    require(s.has_value(), "quaternion_construct: internal (criterion mismatch)");
    return s;
  }

  // Mixed subgroup, normalized so t | n; n = t*m, |H| = 4m, index t.
  // The block formulas need the reflection offset in 1..t, so the s = 0
  // representative is replaced by the equivalent offset t.
  const int m = n / t;
  const int s_off = sp.s == 0 ? t : sp.s;
  ElementSet s = ElementSet::empty(4 * n);
  auto rot = [&](long long e) { return imod(e, n2); };
  auto refl = [&](long long e) { return imod(e, n2) + n2; };       // a^e b
  auto refl3 = [&](long long e) { return imod(e + n, n2) + n2; };  // a^e b^3 = a^{e+n} b
  auto add_R = [&](int i) {
    for (int j = 1; j <= t - 1; ++j) s.insert(rot(static_cast<long long>(i) * t + j));
  };
  auto add_T = [&](int i, bool inverse) {
    for (int j = 1; j <= t - 1; ++j) {
      long long e = static_cast<long long>(i) * t + s_off + j;
      s.insert(inverse ? refl3(e) : refl(e));
    }
  };
  auto add_T0 = [&](bool inverse) {
    // T = {a b, ..., a^{s-1} b} ∪ {a^{-t+s+1} b^3, ..., b^3}; T^{-1} swaps
    // the b and b^3 halves.
    for (int j = 1; j <= s_off - 1; ++j) s.insert(inverse ? refl3(j) : refl(j));
    for (int j = 1; j <= t - s_off; ++j) {
      long long e = -t + s_off + j;
      s.insert(inverse ? refl(e) : refl3(e));
    }
  };

  if (k % 2 == 0) {
    if (k <= 2 * m) {
      for (int i = 0; i <= k / 2 - 1; ++i) add_R(i);
      for (int i = 2 * m - k / 2; i <= 2 * m - 1; ++i) add_R(i);
    } else {
      add_T0(false);
      add_T0(true);
      for (int i = 0; i <= m - 2; ++i) {
        add_T(i, false);
        add_T(i, true);
      }
      for (int i = 0; i <= k / 2 - m - 1; ++i) add_R(i);
      for (int i = 3 * m - k / 2; i <= 2 * m - 1; ++i) add_R(i);
    }
  } else {
    // t odd, t = 2r + 1; R is the symmetric rotation block around e.
    const int r = (t - 1) / 2;
    const int l = (k - 1) / 2;
    for (int j = 1; j <= r; ++j) {
      s.insert(rot(j));
      s.insert(rot(-j));
    }
    if (k <= 2 * m - 1) {
      for (int i = 1; i <= l; ++i) add_R(i);
      for (int i = 2 * m - 1 - l; i <= 2 * m - 2; ++i) add_R(i);
    } else {
      add_T0(false);
      add_T0(true);
      for (int i = 0; i <= m - 2; ++i) {
        add_T(i, false);
        add_T(i, true);
      }
      for (int i = 1; i <= l - m; ++i) add_R(i);
      for (int i = 3 * m - 1 - l; i <= 2 * m - 2; ++i) add_R(i);
    }
  }
  require(s.size() == k * (t - 1), "quaternion_construct: internal size mismatch");
  return s;
}

}  // namespace regset
