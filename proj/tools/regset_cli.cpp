// Command-line front end: verification, search, closed-form constructions,
// census runs and the built-in worked examples.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "regset/cover.hpp"
#include "regset/fieldcodes.hpp"
#include "regset/json_io.hpp"
#include "regset/regular.hpp"
#include "regset/special.hpp"
#include "regset/spectral.hpp"

using nlohmann::json;
using namespace regset;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  bool json_out = false;
  int workers = 1;
  int oracle_bound = 64;
  unsigned seed = 12345;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string inline_or_file(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return slurp(arg.substr(1));
  return arg;
}

// Descriptor grammar: factor ("*" factor)*, where factor is one of
// cyclic:N, dihedral:N, quaternion:N, elementary:P:N, or @group.json.
FiniteGroup parse_group(const std::string& desc, const GlobalOpts& g) {
  std::vector<std::string> factors;
  std::string cur;
  for (char c : desc) {
    if (c == '*') {
      factors.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  factors.push_back(cur);

  std::optional<FiniteGroup> out;
  for (const std::string& f : factors) {
    std::optional<FiniteGroup> piece;
    if (!f.empty() && f[0] == '@') {
      piece = group_from_json(slurp(f.substr(1)), TableCheck::sampled, g.seed);
    } else {
      auto colon = f.find(':');
      require(colon != std::string::npos, "bad group descriptor: " + f);
      std::string kind = f.substr(0, colon);
      std::string rest = f.substr(colon + 1);
      if (kind == "cyclic") {
        piece = FiniteGroup::cyclic(std::stoi(rest));
      } else if (kind == "dihedral") {
        piece = FiniteGroup::dihedral(std::stoi(rest));
      } else if (kind == "quaternion") {
        piece = FiniteGroup::generalized_quaternion(std::stoi(rest));
      } else if (kind == "elementary") {
        auto c2 = rest.find(':');
        require(c2 != std::string::npos, "elementary descriptor needs p and n: " + f);
        piece = FiniteGroup::elementary_abelian(std::stoi(rest.substr(0, c2)),
                                                std::stoi(rest.substr(c2 + 1)));
      } else {
        throw error("unknown group kind: " + kind);
      }
    }
    out = out ? FiniteGroup::direct_product(*out, *piece) : *piece;
  }
  return *out;
}

ElementSet parse_set(const std::string& arg, int parent_order) {
  return element_set_from_json(inline_or_file(arg), parent_order);
}

std::string set_text(const FiniteGroup& g, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (int m : s.members()) {
    if (!first) out += ", ";
    out += g.label(m);
    first = false;
  }
  return out + "}";
}

void emit_certificate(const RegularCertificate& cert, const GlobalOpts& g) {
  if (g.json_out) {
    std::cout << certificate_to_json(cert) << "\n";
  } else {
    std::cout << "verified (" << cert.a << "," << cert.b << ")-regular set "
              << set_text(cert.graph.group(), cert.set) << " in Cay(G, "
              << set_text(cert.graph.group(), cert.graph.connection()) << ")\n";
  }
}

// ---------------------------------------------------------------- verify

int cmd_verify(const GlobalOpts& g, const std::string& group_desc, const std::string& s_arg,
               const std::string& d_arg, int a, int b) {
  FiniteGroup grp = parse_group(group_desc, g);
  CayleyGraph graph = build_cayley(grp, parse_set(s_arg, grp.order()));
  ElementSet d = parse_set(d_arg, grp.order());
  RegularCheck check = check_regular_set(graph, d, a, b);
  if (check.certificate) {
    emit_certificate(*check.certificate, g);
    return kExitOk;
  }
  if (g.json_out) {
    std::cout << json{{"verified", false},
                      {"failing_vertex", check.failing_vertex},
                      {"failing_count", check.failing_count}}
                     .dump()
              << "\n";
  } else {
    std::cout << "not (" << a << "," << b << ")-regular: vertex " << check.failing_vertex
              << " has " << check.failing_count << " neighbours in D\n";
  }
  return kExitNegative;
}

// ----------------------------------------------------------- search etc.

SubgroupInfo subgroup_from_gens(const FiniteGroup& g, const std::string& gens_arg) {
  return generated_subgroup(g, parse_set(gens_arg, g.order()));
}

int emit_search_result(const FiniteGroup& grp, const SubgroupInfo& h, int k,
                       const std::optional<ElementSet>& s, const GlobalOpts& g) {
  if (!s) {
    if (g.json_out)
      std::cout << json{{"exists", false}}.dump() << "\n";
    else
      std::cout << "none\n";
    return kExitNegative;
  }
  CayleyGraph graph = build_cayley(grp, *s);
  auto cert = verify_regular_set(graph, h.elements, 0, k);
  require(cert.has_value(), "internal: witness failed verification");
  if (g.json_out) {
    json out = json::parse(certificate_to_json(*cert));
    out["exists"] = true;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "S = " << set_text(grp, *s) << "\n";
    emit_certificate(*cert, g);
  }
  return kExitOk;
}

int cmd_search(const GlobalOpts& g, const std::string& group_desc, const std::string& gens,
               int k) {
  FiniteGroup grp = parse_group(group_desc, g);
  SubgroupInfo h = subgroup_from_gens(grp, gens);
  require(grp.order() <= g.oracle_bound,
          "search: group order exceeds --oracle-bound; raise it explicitly");
  return emit_search_result(grp, h, k, search_connection_set(grp, h, k), g);
}

int cmd_construct_normal(const GlobalOpts& g, const std::string& group_desc,
                         const std::string& gens, int k) {
  FiniteGroup grp = parse_group(group_desc, g);
  SubgroupInfo h = subgroup_from_gens(grp, gens);
  std::optional<ElementSet> s;
  if (k % 2 == 0)
    s = construct_normal_even(grp, h, k);
  else
    s = construct_normal_odd(grp, h, k);
  return emit_search_result(grp, h, k, s, g);
}

// -------------------------------------------------- dihedral / quaternion

int emit_classification(bool exists, const std::optional<ElementSet>& witness,
                        const FiniteGroup* grp, const ElementSet* h_elems, int k,
                        const GlobalOpts& g) {
  json out{{"exists", exists}};
  if (witness && grp && h_elems) {
    CayleyGraph graph = build_cayley(*grp, *witness);
    auto cert = verify_regular_set(graph, *h_elems, 0, k);
    require(cert.has_value(), "internal: constructed witness failed verification");
    out["S"] = witness->members();
  }
  if (g.json_out) {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (exists ? "yes" : "no") << "\n";
    if (witness && grp) std::cout << "S = " << set_text(*grp, *witness) << "\n";
  }
  return exists ? kExitOk : kExitNegative;
}

int cmd_dihedral(const GlobalOpts& g, int n, int t, int s, int k, bool construct) {
  DihedralSubgroupSpec spec;
  spec.n = n;
  spec.t = t;
  spec.kind = s >= 0 ? SubgroupKind::mixed : SubgroupKind::cyclic;
  spec.s = s >= 0 ? s : 0;
  bool exists = dihedral_classify(spec, k);
  std::optional<ElementSet> witness;
  std::optional<FiniteGroup> grp;
  std::optional<ElementSet> h;
  if (construct && exists) {
    witness = dihedral_construct(spec, k);
    grp = FiniteGroup::dihedral(n);
    h = dihedral_subgroup_elements(spec);
  }
  return emit_classification(exists, witness, grp ? &*grp : nullptr, h ? &*h : nullptr, k, g);
}

int cmd_quaternion(const GlobalOpts& g, int n, int t, int s, int k, bool construct) {
  QuaternionSubgroupSpec spec;
  spec.n = n;
  spec.t = t;
  spec.kind = s >= 0 ? SubgroupKind::mixed : SubgroupKind::cyclic;
  spec.s = s >= 0 ? s : 0;
  bool exists = quaternion_classify(spec, k);
  std::optional<ElementSet> witness;
  std::optional<FiniteGroup> grp;
  std::optional<ElementSet> h;
  if (construct && exists) {
    witness = quaternion_construct(spec, k);
    grp = FiniteGroup::generalized_quaternion(n);
    h = quaternion_subgroup_elements(spec);
  }
  return emit_classification(exists, witness, grp ? &*grp : nullptr, h ? &*h : nullptr, k, g);
}

int cmd_abelian(const GlobalOpts& g, const std::string& group_desc, const std::string& gens,
                int k) {
  FiniteGroup grp = parse_group(group_desc, g);
  require(grp.is_abelian(), "abelian: group is not abelian");
  SubgroupInfo h = subgroup_from_gens(grp, gens);
  bool exists = abelian_sylow2_criterion(grp, h, k);
  if (g.json_out)
    std::cout << json{{"exists", exists}}.dump() << "\n";
  else
    std::cout << (exists ? "yes" : "no") << "\n";
  return exists ? kExitOk : kExitNegative;
}

// -------------------------------------------------------- code families

json basis_to_json(const FpMatrix& basis) {
  json cols = json::array();
  for (int c = 0; c < basis.cols(); ++c) {
    json v = json::array();
    for (int r = 0; r < basis.rows(); ++r) v.push_back(basis.at(r, c));
    cols.push_back(std::move(v));
  }
  return cols;
}

int emit_code(const std::optional<NullspaceCode>& code, bool do_verify,
              const GlobalOpts& g) {
  if (!code) {
    if (g.json_out)
      std::cout << json{{"exists", false}}.dump() << "\n";
    else
      std::cout << "none\n";
    return kExitNegative;
  }
  if (do_verify) {
    ElementSet w = code_as_element_set(*code);
    CayleyGraph graph = code->p == 2 ? hypercube_graph(code->n)
                                     : lee_torus_graph(code->p, code->n);
    require(verify_regular_set(graph, w, 0, code->k).has_value(),
            "internal: code failed full verification");
  }
  if (g.json_out) {
    std::cout << json{{"exists", true},
                      {"t", code->t},
                      {"size", code->size},
                      {"basis", basis_to_json(code->basis)},
                      {"verified", do_verify}}
                     .dump()
              << "\n";
  } else {
    std::cout << "exists: t=" << code->t << " |W|=" << code->size
              << (do_verify ? " (fully verified)" : "") << "\n";
  }
  return kExitOk;
}

int cmd_hypercube(const GlobalOpts& g, int n, int k, bool do_verify) {
  return emit_code(hypercube_regular_set(n, k), do_verify, g);
}

int cmd_lee(const GlobalOpts& g, int p, int n, int k, bool do_verify) {
  return emit_code(lee_regular_set(p, n, k), do_verify, g);
}

// ------------------------------------------------------------- equitable

int cmd_equitable(const GlobalOpts& g, const std::string& group_desc,
                  const std::string& s_arg, const std::string& partition_arg) {
  FiniteGroup grp = parse_group(group_desc, g);
  CayleyGraph graph = build_cayley(grp, parse_set(s_arg, grp.order()));
  json pj = json::parse(inline_or_file(partition_arg));
  require(pj.is_array(), "partition must be an array of vertex arrays");
  std::vector<ElementSet> blocks;
  for (const auto& b : pj) blocks.emplace_back(grp.order(), b.get<std::vector<int>>());
  auto pi = VertexPartition::from_blocks(grp.order(), std::move(blocks));
  auto q = quotient_matrix(graph, pi);
  if (!q) {
    if (g.json_out)
      std::cout << json{{"equitable", false}}.dump() << "\n";
    else
      std::cout << "partition is not equitable\n";
    return kExitNegative;
  }
  IntPoly poly = char_poly(*q);
  json qm = json::array();
  for (int i = 0; i < q->r; ++i) {
    json row = json::array();
    for (int j = 0; j < q->r; ++j) row.push_back(q->at(i, j));
    qm.push_back(std::move(row));
  }
  json coeffs = json::array();
  for (const BigInt& c : poly) coeffs.push_back(c.str());
  if (g.json_out) {
    std::cout << json{{"equitable", true}, {"quotient", qm}, {"char_poly", coeffs}}.dump()
              << "\n";
  } else {
    std::cout << "equitable; quotient = " << qm.dump() << "\nchar poly coefficients "
              << coeffs.dump() << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------- cover

int cmd_cover(const GlobalOpts& g, const std::string& group_desc, const std::string& s_arg,
              int k, const std::string& partition_arg, int target_order,
              const std::string& assignment_arg) {
  FiniteGroup grp = parse_group(group_desc, g);
  CayleyGraph graph = build_cayley(grp, parse_set(s_arg, grp.order()));
  if (!partition_arg.empty()) {
    json pj = json::parse(inline_or_file(partition_arg));
    std::vector<ElementSet> blocks;
    for (const auto& b : pj) blocks.emplace_back(grp.order(), b.get<std::vector<int>>());
    auto f = cover_from_partition(graph, blocks, k);
    if (!f) {
      if (g.json_out)
        std::cout << json{{"cover", false}}.dump() << "\n";
      else
        std::cout << "blocks are not (0," << k << ")-regular sets\n";
      return kExitNegative;
    }
    if (g.json_out)
      std::cout << covering_map_to_json(*f) << "\n";
    else
      std::cout << "verified " << graph.num_vertices() / f->target.num_vertices()
                << "-fold " << k << "-cover of K_" << f->target.num_vertices() << "\n";
    return kExitOk;
  }
  require(target_order > 0 && !assignment_arg.empty(),
          "cover: need either --partition or --target-order with --assignment");
  json aj = json::parse(inline_or_file(assignment_arg));
  CoveringMap f(graph, SimpleGraph::complete(target_order), aj.get<std::vector<int>>(), k);
  bool ok = verify_k_covering(f);
  if (g.json_out)
    std::cout << json{{"cover", ok}}.dump() << "\n";
  else
    std::cout << (ok ? "valid" : "invalid") << " " << k << "-covering\n";
  return ok ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- census

struct CensusRow {
  std::string family;
  int n = 0;
  std::string subgroup;
  int h_order = 0;
  int index = 0;
  bool normal = false;
  int k = 0;
  bool exists = false;
  std::string method;
  std::string witness;
};

std::string witness_string(const std::optional<ElementSet>& s) {
  if (!s) return "";
  std::string out;
  for (int m : s->members()) {
    if (!out.empty()) out += ";";
    out += std::to_string(m);
  }
  return out;
}

struct CensusTask {
  std::string family;
  int n = 0;
  std::string subgroup_desc;
  int k = 0;
};

CensusRow run_census_task(const CensusTask& t, const GlobalOpts& g) {
  CensusRow row;
  row.family = t.family;
  row.n = t.n;
  row.subgroup = t.subgroup_desc;
  row.k = t.k;
  row.method = "closed_form";

  std::optional<FiniteGroup> grp;
  std::optional<SubgroupInfo> h;
  std::optional<ElementSet> witness;

  // subgroup_desc is cyclic:t or mixed:t:s
  std::istringstream ss(t.subgroup_desc);
  std::string kind;
  std::getline(ss, kind, ':');
  int tt = 0, sv = 0;
  ss >> tt;
  if (ss.peek() == ':') {
    ss.get();
    ss >> sv;
  }

  if (t.family == "dihedral") {
    DihedralSubgroupSpec spec;
    spec.n = t.n;
    spec.t = tt;
    spec.kind = kind == "mixed" ? SubgroupKind::mixed : SubgroupKind::cyclic;
    spec.s = sv;
    grp = FiniteGroup::dihedral(t.n);
    h = subgroup_from_elements(*grp, dihedral_subgroup_elements(spec));
    row.exists = dihedral_classify(spec, t.k);
    if (row.exists) witness = dihedral_construct(spec, t.k);
  } else if (t.family == "quaternion") {
    QuaternionSubgroupSpec spec;
    spec.n = t.n;
    spec.t = tt;
    spec.kind = kind == "mixed" ? SubgroupKind::mixed : SubgroupKind::cyclic;
    spec.s = sv;
    grp = FiniteGroup::generalized_quaternion(t.n);
    h = subgroup_from_elements(*grp, quaternion_subgroup_elements(spec));
    row.exists = quaternion_classify(spec, t.k);
    if (row.exists) witness = quaternion_construct(spec, t.k);
  } else if (t.family == "cyclic") {
    grp = FiniteGroup::cyclic(t.n);
    h = generated_subgroup(*grp, ElementSet(t.n, {tt % t.n}));
    if (t.k % 2 == 0) {
      row.exists = true;
      witness = construct_normal_even(*grp, *h, t.k);
    } else {
      row.exists = odd_criterion(*grp, *h);
      if (row.exists) {
        if (h->elements.size() == 1) {
          ElementSet s = ElementSet::full(t.n);
          s.erase(grp->identity());
          witness = s;
        } else {
          witness = construct_normal_odd(*grp, *h, t.k);
        }
      }
    }
  } else {
    throw error("census: unknown family " + t.family);
  }

  row.h_order = h->elements.size();
  row.index = h->index;
  row.normal = h->normal;
  if (witness) {
    CayleyGraph graph = build_cayley(*grp, *witness);
    require(verify_regular_set(graph, h->elements, 0, t.k).has_value(),
            "census: closed-form witness failed verification");
  }
  row.witness = witness_string(witness);

  if (grp->order() <= g.oracle_bound) {
    bool oracle = search_connection_set(*grp, *h, t.k).has_value();
    if (oracle != row.exists)
      throw error("census: closed form disagrees with search on " + t.family + " n=" +
                  std::to_string(t.n) + " " + t.subgroup_desc + " k=" + std::to_string(t.k));
  }
  return row;
}

int cmd_census(const GlobalOpts& g, const std::string& family, int n_min, int n_max,
               int k_max) {
  std::vector<CensusTask> tasks;
  auto divisors = [](int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) out.push_back(d);
    return out;
  };
  for (int n = n_min; n <= n_max; ++n) {
    if (family == "dihedral") {
      if (n < 3) continue;
      for (int t : divisors(n)) {
        int ord = n / t;
        for (int k = 1; k <= std::min(ord, k_max); ++k)
          tasks.push_back({family, n, "cyclic:" + std::to_string(t), k});
        if (t >= 2)
          for (int s = 0; s < t; ++s)
            for (int k = 1; k <= std::min(2 * n / t, k_max); ++k)
              tasks.push_back(
                  {family, n, "mixed:" + std::to_string(t) + ":" + std::to_string(s), k});
      }
    } else if (family == "quaternion") {
      if (n < 2) continue;
      for (int t : divisors(2 * n)) {
        int ord = 2 * n / t;  // cyclic subgroups are always proper
        for (int k = 1; k <= std::min(ord, k_max); ++k)
          tasks.push_back({family, n, "cyclic:" + std::to_string(t), k});
      }
      for (int t : divisors(n))
        if (t >= 2)
          for (int s = 0; s < t; ++s)
            for (int k = 1; k <= std::min(4 * n / t, k_max); ++k)
              tasks.push_back(
                  {family, n, "mixed:" + std::to_string(t) + ":" + std::to_string(s), k});
    } else if (family == "cyclic") {
      for (int t : divisors(n)) {
        if (t == 1) continue;  // H = G
        int ord = n / t;
        for (int k = 1; k <= std::min(ord, k_max); ++k)
          tasks.push_back({family, n, "cyclic:" + std::to_string(t), k});
      }
    } else {
      throw error("census: unknown family " + family);
    }
  }

  std::vector<CensusRow> rows(tasks.size());
  int workers = std::max(1, g.workers);
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex err_mu;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (size_t i = w; i < tasks.size(); i += workers) {
        try {
          rows[i] = run_census_task(tasks[i], g);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);

  std::cout << "# regset census v1\n";
  std::cout << "family,n,subgroup,order,index,normal,k,exists,method,witness\n";
  for (const CensusRow& r : rows) {
    std::cout << r.family << "," << r.n << "," << r.subgroup << "," << r.h_order << ","
              << r.index << "," << (r.normal ? 1 : 0) << "," << r.k << ","
              << (r.exists ? 1 : 0) << "," << r.method << "," << r.witness << "\n";
  }
  return kExitOk;
}

// -------------------------------------------------------- paper-examples

// The 16 code words of the worked hypercube example, written as the rows of
// the 6 x 16 coordinate table (row i = coordinate i of all 16 words).
const char* const kExampleRows[6] = {
    "0000000011111111", "0000111100001111", "0011110000111100",
    "0101010101010101", "0101101010100101", "0110100110010110",
};

std::vector<int> example_code_words() {
  std::vector<int> out;
  for (int c = 0; c < 16; ++c) {
    int w = 0;
    for (int r = 0; r < 6; ++r)
      if (kExampleRows[r][c] == '1') w |= 1 << r;
    out.push_back(w);
  }
  return out;
}

int cmd_paper_examples(const GlobalOpts& g) {
  json items = json::array();
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    items.push_back({{"name", name}, {"pass", ok}});
    if (!g.json_out) std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
    if (!ok) ++failures;
  };

  // 1: the small cycle example.
  {
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    CayleyGraph c4 = build_cayley(z4, ElementSet(4, {1, 3}));
    bool ok = verify_regular_set(c4, ElementSet(4, {0, 2}), 0, 2).has_value() &&
              !verify_regular_set(c4, ElementSet(4, {0, 2}), 0, 1).has_value();
    report("cycle C4: {0,2} is (0,2)- but not (0,1)-regular", ok);
  }

  // 2: the hypercube Q6 code from the printed check matrix.
  {
    bool ok = false;
    auto code = hypercube_regular_set(6, 2);
    if (code && code->size == 16) {
      FpMatrix m = FpMatrix::from_rows(2, {{0, 1, 1, 0, 1, 1}, {1, 0, 1, 1, 0, 1}});
      CayleyGraph q6 = hypercube_graph(6);
      auto cert = verify_user_check_matrix(q6, m, 2);
      if (cert) {
        ElementSet expected(64, example_code_words());
        ok = cert->set == expected;
      }
    }
    report("hypercube Q6: 16-word (0,2)-regular code matches the printed table", ok);
  }

  // 3: the 2-dimensional Lee code over F5.
  {
    bool ok = false;
    auto code = lee_regular_set(5, 2, 1);
    if (code) {
      ElementSet w = code_as_element_set(*code);
      ok = verify_regular_set(lee_torus_graph(5, 2), w, 0, 1).has_value();
    }
    report("Lee torus C5^2: perfect code from the null-space construction", ok);
  }

  // 4: the coset partition of Q6 is (-2)-equitable.
  {
    bool ok = false;
    auto code = hypercube_regular_set(6, 2);
    if (code) {
      FiniteGroup z26 = FiniteGroup::elementary_abelian(2, 6);
      CayleyGraph q6 = hypercube_graph(6);
      std::vector<int> words(code->words.begin(), code->words.end());
      SubgroupInfo w = subgroup_from_elements(z26, ElementSet(64, words));
      VertexPartition pi = coset_equitable_partition(q6, w, 2);
      ok = is_mu_equitable(q6, pi, -2);
    }
    report("hypercube Q6: coset partition of the code is (-2)-equitable", ok);
  }

  if (g.json_out) std::cout << json{{"items", items}, {"failures", failures}}.dump() << "\n";
  return failures == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular set toolkit for Cayley graphs of finite groups"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json_out, "machine-readable output");
  app.add_option("--workers", g.workers, "worker threads for census runs");
  app.add_option("--oracle-bound", g.oracle_bound,
                 "max group order for exhaustive search cross-checks");
  app.add_option("--seed", g.seed, "seed for sampled table checks");

  std::string group_desc, s_arg, d_arg, gens, partition_arg, assignment_arg, family;
  int a = 0, b = 1, k = 1, n = 0, t = 1, s = -1, p = 3;
  int n_min = 3, n_max = 6, k_max = 4, target_order = 0;
  bool construct = false, do_verify = false;

  auto* verify = app.add_subcommand("verify", "verify an (a,b)-regular set");
  verify->add_option("--group", group_desc)->required();
  verify->add_option("--s", s_arg, "connection set (JSON array or @file)")->required();
  verify->add_option("--d", d_arg, "candidate set (JSON array or @file)")->required();
  verify->add_option("--a", a)->required();
  verify->add_option("--b", b)->required();

  auto* search = app.add_subcommand("search", "exhaustive connection-set search");
  search->add_option("--group", group_desc)->required();
  search->add_option("--gens", gens, "subgroup generators (JSON array)")->required();
  search->add_option("--k", k)->required();

  auto* cnormal = app.add_subcommand("construct-normal", "normal-subgroup construction");
  cnormal->add_option("--group", group_desc)->required();
  cnormal->add_option("--gens", gens)->required();
  cnormal->add_option("--k", k)->required();

  auto* dih = app.add_subcommand("dihedral", "dihedral subgroup classification");
  dih->add_option("--n", n)->required();
  dih->add_option("--t", t)->required();
  dih->add_option("--s", s, "reflection offset (mixed subgroups only)");
  dih->add_option("--k", k)->required();
  dih->add_flag("--construct", construct);

  auto* quat = app.add_subcommand("quaternion", "quaternion subgroup classification");
  quat->add_option("--n", n)->required();
  quat->add_option("--t", t)->required();
  quat->add_option("--s", s, "reflection offset (mixed subgroups only)");
  quat->add_option("--k", k)->required();
  quat->add_flag("--construct", construct);

  auto* abel = app.add_subcommand("abelian", "abelian odd-k criterion");
  abel->add_option("--group", group_desc)->required();
  abel->add_option("--gens", gens)->required();
  abel->add_option("--k", k)->required();

  auto* hyper = app.add_subcommand("hypercube", "hypercube code construction");
  hyper->add_option("--n", n)->required();
  hyper->add_option("--k", k)->required();
  hyper->add_flag("--verify", do_verify, "full graph verification");

  auto* lee = app.add_subcommand("lee", "Lee torus code construction");
  lee->add_option("--p", p)->required();
  lee->add_option("--n", n)->required();
  lee->add_option("--k", k)->required();
  lee->add_flag("--verify", do_verify);

  auto* equit = app.add_subcommand("equitable", "quotient matrix of a partition");
  equit->add_option("--group", group_desc)->required();
  equit->add_option("--s", s_arg)->required();
  equit->add_option("--partition", partition_arg)->required();

  auto* cover = app.add_subcommand("cover", "k-covering verification");
  cover->add_option("--group", group_desc)->required();
  cover->add_option("--s", s_arg)->required();
  cover->add_option("--k", k)->required();
  cover->add_option("--partition", partition_arg);
  cover->add_option("--target-order", target_order);
  cover->add_option("--assignment", assignment_arg);

  auto* census = app.add_subcommand("census", "classification census (CSV)");
  census->add_option("--family", family, "dihedral|quaternion|cyclic")->required();
  census->add_option("--n-min", n_min);
  census->add_option("--n-max", n_max);
  census->add_option("--k-max", k_max);

  auto* paper = app.add_subcommand("paper-examples", "run the built-in worked examples");
  (void)paper;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(g, group_desc, s_arg, d_arg, a, b);
    if (search->parsed()) return cmd_search(g, group_desc, gens, k);
    if (cnormal->parsed()) return cmd_construct_normal(g, group_desc, gens, k);
    if (dih->parsed()) return cmd_dihedral(g, n, t, s, k, construct);
    if (quat->parsed()) return cmd_quaternion(g, n, t, s, k, construct);
    if (abel->parsed()) return cmd_abelian(g, group_desc, gens, k);
    if (hyper->parsed()) return cmd_hypercube(g, n, k, do_verify);
    if (lee->parsed()) return cmd_lee(g, p, n, k, do_verify);
    if (equit->parsed()) return cmd_equitable(g, group_desc, s_arg, partition_arg);
    if (cover->parsed())
      return cmd_cover(g, group_desc, s_arg, k, partition_arg, target_order, assignment_arg);
    if (census->parsed()) return cmd_census(g, family, n_min, n_max, k_max);
    if (paper->parsed()) return cmd_paper_examples(g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
