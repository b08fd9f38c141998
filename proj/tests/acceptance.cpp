#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "nuengine/corpus.hpp"

using namespace nuengine;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

bool all_ok = true;

void criterion(int id, const std::string& title, double limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s > limit_s) o.fail("took longer than " + std::to_string(limit_s) + " s");
  all_ok = all_ok && o.ok;
  std::printf("%s [%d] %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), s,
              o.ok ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

bool is_abelian(const nu::FiniteGroup& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (g.commutator(a, b) != 0) return false;
  return true;
}

verify::Scope lemma_scope(const nu::NuGroup& n) {
  return n.order_g() <= 6 ? verify::Scope::exhaustive() : verify::Scope::sampled(10000, 42);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const auto entries = corpus::builtin_corpus();
  std::vector<std::pair<std::string, nu::NuGroup>> built;

  criterion(1, "nu(G) realized with |nu| = |G|^2 |H| for builtin entries of order <= 24", 60,
            [&](Outcome& o) {
              for (const auto& e : entries) {
                if (e.expected_order && *e.expected_order > 24) continue;
                nu::NuGroup n = nu::realize_nu(e.presentation);
                const Order m = n.order_g();
                if (n.nu().order() != m * m * n.h().order()) o.fail(e.name + ": order mismatch");
                built.emplace_back(e.name, std::move(n));
              }
              for (const auto& e : entries)
                if (e.expected_order && *e.expected_order > 24)
                  built.emplace_back(e.name, nu::realize_nu(e.presentation));
            });

  criterion(2, "direct tensor square presentation matches H for C2, C3, C4, C2xC2, S3", 120,
            [&](Outcome& o) {
              for (const char* name : {"C2", "C3", "C4", "C2xC2", "S3"}) {
                const auto e = corpus::find_entry(entries, name);
                if (!e) {
                  o.fail(std::string(name) + " missing");
                  continue;
                }
                const nu::NuGroup n = nu::realize_nu(e->presentation);
                const auto r = nu::phi_iso_check(n, nu::build_direct_tensor_square(n.base_group()));
                if (!r.homomorphism) o.fail(std::string(name) + ": map not certified");
                if (r.direct_order != n.h().order()) o.fail(std::string(name) + ": order differs");
              }
            });

  criterion(3, "basic identities, rho decomposition, Theta central in H, nu/Theta = G", 0,
            [&](Outcome& o) {
              for (const auto& [name, n] : built) {
                const auto s = lemma_scope(n);
                if (!verify::check_basic_identities(n, s).passed) o.fail(name + ": identities");
                if (!verify::check_rho_decomposition(n, s).passed) o.fail(name + ": rho");
                if (!verify::check_theta_centralizes(n).passed) o.fail(name + ": Theta vs H");
                if (!verify::check_theta_quotient(n).passed) o.fail(name + ": nu/Theta");
              }
            });

  criterion(4, "coset length with C = C_H(a) for every entry", 0, [&](Outcome& o) {
    for (const auto& [name, n] : built) {
      const nu::TensorSet t = nu::tensor_set(n);
      const auto w = verify::build_hypothesis_witness(n, t);
      const std::vector<Permutation> a{t.tensors[w.a]};
      if (!verify::check_coset_length(n, t, centralizer(n.h(), a)).passed) o.fail(name);
    }
  });

  criterion(5, "Theta <= U, utheta lemma and U1 proposition for |nu| <= 5000", 0, [&](Outcome& o) {
    for (const auto& [name, n] : built) {
      if (n.nu().order() > 5000) continue;
      const nu::TensorSet t = nu::tensor_set(n);
      const auto w = verify::build_hypothesis_witness(n, t);
      if (!w.theta_in_u) o.fail(name + ": Theta not in U");
      if (!verify::check_utheta_lemma(w, n, t, 42).passed) o.fail(name + ": utheta");
      if (!verify::check_proposition_u1(w, n, t).passed) o.fail(name + ": U1");
    }
  });

  criterion(6, "theorem A rows complete with formula_ok; abelian rows trivial; class comparison",
            0, [&](Outcome& o) {
              for (const auto& [name, n] : built) {
                const nu::TensorSet t = nu::tensor_set(n);
                const auto row = verify::theorem_a_row(name, n, t);
                if (!row.complete || !row.formula_ok) o.fail(name + ": row");
                if (is_abelian(n.base_group()) && (row.n != 1 || row.order_nu2 != 1))
                  o.fail(name + ": abelian row");
                if (n.order_g() <= 12 &&
                    !verify::check_commutator_vs_tensor_class(n, t, verify::Scope::exhaustive()).passed)
                  o.fail(name + ": class comparison");
              }
            });

  criterion(7, "Prufer truncations C3:C2 and C9:C2", 120, [&](Outcome& o) {
    const auto rows = verify::family_prufer_truncation(3, 1, 2);
    if (rows.size() != 2) return o.fail("expected two rows");
    const std::uint64_t derived[] = {3, 9};
    for (std::size_t i = 0; i < 2; ++i) {
      if (!rows[i].complete || !rows[i].max_tensor_class) o.fail(rows[i].name + ": incomplete");
      else if (*rows[i].max_tensor_class > 4) o.fail(rows[i].name + ": tensor class above 4");
      if (rows[i].order_g_derived != derived[i]) o.fail(rows[i].name + ": |G'|");
    }
  });

  criterion(8, "dihedral m = 3..15: commutator classes <= 2 and |G'| >= m/2", 60, [&](Outcome& o) {
    const auto rows = verify::family_dihedral(3, 15);
    if (rows.size() != 13) return o.fail("expected 13 rows");
    for (const auto& r : rows) {
      if (!r.complete) o.fail(r.name + ": incomplete");
      if (r.max_commutator_class > 2) o.fail(r.name + ": class");
      if (2 * r.order_g_derived < r.parameter) o.fail(r.name + ": |G'|");
    }
  });

  criterion(9, "verify and table runs with seed 42 are byte identical", 0, [&](Outcome& o) {
    const auto dir = std::filesystem::temp_directory_path();
    std::vector<std::string> outs;
    for (int run = 0; run < 2; ++run)
      for (const char* what : {"verify --all --suite all --seed 42", "table --family corpus --all --seed 42"}) {
        const std::string path = (dir / ("nuengine-acc-" + std::to_string(outs.size()) + ".json")).string();
        const std::string cmd = std::string(NU_ENGINE_BIN) + " " + what + " --out " + path;
        if (std::system(cmd.c_str()) != 0) o.fail(std::string("command failed: ") + what);
        outs.push_back(slurp(path));
      }
    if (outs[0].empty() || outs[1].empty()) o.fail("empty output");
    if (outs[0] != outs[2]) o.fail("verify output differs");
    if (outs[1] != outs[3]) o.fail("table output differs");
  });

  std::printf("%s\n", all_ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all_ok ? 0 : 1;
}
