#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "nuengine/corpus.hpp"

using namespace nuengine;

namespace {

enum Exit { kOk = 0, kParse = 2, kOverflow = 3, kInternal = 4 };

struct Config {
  std::string group;
  std::string corpus;
  bool all = false;
  std::size_t coset_cap = 50000;
  std::size_t order_cap = 32;
  std::uint64_t seed = 42;
  bool seed_given = false;
  std::string out;
  std::string format = "json";
  std::string nu_mode = "generator-triples";
  std::string suite = "all";
  std::string family = "corpus";
  std::string range = "3..15";
  std::uint64_t p = 3;
  std::string k = "1..2";
  unsigned jobs = 1;
  bool pretty = false;
  std::string timestamp = corpus::kFixedTimestamp;
};

struct Failure : std::runtime_error {
  Failure(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
  int code;
};

nu::Caps caps_of(const Config& c) {
  nu::Caps caps;
  caps.coset_cap = c.coset_cap;
  caps.order_cap = c.order_cap;
  return caps;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      auto v = std::stoull(s);
      return {v, v};
    }
    return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Failure(kParse, "bad range '" + s + "'");
  }
}

std::vector<corpus::CorpusEntry> select(const Config& c) {
  std::vector<corpus::CorpusEntry> pool =
      c.corpus.empty() ? corpus::builtin_corpus() : corpus::load_corpus(c.corpus);
  if (c.all) return pool;
  if (c.group.empty()) throw Failure(kParse, "no group selected (give a name or --all)");
  auto e = corpus::find_entry(pool, c.group);
  if (!e) throw Failure(kParse, "unknown group '" + c.group + "'");
  return {*e};
}

// Runs f on every index with up to `jobs` threads; results keep index order.
template <typename T>
std::vector<T> run_parallel(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

corpus::ReportDocument new_document(const Config& c) {
  corpus::ReportDocument doc;
  doc.timestamp = c.timestamp;
  doc.caps.coset_cap = c.coset_cap;
  doc.caps.order_cap = c.order_cap;
  doc.seed = c.seed;
  return doc;
}

void emit(const corpus::ReportDocument& doc, const Config& c) {
  const auto fmt = corpus::format_from_string(c.format);
  if (!c.out.empty()) {
    corpus::write_report(doc, fmt, c.out);
    return;
  }
  std::cout << (fmt == corpus::Format::kJson ? corpus::to_json(doc) : corpus::to_csv(doc));
}

void check_expected(const corpus::CorpusEntry& e, std::size_t order) {
  if (e.expected_order && *e.expected_order != order)
    throw Failure(kInternal, e.name + " enumerates to " + std::to_string(order) + ", expected " +
                                 std::to_string(*e.expected_order));
}

int cmd_build(const Config& c) {
  auto entries = select(c);
  const auto mode = nu::nu_mode_from_string(c.nu_mode);
  auto lines = run_parallel<nlohmann::json>(entries.size(), c.jobs, [&](std::size_t i) {
    const auto& e = entries[i];
    const nu::NuGroup n = nu::realize_nu(e.presentation, caps_of(c), mode);
    check_expected(e, n.order_g());
    const nu::TensorSet t = nu::tensor_set(n);
    return nlohmann::json{{"name", e.name},
                          {"order_G", n.order_g()},
                          {"order_nu", n.nu().order()},
                          {"order_H", n.h().order()},
                          {"order_theta", n.theta().order()},
                          {"tensors", t.tensors.size()},
                          {"mode", nu::to_string(n.mode())},
                          {"rebuilt", n.rebuilt()},
                          {"action", n.action()}};
  });
  for (const auto& j : lines) {
    if (c.pretty) {
      std::cout << j["name"].get<std::string>() << ": |G| = " << j["order_G"]
                << ", |nu| = " << j["order_nu"] << ", |H| = " << j["order_H"]
                << ", |Theta| = " << j["order_theta"] << ", |T| = " << j["tensors"]
                << ", mode " << j["mode"].get<std::string>()
                << (j["rebuilt"].get<bool>() ? " (rebuilt)" : "") << "\n";
    } else {
      std::cout << j.dump() << "\n";
    }
  }
  return kOk;
}

struct VerifyResult {
  std::vector<verify::CheckReport> checks;
  std::optional<verify::TheoremARow> row;
};

VerifyResult verify_entry(const corpus::CorpusEntry& e, const Config& c) {
  const nu::NuGroup n =
      nu::realize_nu(e.presentation, caps_of(c), nu::nu_mode_from_string(c.nu_mode));
  check_expected(e, n.order_g());
  const nu::TensorSet t = nu::tensor_set(n);
  const std::string& s = c.suite;
  auto on = [&](const char* name) { return s == "all" || s == name; };
  auto scope = [&](std::uint64_t space) {
    return c.seed_given ? verify::Scope::sampled(verify::kSampleCount, c.seed)
                        : verify::Scope::for_space(space, c.seed);
  };
  const std::uint64_t m = n.order_g(), nu_order = n.nu().order();
  VerifyResult r;
  auto add = [&](verify::CheckReport rep) {
    rep.group = e.name;
    r.checks.push_back(std::move(rep));
  };
  if (on("identities")) add(verify::check_basic_identities(n, scope(m * m * m * m)));
  if (on("theta")) {
    add(verify::check_theta_centralizes(n));
    add(verify::check_theta_quotient(n));
  }
  if (on("rho")) add(verify::check_rho_decomposition(n, scope(std::max(nu_order * nu_order, m * m * nu_order))));
  if (on("coset") || on("hypothesis") || on("proposition")) {
    const verify::HypothesisWitness w = verify::build_hypothesis_witness(n, t);
    if (on("coset"))
      add(verify::check_coset_length(n, t, centralizer(n.h(), std::vector<Permutation>{t.tensors[w.a]})));
    if (on("hypothesis")) {
      add(verify::check_hypothesis(n, t, w));
      add(verify::check_utheta_lemma(w, n, t, c.seed));
    }
    if (on("proposition")) add(verify::check_proposition_u1(w, n, t));
  }
  if (on("theorem-a")) {
    r.row = verify::theorem_a_row(e.name, n, t);
    add(verify::check_commutator_vs_tensor_class(n, t, verify::Scope::for_space(m * m, c.seed)));
    add(verify::check_comm_finiteness(n, t));
  }
  return r;
}

int cmd_verify(const Config& c) {
  static const std::set<std::string> suites{"identities", "theta",       "rho",       "coset",
                                            "hypothesis", "proposition", "theorem-a", "all"};
  if (!suites.count(c.suite)) throw Failure(kParse, "unknown suite '" + c.suite + "'");
  auto entries = select(c);
  auto results = run_parallel<VerifyResult>(entries.size(), c.jobs,
                                            [&](std::size_t i) { return verify_entry(entries[i], c); });
  corpus::ReportDocument doc = new_document(c);
  bool ok = true;
  for (auto& r : results) {
    for (auto& ch : r.checks) {
      ok = ok && ch.passed;
      doc.checks.push_back(std::move(ch));
    }
    if (r.row) doc.rows.push_back(std::move(*r.row));
  }
  doc.canonicalize();
  if (c.pretty) {
    for (const auto& ch : doc.checks)
      std::cout << ch.group << " " << ch.check << ": " << (ch.passed ? "pass" : "FAIL") << " ("
                << verify::to_string(ch.scope) << ", " << ch.tested << " tested)\n";
    if (!c.out.empty()) corpus::write_report(doc, corpus::format_from_string(c.format), c.out);
  } else {
    emit(doc, c);
  }
  return ok ? kOk : kInternal;
}

int cmd_table(const Config& c) {
  corpus::ReportDocument doc = new_document(c);
  std::size_t complete = 0, total = 0;
  if (c.family == "dihedral") {
    auto [lo, hi] = parse_range(c.range);
    doc.family = verify::family_dihedral(lo, hi, caps_of(c));
  } else if (c.family == "prufer") {
    auto [lo, hi] = parse_range(c.k);
    doc.family = verify::family_prufer_truncation(c.p, lo, hi, caps_of(c));
  } else if (c.family == "corpus") {
    Config sel = c;
    if (sel.group.empty()) sel.all = true;
    auto entries = select(sel);
    doc.rows = run_parallel<verify::TheoremARow>(entries.size(), c.jobs, [&](std::size_t i) {
      return verify::theorem_a_row(entries[i].name, entries[i].presentation, caps_of(c));
    });
  } else {
    throw Failure(kParse, "unknown family '" + c.family + "'");
  }
  for (const auto& r : doc.family) complete += r.complete, ++total;
  for (const auto& r : doc.rows) complete += r.complete, ++total;
  doc.canonicalize();
  if (c.pretty && c.out.empty()) {
    std::cout << corpus::to_csv(doc);
  } else {
    emit(doc, c);
  }
  return complete > 0 || total == 0 ? kOk : kOverflow;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nu-engine: non-abelian tensor squares through nu(G)"};
  app.require_subcommand(1);
  Config c;
  if (const char* env = std::getenv("NU_ENGINE_CAP")) {
    try {
      c.coset_cap = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "NU_ENGINE_CAP is not a number\n";
      return kParse;
    }
  }

  auto common = [&c](CLI::App* sub) {
    sub->add_option("--corpus", c.corpus, "presentation file");
    sub->add_flag("--all", c.all, "every entry of the corpus");
    sub->add_option("--coset-cap", c.coset_cap, "coset enumeration cap");
    sub->add_option("--order-cap", c.order_cap, "largest |G| for the nu pipeline");
    sub->add_option("--seed", c.seed, "sampling seed");
    sub->add_option("--out", c.out, "output file");
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--nu-mode", c.nu_mode, "generator-triples or element-triples")
        ->check(CLI::IsMember({"generator-triples", "element-triples"}));
    sub->add_option("--jobs", c.jobs, "groups processed in parallel");
    sub->add_flag("--pretty", c.pretty, "human-readable output");
    sub->add_option("--timestamp", c.timestamp, "timestamp recorded in reports");
  };
  auto* build = app.add_subcommand("build", "realize nu(G) and print a summary");
  build->add_option("group", c.group, "group name");
  common(build);
  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("group", c.group, "group name");
  ver->add_option("--suite", c.suite,
                  "identities|theta|rho|coset|hypothesis|proposition|theorem-a|all");
  common(ver);
  auto* table = app.add_subcommand("table", "family and corpus tables");
  table->add_option("group", c.group, "group name (corpus family)");
  table->add_option("--family", c.family, "dihedral|prufer|corpus");
  table->add_option("--range", c.range, "dihedral m range, e.g. 3..8");
  table->add_option("--p", c.p, "odd prime for the prufer family");
  table->add_option("--k", c.k, "exponent range for the prufer family");
  common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  for (auto* sub : {build, ver, table})
    if (sub->parsed() && sub->count("--seed")) c.seed_given = true;

  try {
    if (build->parsed()) return cmd_build(c);
    if (ver->parsed()) return cmd_verify(c);
    return cmd_table(c);
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const fp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const corpus::CorpusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const fp::EnumerationOverflow& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const nu::CapExceeded& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kInternal;
  }
}
