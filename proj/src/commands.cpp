#include "commands.hpp"

#include <chrono>

#include "subgyro.hpp"
#include "subset_algebra.hpp"

namespace gyro {

namespace {

using nlohmann::json;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

json skeleton(const std::string& command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

json verdict_json(const InclusionVerdict& v) {
  json j = {{"holds", v.holds}, {"step", v.step}};
  if (v.witness)
    j["witness"] = *v.witness;
  else
    j["witness"] = nullptr;
  return j;
}

json subgyro_json(const SubgyrogroupInfo& info) {
  json j = {{"elements", info.elements.to_indices()},
            {"order", info.elements.count()},
            {"subgyrogroup", info.is_subgyrogroup},
            {"L", info.is_L},
            {"strong", info.is_strong}};
  if (info.closure_witness) {
    const auto& w = *info.closure_witness;
    j["closure_witness"] = {{"kind", w.is_neg ? "neg" : "add"},
                            {"a", w.a},
                            {"b", w.b},
                            {"result", w.result}};
  }
  if (info.l_witness) j["l_witness"] = *info.l_witness;
  if (info.strong_witness) j["strong_witness"] = *info.strong_witness;
  return j;
}

}  // namespace

std::vector<int> parse_subset_literal(const std::string& text, int n) {
  std::vector<int> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
    if (i >= text.size()) break;
    size_t start = i;
    while (i < text.size() && text[i] != ',' && text[i] != ' ') ++i;
    std::string tok = text.substr(start, i - start);
    try {
      size_t pos = 0;
      long v = std::stol(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      if (v < 0 || v >= n)
        fail(errc::index_out_of_range,
             "subset element " + std::to_string(v) + " outside [0, " +
                 std::to_string(n) + ")");
      out.push_back((int)v);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad subset element '" + tok + "'");
    }
  }
  if (out.empty())
    fail(errc::empty_subset, "subset literal '" + text + "' is empty");
  return out;
}

RunResult run_verify(const VerifyOptions& opt) {
  Stopwatch watch;
  auto [n, add] = read_table_file(opt.input);
  auto [verdict, g] = verify_table(n, add, opt.limit);

  RunResult r;
  r.doc = skeleton("verify");
  r.doc["config"] = {{"input", opt.input}, {"limit", opt.limit}};
  r.doc["results"]["table"] = {{"n", n}};
  r.doc["results"]["verdict"] = to_json(verdict);
  r.all_passed = verdict.valid;
  if (verdict.valid) {
    r.doc["results"]["gyrations"] = {
        {"distinct", g->gyr_pool_size()},
        {"all_trivial", !g->has_nontrivial_gyration()}};
    if (n <= 64) {
      IdentityReport suite = identity_suite_exhaustive(*g);
      r.doc["results"]["identity_suite"] = to_json(suite);
      r.all_passed = r.all_passed && suite.all_passed();
    }
  }
  r.doc["all_passed"] = r.all_passed;
  r.elapsed_ms = watch.ms();
  return r;
}

RunResult run_subgyro(const SubgyroOptions& opt) {
  Stopwatch watch;
  FiniteGyrogroup g = load_gyrogroup(opt.input, opt.limit);
  auto subs = enumerate_subgyrogroups(g);

  bool consistent = true;
  json list = json::array();
  for (const auto& info : subs) {
    if (info.is_strong && !info.is_L) consistent = false;
    if (info.is_L && !info.is_subgyrogroup) consistent = false;
    if (!info.elements.test(g.zero())) consistent = false;
    list.push_back(subgyro_json(info));
  }

  RunResult r;
  r.doc = skeleton("subgyro");
  r.doc["config"] = {{"input", opt.input}, {"limit", opt.limit}};
  r.doc["results"] = {{"n", g.n()},
                      {"count", (int)subs.size()},
                      {"subgyrogroups", std::move(list)},
                      {"flag_implications_hold", consistent}};
  r.all_passed = consistent;
  r.doc["all_passed"] = r.all_passed;
  r.elapsed_ms = watch.ms();
  return r;
}

RunResult run_cosets(const CosetsOptions& opt) {
  Stopwatch watch;
  FiniteGyrogroup g = load_gyrogroup(opt.input, opt.limit);
  auto idx = parse_subset_literal(opt.subset, g.n());
  Bitset h(g.n());
  for (int x : idx) h.set(x);

  RunResult r;
  r.doc = skeleton("cosets");
  r.doc["config"] = {{"input", opt.input},
                     {"subset", h.to_indices()},
                     {"diagnostic", opt.diagnostic},
                     {"limit", opt.limit}};

  if (opt.diagnostic) {
    CosetFamily fam = coset_family(g, h);
    json cosets = json::array();
    for (const auto& c : fam.cosets) cosets.push_back(c);
    json overlaps = json::array();
    for (const auto& o : fam.overlaps) overlaps.push_back(o);
    r.doc["results"] = {{"n", g.n()},
                        {"cosets", std::move(cosets)},
                        {"is_partition", fam.is_partition},
                        {"overlaps", std::move(overlaps)}};
    r.all_passed = fam.is_partition;
  } else {
    CosetPartition part = coset_partition(g, h);
    json blocks = json::array();
    for (const auto& b : part.blocks) blocks.push_back(b);
    bool counts_ok = (int)part.blocks.size() * h.count() == g.n();
    r.doc["results"] = {{"n", g.n()},
                        {"blocks", std::move(blocks)},
                        {"representatives", part.rep},
                        {"block_count", (int)part.blocks.size()},
                        {"subgyrogroup_order", h.count()},
                        {"order_product_matches", counts_ok}};
    r.all_passed = counts_ok;
  }
  r.doc["all_passed"] = r.all_passed;
  r.elapsed_ms = watch.ms();
  return r;
}

RunResult run_einstein(const EinsteinOptions& opt) {
  Stopwatch watch;
  opt.cfg.validate();
  if (opt.samples < 1) fail(errc::invalid_argument, "samples must be >= 1");

  auto run_variant = [&](EinsteinVariant variant) {
    EinsteinGyrogroup ball(opt.cfg, variant);
    VelocitySampler sampler(opt.cfg);
    return identity_suite(
        ball, [&] { return sampler(); }, opt.samples, opt.cfg.tol);
  };
  IdentityReport standard = run_variant(EinsteinVariant::gamma_u);
  IdentityReport printed = run_variant(EinsteinVariant::gamma_v);

  json failing = json::array();
  for (const auto& c : printed.checks)
    if (!c.passed) failing.push_back(c.label);

  bool resolution = standard.all_passed() && !printed.all_passed();

  RunResult r;
  r.doc = skeleton("einstein");
  r.doc["config"] = {{"c", opt.cfg.c},
                     {"tol", opt.cfg.tol},
                     {"max_beta", opt.cfg.max_beta},
                     {"samples", opt.samples},
                     {"seed", opt.cfg.seed}};
  r.doc["results"]["identity_suite"] = to_json(standard);
  r.doc["results"]["variant_comparison"] = {
      {"default_variant", "gamma-u"},
      {"gamma_u_all_passed", standard.all_passed()},
      {"gamma_v_all_passed", printed.all_passed()},
      {"gamma_v_failing", std::move(failing)},
      {"resolution_confirmed", resolution},
      {"gamma_v_suite", to_json(printed)}};
  r.all_passed = standard.all_passed() && resolution;
  r.doc["all_passed"] = r.all_passed;
  r.elapsed_ms = watch.ms();
  return r;
}

namespace {

// Exhaustive scans over every hypothesis-satisfying subset tuple. The
// checked statements are proved for gyrogroups, so any violation is an
// implementation bug, never data.
json scan_all(const FiniteGyrogroup& g, bool& all_ok) {
  const int n = g.n();
  std::vector<Bitset> subsets;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    Bitset b(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) b.set(i);
    subsets.push_back(b);
  }
  std::vector<Bitset> invariant;
  for (const auto& s : subsets)
    if (gyr_invariant({&g, s}).first) invariant.push_back(s);

  auto subs = enumerate_subgyrogroups(g);
  std::vector<Bitset> l_subs, strong_subs;
  for (const auto& info : subs) {
    if (info.is_L) l_subs.push_back(info.elements);
    if (info.is_strong) strong_subs.push_back(info.elements);
  }

  json out;
  auto note_violation = [&](json& section, const InclusionVerdict& v,
                            json tuple) {
    if (v.holds) return;
    all_ok = false;
    tuple["step"] = v.step;
    if (v.witness) tuple["witness"] = *v.witness;
    section["violations"].push_back(std::move(tuple));
  };

  {  // (W+U)+V = W+(U+V) for gyr-invariant V
    json sec = {{"instances", 0}, {"violations", json::array()}};
    long long count = 0;
    for (const auto& w : subsets)
      for (const auto& u : subsets)
        for (const auto& v : invariant) {
          ++count;
          auto verdict = subset_assoc_check({&g, w}, {&g, u}, {&g, v});
          note_violation(sec, verdict,
                         {{"W", w.to_indices()},
                          {"U", u.to_indices()},
                          {"V", v.to_indices()}});
        }
    sec["instances"] = count;
    out["assoc"] = std::move(sec);
  }

  {  // -(W+H) subseteq H+V has a witness W for every (H, V)
    json sec = {{"instances", 0}, {"violations", json::array()}};
    long long count = 0;
    for (const auto& h : l_subs)
      for (const auto& v : subsets) {
        if (!v.test(g.zero())) continue;
        ++count;
        auto [w, verdict] = inverse_bound_search({&g, h}, {&g, v});
        note_violation(sec, verdict,
                       {{"H", h.to_indices()},
                        {"V", v.to_indices()},
                        {"W", w.bits.to_indices()}});
      }
    sec["instances"] = count;
    out["inverse_bound"] = std::move(sec);
  }

  {  // doubled-product collapse under its hypotheses
    json sec = {{"instances", 0}, {"violations", json::array()}};
    long long count = 0;
    for (const auto& h : strong_subs) {
      for (const auto& u : invariant) {
        Bitset uh = subset_add({&g, u}, {&g, h}).bits;
        for (const auto& w : invariant) {
          if (!subset_add({&g, h}, {&g, w}).bits.is_subset_of(uh)) continue;
          ++count;
          auto verdict =
              double_product_chain_check({&g, w}, {&g, u}, {&g, h});
          note_violation(sec, verdict,
                         {{"W", w.to_indices()},
                          {"U", u.to_indices()},
                          {"H", h.to_indices()}});
        }
      }
    }
    sec["instances"] = count;
    out["double_chain"] = std::move(sec);
  }

  {  // coaddition absorption under its hypotheses
    json sec = {{"instances", 0}, {"violations", json::array()}};
    long long count = 0;
    for (const auto& h : strong_subs) {
      for (const auto& u : invariant) {
        Bitset uh = subset_add({&g, u}, {&g, h}).bits;
        Bitset uu = subset_add({&g, u}, {&g, u}).bits;
        for (const auto& w : invariant) {
          if (!subset_add({&g, h}, {&g, w}).bits.is_subset_of(uh)) continue;
          for (const auto& v : subsets) {
            if (!uu.is_subset_of(v)) continue;
            for (int ge = 0; ge < n; ++ge) {
              ++count;
              auto verdict = coadd_absorption_check({&g, w}, {&g, u}, {&g, v},
                                                    {&g, h}, ge);
              note_violation(sec, verdict,
                             {{"W", w.to_indices()},
                              {"U", u.to_indices()},
                              {"V", v.to_indices()},
                              {"H", h.to_indices()},
                              {"g", ge}});
            }
          }
        }
      }
    }
    sec["instances"] = count;
    out["coadd_chain"] = std::move(sec);
  }

  return out;
}

}  // namespace

RunResult run_setcheck(const SetcheckOptions& opt) {
  Stopwatch watch;
  FiniteGyrogroup g = load_gyrogroup(opt.input, opt.limit);

  auto subset_arg = [&](const std::optional<std::string>& lit,
                        const char* name) {
    if (!lit)
      fail(errc::invalid_argument,
           "check '" + opt.check + "' needs subset " + name);
    return make_subset(g, parse_subset_literal(*lit, g.n()));
  };

  RunResult r;
  r.doc = skeleton("setcheck");
  json config = {{"input", opt.input},
                 {"check", opt.check},
                 {"force", opt.force},
                 {"limit", opt.limit}};
  auto echo = [&](const char* k, const std::optional<std::string>& v) {
    if (v) config[k] = *v;
  };
  echo("W", opt.set_w);
  echo("U", opt.set_u);
  echo("V", opt.set_v);
  echo("H", opt.set_h);
  if (opt.g_elem) config["g"] = *opt.g_elem;
  r.doc["config"] = std::move(config);

  json results;
  bool ok = true;

  if (opt.check == "assoc") {
    auto verdict = subset_assoc_check(subset_arg(opt.set_w, "W"),
                                      subset_arg(opt.set_u, "U"),
                                      subset_arg(opt.set_v, "V"), opt.force);
    ok = verdict.holds;
    results["verdict"] = verdict_json(verdict);
  } else if (opt.check == "inverse-bound") {
    auto h = subset_arg(opt.set_h, "H");
    auto v = subset_arg(opt.set_v, "V");
    if (opt.set_w) {
      auto verdict = inverse_bound_check(h, v, subset_arg(opt.set_w, "W"));
      ok = verdict.holds;
      results["verdict"] = verdict_json(verdict);
    } else {
      auto [w, verdict] = inverse_bound_search(h, v);
      ok = verdict.holds;
      results["found_W"] = w.bits.to_indices();
      results["verdict"] = verdict_json(verdict);
    }
  } else if (opt.check == "neutrality") {
    auto h = subset_arg(opt.set_h, "H");
    auto u = subset_arg(opt.set_u, "U");
    if (opt.set_v) {
      auto [inner, outer] = neutrality_check(h, u, subset_arg(opt.set_v, "V"));
      ok = inner.holds && outer.holds;
      results["inner"] = verdict_json(inner);
      results["outer"] = verdict_json(outer);
    } else {
      auto found = neutrality_search(h, u);
      ok = found.inner.holds && found.outer.holds;
      results["found_V"] = found.v.bits.to_indices();
      results["inner"] = verdict_json(found.inner);
      results["outer"] = verdict_json(found.outer);
    }
  } else if (opt.check == "double-chain") {
    auto verdict = double_product_chain_check(subset_arg(opt.set_w, "W"),
                                              subset_arg(opt.set_u, "U"),
                                              subset_arg(opt.set_h, "H"));
    ok = verdict.holds;
    results["verdict"] = verdict_json(verdict);
  } else if (opt.check == "coadd-chain") {
    if (!opt.g_elem)
      fail(errc::invalid_argument, "check 'coadd-chain' needs element g");
    auto verdict = coadd_absorption_check(
        subset_arg(opt.set_w, "W"), subset_arg(opt.set_u, "U"),
        subset_arg(opt.set_v, "V"), subset_arg(opt.set_h, "H"), *opt.g_elem);
    ok = verdict.holds;
    results["verdict"] = verdict_json(verdict);
  } else if (opt.check == "scan") {
    if (g.n() > opt.scan_limit)
      fail(errc::resource_limit,
           "scan enumerates the powerset; carrier size " +
               std::to_string(g.n()) + " exceeds scan limit " +
               std::to_string(opt.scan_limit));
    results["scan"] = scan_all(g, ok);
  } else {
    fail(errc::invalid_argument, "unknown check '" + opt.check + "'");
  }

  r.doc["results"] = std::move(results);
  r.all_passed = ok;
  r.doc["all_passed"] = ok;
  r.elapsed_ms = watch.ms();
  return r;
}

}  // namespace gyro
