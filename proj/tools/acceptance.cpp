// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quatlie/verify.hpp"

using namespace quatlie;

namespace {

const std::vector<std::string> kExceptional{"g2", "f4", "e6", "e7", "e8"};
const std::vector<std::string> kAllKinds{"g2", "so:0", "so:1", "so:2", "so:3", "f4", "e6", "e7", "e8"};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds, 0 for none
  std::function<RunReport()> run;
};

RunReport fresh(const std::string& suite) {
  RunReport r;
  r.suite = suite;
  return r;
}

template <class F>
RunReport timed(const std::string& suite, F&& body) {
  RunReport r = fresh(suite);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

RunReport sweep(const std::string& suite, const std::vector<std::string>& tokens, Level level, std::uint64_t seed) {
  return timed(suite, [&](RunReport& r) {
    for (const auto& t : tokens) r.merge(run_suite(suite, t, level, seed));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string level_name = "full";
  std::uint64_t seed = 20240601;
  std::vector<int> only;
  app.add_option("--level", level_name, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  app.add_option("--seed", seed, "base seed");
  app.add_option("--only", only, "run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);
  const Level level = parse_level(level_name);
  const std::uint64_t axiom_samples = level == Level::Full ? 1000 : 100;
  const int points = level == Level::Full ? 20 : 5;

  std::vector<Criterion> cs;
  cs.push_back({1, "cubic-norm axioms and N(U_x y) = N(x)^2 N(y), all descriptor kinds", 30, [&] {
                  return timed("axioms", [&](RunReport& r) {
                    Sampler s(seed);
                    for (const auto& J : all_descriptor_kinds()) suite_axioms(J, axiom_samples, s, r);
                  });
                }});
  cs.push_back({2, "Jacobi identity, G2/F4 exhaustive, E6-E8 sampled", 300,
                [&] { return sweep("jacobi", kExceptional, level, seed); }});
  cs.push_back({3, "dimension table by basis enumeration", 0, [&] {
                  return timed("dims", [&](RunReport& r) {
                    const std::vector<std::pair<std::string, std::size_t>> table{
                        {"g2", 14}, {"f4", 52}, {"e6", 78}, {"e7", 133}, {"e8", 248}};
                    auto enumerate = [&](const std::string& token, std::size_t expect) {
                      GAlgebra G(descriptor_for(token));
                      EchelonBasis<Rational> ech(G.dim());
                      for (std::size_t k = 0; k < G.dim(); ++k) ech.insert(G.coords(G.basis<Rational>(k)));
                      r.check(ech.rank() == expect && G.dim() == expect, [&] {
                        return token + ": rank " + std::to_string(ech.rank()) + ", expected " + std::to_string(expect);
                      });
                    };
                    for (const auto& [t, d] : table) enumerate(t, d);
                    for (int k = 0; k <= 5; ++k)
                      enumerate("so:" + std::to_string(k), static_cast<std::size_t>((k + 7) * (k + 6) / 2));
                  });
                }});
  cs.push_back({4, "Killing invariance, Theta automorphism, B_Theta positive definite", 0, [&] {
                  return timed("killing+cartan", [&](RunReport& r) {
                    for (const auto& t : kExceptional) {
                      r.merge(run_suite("killing", t, level, seed));
                      r.merge(run_suite("cartan", t, level, seed));
                    }
                  });
                }});
  cs.push_back({5, "Cayley transform: 12 identities and 13 helper relations through E8", 120,
                [&] { return sweep("cayley", kAllKinds, level, seed); }});
  cs.push_back({6, "Z/3 <-> Z/2 model isomorphism transport", 0,
                [&] { return sweep("iso32", kExceptional, level, seed); }});
  cs.push_back({7, "so(V) model isomorphism, r = 0..3 full sweep", 60,
                [&] { return sweep("isoSO", {"so:0", "so:1", "so:2", "so:3"}, level, seed); }});
  cs.push_back({8, "character equations for the Whittaker vector, and w^0.1 detectability", 0, [&] {
                  return timed("schmid", [&](RunReport& r) {
                    for (const auto& J : {CubicNormStructure::unit(), CubicNormStructure::hermitian3(1)})
                      for (int n = 1; n <= 2; ++n) suite_schmid_char(J, n, points, seed + static_cast<std::uint64_t>(n), r);
                  });
                }});
  cs.push_back({9, "K-Bessel recurrence, oracle agreement, derivative identities", 0,
                [&] { return timed("bessel", [&](RunReport& r) { suite_bessel(r); }); }});
  cs.push_back({10, "positivity bound, analytic zero, degenerate-rank scans", 0, [&] {
                  return timed("positivity", [&](RunReport& r) {
                    for (const auto& J : {CubicNormStructure::unit(), CubicNormStructure::quadratic_pair(2),
                                          CubicNormStructure::hermitian3(1), CubicNormStructure::hermitian3(8)}) {
                      suite_positivity(J, 10000, seed, r);
                      suite_degenerate(J, seed, r);
                    }
                  });
                }});
  cs.push_back({11, "constant term residuals and slot decoupling", 0, [&] {
                  return timed("constant-term", [&](RunReport& r) {
                    for (const auto& J : {CubicNormStructure::unit(), CubicNormStructure::hermitian3(1)})
                      for (int n = 1; n <= 3; ++n) suite_const_term(J, n, points, seed + 10 + static_cast<std::uint64_t>(n), r);
                  });
                }});

  bool all = true;
  for (const auto& c : cs) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    RunReport r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.counterexample = std::string("exception: ") + e.what();
    }
    const bool in_time = c.time_limit <= 0 || level == Level::Quick || r.elapsed < c.time_limit;
    const bool pass = r.ok() && in_time;
    all = all && pass;
    std::printf("[%s] %2d %s: %llu/%llu checks, max residual %.3g, %.1f s", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), static_cast<unsigned long long>(r.passed),
                static_cast<unsigned long long>(r.attempted), r.max_residual, r.elapsed);
    if (!in_time) std::printf(" (limit %.0f s)", c.time_limit);
    if (r.counterexample) std::printf(" -- %s", r.counterexample->c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
