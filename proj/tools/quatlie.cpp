// quatlie: verification suites and numeric evaluation, JSON-lines on stdout.
// Exit codes: 0 pass, 1 verified failure or witness, 2 usage error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quatlie/io.hpp"

using namespace quatlie;
using io::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

CubicNormStructure descriptor_or_usage(const std::string& token) {
  try {
    return descriptor_for(token);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

json witness_json(const ComplexJordan& z) {
  json a = json::array();
  for (auto x : z) a.push_back(io::complex_json(x));
  return a;
}

int cmd_verify(const std::string& algebra, const std::string& suite, const std::string& level, std::uint64_t seed,
               bool timing) {
  descriptor_or_usage(algebra);
  RunReport r;
  try {
    r = run_suite(suite, algebra, parse_level(level), seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(io::report_json(r, timing));
  return r.ok() ? kPass : kFail;
}

int cmd_whittaker(const std::string& algebra, int n, const std::string& chr, const std::vector<std::string>& points,
                  std::optional<int> v) {
  const auto J = descriptor_or_usage(algebra);
  FreudenthalSpace W(J);
  const RealW om = io::character_from(W, chr);
  const auto cls = admissible(W, om);
  if (cls == CharacterClass::Trivial) throw UsageError("character must be nonzero");
  if (v && (*v < -n || *v > n)) throw UsageError("--v must lie in [-n, n]");
  if (cls == CharacterClass::Vanishing) {
    json rec = {{"algebra", algebra}, {"class", to_string(cls)}};
    if (auto z = zero_witness(W, om)) {
      rec["witness"] = witness_json(*z);
      rec["p_at_witness"] = io::complex_json(p_chi(W, om, *z));
    }
    emit(rec);
    return kFail;
  }
  if (cls == CharacterClass::DegenerateRank)
    std::cerr << "warning: degenerate-rank character, the function is not of moderate growth\n";
  for (const auto& text : points) {
    const LeviPoint p = io::point_from(J, text);
    json rec = {{"algebra", algebra}, {"n", n}, {"class", to_string(cls)}, {"point", io::point_json(p)}};
    try {
      if (v) {
        rec["v"] = *v;
        rec["value"] = io::complex_json(whittaker_value(W, n, om, *v, p));
      } else {
        rec["values"] = io::values_json(whittaker_vector(W, n, om, p));
      }
    } catch (const std::domain_error& e) {
      // p_ω(Z) = 0 at this point
      rec["error"] = e.what();
      emit(rec);
      return kFail;
    }
    emit(rec);
  }
  return kPass;
}

int cmd_fourier(const std::string& input, const std::vector<std::string>& points, const std::string& x_text) {
  const io::ParsedDatum pd = io::fourier_from(io::json_argument(input));
  const auto J = descriptor_for(pd.descriptor);
  FreudenthalSpace W(J);
  const RealW x = x_text.empty() ? W.zero<double>() : io::character_from(W, x_text);
  for (const auto& text : points) {
    const LeviPoint p = io::point_from(J, text);
    std::vector<MachineComplex> vals;
    try {
      vals = fourier_eval(W, pd.datum, x, p);
    } catch (const std::invalid_argument& e) {
      throw io::InputError(e.what());
    }
    emit({{"point", io::point_json(p)}, {"values", io::values_json(vals)}});
  }
  return kPass;
}

int cmd_admissible(const std::string& algebra, const std::string& chr) {
  const auto J = descriptor_or_usage(algebra);
  FreudenthalSpace W(J);
  const RealW om = io::character_from(W, chr);
  const auto cls = admissible(W, om);
  json rec = {{"algebra", algebra}, {"class", to_string(cls)}, {"rank", W.rank(exact_vector(om))}};
  if (cls == CharacterClass::Vanishing)
    if (auto z = zero_witness(W, om)) rec["witness"] = witness_json(*z);
  emit(rec);
  return kPass;
}

int cmd_dims(int so_max) {
  json rec = json::object();
  for (const char* t : {"g2", "f4", "e6", "e7", "e8"}) rec[t] = g_dim(descriptor_for(t));
  for (int r = 0; r <= so_max; ++r) {
    const std::string t = "so:" + std::to_string(r);
    rec[t] = g_dim(descriptor_for(t));
  }
  emit(rec);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic exceptional Lie algebras: exact verification and Whittaker evaluation"};
  app.require_subcommand(1);

  std::string algebra = "f4", suite, level = "quick", chr, input, x_text;
  std::uint64_t seed = 1;
  bool timing = false;
  int n = 1, so_max = 3;
  std::optional<int> v;
  std::vector<std::string> points;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--algebra", algebra, "g2, f4, e6, e7, e8 or so:R")->required();
  verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--seed", seed, "seed");
  verify->add_flag("--timing", timing, "include elapsed seconds (output is then not reproducible)");

  auto* whit = app.add_subcommand("whittaker", "evaluate the generalized Whittaker function");
  whit->add_option("--algebra", algebra, "descriptor token (default f4)");
  whit->add_option("--n", n, "weight n >= 1")->check(CLI::PositiveNumber);
  whit->add_option("--char", chr, "character: JSON array, file, or a,b,c,d shorthand")->required();
  whit->add_option("--point", points, "w,x,y or JSON {w,X,Y,component}; repeatable")->required();
  auto* vopt = whit->add_option("--v", v, "single slot v in [-n, n]");
  auto* aopt = whit->add_flag("--all", "all 2n+1 slots (default)");
  vopt->excludes(aopt);

  auto* four = app.add_subcommand("fourier", "evaluate a Fourier expansion from a JSON datum");
  four->add_option("--input", input, "datum file or inline JSON")->required();
  four->add_option("--point", points, "evaluation point; repeatable")->required();
  four->add_option("--x", x_text, "unipotent coordinate x in W_J (default 0)");

  auto* adm = app.add_subcommand("admissible", "classify a character");
  adm->add_option("--algebra", algebra, "descriptor token (default f4)");
  adm->add_option("--char", chr, "character")->required();

  auto* dims = app.add_subcommand("dims", "dimension table");
  dims->add_option("--so-max", so_max, "largest R in so:R")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(algebra, suite, level, seed, timing);
    if (*whit) return cmd_whittaker(algebra, n, chr, points, v);
    if (*four) return cmd_fourier(input, points, x_text);
    if (*adm) return cmd_admissible(algebra, chr);
    if (*dims) return cmd_dims(so_max);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const io::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
