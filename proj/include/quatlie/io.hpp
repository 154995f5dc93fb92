#pragma once
// JSON reading and writing for characters, points, Fourier data and run reports.
//
// Vectors of W_J are flat arrays in module order: [a, b₁…b_m, c₁…c_m, d], with m = dim J
// and Jordan coordinates in the order of CubicNormStructure. Complex numbers are [re, im].

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "quatlie/verify.hpp"
#include "quatlie/whittaker.hpp"

namespace quatlie::io {

using json = nlohmann::json;

// Malformed or inconsistent input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json complex_json(MachineComplex z) { return json::array({z.real(), z.imag()}); }

inline MachineComplex complex_from(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("expected a number or [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json values_json(const std::vector<MachineComplex>& v) {
  json a = json::array();
  for (auto z : v) a.push_back(complex_json(z));
  return a;
}

inline json jordan_json(const RealJordan& x) { return json(std::vector<double>(x.begin(), x.end())); }

// A Jordan element: an array of dim J numbers, or a single number s meaning s·1.
inline RealJordan jordan_from(const CubicNormStructure& J, const json& j) {
  if (j.is_number()) return j.get<double>() * J.one<double>();
  if (!j.is_array() || j.size() != J.size()) throw InputError("Jordan element needs " + std::to_string(J.size()) + " numbers");
  RealJordan x(J.size());
  for (std::size_t k = 0; k < J.size(); ++k) {
    if (!j[k].is_number()) throw InputError("Jordan coordinate is not a number");
    x[k] = j[k].get<double>();
  }
  return x;
}

inline json w_json(const FreudenthalSpace& W, const RealW& v) {
  const auto c = W.to_vec(v);
  return json(std::vector<double>(c.begin(), c.end()));
}

// A W_J vector: the full coordinate array, or four numbers (a, b, c, d) meaning (a, b·1, c·1, d).
inline RealW w_from(const FreudenthalSpace& W, const json& j) {
  if (!j.is_array()) throw InputError("character must be an array");
  for (const auto& x : j)
    if (!x.is_number()) throw InputError("character coordinate is not a number");
  if (j.size() == W.dim()) {
    Vec<double> v(W.dim());
    for (std::size_t k = 0; k < W.dim(); ++k) v[k] = j[k].get<double>();
    return W.from_vec(v);
  }
  if (j.size() == 4) {
    const auto& J = W.jordan();
    return {j[0].get<double>(), j[1].get<double>() * J.one<double>(), j[2].get<double>() * J.one<double>(),
            j[3].get<double>()};
  }
  throw InputError("character needs " + std::to_string(W.dim()) + " coordinates (or 4 for the scalar shorthand)");
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Inline JSON, a path to a JSON file, or comma-separated numbers.
inline json json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) throw InputError("empty argument");
  if (text[first] == '[' || text[first] == '{') return parse_json_text(text);
  if (std::filesystem::is_regular_file(text)) return parse_json_text(read_file(text));
  return parse_json_text("[" + text + "]");
}

// {"omega": [...]} or a bare array.
inline RealW character_from(const FreudenthalSpace& W, const std::string& text) {
  json j = json_argument(text);
  if (j.is_object()) {
    if (!j.contains("omega")) throw InputError("character object needs \"omega\"");
    j = j["omega"];
  }
  return w_from(W, j);
}

inline json point_json(const LeviPoint& p) {
  return {{"w", p.w},
          {"X", jordan_json(p.X)},
          {"Y", jordan_json(p.Y)},
          {"component", p.sign == ComponentSign::W0 ? "w0" : "identity"}};
}

// {"w", "X", "Y", "component"?} or "w,x,y" meaning (w, x·1, y·1).
inline LeviPoint point_from(const CubicNormStructure& J, const std::string& text) {
  const json j = json_argument(text);
  LeviPoint p;
  if (j.is_array()) {
    if (j.size() != 3 || !j[0].is_number()) throw InputError("point shorthand is w,x,y");
    p.w = j[0].get<double>();
    p.X = jordan_from(J, j[1]);
    p.Y = jordan_from(J, j[2]);
  } else if (j.is_object()) {
    if (!j.contains("w") || !j.contains("X") || !j.contains("Y")) throw InputError("point needs w, X, Y");
    if (!j["w"].is_number()) throw InputError("w is not a number");
    p.w = j["w"].get<double>();
    p.X = jordan_from(J, j["X"]);
    p.Y = jordan_from(J, j["Y"]);
    const std::string comp = j.value("component", "identity");
    if (comp == "w0")
      p.sign = ComponentSign::W0;
    else if (comp != "identity")
      throw InputError("component must be identity or w0");
  } else {
    throw InputError("point must be an object or w,x,y");
  }
  try {
    check_point(J, p);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return p;
}

struct ParsedDatum {
  std::string descriptor;
  FourierDatum datum;
};

// {"n", "descriptor", "terms": [{"omega", "coeff"}], "beta"?, "H"?: "one"|"zero"}.
// A constant term is present when "beta" or "H" is given.
inline ParsedDatum fourier_from(const json& j) {
  if (!j.is_object()) throw InputError("Fourier datum must be an object");
  for (const char* key : {"n", "descriptor"})
    if (!j.contains(key)) throw InputError(std::string("Fourier datum needs \"") + key + "\"");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1) throw InputError("n must be a positive integer");
  if (!j["descriptor"].is_string()) throw InputError("descriptor must be a string");
  ParsedDatum out;
  out.descriptor = j["descriptor"].get<std::string>();
  CubicNormStructure J = [&] {
    try {
      return descriptor_for(out.descriptor);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }();
  FreudenthalSpace W(J);
  auto& fd = out.datum;
  fd.n = j["n"].get<int>();
  if (j.contains("terms")) {
    if (!j["terms"].is_array()) throw InputError("terms must be an array");
    for (const auto& t : j["terms"]) {
      if (!t.is_object() || !t.contains("omega") || !t.contains("coeff")) throw InputError("term needs omega and coeff");
      FourierTerm term;
      term.omega = w_from(W, t["omega"]);
      term.coeff = complex_from(t["coeff"]);
      term.override_admissible = t.value("override", false);
      fd.terms.push_back(std::move(term));
    }
  }
  if (j.contains("beta")) {
    fd.beta = complex_from(j["beta"]);
    fd.has_constant = true;
  }
  if (j.contains("H")) {
    const std::string h = j["H"].is_string() ? j["H"].get<std::string>() : "";
    if (h == "one")
      fd.H = [](const ComplexJordan&) { return MachineComplex(1.0); };
    else if (h != "zero")
      throw InputError("H must be \"one\" or \"zero\"");
    fd.has_constant = true;
  }
  return out;
}

inline json report_json(const RunReport& r, bool timing) {
  json j = {{"suite", r.suite},
            {"descriptor", r.descriptor},
            {"level", r.level},
            {"seed", r.seed},
            {"attempted", r.attempted},
            {"passed", r.passed},
            {"max_residual", r.max_residual},
            {"pass", r.ok()}};
  if (timing) j["elapsed"] = r.elapsed;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

}  // namespace quatlie::io
