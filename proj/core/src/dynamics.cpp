#include "rtmbe/dynamics.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string_view>
#include <utility>

#include "rtmbe/errors.hpp"
#include "rtmbe/format.hpp"

namespace rtmbe {
namespace {

struct Field {
  std::string_view name;
  double ModelParameters::*member;
  bool must_be_positive;
};

constexpr std::array<Field, 17> kFields{{
    {"k10", &ModelParameters::k10, true},
    {"k20", &ModelParameters::k20, true},
    {"k30", &ModelParameters::k30, true},
    {"E1", &ModelParameters::E1, false},
    {"E2", &ModelParameters::E2, false},
    {"E3", &ModelParameters::E3, false},
    {"dH1", &ModelParameters::dH1, false},
    {"dH2", &ModelParameters::dH2, false},
    {"dH3", &ModelParameters::dH3, false},
    {"rho", &ModelParameters::rho, true},
    {"Cp", &ModelParameters::Cp, true},
    {"kwAR", &ModelParameters::kwAR, true},
    {"VR", &ModelParameters::VR, true},
    {"mK", &ModelParameters::mK, true},
    {"CpK", &ModelParameters::CpK, true},
    {"cA0", &ModelParameters::cA0, true},
    {"Tin", &ModelParameters::Tin, true},
}};

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

ModelParameters cstr_default_parameters() {
  ModelParameters p;
  p.k10 = 1.287e12;
  p.k20 = 1.287e12;
  p.k30 = 9.043e9;
  p.E1 = -9758.3;
  p.E2 = -9758.3;
  p.E3 = -8560.0;
  p.dH1 = 4.2;
  p.dH2 = -11.0;
  p.dH3 = -41.85;
  p.rho = 0.9342;
  p.Cp = 3.01;
  p.kwAR = 866.88;  // 4032 kJ/(h m^2 K) * 0.215 m^2
  p.VR = 10.01;
  p.mK = 5.0;
  p.CpK = 2.0;
  p.cA0 = 5.1;
  p.Tin = 104.9;
  return p;
}

InputVector cstr_nominal_input() { return InputVector(14.19, -1113.5); }

StateVector cstr_steady_state() {
  return StateVector(2.139998009096281, 1.0903041351207676, 114.19419043514115,
                     112.90969892535894);
}

void validate(const ModelParameters& p) {
  for (const auto& f : kFields) {
    const double v = p.*(f.member);
    if (!std::isfinite(v)) {
      throw InvalidParameter("model parameter " + std::string(f.name) + " is not finite");
    }
    if (f.must_be_positive && !(v > 0.0)) {
      throw InvalidParameter("model parameter " + std::string(f.name) +
                             " must be positive, got " + shortest_repr(v));
    }
  }
}

ModelParameters parse_parameters(std::istream& in, const ModelParameters& base) {
  ModelParameters p = base;
  std::set<std::string_view> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(where() + "expected `name = value`");
    }
    const auto key = trim(line.substr(0, eq));
    const auto text = trim(line.substr(eq + 1));

    const Field* field = nullptr;
    for (const auto& f : kFields) {
      if (f.name == key) field = &f;
    }
    if (field == nullptr) {
      throw ConfigError(where() + "unknown parameter `" + std::string(key) + "`");
    }
    if (!seen.insert(field->name).second) {
      throw ConfigError(where() + "duplicate parameter `" + std::string(key) + "`");
    }

    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw ConfigError(where() + "invalid number `" + std::string(text) + "`");
    }
    p.*(field->member) = value;
  }
  try {
    validate(p);
  } catch (const InvalidParameter& e) {
    throw ConfigError(e.what());
  }
  return p;
}

ModelParameters load_parameters(const std::filesystem::path& path,
                                const ModelParameters& base) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open parameter file " + path.string());
  return parse_parameters(in, base);
}

std::string format_parameters(const ModelParameters& p) {
  std::ostringstream out;
  for (const auto& f : kFields) {
    out << f.name << " = " << shortest_repr(p.*(f.member)) << '\n';
  }
  return out.str();
}

}  // namespace rtmbe
