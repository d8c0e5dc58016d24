#include "ymvac/constants_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace ymvac {

const std::map<std::string, int>& constants_keys() {
  static const std::map<std::string, int> keys{
      {"n_f", 0},         {"n_c", 0},     {"f_pi", 1},    {"lambda_uv", 1},
      {"v0_cuberoot", 1}, {"alpha_s", 0}, {"dm_eta2", 2}, {"volume", -3}};
  return keys;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text) {
  double v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v))
    throw ConstantsError("'" + text + "' is not a finite number");
  return v;
}

int parse_integer(const std::string& text) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConstantsError("'" + text + "' is not an integer");
  return v;
}

}  // namespace

void set_constant(PhenoInputs& in, const std::string& key, const std::string& value) {
  if (key == "n_f") in.n_f = parse_integer(value);
  else if (key == "n_c") in.n_c = parse_integer(value);
  else if (key == "f_pi") in.f_pi = GeV<1>(parse_number(value));
  else if (key == "lambda_uv") in.lambda_uv = GeV<1>(parse_number(value));
  else if (key == "v0_cuberoot") in.v0_cuberoot = GeV<1>(parse_number(value));
  else if (key == "alpha_s") in.alpha_s = parse_number(value);
  else if (key == "dm_eta2") in.dm_eta2 = GeV<2>(parse_number(value));
  else if (key == "volume") in.volume = GeV<-3>(parse_number(value));
  else throw ConstantsError("unknown key '" + key + "'");
}

PhenoInputs parse_constants(std::istream& in, const PhenoInputs& base, const std::string& source) {
  PhenoInputs out = base;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&] { return source + ":" + std::to_string(lineno) + ": "; };
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConstantsError(where() + "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConstantsError(where() + "repeated key '" + key + "'");
    try {
      set_constant(out, key, value);
    } catch (const ConstantsError& e) {
      throw ConstantsError(where() + e.what());
    }
  }
  try {
    out.validate();
  } catch (const DomainError& e) {
    throw ConstantsError(source + ": " + e.what());
  }
  return out;
}

PhenoInputs load_constants(const std::string& path, const PhenoInputs& base) {
  std::ifstream f(path);
  if (!f) throw ConstantsError("cannot open constants file '" + path + "'");
  return parse_constants(f, base, path);
}

std::map<std::string, double> constants_map(const PhenoInputs& in) {
  return {{"n_f", double(in.n_f)},
          {"n_c", double(in.n_c)},
          {"f_pi", in.f_pi.value},
          {"lambda_uv", in.lambda_uv.value},
          {"v0_cuberoot", in.v0_cuberoot.value},
          {"alpha_s", in.alpha_s},
          {"dm_eta2", in.dm_eta2.value},
          {"volume", in.volume.value}};
}

}  // namespace ymvac
