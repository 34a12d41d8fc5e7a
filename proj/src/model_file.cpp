#include "brauer/model_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace brauer {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

using Entries = std::vector<std::pair<std::string, std::string>>;

struct Section {
  std::string name;
  Entries entries;
  std::size_t line = 0;

  std::optional<std::string> get(const std::string& key) const {
    std::optional<std::string> v;
    for (const auto& [k, val] : entries) {
      if (k == key) {
        require(!v, ErrorKind::Parse, "duplicate key '" + key + "' in [" + name + "]");
        v = val;
      }
    }
    return v;
  }
  std::string need(const std::string& key) const {
    auto v = get(key);
    require(v.has_value(), ErrorKind::Parse, "[" + name + "] needs '" + key + "'");
    return *v;
  }
  std::vector<std::string> all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, val] : entries) {
      if (k == key) out.push_back(val);
    }
    return out;
  }
};

BigInt parse_integer(const std::string& text) {
  const std::string t = trim(text);
  const std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  require(t.size() > start && std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(), ::isdigit),
          ErrorKind::Parse, "not an integer: '" + text + "'");
  return BigInt(t[0] == '+' ? t.substr(1) : t);
}

}  // namespace

std::pair<BigInt, BigInt> parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return {parse_integer(text), 1};
  const BigInt den = parse_integer(text.substr(slash + 1));
  require(den != 0, ErrorKind::Parse, "zero denominator in '" + text + "'");
  return {parse_integer(text.substr(0, slash)), den};
}

std::pair<IntPoly, IntPoly> parse_ratio(const std::string& text, const std::vector<Variable>& vars) {
  int depth = 0;
  std::optional<std::size_t> slash;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      require(!slash, ErrorKind::Parse, "more than one '/' in '" + text + "'");
      slash = i;
    }
  }
  if (!slash) return {parse_poly(text, vars), IntPoly::constant(vars, 1)};
  return {parse_poly(text.substr(0, *slash), vars), parse_poly(text.substr(*slash + 1), vars)};
}

ModelFile parse_model_file(const std::string& text) {
  std::vector<Section> sections;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (const auto c = line.find('#'); c != std::string::npos) line.erase(c);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      require(line.back() == ']', ErrorKind::Parse, "line " + std::to_string(lineno) + ": unterminated section");
      sections.push_back({trim(line.substr(1, line.size() - 2)), {}, lineno});
      continue;
    }
    const auto eq = line.find('=');
    require(eq != std::string::npos, ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected key = value");
    require(!sections.empty(), ErrorKind::Parse, "line " + std::to_string(lineno) + ": entry outside a section");
    sections.back().entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }

  auto find_one = [&](const std::string& name, bool required) -> const Section* {
    const Section* found = nullptr;
    for (const auto& s : sections) {
      if (s.name != name) continue;
      require(!found, ErrorKind::Parse, "duplicate section [" + name + "]");
      found = &s;
    }
    require(found || !required, ErrorKind::Parse, "missing section [" + name + "]");
    return found;
  };
  for (const auto& s : sections) {
    static const std::vector<std::string> known{"model", "ambient", "equation", "arith", "algebra"};
    require(std::find(known.begin(), known.end(), s.name) != known.end(), ErrorKind::Parse,
            "unknown section [" + s.name + "] on line " + std::to_string(s.line));
  }

  ModelFile out;
  std::string label = "model";
  if (const Section* m = find_one("model", false)) {
    if (auto l = m->get("label")) label = *l;
    if (auto d = m->get("dp_degree")) out.dp_degree = static_cast<int>(parse_integer(*d));
  }
  const Section* amb = find_one("ambient", true);
  const auto names = split_list(amb->need("vars"));
  std::vector<int> weights(names.size(), 1);
  if (auto w = amb->get("weights")) {
    const auto ws = split_list(*w);
    require(ws.size() == names.size(), ErrorKind::Parse, "[ambient] needs one weight per variable");
    for (std::size_t i = 0; i < ws.size(); ++i) weights[i] = static_cast<int>(parse_integer(ws[i]));
  }
  AmbientSpace ambient(names, weights);

  std::vector<IntPoly> equations;
  for (const auto& s : sections) {
    if (s.name != "equation") continue;
    for (const auto& e : s.all("expr")) equations.push_back(parse_poly(e, ambient.variables()));
  }
  const Section* arith = find_one("arith", true);
  const BigInt p = parse_integer(arith->need("p"));
  require(p > 1 && p < BigInt(1) << 32, ErrorKind::Domain, "p out of range");
  out.model = ModelSpec::make(label, ambient, std::move(equations), p.convert_to<std::uint64_t>());

  for (const auto& s : sections) {
    if (s.name != "algebra") continue;
    const auto n = static_cast<std::uint64_t>(parse_integer(s.get("n").value_or("2")));
    const auto [a_num, a_den] = parse_rational(s.need("a"));
    IntPoly f_num = parse_poly(s.need("f_num"), ambient.variables());
    IntPoly f_den = parse_poly(s.get("f_den").value_or("1"), ambient.variables());
    std::vector<std::pair<IntPoly, IntPoly>> alts;
    for (const auto& a : s.all("alt")) alts.push_back(parse_ratio(a, ambient.variables()));
    out.algebras.push_back(SymbolAlgebra::make(n, a_num, a_den, std::move(f_num), std::move(f_den), std::move(alts)));
  }
  return out;
}

ModelFile load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::Domain, "cannot read model file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model_file(ss.str());
}

}  // namespace brauer
