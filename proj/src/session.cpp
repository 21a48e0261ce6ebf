#include "wound/session.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "wound/parse.hpp"

namespace wound {

const HypersurfaceGroup& Session::group(const std::string& name) const {
  for (const auto& g : groups)
    if (g.name == name) return g;
  throw InputError("no group named " + name);
}

const CocycleExtension& Session::extension(const std::string& name) const {
  for (const auto& e : extensions)
    if (e.name == name) return e;
  throw InputError("no extension named " + name);
}

const PPolyMap& Session::map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name == name) return m;
  throw InputError("no map named " + name);
}

Endpoint Session::endpoint(const std::string& name) const {
  if (name == "Ga") return Endpoint::line(field);
  return Endpoint::group(group(name));
}

std::string Session::to_string() const {
  std::string out = field->header() + "\n";
  if (!params.names.empty()) {
    out += "params";
    for (const auto& n : params.names) out += " " + n;
    out += "\n";
  }
  for (const auto& [eq, piv] : params.relations)
    out += "relation pivot=" + params.names[piv] + " : " + eq.to_string(params.names) + "\n";
  for (const auto& g : groups) out += g.to_string() + "\n";
  for (const auto& e : extensions) out += e.to_string() + "\n";
  for (const auto& m : maps) out += m.to_string(params.names) + "\n";
  return out;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto k = s.find(sep, start);
    out.push_back(trim(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start)));
    if (k == std::string_view::npos) return out;
    start = k + 1;
  }
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

// The header of a statement: keyword, optional name, key=value options.
struct Header {
  std::string keyword;
  std::string name;
  std::map<std::string, std::string> opts;
  std::vector<std::string> bare;

  const std::string& need(const std::string& key) const {
    auto it = opts.find(key);
    if (it == opts.end()) throw InputError(keyword + ": missing " + key + "=");
    return it->second;
  }
  std::optional<std::string> get(const std::string& key) const {
    auto it = opts.find(key);
    if (it == opts.end()) return std::nullopt;
    return it->second;
  }
  void allow(std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : opts)
      if (std::find_if(keys.begin(), keys.end(), [&](const char* a) { return k == a; }) == keys.end())
        throw InputError(keyword + ": unknown option " + k + "=");
  }
};

Header parse_header(std::string_view text, bool named) {
  Header h;
  auto ws = words(text);
  h.keyword = ws.at(0);
  std::size_t i = 1;
  if (named) {
    if (ws.size() < 2 || ws[1].find('=') != std::string::npos) throw InputError(h.keyword + ": missing name");
    h.name = ws[1];
    if (!is_identifier(h.name)) throw InputError(h.keyword + ": invalid name '" + h.name + "'");
    i = 2;
  }
  for (; i < ws.size(); ++i) {
    const auto eq = ws[i].find('=');
    if (eq == std::string::npos) {
      h.bare.push_back(ws[i]);
      continue;
    }
    h.opts[ws[i].substr(0, eq)] = ws[i].substr(eq + 1);
  }
  return h;
}

std::uint32_t to_u32(const std::string& key, const std::string& v) {
  if (v.empty() || v.size() > 9 || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InputError("field: " + key + " must be a nonnegative integer");
  return static_cast<std::uint32_t>(std::stoul(v));
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& n, const std::string& what) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end()) throw InputError(what + " '" + n + "' is not declared");
  return static_cast<std::size_t>(it - names.begin());
}

class Loader {
 public:
  Session load(std::string_view text) {
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto nl = text.find('\n', start);
      std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
      ++lineno;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      const std::string stmt = trim(line);
      if (!stmt.empty()) {
        try {
          statement(stmt);
        } catch (const InputError& e) {
          throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const PreconditionError& e) {
          throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::domain_error& e) {
          throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
      }
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
    ensure_field();
    return std::move(s_);
  }

 private:
  void ensure_field() {
    if (!s_.field) {
      s_.field = Field::make({});
      s_.params = ParamRing::none(s_.field);
    }
  }

  void claim(const std::string& name) {
    if (name == "Ga") throw InputError("the name Ga is reserved for the affine line");
    if (!names_.insert(name).second) throw InputError("duplicate name " + name);
  }

  void check_symbols(const std::vector<std::string>& syms, const std::string& what) {
    std::set<std::string> seen;
    for (const auto& n : syms) {
      if (!is_identifier(n)) throw InputError(what + ": invalid symbol '" + n + "'");
      if (n == s_.field->spec().gen || (s_.field->spec().e > 1 && n == s_.field->spec().fq_symbol))
        throw InputError(what + ": symbol " + n + " clashes with the field");
      if (!seen.insert(n).second) throw InputError(what + ": repeated symbol " + n);
    }
  }

  void statement(const std::string& stmt) {
    const auto colon = stmt.find(':');
    const std::string head = stmt.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : trim(std::string_view(stmt).substr(colon + 1));
    const std::string kw = words(head).at(0);
    if (kw == "field") return field(head, colon);
    ensure_field();
    if (kw == "params") return params(head, colon);
    if (kw != "relation" && kw != "group" && kw != "extension" && kw != "map")
      throw InputError("unknown statement '" + kw + "'");
    if (colon == std::string::npos) throw InputError(kw + ": expected ':'");
    if (kw == "relation") return relation(head, body);
    if (kw == "group") return group(head, body);
    if (kw == "extension") return extension(head, body);
    return map(head, body);
  }

  void field(const std::string& head, std::size_t colon) {
    if (s_.field || colon != std::string::npos) throw InputError("field must be the first statement and stands alone");
    Header h = parse_header(head, false);
    h.allow({"p", "e", "gen", "depth", "fq"});
    if (!h.bare.empty()) throw InputError("field: unexpected '" + h.bare[0] + "'");
    FieldSpec spec;
    if (auto v = h.get("p")) spec.p = to_u32("p", *v);
    if (auto v = h.get("e")) spec.e = to_u32("e", *v);
    if (auto v = h.get("depth")) spec.depth = to_u32("depth", *v);
    if (auto v = h.get("gen")) spec.gen = *v;
    if (auto v = h.get("fq")) spec.fq_symbol = *v;
    if (!is_identifier(spec.gen) || spec.gen == "p") throw InputError("field: invalid generator name");
    if (!is_identifier(spec.fq_symbol) || spec.fq_symbol == spec.gen) throw InputError("field: invalid F_q symbol");
    if (spec.depth > 8) throw InputError("field: depth above 8 is not supported");
    try {
      s_.field = Field::make(spec);
    } catch (const std::exception& e) {
      throw InputError(std::string("field: ") + e.what());
    }
    s_.params = ParamRing::none(s_.field);
  }

  void params(const std::string& head, std::size_t colon) {
    if (colon != std::string::npos) throw InputError("params: unexpected ':'");
    if (!s_.params.names.empty() || !s_.maps.empty()) throw InputError("params must be declared once, before any map");
    auto ws = words(head);
    std::vector<std::string> names;
    for (std::size_t i = 1; i < ws.size(); ++i)
      for (auto& n : split(ws[i], ','))
        if (!n.empty()) names.push_back(n);
    check_symbols(names, "params");
    s_.params.names = std::move(names);
  }

  void relation(const std::string& head, const std::string& body) {
    Header h = parse_header(head, false);
    h.allow({"pivot"});
    if (s_.params.names.empty()) throw InputError("relation: declare params first");
    if (!s_.maps.empty()) throw InputError("relation: must precede the maps");
    PPoly eq = parse_ppoly(body, s_.field, s_.params.names);
    std::optional<std::size_t> piv;
    if (auto v = h.get("pivot")) piv = index_of(s_.params.names, *v, "pivot");
    s_.params.add_relation(std::move(eq), piv);
  }

  void group(const std::string& head, const std::string& body) {
    Header h = parse_header(head, true);
    h.allow({"vars", "pivot"});
    auto vars = split(h.need("vars"), ',');
    check_symbols(vars, "group " + h.name);
    PPoly eq = parse_ppoly(body, s_.field, vars);
    std::optional<std::size_t> piv;
    if (auto v = h.get("pivot")) piv = index_of(vars, *v, "pivot");
    claim(h.name);
    s_.groups.push_back(HypersurfaceGroup::make(h.name, std::move(vars), std::move(eq), piv));
  }

  void extension(const std::string& head, const std::string& body) {
    Header h = parse_header(head, true);
    h.allow({"center", "base"});
    const auto& center = s_.group(h.need("center"));
    const auto& base = s_.group(h.need("base"));
    std::vector<std::string> names = base.var_names;
    for (const auto& v : base.var_names) names.push_back(v + "'");
    check_symbols(names, "extension " + h.name);
    std::vector<std::optional<Poly>> comps(center.nvars());
    for (const auto& part : split(body, ';')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw InputError("extension: expected 'h<k> = <poly>'");
      const std::string lhs = trim(std::string_view(part).substr(0, eq));
      std::size_t k = 0;
      if (lhs.size() < 2 || lhs[0] != 'h' || !std::all_of(lhs.begin() + 1, lhs.end(), ::isdigit) ||
          (k = std::stoul(lhs.substr(1))) < 1 || k > comps.size())
        throw InputError("extension: component must be h1..h" + std::to_string(comps.size()));
      if (comps[k - 1]) throw InputError("extension: " + lhs + " given twice");
      comps[k - 1] = parse_poly(part.substr(eq + 1), s_.field, names);
    }
    std::vector<Poly> hs;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      if (!comps[k]) throw InputError("extension: missing h" + std::to_string(k + 1));
      hs.push_back(*comps[k]);
    }
    claim(h.name);
    s_.extensions.push_back(CocycleExtension::make(h.name, center, base, std::move(hs)));
  }

  void map(const std::string& head, const std::string& body) {
    Header h = parse_header(head, true);
    h.allow({"from", "to"});
    Endpoint src = s_.endpoint(h.need("from"));
    Endpoint dst = s_.endpoint(h.need("to"));
    std::vector<std::string> syms = src.var_names();
    syms.insert(syms.end(), s_.params.names.begin(), s_.params.names.end());
    check_symbols(syms, "map " + h.name);
    std::vector<std::optional<ParamPPoly>> coords(dst.nvars());
    for (const auto& part : split(body, ';')) {
      const auto arrow = part.find("->");
      if (arrow == std::string::npos) throw InputError("map: expected '<target variable> -> <p-polynomial>'");
      const std::string lhs = trim(std::string_view(part).substr(0, arrow));
      const std::size_t t = index_of(dst.var_names(), lhs, "target variable");
      if (coords[t]) throw InputError("map: coordinate " + lhs + " given twice");
      coords[t] = parse_param_ppoly(part.substr(arrow + 2), s_.field, src.var_names(), s_.params.names);
    }
    std::vector<ParamPPoly> cs;
    for (std::size_t t = 0; t < coords.size(); ++t) {
      if (!coords[t]) throw InputError("map: missing coordinate " + dst.var_names()[t]);
      cs.push_back(*coords[t]);
    }
    claim(h.name);
    s_.maps.push_back(PPolyMap::make(h.name, std::move(src), std::move(dst), std::move(cs)));
  }

  Session s_;
  std::set<std::string> names_;
};

}  // namespace

Session parse_session(std::string_view text) { return Loader().load(text); }

Session load_session(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_session(os.str());
}

}  // namespace wound
