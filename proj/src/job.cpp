#include "qdeform/job.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "qdeform/expr.hpp"

namespace qdeform {

namespace {

// ---- built-in presets -----------------------------------------------------

JobSpec make_sl2() {
  JobSpec job;
  job.field = Field::rational_functions();
  Scalar q = Scalar::generator(job.field);
  auto G = GroupSpec::make({"K"}, {});
  auto K = GroupElement::generator(G, 0);
  std::vector<Letter> letters = {
      {"e", 1, K, Character(G, {q.pow(2)})},
      {"f", 0, K, Character(G, {q.pow(-2)})},
  };
  job.datum = std::make_shared<YDDatum>(
      G, std::vector<std::string>{"minus", "plus"}, std::move(letters));
  job.lambda.set(*job.datum, 0, 1, (q - q.pow(-1)).inverse());
  job.degree = 6;
  return job;
}

JobSpec make_sl3() {
  JobSpec job;
  job.field = Field::rational_functions();
  Scalar q = Scalar::generator(job.field);
  auto G = GroupSpec::make({"K1", "K2"}, {});
  const int A[2][2] = {{2, -1}, {-1, 2}};
  std::vector<Letter> letters;
  for (int j = 0; j < 2; ++j)
    letters.push_back({"e" + std::to_string(j + 1), 1,
                       GroupElement::generator(G, j),
                       Character(G, {q.pow(A[0][j]), q.pow(A[1][j])})});
  for (int j = 0; j < 2; ++j)
    letters.push_back({"f" + std::to_string(j + 1), 0,
                       GroupElement::generator(G, j),
                       Character(G, {q.pow(-A[0][j]), q.pow(-A[1][j])})});
  job.datum = std::make_shared<YDDatum>(
      G, std::vector<std::string>{"minus", "plus"}, std::move(letters));
  Scalar c = (q - q.pow(-1)).inverse();
  job.lambda.set(*job.datum, job.datum->letter_index("e1"),
                 job.datum->letter_index("f1"), c);
  job.lambda.set(*job.datum, job.datum->letter_index("e2"),
                 job.datum->letter_index("f2"), c);
  for (auto [i, j] : {std::pair{"e1", "e2"}, {"e2", "e1"}, {"f1", "f2"},
                      {"f2", "f1"}})
    job.component_relations.push_back(serre_element(
        job.datum, job.datum->letter_index(i), job.datum->letter_index(j),
        -1));
  job.degree = 6;
  return job;
}

JobSpec make_uq_sl2_n5() {
  JobSpec job;
  job.field = Field::cyclotomic(5);
  Scalar z = Scalar::generator(job.field);
  auto G = GroupSpec::make({}, {{"K", 5}});
  auto K = GroupElement::generator(G, 0);
  std::vector<Letter> letters = {
      {"e", 1, K, Character(G, {z.pow(2)})},
      {"f", 0, K, Character(G, {z.pow(-2)})},
  };
  job.datum = std::make_shared<YDDatum>(
      G, std::vector<std::string>{"minus", "plus"}, std::move(letters));
  job.lambda.set(*job.datum, 0, 1, (z - z.pow(-1)).inverse());
  job.component_relations.push_back(parse_expression(job.datum, "e^5"));
  job.component_relations.push_back(parse_expression(job.datum, "f^5"));
  job.degree = 10;
  return job;
}

// One component alone, as the free braided algebra on V_comp: the primitives
// command regenerates the component's defining relations from here.
JobSpec make_plus_part(const JobSpec& full, const std::string& comp) {
  JobSpec job;
  job.field = full.field;
  std::vector<Letter> letters;
  int keep = -1;
  for (size_t k = 0; k < full.datum->components().size(); ++k)
    if (full.datum->components()[k] == comp) keep = int(k);
  for (const auto& l : full.datum->letters())
    if (l.component == keep) letters.push_back({l.name, 0, l.g, l.chi});
  job.datum = std::make_shared<YDDatum>(
      full.datum->group(), std::vector<std::string>{comp}, std::move(letters));
  job.degree = full.degree;
  return job;
}

// ---- config file loader ----------------------------------------------------

struct ConfigError : error {
  ConfigError(const std::string& msg, int line)
      : error("config line " + std::to_string(line) + ": " + msg) {}
};

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// ["a", "b:5"] -> {"a", "b:5"}
std::vector<std::string> parse_list(const std::string& s, int line) {
  std::string t = strip(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ConfigError("expected a [...] list", line);
  t = t.substr(1, t.size() - 2);
  std::vector<std::string> out;
  std::string cur;
  for (char c : t) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!strip(cur).empty() || !out.empty()) out.push_back(cur);
  std::vector<std::string> clean;
  for (auto& e : out) {
    std::string v = strip(e);
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
      v = v.substr(1, v.size() - 2);
    if (!v.empty()) clean.push_back(v);
  }
  return clean;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"sl2",       "sl2-lambda", "sl3",      "sl3-lambda",
          "uq-sl2-N5", "uq-sl2-N5-lambda", "sl2-plus", "sl3-plus"};
}

JobSpec load_preset(const std::string& name) {
  std::string base = name;
  bool with_lambda = false;
  const std::string suffix = "-lambda";
  if (base.size() > suffix.size() &&
      base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
    with_lambda = true;
    base = base.substr(0, base.size() - suffix.size());
  }
  JobSpec job;
  if (base == "sl2") {
    job = make_sl2();
  } else if (base == "sl3") {
    job = make_sl3();
  } else if (base == "uq-sl2-N5") {
    job = make_uq_sl2_n5();
  } else if (base == "sl2-plus") {
    job = make_plus_part(make_sl2(), "plus");
  } else if (base == "sl3-plus") {
    job = make_plus_part(make_sl3(), "plus");
  } else {
    throw error("unknown preset '" + name + "'");
  }
  job.name = name;
  job.use_lambda_rules = with_lambda;
  auto rep = validate(*job.datum, job.lambda);
  if (!rep.pass) throw error("preset failed validation:\n" + rep.str());
  return job;
}

JobSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot read spec file '" + path + "'");

  JobSpec job;
  job.name = path;
  std::string section;
  int lineno = 0;

  // letter/link sections are accumulated, then resolved in order
  struct LetterDecl {
    std::string name, component, g;
    std::vector<std::string> chi;
    int line;
  };
  struct LinkDecl {
    std::string i, j, value;
    int line;
  };
  std::string field_kind = "rational-function";
  int field_order = 0;
  std::vector<std::string> free_names;
  std::vector<std::pair<std::string, long>> torsion;
  std::vector<std::string> components;
  std::vector<LetterDecl> letter_decls;
  std::vector<LinkDecl> link_decls;
  std::vector<std::pair<std::string, int>> relation_srcs;
  int degree = 6;
  bool lambda_rules = false;

  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = t.substr(1, t.size() - 2);
      if (section == "letter") letter_decls.push_back({"", "", "", {}, lineno});
      if (section == "link") link_decls.push_back({"", "", "", lineno});
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected 'key = value'", lineno);
    std::string key = strip(t.substr(0, eq));
    std::string value = strip(t.substr(eq + 1));

    if (section == "field") {
      if (key == "kind")
        field_kind = value;
      else if (key == "order")
        field_order = std::stoi(value);
      else
        throw ConfigError("unknown field key '" + key + "'", lineno);
    } else if (section == "group") {
      if (key == "free") {
        free_names = parse_list(value, lineno);
      } else if (key == "torsion") {
        for (const auto& e : parse_list(value, lineno)) {
          size_t colon = e.find(':');
          if (colon == std::string::npos)
            throw ConfigError("torsion entries look like \"name:order\"",
                              lineno);
          torsion.emplace_back(strip(e.substr(0, colon)),
                               std::stol(e.substr(colon + 1)));
        }
      } else {
        throw ConfigError("unknown group key '" + key + "'", lineno);
      }
    } else if (section == "component") {
      if (key == "order")
        components = parse_list(value, lineno);
      else
        throw ConfigError("unknown component key '" + key + "'", lineno);
    } else if (section == "letter") {
      auto& decl = letter_decls.back();
      if (key == "name")
        decl.name = value;
      else if (key == "component")
        decl.component = value;
      else if (key == "g")
        decl.g = value;
      else if (key == "chi")
        decl.chi = parse_list(value, lineno);
      else
        throw ConfigError("unknown letter key '" + key + "'", lineno);
    } else if (section == "link") {
      auto& decl = link_decls.back();
      if (key == "i")
        decl.i = value;
      else if (key == "j")
        decl.j = value;
      else if (key == "value")
        decl.value = value;
      else
        throw ConfigError("unknown link key '" + key + "'", lineno);
    } else if (section == "relations") {
      if (key == "rel")
        relation_srcs.emplace_back(value, lineno);
      else
        throw ConfigError("unknown relations key '" + key + "'", lineno);
    } else if (section == "options") {
      if (key == "degree")
        degree = std::stoi(value);
      else if (key == "lambda-rules")
        lambda_rules = (value == "true" || value == "1");
      else
        throw ConfigError("unknown options key '" + key + "'", lineno);
    } else {
      throw ConfigError("declaration outside any section", lineno);
    }
  }

  if (field_kind == "rational-function") {
    job.field = Field::rational_functions();
  } else if (field_kind == "cyclotomic") {
    if (field_order < 1)
      throw error("config: cyclotomic field needs order = N");
    job.field = Field::cyclotomic(field_order);
  } else if (field_kind == "rational") {
    job.field = Field::rationals();
  } else {
    throw error("config: unknown field kind '" + field_kind + "'");
  }
  if (components.empty()) throw error("config: no [component] order given");

  auto spec = GroupSpec::make(free_names, torsion);
  std::vector<Letter> letters;
  for (const auto& decl : letter_decls) {
    if (decl.name.empty() || decl.component.empty())
      throw ConfigError("letter needs name and component", decl.line);
    int comp = -1;
    for (size_t k = 0; k < components.size(); ++k)
      if (components[k] == decl.component) comp = int(k);
    if (comp < 0)
      throw ConfigError("undeclared component '" + decl.component + "'",
                        decl.line);
    if (static_cast<int>(decl.chi.size()) != spec->rank())
      throw ConfigError("chi needs one value per group generator", decl.line);
    std::vector<Scalar> values;
    for (const auto& s : decl.chi) values.push_back(parse_scalar(job.field, s));
    GroupElement g = decl.g.empty()
                         ? GroupElement::identity(spec)
                         : parse_group_element(spec, decl.g);
    letters.push_back(
        {decl.name, comp, g, Character(spec, values, job.field)});
  }
  job.datum = std::make_shared<YDDatum>(spec, components, std::move(letters));

  for (const auto& decl : link_decls) {
    int i = job.datum->letter_index(decl.i);
    int j = job.datum->letter_index(decl.j);
    if (i < 0 || j < 0)
      throw ConfigError("link references an unknown letter", decl.line);
    job.lambda.set(*job.datum, i, j, parse_scalar(job.field, decl.value));
  }
  for (const auto& [src, ln] : relation_srcs) {
    try {
      job.component_relations.push_back(parse_expression(job.datum, src));
    } catch (const parse_error& e) {
      throw ConfigError(std::string("bad relation: ") + e.what(), ln);
    }
  }
  if (degree < 2) throw error("config: degree bound must be >= 2");
  job.degree = degree;
  job.use_lambda_rules = lambda_rules;

  auto rep = validate(*job.datum, job.lambda);
  if (!rep.pass) throw error("spec failed validation:\n" + rep.str());
  return job;
}

JobSpec load_spec(const std::string& name_or_path) {
  auto names = preset_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end())
    return load_preset(name_or_path);
  return load_spec_file(name_or_path);
}

}  // namespace qdeform
