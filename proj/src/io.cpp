#include "dix/io.hpp"

#include <regex>
#include <sstream>

namespace dix::io {

using springer::Partition;
using springer::SpringerRow;

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "latex") return Format::Latex;
  throw Error(Errc::UnsupportedFormat, "unknown format '" + name + "'");
}

namespace {

template <class F>
auto parsing(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Json ints(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

std::vector<int> ints_from(const Json& j) { return j.get<std::vector<int>>(); }

std::string dump(const Json& j, int indent) { return j.dump(indent); }

[[noreturn]] void unsupported(const char* what, Format f) {
  const char* names[] = {"json", "csv", "latex"};
  throw Error(Errc::UnsupportedFormat,
              std::string(what) + " has no " + names[static_cast<int>(f)] + " encoding");
}

const char* type_name(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
  }
  return "?";
}

RootType type_from(const std::string& s) {
  if (s == "A") return RootType::A;
  if (s == "B") return RootType::B;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  throw Error(Errc::ParseError, "bad root type '" + s + "'");
}

std::string latex_text(const std::string& plain) {
  std::string s = std::regex_replace(plain, std::regex(R"(X(\d+))"), "X_{$1}");
  return std::regex_replace(s, std::regex(R"(\^(\d+))"), "^{$1}");
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  return parsing([&] {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    return parse_rational(j.get<std::string>());
  });
}

Json to_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& x : w.c) a.push_back(to_json(x));
  return a;
}

Weight weight_from_json(const Json& j) {
  return parsing([&] {
    if (!j.is_array()) throw Error(Errc::ParseError, "weight must be an array");
    Weight w;
    for (const auto& x : j) w.c.push_back(rational_from_json(x));
    return w;
  });
}

Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exp"] = ints(e);
    t["coeff"] = to_json(c);
    terms.push_back(t);
  }
  Json j;
  j["vars"] = p.nvars();
  j["terms"] = terms;
  return j;
}

MultiPoly poly_from_json(const Json& j) {
  return parsing([&] {
    const int n = j.at("vars").get<int>();
    if (n < 0) throw Error(Errc::ParseError, "negative arity");
    MultiPoly p(n);
    for (const auto& t : j.at("terms")) {
      const Exponent e = ints_from(t.at("exp"));
      if (static_cast<int>(e.size()) != n) throw Error(Errc::ParseError, "exponent arity");
      for (int x : e) {
        if (x < 0) throw Error(Errc::ParseError, "negative exponent");
      }
      p.add_term(e, rational_from_json(t.at("coeff")));
    }
    return p;
  });
}

Json to_json(const VirtualKModule& v) {
  Json terms = Json::array();
  for (const auto& [g, m] : v.terms) {
    Json t;
    t["gamma"] = to_json(g);
    t["mult"] = m;
    terms.push_back(t);
  }
  Json j;
  j["terms"] = terms;
  return j;
}

VirtualKModule virtual_from_json(const Json& j) {
  return parsing([&] {
    VirtualKModule v;
    for (const auto& t : j.at("terms")) v.add(weight_from_json(t.at("gamma")), t.at("mult").get<long long>());
    return v;
  });
}

Json to_json(const IndexFamily& f) {
  Json coeffs = Json::array();
  for (const auto& [w, a] : f.coeffs) {
    Json t;
    t["w"] = ints(w.encode());
    t["a"] = a;
    coeffs.push_back(t);
  }
  Json j;
  j["base"] = to_json(f.base);
  j["coeffs"] = coeffs;
  return j;
}

IndexFamily family_from_json(const Json& j) {
  return parsing([&] {
    IndexFamily f;
    f.base = weight_from_json(j.at("base"));
    for (const auto& t : j.at("coeffs")) {
      const auto code = ints_from(t.at("w"));
      if (code.size() != f.base.size()) throw Error(Errc::ParseError, "Weyl element arity");
      f.add(WeylElement::decode(code), t.at("a").get<long long>());
    }
    return f;
  });
}

Json to_json(const LimitReport& r) {
  Json j;
  j["d"] = r.d;
  j["status"] = r.status == LimitStatus::Ok ? "ok" : "d-underflow";
  j["value"] = to_json(r.value);
  j["expected"] = to_json(r.expected);
  j["match"] = r.match;
  return j;
}

LimitReport limit_from_json(const Json& j) {
  return parsing([&] {
    LimitReport r;
    r.d = j.at("d").get<int>();
    const auto st = j.at("status").get<std::string>();
    if (st != "ok" && st != "d-underflow") throw Error(Errc::ParseError, "bad status '" + st + "'");
    r.status = st == "ok" ? LimitStatus::Ok : LimitStatus::DUnderflow;
    r.value = rational_from_json(j.at("value"));
    r.expected = rational_from_json(j.at("expected"));
    r.match = j.at("match").get<bool>();
    return r;
  });
}

Json to_json(const SpringerRow& row) {
  Json j;
  j["group"] = row.group.name();
  j["generator"] = to_json(row.generator);
  j["generator_text"] = row.generator_text;
  Json sigma;
  if (row.sigma.type_a) sigma["partition"] = ints(*row.sigma.type_a);
  if (row.sigma.bipartition) {
    sigma["alpha"] = ints(row.sigma.bipartition->alpha);
    sigma["beta"] = ints(row.sigma.bipartition->beta);
  }
  j["sigma_k"] = sigma;
  if (row.symbol) {
    j["symbol"] = {{"type", type_name(row.symbol->type)},
                   {"top", ints(row.symbol->top)},
                   {"bottom", ints(row.symbol->bottom)}};
  } else {
    j["symbol"] = nullptr;
  }
  j["springer"] = row.is_springer;
  j["partition"] = row.partition ? ints(*row.partition) : Json(nullptr);
  j["orbit_dim"] = row.orbit_dim ? Json(*row.orbit_dim) : Json(nullptr);
  j["two_orbits"] = row.two_orbits;
  j["generator_degree"] = row.generator_degree;
  j["num_compact_positive"] = row.num_compact_positive;
  j["num_positive"] = row.num_positive;
  return j;
}

SpringerRow springer_row_from_json(const Json& j) {
  return parsing([&] {
    SpringerRow row;
    row.group = parse_group(j.at("group").get<std::string>());
    row.generator = poly_from_json(j.at("generator"));
    row.generator_text = j.at("generator_text").get<std::string>();
    const auto& sigma = j.at("sigma_k");
    if (sigma.contains("partition")) row.sigma.type_a = ints_from(sigma.at("partition"));
    if (sigma.contains("alpha")) {
      row.sigma.bipartition =
          springer::Bipartition{ints_from(sigma.at("alpha")), ints_from(sigma.at("beta"))};
    }
    const auto& sym = j.at("symbol");
    if (!sym.is_null()) {
      row.symbol = springer::Symbol{ints_from(sym.at("top")), ints_from(sym.at("bottom")),
                                    type_from(sym.at("type").get<std::string>())};
    }
    row.is_springer = j.at("springer").get<bool>();
    if (!j.at("partition").is_null()) row.partition = ints_from(j.at("partition"));
    if (!j.at("orbit_dim").is_null()) row.orbit_dim = j.at("orbit_dim").get<long>();
    row.two_orbits = j.at("two_orbits").get<bool>();
    row.generator_degree = j.at("generator_degree").get<int>();
    row.num_compact_positive = j.at("num_compact_positive").get<int>();
    row.num_positive = j.at("num_positive").get<int>();
    return row;
  });
}

Json to_json(const SuiteReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
  Json j;
  j["suite"] = r.suite;
  j["all_pass"] = r.all_pass;
  j["cases"] = cases;
  return j;
}

SuiteReport suite_report_from_json(const Json& j) {
  return parsing([&] {
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("cases")) {
      r.add(c.at("id").get<std::string>(), c.at("pass").get<bool>(),
            c.at("detail").get<std::string>());
    }
    if (r.all_pass != j.at("all_pass").get<bool>()) {
      throw Error(Errc::ParseError, "all_pass disagrees with the cases");
    }
    return r;
  });
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  if (quoted) throw Error(Errc::ParseError, "unterminated quote");
  return out;
}

std::string latex(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (int x : e) constant = constant && x == 0;
    if (a != 1 || constant) {
      if (is_integral(a)) {
        os << a.get_str();
      } else {
        os << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
      }
    }
    bool need_space = a != 1 && !constant;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_space) os << ' ';
      os << "X_{" << i + 1 << '}';
      if (e[i] > 1) os << "^{" << e[i] << '}';
      need_space = true;
    }
  }
  return os.str();
}

std::string latex_group(const GroupId& g) {
  const auto pq = std::to_string(g.p) + "," + std::to_string(g.q);
  switch (g.family) {
    case Family::SU: return "SU(" + pq + ")";
    case Family::SOeEvenOdd:
      return "SO_{e}(" + std::to_string(2 * g.p) + "," + std::to_string(2 * g.q + 1) + ")";
    case Family::Sp2nR: return "Sp(" + std::to_string(2 * g.p) + ",\\mathbb{R})";
    case Family::SpPQ: return "Sp(" + pq + ")";
    case Family::SOeEvenEven:
      return "SO_{e}(" + std::to_string(2 * g.p) + "," + std::to_string(2 * g.q) + ")";
    case Family::SOStar: return "SO^{*}(" + std::to_string(2 * g.p) + ")";
  }
  return g.name();
}

std::string emit(const MultiPoly& p, Format f, int indent) {
  if (f == Format::Json) return dump(to_json(p), indent);
  if (f == Format::Latex) return latex(p);
  unsupported("polynomial", f);
}

std::string emit(const VirtualKModule& v, Format f, int indent) {
  if (f == Format::Json) return dump(to_json(v), indent);
  unsupported("virtual module", f);
}

std::string emit(const IndexFamily& fam, Format f, int indent) {
  if (f == Format::Json) return dump(to_json(fam), indent);
  unsupported("index family", f);
}

std::string emit(const LimitReport& r, Format f, int indent) {
  if (f == Format::Json) return dump(to_json(r), indent);
  unsupported("limit report", f);
}

namespace {

const char* kSpringerCsvHeader = "group,generator,springer,partition,dim";

std::string csv_line(const SpringerRow& row) {
  std::string line = csv_field(row.group.name()) + "," + csv_field(row.generator_text) + ",";
  line += row.is_springer ? "Yes" : "No";
  line += "," + (row.partition ? csv_field(springer::to_list_string(*row.partition)) : "");
  line += "," + (row.orbit_dim ? std::to_string(*row.orbit_dim) : "");
  return line;
}

std::string latex_line(const SpringerRow& row) {
  std::string gen = row.generator_text == "1" ? "\\text{trivial}" : latex_text(row.generator_text);
  std::string line = "$" + latex_group(row.group) + "$ & $" + gen + "$ & ";
  line += row.is_springer ? "Yes" : "No";
  line += " & ";
  line += row.partition ? "$" + latex_text(springer::to_string(*row.partition)) + "$" : "--";
  line += " & ";
  line += row.orbit_dim ? "$" + std::to_string(*row.orbit_dim) + "$" : "--";
  return line + " \\\\";
}

}  // namespace

std::string emit(const SpringerRow& row, Format f, int indent) {
  switch (f) {
    case Format::Json: return dump(to_json(row), indent);
    case Format::Csv: return csv_line(row);
    case Format::Latex: return latex_line(row);
  }
  unsupported("row", f);
}

std::string emit(const std::vector<SpringerRow>& rows, Format f, int indent) {
  std::ostringstream os;
  switch (f) {
    case Format::Json: {
      Json a = Json::array();
      for (const auto& r : rows) a.push_back(to_json(r));
      return dump(a, indent);
    }
    case Format::Csv:
      os << kSpringerCsvHeader << '\n';
      for (const auto& r : rows) os << csv_line(r) << '\n';
      return os.str();
    case Format::Latex:
      os << "\\begin{tabular}{lllll}\n\\hline\n"
         << "$G$ & Generator for $\\sigma_K$ & Springer? & $\\mathcal{O}_K$ & "
            "$\\dim_{\\mathbb{C}} \\mathcal{O}_K$ \\\\\n\\hline\n";
      for (const auto& r : rows) os << latex_line(r) << '\n';
      os << "\\hline\n\\end{tabular}\n";
      return os.str();
  }
  unsupported("table", f);
}

std::string emit(const SuiteReport& r, Format f, int indent) {
  if (f == Format::Json) return dump(to_json(r), indent);
  if (f == Format::Csv) {
    std::ostringstream os;
    os << "suite,id,pass,detail\n";
    for (const auto& c : r.cases) {
      os << csv_field(r.suite) << ',' << csv_field(c.id) << ',' << (c.pass ? "true" : "false") << ','
         << csv_field(c.detail) << '\n';
    }
    return os.str();
  }
  unsupported("suite report", f);
}

}  // namespace dix::io
