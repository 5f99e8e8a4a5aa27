#include "polyrep/io.hpp"

#include <fstream>
#include <sstream>

#include "polyrep/errors.hpp"

namespace polyrep {

using nlohmann::json;

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_count(const Token& t, std::size_t line, const char* what) {
  std::size_t value = 0;
  if (t.text.empty() || t.text.size() > 9) throw ParseError(line, t.column, std::string("malformed ") + what);
  for (char ch : t.text) {
    if (ch < '0' || ch > '9') throw ParseError(line, t.column, std::string("malformed ") + what);
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  return value;
}

}  // namespace

HPolytope parse_hrep(std::string_view text) {
  HPolytope h;
  std::size_t expected_rows = 0;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens.size() != 2) {
        throw ParseError(line_no, tokens.front().column, "header must be \"d m\"");
      }
      h.dim = parse_count(tokens[0], line_no, "dimension");
      expected_rows = parse_count(tokens[1], line_no, "row count");
      if (h.dim == 0) throw ParseError(line_no, tokens[0].column, "dimension must be positive");
      have_header = true;
    } else {
      if (h.rows.size() == expected_rows) {
        throw ParseError(line_no, tokens.front().column,
                         "unexpected data after " + std::to_string(expected_rows) + " rows");
      }
      if (tokens.size() != h.dim + 1) {
        const std::size_t col = tokens.size() > h.dim + 1 ? tokens[h.dim + 1].column : line.size() + 1;
        throw ParseError(line_no, col,
                         "dimension mismatch: expected " + std::to_string(h.dim + 1) + " entries, got " +
                             std::to_string(tokens.size()));
      }
      HRow row;
      for (std::size_t j = 0; j < tokens.size(); ++j) {
        Rat value;
        std::string error;
        if (!try_parse_rat(tokens[j].text, value, error)) throw ParseError(line_no, tokens[j].column, error);
        if (j < h.dim) {
          row.normal.push_back(value);
        } else {
          row.rhs = value;
        }
      }
      h.rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, 1, "missing \"d m\" header");
  if (h.rows.size() != expected_rows) {
    throw ParseError(line_no, 1,
                     "expected " + std::to_string(expected_rows) + " rows, got " + std::to_string(h.rows.size()));
  }
  return h;
}

std::string emit_hrep(const HPolytope& h) {
  std::ostringstream out;
  out << h.dim << ' ' << h.rows.size() << '\n';
  for (const auto& row : h.rows) {
    for (const auto& a : row.normal) out << a.get_str() << ' ';
    out << row.rhs.get_str() << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::usage, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::usage, "cannot write " + path);
  out << contents;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  throw Error(ErrorKind::usage, "unknown format " + std::string(name));
}

namespace {

json rat_list(const RatVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError(0, 0, "invalid document: " + what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

Rat rat_of(const json& v) {
  if (!v.is_string()) schema_error("rationals must be strings");
  Rat q;
  std::string error;
  if (!try_parse_rat(v.get<std::string>(), q, error)) schema_error(error);
  return q;
}

RatVec rats_of(const json& v, std::size_t n) {
  if (!v.is_array() || v.size() != n) schema_error("vector of length " + std::to_string(n) + " expected");
  RatVec out;
  for (const auto& e : v) out.push_back(rat_of(e));
  return out;
}

template <typename T>
T uint_of(const json& v) {
  if (!v.is_number_unsigned()) schema_error("nonnegative integer expected");
  return v.get<T>();
}

}  // namespace

json prep_to_json(const PRepresentation& prep) {
  json doc;
  doc["format"] = "polyrep-prep";
  doc["version"] = 1;
  doc["convention"] = kConvention;
  doc["dimension"] = prep.dim;
  doc["shift"] = rat_list(prep.shift);
  json products = json::array();
  for (const auto& pp : prep.products) {
    json factors = json::array();
    for (const auto& f : pp.factors) factors.push_back({{"c0", f.constant.get_str()}, {"coeffs", rat_list(f.coeffs)}});
    products.push_back({{"id", pp.id()}, {"k", pp.k}, {"w", pp.weights}, {"factors", factors}});
  }
  doc["products"] = products;
  json terms = json::array();
  for (const auto& t : prep.epsilon.terms)
    terms.push_back({{"a", rat_list(t.normal)}, {"b", t.rhs.get_str()}, {"h_minus", t.h_minus.get_str()}});
  doc["epsilon"] = {{"id", "p_eps"},
                    {"weight", prep.epsilon.weight.get_str()},
                    {"two_p", prep.epsilon.two_p},
                    {"shift", rat_list(prep.epsilon.shift)},
                    {"terms", terms}};
  doc["metadata"] = {{"mu", prep.metadata.mu},
                     {"source_hash", prep.metadata.source_hash},
                     {"eps_bar", prep.metadata.eps_bar.get_str()},
                     {"exponent_p", prep.metadata.exponent_p}};
  return doc;
}

PRepresentation prep_from_json(const json& doc) {
  if (!doc.is_object()) schema_error("top level must be an object");
  if (!field(doc, "convention").is_string() || field(doc, "convention").get<std::string>() != kConvention) {
    schema_error(std::string("convention marker must be \"") + kConvention + "\"");
  }
  PRepresentation prep;
  prep.dim = uint_of<std::size_t>(field(doc, "dimension"));
  const std::size_t d = prep.dim;
  prep.shift = rats_of(field(doc, "shift"), d);
  const auto& products = field(doc, "products");
  if (!products.is_array()) schema_error("products must be an array");
  for (const auto& p : products) {
    ProductPoly pp;
    pp.k = uint_of<std::size_t>(field(p, "k"));
    const auto& w = field(p, "w");
    if (!w.is_array()) schema_error("w must be an array");
    for (const auto& e : w) pp.weights.push_back(uint_of<std::uint64_t>(e));
    const auto& factors = field(p, "factors");
    if (!factors.is_array()) schema_error("factors must be an array");
    for (const auto& f : factors) {
      // Named locals: g++ 11 leaks aggregate temporaries when a later member throws.
      LinearForm form;
      form.constant = rat_of(field(f, "c0"));
      form.coeffs = rats_of(field(f, "coeffs"), d);
      pp.factors.push_back(std::move(form));
    }
    prep.products.push_back(std::move(pp));
  }
  const auto& eps = field(doc, "epsilon");
  prep.epsilon.weight = rat_of(field(eps, "weight"));
  prep.epsilon.two_p = uint_of<unsigned long>(field(eps, "two_p"));
  prep.epsilon.shift = rats_of(field(eps, "shift"), d);
  const auto& terms = field(eps, "terms");
  if (!terms.is_array()) schema_error("terms must be an array");
  for (const auto& t : terms) {
    EpsilonTerm term;
    term.normal = rats_of(field(t, "a"), d);
    term.rhs = rat_of(field(t, "b"));
    term.h_minus = rat_of(field(t, "h_minus"));
    prep.epsilon.terms.push_back(std::move(term));
  }
  const auto& meta = field(doc, "metadata");
  prep.metadata.mu = uint_of<std::size_t>(field(meta, "mu"));
  if (!field(meta, "source_hash").is_string()) schema_error("source_hash must be a string");
  prep.metadata.source_hash = field(meta, "source_hash").get<std::string>();
  prep.metadata.eps_bar = rat_of(field(meta, "eps_bar"));
  prep.metadata.exponent_p = uint_of<unsigned long>(field(meta, "exponent_p"));
  return prep;
}

PRepresentation parse_prep_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(0, e.byte, e.what());
  }
  return prep_from_json(doc);
}

std::string display_name(const ProductPoly& pp) {
  if (pp.weights.size() <= 2) return "p_" + std::to_string(pp.k);
  std::string s = "p_{" + std::to_string(pp.k) + ",(";
  for (std::size_t i = 0; i < pp.weights.size(); ++i) s += (i ? "," : "") + std::to_string(pp.weights[i]);
  return s + ")}";
}

std::string emit_prep_text(const PRepresentation& prep) {
  std::ostringstream out;
  out << "# P-representation in dimension " << prep.dim << ": " << prep.polynomial_count() << " polynomials, "
      << kConvention << '\n';
  out << "# eps_bar = " << prep.metadata.eps_bar.get_str() << ", p = " << prep.metadata.exponent_p
      << ", source " << prep.metadata.source_hash << '\n';
  for (const auto& pp : prep.products) {
    out << display_name(pp) << "(x) = ";
    for (const auto& f : pp.factors) out << f.to_string();
    out << '\n';
  }
  const auto& ep = prep.epsilon;
  out << "p_eps(x) = ";
  for (std::size_t i = 0; i < ep.terms.size(); ++i) {
    const auto& t = ep.terms[i];
    const Rat den = t.rhs + t.h_minus;
    // Numerator of v_i with the shift folded back in.
    const LinearForm num{-2 * dot(t.normal, ep.shift) - t.rhs + t.h_minus, scale(t.normal, 2)};
    out << (i ? " + " : "") << ep.weight.get_str() << "*[" << num.to_string() << '/' << den.get_str() << "]^"
        << ep.two_p;
  }
  out << '\n';
  return out.str();
}

std::string emit_prep(const PRepresentation& prep, Format format) {
  return format == Format::json ? prep_to_json(prep).dump(2) + "\n" : emit_prep_text(prep);
}

json polys_to_json(const std::vector<SparsePoly>& polys, const std::vector<std::string>& ids) {
  json out = json::array();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    json terms = json::array();
    for (const auto& [m, c] : polys[i].terms()) terms.push_back({{"exp", m}, {"coef", c.get_str()}});
    out.push_back({{"id", i < ids.size() ? ids[i] : "q_" + std::to_string(i + 1)},
                   {"vars", polys[i].num_vars()},
                   {"terms", terms}});
  }
  return out;
}

std::vector<SparsePoly> polys_from_json(const json& doc, std::vector<std::string>* ids) {
  if (!doc.is_array()) schema_error("polynomial list must be an array");
  std::vector<SparsePoly> out;
  for (const auto& p : doc) {
    const auto n = uint_of<std::size_t>(field(p, "vars"));
    SparsePoly poly(n);
    for (const auto& t : field(p, "terms")) {
      const auto& e = field(t, "exp");
      if (!e.is_array() || e.size() != n) schema_error("exponent vector length mismatch");
      Monomial m;
      for (const auto& x : e) m.push_back(uint_of<std::uint32_t>(x));
      poly.add_term(m, rat_of(field(t, "coef")));
    }
    if (ids) ids->push_back(field(p, "id").get<std::string>());
    out.push_back(std::move(poly));
  }
  return out;
}

std::string emit_polys_text(const std::vector<SparsePoly>& polys, const std::vector<std::string>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < polys.size(); ++i)
    out << (i < ids.size() ? ids[i] : "q_" + std::to_string(i + 1)) << "(x) = " << polys[i].to_string() << '\n';
  return out.str();
}

}  // namespace polyrep
