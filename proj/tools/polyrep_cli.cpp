// Command-line front end: every subcommand is a thin wrapper over the library.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "polyrep/construction.hpp"
#include "polyrep/errors.hpp"
#include "polyrep/grid.hpp"
#include "polyrep/io.hpp"
#include "polyrep/lifts.hpp"
#include "polyrep/projective.hpp"
#include "polyrep/verify.hpp"

using namespace polyrep;
using nlohmann::json;

namespace {

constexpr int kExitDisagreement = 3;

struct Globals {
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  std::string rho = "exact";
  std::string format;
  std::string output;
};

Format format_or(const Globals& g, Format fallback) { return g.format.empty() ? fallback : parse_format(g.format); }

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
  } else {
    write_file(g.output, text);
  }
}

RhoMode rho_mode(const Globals& g) {
  if (g.rho == "exact") return RhoMode::exact;
  if (g.rho == "dimension") return RhoMode::dimension;
  throw Error(ErrorKind::usage, "--rho must be 'dimension' or 'exact'");
}

HPolytope load(const std::string& path) { return parse_hrep(read_file(path)); }

RatVec parse_point(const std::vector<std::string>& tokens, std::size_t d) {
  if (tokens.size() != d) {
    throw Error(ErrorKind::usage, "point needs " + std::to_string(d) + " coordinates, got " +
                                      std::to_string(tokens.size()));
  }
  RatVec x;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Rat q;
    std::string error;
    if (!try_parse_rat(tokens[i], q, error)) throw ParseError(1, i + 1, "coordinate: " + error);
    x.push_back(q);
  }
  return x;
}

std::optional<Rat> optional_rat(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rat(text);
}

json rats_json(const RatVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}

std::string ext_str(const ExtendedRat& e) { return e ? e->get_str() : "inf"; }

json verdict_json(const MembershipVerdict& v) {
  json viol = json::array();
  for (const auto& p : v.violated) viol.push_back({{"id", p.id}, {"value", p.value ? json(p.value->get_str()) : json()}});
  return {{"inside", v.inside}, {"violated", viol}};
}

std::string verdict_text(const std::string& label, const MembershipVerdict& v) {
  std::ostringstream out;
  out << label << ": " << (v.inside ? "inside" : "outside");
  for (const auto& p : v.violated) out << "\n  " << p.id << (p.value ? " = " + p.value->get_str() : "");
  return out.str() + "\n";
}

ConstructOptions construct_options(const Globals& g, const std::string& eps_bar, const std::string& diam_upper) {
  ConstructOptions o;
  o.metrics.rho_mode = rho_mode(g);
  o.metrics.eps_bar = optional_rat(eps_bar);
  o.metrics.diam_upper = optional_rat(diam_upper);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial representations of simple polytopes, in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Sampling seed")->default_val(0);
  app.add_option("--samples", g.samples, "Random samples for verify")->default_val(10000);
  app.add_option("--rho", g.rho, "Exponent rule: dimension|exact")->default_val("exact");
  app.add_option("--format", g.format, "Output format: json|text");
  app.add_option("-o,--output", g.output, "Write output to a file");

  std::string input;
  std::string eps_bar;
  std::string diam_upper;

  auto* validate = app.add_subcommand("validate", "Check boundedness, irredundancy and simplicity");
  validate->add_option("input", input, "H-representation file")->required();

  auto* lattice = app.add_subcommand("lattice", "Print the f-vector and all faces");
  lattice->add_option("input", input)->required();

  auto* metrics = app.add_subcommand("metrics", "Print eps_k, eps_bar, diameter bounds and p");
  metrics->add_option("input", input)->required();
  metrics->add_option("--eps-bar", eps_bar, "Override eps_bar");
  metrics->add_option("--diam-upper", diam_upper, "Override the diameter bound");

  auto* construct_cmd = app.add_subcommand("construct", "Build the P-representation");
  construct_cmd->add_option("input", input)->required();
  construct_cmd->add_option("--eps-bar", eps_bar);
  construct_cmd->add_option("--diam-upper", diam_upper);

  std::vector<std::string> point;
  std::string prep_path;
  auto* eval = app.add_subcommand("eval", "Evaluate both membership oracles at one point");
  eval->add_option("input", input)->required();
  eval->add_option("point", point, "Coordinates, e.g. 3/2 0")->required();
  eval->add_option("--prep", prep_path, "Use a stored P-representation (json)");

  auto* verify = app.add_subcommand("verify", "Equivalence test plus structural checks");
  verify->add_option("input", input)->required();
  verify->add_option("--prep", prep_path);

  std::string lift_kind;
  std::string base_kind = "cube";
  std::size_t base_dim = 2;
  std::vector<std::string> apex;
  auto* lift = app.add_subcommand("lift", "Prism or pyramid over a closed-form base");
  lift->add_option("kind", lift_kind, "prism|pyramid")->required()->check(CLI::IsMember({"prism", "pyramid"}));
  lift->add_option("--base", base_kind, "cube|simplex")->check(CLI::IsMember({"cube", "simplex"}));
  lift->add_option("--base-dim", base_dim, "Base dimension")->check(CLI::Range(1, 6));
  lift->add_option("--apex", apex, "Pyramid apex (d coordinates, last nonzero)");

  std::size_t vertex = 0;
  bool pullback = false;
  auto* projectivize = app.add_subcommand("projectivize", "Map a pointed polyhedron onto a polytope");
  projectivize->add_option("input", input)->required();
  projectivize->add_option("--vertex", vertex, "Index of the vertex sent to the origin");
  projectivize->add_flag("--pullback", pullback, "Also pull back the image's representation");

  std::size_t mu_d = 0;
  auto* mu = app.add_subcommand("mu", "Number of polynomials for dimension d");
  mu->add_option("d", mu_d)->required()->check(CLI::Range(2, 16));

  std::vector<std::string> lo, hi;
  std::string step = "1/10";
  auto* grid = app.add_subcommand("grid", "CSV of polynomial signs and membership on a grid");
  grid->add_option("input", input)->required();
  grid->add_option("--lo", lo, "Lower box corner (default: doubled bounding box)");
  grid->add_option("--hi", hi, "Upper box corner");
  grid->add_option("--step", step, "Grid step");
  grid->add_option("--prep", prep_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : static_cast<int>(ErrorKind::usage);
  }

  try {
    if (validate->parsed()) {
      const auto h = load(input);
      check_dimensions(h);
      ValidationReport report;
      std::size_t nverts = 0;
      try {
        const auto vertices = enumerate_vertices(h);
        nverts = vertices.size();
        report = validate_hrep(h, vertices);
      } catch (const ValidationError& e) {
        report.violations.push_back({ViolationKind::no_vertices, 0, {}, {}});
      }
      if (format_or(g, Format::text) == Format::json) {
        json viol = json::array();
        for (const auto& v : report.violations) viol.push_back(v.describe());
        emit(g, json{{"valid", report.valid()},
                     {"bounded", report.bounded},
                     {"irredundant", report.irredundant},
                     {"simple", report.simple},
                     {"vertices", nverts},
                     {"violations", viol}}
                        .dump(2) +
                    "\n");
      } else {
        emit(g, report.valid() ? "valid simple polytope: d=" + std::to_string(h.dim) + ", " +
                                     std::to_string(h.size()) + " facets, " + std::to_string(nverts) + " vertices\n"
                               : report.describe() + "\n");
      }
      return report.valid() ? 0 : static_cast<int>(ErrorKind::validation);
    }

    if (lattice->parsed()) {
      const auto h = load(input);
      const auto lat = validated_lattice(h);
      if (format_or(g, Format::text) == Format::json) {
        json faces = json::array();
        for (const auto& level : lat.faces_by_dim) {
          json l = json::array();
          for (const auto& f : level) l.push_back({{"facets", f.facets}, {"vertices", f.vertex_ids}});
          faces.push_back(l);
        }
        json verts = json::array();
        for (const auto& v : lat.vertices) verts.push_back({{"coords", rats_json(v.coords)}, {"facets", v.facets}});
        emit(g, json{{"f_vector", lat.f_vector()}, {"vertices", verts}, {"faces", faces}}.dump(2) + "\n");
      } else {
        std::ostringstream out;
        out << "f-vector:";
        for (auto f : lat.f_vector()) out << ' ' << f;
        out << '\n';
        for (std::size_t id = 0; id < lat.vertices.size(); ++id) {
          out << "vertex " << id << ' ' << to_string(lat.vertices[id].coords) << " facets";
          for (auto i : lat.vertices[id].facets) out << ' ' << i + 1;
          out << '\n';
        }
        for (std::size_t k = 1; k < lat.dim; ++k) {
          for (const auto& f : lat.faces(k)) {
            out << k << "-face facets";
            for (auto i : f.facets) out << ' ' << i + 1;
            out << " vertices";
            for (auto v : f.vertex_ids) out << ' ' << v;
            out << '\n';
          }
        }
        emit(g, out.str());
      }
      return 0;
    }

    if (metrics->parsed()) {
      const auto h = load(input);
      const auto lat = validated_lattice(h);
      const auto m = compute_metrics(h, lat, construct_options(g, eps_bar, diam_upper).metrics);
      if (format_or(g, Format::text) == Format::json) {
        json eps = json::array();
        for (const auto& e : m.eps_k_sq) eps.push_back(ext_str(e));
        emit(g, json{{"eps_k_sq", eps},
                     {"eps_bar", m.eps_bar.get_str()},
                     {"diam_sq", m.diam_sq.get_str()},
                     {"diam_upper", m.diam_upper.get_str()},
                     {"r_min", m.r_min.get_str()},
                     {"rho", m.rho.get_str()},
                     {"rho_mode", g.rho},
                     {"exponent_p", m.exponent_p},
                     {"shift", rats_json(m.shift)}}
                        .dump(2) +
                    "\n");
      } else {
        std::ostringstream out;
        for (std::size_t k = 0; k < m.eps_k_sq.size(); ++k) {
          out << "eps_" << k << "^2 = " << ext_str(m.eps_k_sq[k]);
          if (m.eps_k_sq[k]) out << "  (~" << to_double(*m.eps_k_sq[k]) << ")";
          out << '\n';
        }
        out << "eps_bar = " << m.eps_bar.get_str() << "\n"
            << "diam^2 = " << m.diam_sq.get_str() << ", diam_upper = " << m.diam_upper.get_str() << "\n"
            << "rho (" << g.rho << ") = " << m.rho.get_str() << "\n"
            << "p = " << m.exponent_p << " (2p = " << 2 * m.exponent_p << ")\n";
        emit(g, out.str());
      }
      return 0;
    }

    if (construct_cmd->parsed()) {
      const auto prep = construct_prep(load(input), construct_options(g, eps_bar, diam_upper));
      emit(g, emit_prep(prep, format_or(g, Format::json)));
      return 0;
    }

    if (eval->parsed()) {
      const auto h = load(input);
      const auto x = parse_point(point, h.dim);
      const auto prep = prep_path.empty() ? construct_prep(h, construct_options(g, eps_bar, diam_upper))
                                          : parse_prep_json(read_file(prep_path));
      MemberOptions opts;
      opts.all_violations = true;
      opts.values = true;
      const auto vh = member_hrep(h, x);
      const auto vp = member_prep(prep, x, opts);
      if (format_or(g, Format::text) == Format::json) {
        emit(g, json{{"point", rats_json(x)}, {"member_hrep", verdict_json(vh)}, {"member_prep", verdict_json(vp)}}
                        .dump(2) +
                    "\n");
      } else {
        emit(g, verdict_text("member_hrep", vh) + verdict_text("member_prep", vp));
      }
      return vh.inside == vp.inside ? 0 : kExitDisagreement;
    }

    if (verify->parsed()) {
      const auto h = load(input);
      const auto lat = validated_lattice(h);
      const auto prep = prep_path.empty() ? construct_prep(h, construct_options(g, eps_bar, diam_upper))
                                          : parse_prep_json(read_file(prep_path));
      const auto eq = equivalence_test(h, lat, prep, SampleConfig::with_total(g.samples, g.seed));
      const auto st = structural_checks(h, lat, prep, g.seed);
      if (format_or(g, Format::text) == Format::json) {
        json dis = json::array();
        for (const auto& d : eq.disagreements) {
          dis.push_back({{"index", d.index},
                         {"class", to_string(d.cls)},
                         {"point", rats_json(d.point)},
                         {"member_hrep", d.reference_inside},
                         {"member_prep", d.candidate_inside}});
        }
        json per = json::object();
        for (std::size_t i = 0; i < kSampleClasses; ++i) per[to_string(static_cast<SampleClass>(i))] = eq.per_class[i];
        emit(g, json{{"seed", g.seed},
                     {"samples", per},
                     {"disagreements", dis},
                     {"structural",
                      {{"facet_factor", st.facet_factor},
                       {"face_vanishing", st.face_vanishing},
                       {"epsilon_vertices", st.epsilon_vertices},
                       {"failures", st.failures}}}}
                        .dump(2) +
                    "\n");
      } else {
        std::ostringstream out;
        out << eq.summary() << '\n';
        for (const auto& d : eq.disagreements) {
          out << "  #" << d.index << ' ' << to_string(d.cls) << ' ' << to_string(d.point) << " hrep="
              << d.reference_inside << " prep=" << d.candidate_inside << '\n';
        }
        out << st.summary() << '\n';
        emit(g, out.str());
      }
      return eq.passed() && st.passed() ? 0 : kExitDisagreement;
    }

    if (lift->parsed()) {
      const auto kind = base_kind == "cube" ? ClosedForm::cube : ClosedForm::simplex;
      const auto base = closed_form_rep(kind, base_dim);
      std::vector<SparsePoly> polys;
      if (lift_kind == "prism") {
        polys = prism_lift(base);
      } else {
        std::vector<RatVec> verts;
        if (kind == ClosedForm::cube) {
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << base_dim); ++mask) {
            RatVec v(base_dim);
            for (std::size_t i = 0; i < base_dim; ++i) v[i] = (mask >> i & 1) ? 1 : -1;
            verts.push_back(v);
          }
        } else {
          verts.push_back(zeros(base_dim));
          for (std::size_t i = 0; i < base_dim; ++i) verts.push_back(unit(base_dim, i));
        }
        RatVec top = apex.empty() ? unit(base_dim + 1, base_dim) : parse_point(apex, base_dim + 1);
        polys = pyramid_lift(base, verts, top).polys;
      }
      std::vector<std::string> ids;
      for (std::size_t i = 0; i < polys.size(); ++i) ids.push_back("q_" + std::to_string(i + 1));
      emit(g, format_or(g, Format::text) == Format::json ? polys_to_json(polys, ids).dump(2) + "\n"
                                                         : emit_polys_text(polys, ids));
      return 0;
    }

    if (projectivize->parsed()) {
      const auto h = load(input);
      const auto map = projectivize_pointed(h, vertex);
      json doc{{"origin", rats_json(map.origin)}, {"c", rats_json(map.c)}, {"image", emit_hrep(map.image)}};
      std::ostringstream out;
      out << "# origin " << to_string(map.origin) << ", c = " << to_string(map.c) << '\n' << emit_hrep(map.image);
      if (pullback) {
        const auto image_prep = construct_prep(map.image, construct_options(g, eps_bar, diam_upper));
        const auto pb = pullback_prep(image_prep, map);
        doc["pullback"] = polys_to_json(pb.products, pb.ids);
        doc["final_linear"] = pb.final_linear.to_string();
        doc["epsilon"] = "p_eps(f(x)) <= 1, f(x) = (x - origin) / (<c, x - origin> + 1)";
        out << "# pulled back (each >= 0), then p_eps(f(x)) <= 1 and the final inequality\n"
            << emit_polys_text(pb.products, pb.ids) << "final(x) = " << pb.final_linear.to_string() << '\n';
      }
      emit(g, format_or(g, Format::text) == Format::json ? doc.dump(2) + "\n" : out.str());
      return 0;
    }

    if (mu->parsed()) {
      emit(g, std::to_string(mu_count(mu_d)) + "\n");
      return 0;
    }

    if (grid->parsed()) {
      const auto h = load(input);
      const auto prep = prep_path.empty() ? construct_prep(h, construct_options(g, eps_bar, diam_upper))
                                          : parse_prep_json(read_file(prep_path));
      GridSpec spec;
      spec.step = parse_rat(step);
      if (lo.empty() || hi.empty()) {
        const auto verts = enumerate_vertices(h);
        spec.lo = spec.hi = verts.front().coords;
        for (const auto& v : verts) {
          for (std::size_t i = 0; i < h.dim; ++i) {
            spec.lo[i] = std::min(spec.lo[i], v.coords[i]);
            spec.hi[i] = std::max(spec.hi[i], v.coords[i]);
          }
        }
        for (std::size_t i = 0; i < h.dim; ++i) {
          const Rat w = (spec.hi[i] - spec.lo[i]) / 2;
          spec.lo[i] -= w;
          spec.hi[i] += w;
        }
      } else {
        spec.lo = parse_point(lo, h.dim);
        spec.hi = parse_point(hi, h.dim);
      }
      emit(g, grid_eval_csv(h, prep, spec));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::usage);
  }
  return 0;
}
