#include "nscalc/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "nscalc/cones.hpp"
#include "nscalc/heights.hpp"
#include "nscalc/minima.hpp"

namespace nscalc::cli {
namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

struct Output {
  std::string text;
  Fields fields;
};

std::string csv_cell(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char ch : value) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void emit(const Output& o, Format format, std::ostream& out) {
  switch (format) {
    case Format::Text:
      out << o.text;
      if (!o.text.empty() && o.text.back() != '\n') out << '\n';
      return;
    case Format::Csv: {
      std::string header, row;
      for (const auto& [key, value] : o.fields) {
        if (!header.empty()) {
          header += ',';
          row += ',';
        }
        header += key;
        row += csv_cell(value);
      }
      out << header << '\n' << row << '\n';
      return;
    }
    case Format::Json: {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (const auto& [key, value] : o.fields) obj[key] = value;
      out << obj.dump(2) << '\n';
      return;
    }
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string with_decimal(const Rational& x) {
  return to_string(x) + "  [~ " + to_decimal(x) + "]";
}

Fields class_fields(const NSClass& x) {
  return {{"g", std::to_string(x.genus.value())},
          {"a", to_string(x.a)},
          {"b", to_string(x.b)},
          {"c", to_string(x.c)}};
}

Output classify_output(const NSClass& x) {
  const ConeVerdict v = classify(x);
  std::ostringstream text;
  switch (v.region) {
    case Region::Interior:
      text << "interior (ample, big, nef, psef), defect " << to_string(v.defect);
      break;
    case Region::Boundary:
      if (x.is_zero()) {
        text << "boundary (apex), defect 0";
      } else {
        text << "boundary (nef, not ample), defect " << to_string(v.defect);
      }
      break;
    case Region::Outside:
      text << "outside (defect " << to_string(v.defect) << ")";
      break;
  }
  Fields f = class_fields(x);
  f.emplace_back("region", std::string(to_string(v.region)));
  f.emplace_back("ample", yes_no(v.is_ample));
  f.emplace_back("nef", yes_no(v.is_nef));
  f.emplace_back("big", yes_no(v.is_big));
  f.emplace_back("psef", yes_no(v.is_psef));
  f.emplace_back("defect", to_string(v.defect));
  return {text.str(), std::move(f)};
}

Output value_output(const Rational& value) {
  return {with_decimal(value), {{"value", to_string(value)}, {"decimal", to_decimal(value)}}};
}

std::string render_witness_root(const char* name, const SqrtWitness& w) {
  std::string out = std::string(name) + "^2 = " + to_string(w.square);
  if (w.exact) {
    out += " (" + std::string(name) + " = " + to_string(*w.exact) + ")";
  } else {
    out += " (irrational, sign " + std::to_string(w.sign) + ")";
  }
  return out;
}

Output decompose_output(const NSClass& x) {
  const NefDecomposition d = nef_decomposition(x);
  std::ostringstream text;
  if (d.degenerate) text << "degenerate: ";
  text << "boundary part " << render_class(d.boundary_part) << " + " << to_string(d.alpha_excess)
       << " * alpha_1";
  Fields f = class_fields(x);
  f.emplace_back("boundary_part", render_class(d.boundary_part));
  f.emplace_back("alpha_excess", to_string(d.alpha_excess));
  f.emplace_back("degenerate", yes_no(d.degenerate));
  if (!d.degenerate) {
    const BoundaryWitness w = boundary_witness(d.boundary_part);
    text << "\nboundary part = f_{m,n}^*theta with " << render_witness_root("m", w.m) << ", "
         << render_witness_root("n", w.n);
    f.emplace_back("m_squared", to_string(w.m.square));
    f.emplace_back("n_squared", to_string(w.n.square));
    f.emplace_back("sign_mn", std::to_string(w.m.sign * w.n.sign));
  }
  return {text.str(), std::move(f)};
}

Output height_output(const NSClass& l, const NSClass& point) {
  const HeightReport r = height_point(l, PointClass(point));
  return {"height " + to_string(r.height) + ", degree " + to_string(r.degree) + "  [~ " +
              to_decimal(r.height) + "]",
          {{"height", to_string(r.height)},
           {"degree", to_string(r.degree)},
           {"height_dec", to_decimal(r.height)}}};
}

Output minima_output(const NSClass& l) {
  const MinimaReport m = cone_minimum(l);
  std::ostringstream text;
  text << "infimum " << to_string(m.infimum) << "  [~ " << to_decimal(m.infimum) << "]\n"
       << "minimizer (1, s*, t*) with s* = " << to_string(m.s_star)
       << ", t* = " << to_string(m.t_star) << '\n';
  if (m.attained_by_witness) {
    text << "attained by N * f_{" << m.witness_p.get_str() << "," << m.witness_q.get_str()
         << "}^*theta = N * " << render_class(*m.witness_ray) << ", N >= 1";
  } else {
    text << "not certified by a witness family (lower bound only)";
  }
  return {text.str(),
          {{"infimum", to_string(m.infimum)},
           {"s_star", to_string(m.s_star)},
           {"t_star", to_string(m.t_star)},
           {"attained_by_witness", yes_no(m.attained_by_witness)},
           {"witness_ray", m.witness_ray ? render_class(*m.witness_ray) : std::string()}}};
}

Output witness_output(Genus g, long n) {
  const PointClass p = witness_sequence(g, n);
  const HeightReport r = height_point(paper_polarization(g), p);
  Fields f = class_fields(p.cls());
  f.emplace_back("degree", to_string(r.degree));
  f.emplace_back("height", to_string(r.height));
  return {render_class(p.cls()) + ", degree " + to_string(r.degree) + ", height " +
              to_string(r.height),
          std::move(f)};
}

Output audit_output(const NSClass& l) {
  const ZhangAudit a = zhang_audit(l);
  const Rational mean = (a.e1 + a.e2) / 2;
  std::ostringstream text;
  text << "L = " << render_class(l) << " at genus " << l.genus.value() << '\n'
       << "e1 = " << to_string(a.e1) << "  [~ " << to_decimal(a.e1) << "]\n"
       << "e2 = " << to_string(a.e2) << "  [~ " << to_decimal(a.e2) << "]\n"
       << "h(C_K) = " << to_string(a.h_curve) << "  [~ " << to_decimal(a.h_curve) << "]\n"
       << "first inequality e1 >= h: " << (a.first_inequality_holds ? "holds" : "VIOLATED")
       << '\n';
  if (a.second_inequality_holds) {
    text << "second inequality h >= (e1+e2)/2: holds";
  } else {
    text << "second inequality VIOLATED by " << to_string(a.violation_margin) << " (h = "
         << to_string(a.h_curve) << " < (e1+e2)/2 = " << to_string(mean) << ")";
  }
  if (a.lower_bound_only) text << "\nnote: e1, e2 are lower bounds only (no witness family)";
  return {text.str(),
          {{"g", std::to_string(l.genus.value())},
           {"e1", to_string(a.e1)},
           {"e2", to_string(a.e2)},
           {"h", to_string(a.h_curve)},
           {"mean", to_string(mean)},
           {"margin", to_string(a.violation_margin)},
           {"first_inequality_holds", yes_no(a.first_inequality_holds)},
           {"second_inequality_holds", yes_no(a.second_inequality_holds)},
           {"lower_bound_only", yes_no(a.lower_bound_only)}}};
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

NSClass parse_class(Genus g, std::string_view literal) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = literal.find(',', start);
    coords.push_back(parse_rational(literal.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coords.size() != 3) {
    throw std::invalid_argument("class literal '" + std::string(literal) +
                                "' must have exactly three coordinates a,b,c");
  }
  return mk_class(g, coords[0], coords[1], coords[2]);
}

std::string render_class(const NSClass& x) {
  return "(" + to_string(x.a) + "," + to_string(x.b) + "," + to_string(x.c) + ")";
}

TableRow table_row(Genus g) {
  const ZhangAudit a = zhang_audit(paper_polarization(g));
  return {g.value(),
          to_string(a.e1),
          to_string(a.e2),
          to_string(a.h_curve),
          to_string((a.e1 + a.e2) / 2),
          to_string(a.violation_margin),
          to_decimal(a.e1),
          to_decimal(a.h_curve)};
}

std::string render_table(int g_min, int g_max, Format format) {
  if (g_min < 2 || g_max < g_min) {
    throw std::invalid_argument("table range must satisfy 2 <= g_min <= g_max, got " +
                                std::to_string(g_min) + ".." + std::to_string(g_max));
  }
  std::vector<TableRow> rows;
  for (int g = g_min; g <= g_max; ++g) rows.push_back(table_row(Genus(g)));

  static const std::vector<std::string> keys = {"g",      "e1",     "e2",     "h",
                                                "mean",   "margin", "e1_dec", "h_dec"};
  auto cells = [](const TableRow& r) {
    return std::vector<std::string>{std::to_string(r.g), r.e1,     r.e2,     r.h,
                                    r.mean,              r.margin, r.e1_dec, r.h_dec};
  };

  std::ostringstream out;
  switch (format) {
    case Format::Csv:
      for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
      out << '\n';
      for (const TableRow& r : rows) {
        const auto row = cells(r);
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
      }
      break;
    case Format::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const TableRow& r : rows) {
        nlohmann::ordered_json obj;
        obj["g"] = r.g;
        const auto row = cells(r);
        for (std::size_t i = 1; i < keys.size(); ++i) obj[keys[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::Text: {
      std::vector<std::size_t> width(keys.size());
      for (std::size_t i = 0; i < keys.size(); ++i) width[i] = keys[i].size();
      for (const TableRow& r : rows) {
        const auto row = cells(r);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
        }
        out << '\n';
      };
      line(keys);
      for (const TableRow& r : rows) line(cells(r));
      out << "(*_dec columns are rounded for display only)\n";
      break;
    }
  }
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact intersection calculus on NS(C x J) for Picard number 3", "nscalc"};
  app.require_subcommand(1);
  app.fallthrough();

  int genus = 0;
  std::string format_name = "text";
  app.add_option("-g,--genus", genus, "genus of the curve (>= 2)");
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  std::function<Output()> action;
  auto require_genus = [&] {
    if (genus == 0) throw std::invalid_argument("missing --genus/-g");
    return Genus(genus);
  };

  // Classes may be given as a literal "a,b,c" or via -a/-b/-c.
  struct ClassArgs {
    std::string literal;
    std::string a = "0";
    std::string b = "0";
    std::string c = "0";
  };
  auto add_class_args = [](CLI::App* sub, ClassArgs& ca, bool with_flags) {
    sub->add_option("class", ca.literal, "class literal a,b,c");
    if (with_flags) {
      sub->add_option("-a", ca.a, "coefficient of alpha_1");
      sub->add_option("-b", ca.b, "coefficient of theta_2");
      sub->add_option("-c", ca.c, "coefficient of Q");
    }
  };
  auto to_class = [&](const ClassArgs& ca) {
    const Genus g = require_genus();
    if (!ca.literal.empty()) return parse_class(g, ca.literal);
    return mk_class(g, parse_rational(ca.a), parse_rational(ca.b), parse_rational(ca.c));
  };
  auto class_or_default = [&](const std::string& literal) {
    const Genus g = require_genus();
    return literal.empty() ? paper_polarization(g) : parse_class(g, literal);
  };

  ClassArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "classify a class against the cones");
  add_class_args(classify_cmd, classify_args, true);
  classify_cmd->callback([&] { action = [&] { return classify_output(to_class(classify_args)); }; });

  std::string pair_x, pair_y;
  auto* pair_cmd = app.add_subcommand("pair", "X . Y . theta_2^{g-1}");
  pair_cmd->add_option("X", pair_x)->required();
  pair_cmd->add_option("Y", pair_y)->required();
  pair_cmd->callback([&] {
    action = [&] {
      const Genus g = require_genus();
      return value_output(pair_theta_power(parse_class(g, pair_x), parse_class(g, pair_y)));
    };
  });

  std::vector<std::string> intersect_classes;
  auto* intersect_cmd = app.add_subcommand("intersect", "top intersection of g+1 classes");
  intersect_cmd->add_option("classes", intersect_classes)->required();
  intersect_cmd->callback([&] {
    action = [&] {
      const Genus g = require_genus();
      std::vector<NSClass> xs;
      for (const auto& lit : intersect_classes) xs.push_back(parse_class(g, lit));
      return value_output(top_intersect(xs));
    };
  });

  std::string pull_m = "0", pull_n = "0";
  auto* pullback_cmd = app.add_subcommand("pullback", "f_{m,n}^* theta");
  pullback_cmd->add_option("-m", pull_m)->required();
  pullback_cmd->add_option("-n", pull_n)->required();
  pullback_cmd->callback([&] {
    action = [&] {
      const NSClass x = pullback_theta(require_genus(), parse_rational(pull_m), parse_rational(pull_n));
      return Output{render_class(x), class_fields(x)};
    };
  });

  ClassArgs decompose_args;
  auto* decompose_cmd = app.add_subcommand("decompose", "nef class = boundary part + excess * alpha_1");
  add_class_args(decompose_cmd, decompose_args, true);
  decompose_cmd->callback(
      [&] { action = [&] { return decompose_output(to_class(decompose_args)); }; });

  std::string height_point_lit, height_l;
  auto* height_cmd = app.add_subcommand("height", "height of a point class");
  height_cmd->add_option("point", height_point_lit, "point class a,b,c with a > 0")->required();
  height_cmd->add_option("-L,--line-bundle", height_l, "line bundle (default g,1,1)");
  height_cmd->callback([&] {
    action = [&] {
      const Genus g = require_genus();
      return height_output(class_or_default(height_l), parse_class(g, height_point_lit));
    };
  });

  std::string curve_l;
  auto* curve_cmd = app.add_subcommand("curve-height", "height of the generic fiber C_K");
  curve_cmd->add_option("L", curve_l, "line bundle (default g,1,1)");
  curve_cmd->callback([&] {
    action = [&] {
      const Rational h = height_curve(class_or_default(curve_l));
      return Output{"h(C_K) = " + with_decimal(h), {{"h", to_string(h)}, {"h_dec", to_decimal(h)}}};
    };
  });

  std::string minima_l;
  auto* minima_cmd = app.add_subcommand("minima", "exact successive minima over the cone");
  minima_cmd->add_option("L", minima_l, "nef line bundle (default g,1,1)");
  minima_cmd->callback([&] { action = [&] { return minima_output(class_or_default(minima_l)); }; });

  long witness_n = 1;
  auto* witness_cmd = app.add_subcommand("witness", "witness point class n * f_{g,1}^* theta");
  witness_cmd->add_option("-n", witness_n)->required();
  witness_cmd->callback([&] { action = [&] { return witness_output(require_genus(), witness_n); }; });

  std::string audit_l;
  auto* audit_cmd = app.add_subcommand("audit", "evaluate both successive-minima inequalities");
  audit_cmd->add_option("L", audit_l, "nef line bundle (default g,1,1)");
  audit_cmd->callback([&] { action = [&] { return audit_output(class_or_default(audit_l)); }; });

  int g_min = 2, g_max = 12;
  bool table_mode = false;
  auto* table_cmd = app.add_subcommand("table", "e1, e2, h and the violation margin per genus");
  table_cmd->add_option("g_min", g_min);
  table_cmd->add_option("g_max", g_max);
  table_cmd->callback([&] { table_mode = true; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return e.get_exit_code() != 0 ? e.get_exit_code() : 2;
  }

  try {
    const Format format = parse_format(format_name);
    if (table_mode) {
      out << render_table(g_min, g_max, format);
    } else {
      emit(action(), format, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace nscalc::cli
