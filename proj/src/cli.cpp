#include "mhres/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mhres/complex.hpp"
#include "mhres/matrices.hpp"
#include "mhres/matrix_io.hpp"
#include "mhres/search.hpp"
#include "mhres/verify.hpp"

namespace mhres {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidData("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw InvalidData("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty() || (!text.empty() && text.back() == ','))
    throw InvalidData("malformed integer list: '" + text + "'");
  return out;
}

namespace {

struct SysArgs {
  std::string l, d, s;
  SystemData get() const {
    if (l.empty() || d.empty() || s.empty()) throw InvalidData("--l, --d and --s are required");
    return validate_system(parse_int_list(l), parse_int_list(d), parse_int_list(s));
  }
};

void add_sys(CLI::App* c, SysArgs& a) {
  c->add_option("--l", a.l, "group sizes, e.g. 1,1");
  c->add_option("--d", a.d, "base degrees, e.g. 1,1");
  c->add_option("--s", a.s, "scale factors, e.g. 1,1,2");
}

std::string vec_str(const IntVec& v) { return "(" + join_ints(v) + ")"; }

IntVec parse_m(const SystemData& sys, const std::string& text) {
  if (text.empty()) throw InvalidData("--m is required");
  IntVec m = parse_int_list(text);
  if (static_cast<int>(m.size()) != sys.r)
    throw InvalidData("--m needs " + std::to_string(sys.r) + " entries");
  return m;
}

std::string exponent_key(const Exponent& e) { return join_ints(e); }

// coefficient strings: rationals, or identifiers treated as symbols
CoefPoly parse_coef(const std::string& text, std::map<std::string, std::uint32_t>& symbols) {
  if (!text.empty() && (std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_')) {
    auto it = symbols.try_emplace(text, static_cast<std::uint32_t>(symbols.size())).first;
    return CoefPoly::var(it->second);
  }
  try {
    Rational q(text);
    q.canonicalize();
    return CoefPoly(q);
  } catch (const std::exception&) {
    throw InvalidData("bad coefficient '" + text + "'");
  }
}

std::vector<long> parse_twist(const std::string& text) {
  std::vector<long> out;
  for (int v : parse_int_list(text)) out.push_back(v);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinantal resultant formulas for scaled multihomogeneous systems", "mhres"};
  app.require_subcommand(1);
  SysArgs sa;
  std::string m_text, render = "blocks", format = "json", coeffs = "symbolic", method = "transfer", block;
  std::string g_text, source, target;
  std::uint64_t seed = 1;
  int trials = 20;
  bool as_json = false, rectangular = false, no_degrees = false;

  auto* c_sys = app.add_subcommand("make-system", "print a system of the given type");
  add_sys(c_sys, sa);
  c_sys->add_option("--coeffs", coeffs, "symbolic or random")->check(CLI::IsMember({"symbolic", "random"}));
  c_sys->add_option("--seed", seed);

  auto* c_deg = app.add_subcommand("degrees", "resultant degree in each polynomial and in total");
  add_sys(c_deg, sa);
  c_deg->add_flag("--json", as_json);

  auto* c_vec = app.add_subcommand("vectors", "all determinantal degree vectors with matrix size");
  add_sys(c_vec, sa);
  c_vec->add_flag("--json", as_json);

  auto* c_box = app.add_subcommand("boxes", "nonempty determinantal boxes");
  add_sys(c_box, sa);
  c_box->add_flag("--json", as_json);

  auto* c_has = app.add_subcommand("has-deter", "does a determinantal formula exist");
  add_sys(c_has, sa);
  c_has->add_flag("--json", as_json);

  auto* c_pure = app.add_subcommand("pure", "pure Sylvester formulas");
  add_sys(c_pure, sa);
  c_pure->add_flag("--json", as_json);

  auto* c_cx = app.add_subcommand("complex", "terms of the complex at a degree vector");
  add_sys(c_cx, sa);
  c_cx->add_option("--m", m_text);
  c_cx->add_option("--render", render)->check(CLI::IsMember({"blocks", "cohs", "json"}));

  auto* c_mm = app.add_subcommand("multmap", "matrix of multiplication by a polynomial");
  add_sys(c_mm, sa);
  c_mm->add_option("--g", g_text, "JSON object {\"<exponents>\": \"<coefficient>\"}");
  c_mm->add_option("--source", source, "source twist");
  c_mm->add_option("--target", target, "target twist");
  c_mm->add_flag("--json", as_json);

  auto* c_mat = app.add_subcommand("matrix", "resultant matrix K_1 -> K_0");
  add_sys(c_mat, sa);
  c_mat->add_option("--m", m_text);
  c_mat->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "latex"}));
  c_mat->add_option("--coeffs", coeffs)->check(CLI::IsMember({"symbolic", "random"}));
  c_mat->add_option("--seed", seed);
  c_mat->add_option("--block", block, "only blocks K_{1,a} -> K_{0,b}, given as a,b");
  c_mat->add_option("--method", method, "transfer or affine")->check(CLI::IsMember({"transfer", "affine"}));
  c_mat->add_flag("--rectangular", rectangular, "allow non-determinantal m");

  auto* c_ver = app.add_subcommand("verify", "planted-root, genericity and degree checks");
  add_sys(c_ver, sa);
  c_ver->add_option("--m", m_text);
  c_ver->add_option("--trials", trials);
  c_ver->add_option("--seed", seed);
  c_ver->add_option("--method", method)->check(CLI::IsMember({"transfer", "affine"}));
  c_ver->add_flag("--no-degrees", no_degrees);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidData;
  }

  const BezoutMethod bm = method == "affine" ? BezoutMethod::Affine : BezoutMethod::Transfer;
  try {
    const SystemData sys = sa.get();
    if (c_sys->parsed()) {
      const auto g = make_generic_system(sys);
      std::vector<Rational> vals;
      if (coeffs == "random") vals = random_coefficients(sys, seed);
      ordered_json cs = ordered_json::object();
      json text = json::array();
      for (int i = 0; i <= sys.n; ++i) {
        ordered_json f = ordered_json::object();
        for (std::size_t j = 0; j < g.supports[i].size(); ++j) {
          const std::uint32_t id = g.layout.offset[i] + static_cast<std::uint32_t>(j);
          f[exponent_key(g.supports[i][j])] = vals.empty() ? g.layout.name(id) : vals[id].get_str();
        }
        cs["f" + std::to_string(i)] = f;
        if (vals.empty()) {
          text.push_back("f" + std::to_string(i) + " = " +
                         poly_str(g.polys[i], affine_var_names(sys),
                                  [&](const CoefPoly& c) { return entry_str(c, g.layout); }, &g.supports[i]));
        } else {
          const auto np = make_numeric_system(sys, vals);
          text.push_back("f" + std::to_string(i) + " = " +
                         poly_str(np[i], affine_var_names(sys), [](const Rational& c) { return c.get_str(); },
                                  &g.supports[i]));
        }
      }
      ordered_json o;
      o["l"] = sys.l;
      o["d"] = sys.d;
      o["s"] = sys.s;
      if (!vals.empty()) o["seed"] = seed;
      o["coefficients"] = cs;
      o["text"] = text;
      out << o.dump(2) << "\n";
      return kOk;
    }
    if (c_deg->parsed()) {
      const auto rd = resultant_degrees(sys);
      json per = json::array();
      for (const auto& v : rd.per_poly) per.push_back(integer_json(v));
      if (as_json) {
        out << json{{"per_poly", per}, {"total", integer_json(rd.total)}}.dump() << "\n";
      } else {
        out << "per polynomial: " << per.dump() << "\ntotal: " << rd.total.get_str() << "\n";
      }
      return kOk;
    }
    if (c_vec->parsed()) {
      const auto vs = enumerate_det_vectors(sys);
      json arr = json::array();
      for (const auto& v : vs) {
        json row = v.m;
        row.push_back(integer_json(v.dim));
        arr.push_back(row);
      }
      if (as_json) {
        out << arr.dump() << "\n";
      } else {
        for (const auto& row : arr) out << row.dump() << "\n";
        out << vs.size() << " vectors\n";
      }
      return kOk;
    }
    if (c_box->parsed()) {
      const auto bs = det_boxes(sys);
      json arr = json::array();
      for (const auto& b : bs) {
        json iv = json::array();
        for (int k = 0; k < sys.r; ++k) iv.push_back({b.lo[k], b.hi[k]});
        arr.push_back({{"box", iv}, {"perm", b.perm}});
      }
      if (as_json) {
        out << arr.dump() << "\n";
      } else {
        for (const auto& b : arr) out << b["box"].dump() << "  pi=" << vec_str(b["perm"].get<IntVec>()) << "\n";
        if (bs.empty()) out << "no determinantal box\n";
      }
      return kOk;
    }
    if (c_has->parsed()) {
      const auto h = has_deter(sys);
      if (as_json) {
        out << json{{"has_deter", h.value}, {"perm", h.witness}}.dump() << "\n";
      } else {
        out << (h.value ? "true" : "false");
        if (h.value) out << "  pi=" << vec_str(h.witness);
        out << "\n";
      }
      return kOk;
    }
    if (c_pure->parsed()) {
      const bool unmixed = std::all_of(sys.s.begin(), sys.s.end(), [](int v) { return v == 1; });
      if (unmixed) {
        const bool e = unmixed_pure_exists(sys);
        if (as_json) out << json{{"unmixed", true}, {"pure_exists", e}}.dump() << "\n";
        else out << "pure formula exists: " << (e ? "true" : "false") << "\n";
      } else {
        const auto pv = pure_vectors(sys);
        if (as_json) {
          out << json{{"unmixed", false}, {"sylvester", pv}}.dump() << "\n";
        } else {
          for (const auto& v : pv) out << vec_str(v) << " sylvester\n";
          if (pv.empty()) out << "no pure formula\n";
        }
      }
      return kOk;
    }
    if (c_cx->parsed()) {
      const auto cx = make_complex(sys, parse_m(sys, m_text));
      if (render == "blocks") out << format_blocks(cx) << "\n";
      else if (render == "cohs") out << format_cohs(cx) << "\n";
      else out << complex_to_json(cx).dump(2) << "\n";
      return kOk;
    }
    if (c_mm->parsed()) {
      json gj;
      try {
        gj = json::parse(g_text);
      } catch (const json::exception& e) {
        throw InvalidData(std::string("--g is not valid JSON: ") + e.what());
      }
      std::map<std::string, std::uint32_t> symbols;
      MultiPoly<CoefPoly> g(sys.n);
      for (auto it = gj.begin(); it != gj.end(); ++it) {
        const Exponent e = parse_int_list(it.key());
        if (static_cast<int>(e.size()) != sys.n) throw InvalidData("exponent '" + it.key() + "' has wrong length");
        const std::string v = it->is_string() ? it->get<std::string>() : it->dump();
        g.add_term(e, parse_coef(v, symbols));
      }
      std::vector<std::string> names(symbols.size());
      for (const auto& [nm, id] : symbols) names[id] = nm;
      const auto st = parse_twist(source), tt = parse_twist(target);
      if (static_cast<int>(st.size()) != sys.r || static_cast<int>(tt.size()) != sys.r)
        throw InvalidData("twists need one entry per group");
      Dense<CoefPoly> M;
      try {
        M = mult_map(sys, g, st, tt);
      } catch (const std::invalid_argument& e) {
        throw InvalidData(e.what());
      }
      json arr = json::array();
      for (const auto& row : M) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.str([&](std::uint32_t id) { return names[id]; }));
        arr.push_back(r);
      }
      if (as_json) out << arr.dump() << "\n";
      else for (const auto& r : arr) out << r.dump() << "\n";
      return kOk;
    }
    if (c_mat->parsed() || c_ver->parsed()) {
      const IntVec m = parse_m(sys, m_text);
      const bool det = is_determinantal_vector(sys, m);
      if (c_ver->parsed()) {
        if (!det) {
          err << "error: m=" << vec_str(m) << " is not determinantal\n";
          return kNotDeterminantal;
        }
        const auto rep = verify_vector(sys, m, trials, seed, !no_degrees, bm);
        out << report_to_json(rep).dump(2) << "\n";
        const bool ok = rep.planted_root_pass() && rep.generic_nonzero_pass() && (no_degrees || rep.degrees_pass());
        return ok ? kOk : kInternalFailure;
      }
      if (!det && !rectangular) {
        err << "error: m=" << vec_str(m) << " is not determinantal (use --rectangular for the map itself)\n";
        return kNotDeterminantal;
      }
      std::optional<std::pair<int, int>> only;
      if (!block.empty()) {
        const auto ab = parse_int_list(block);
        if (ab.size() != 2) throw InvalidData("--block expects a,b");
        only = std::make_pair(ab[0], ab[1]);
      }
      const auto g = make_generic_system(sys);
      if (coeffs == "random" || format == "csv") {
        const auto vals = random_coefficients(sys, seed);
        const auto M = assemble_matrix(sys, make_numeric_system(sys, vals), m, bm);
        if (format == "csv") out << matrix_to_csv(M);
        else if (format == "latex") out << matrix_to_latex(M, g.layout);
        else out << matrix_to_json(M, g.layout, only).dump(2) << "\n";
      } else {
        const auto M = assemble_matrix(sys, g.polys, m, bm);
        if (format == "latex") out << matrix_to_latex(M, g.layout);
        else out << matrix_to_json(M, g.layout, only).dump(2) << "\n";
      }
      return kOk;
    }
  } catch (const InvalidData& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidData;
  } catch (const DivisionError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalFailure;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternalFailure;
  }
  return kInvalidData;
}

}  // namespace mhres
