#include "dynq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dynq/io.hpp"

namespace dynq {

namespace {

struct Common {
  std::string quiver_file;
  std::string out_file;
  std::string format;
};

void emit(const Common& c, const std::string& payload, std::ostream& out) {
  if (c.out_file.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(c.out_file, std::ios::binary);
  if (!f) throw DomainError("cannot open output file '" + c.out_file + "'");
  f << payload;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ModuleExpr parse_summands(const ARQuiver& ar, const std::string& text) {
  ModuleExpr m;
  std::string piece;
  for (char c : text + ";") {
    if (c == ';') {
      if (!piece.empty()) m.add(ar.vertex_by_dim(parse_vector(piece)));
      piece.clear();
    } else {
      piece += c;
    }
  }
  return m;
}

void check_format(const std::string& fmt,
                  const std::vector<std::string>& allowed) {
  for (const auto& a : allowed)
    if (fmt == a) return;
  std::string all;
  for (const auto& a : allowed) all += (all.empty() ? "" : ", ") + a;
  throw DomainError("unsupported format '" + fmt + "' (expected one of " +
                    all + ")");
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Auslander-Reiten and cluster invariants of Dynkin quivers"};
  app.require_subcommand(1);

  Common c;
  std::string e_text, d_text, summands_text, rep_file, primes_text;
  bool dot = false, all = false;
  int degree_bound = -1;
  Int budget = 20'000'000;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--quiver", c.quiver_file, "quiver description file")
        ->required();
    cmd->add_option("--out", c.out_file, "write output to a file");
    cmd->add_option("--format", c.format,
                    "output format (default json; text for nonempty)");
  };

  CLI::App* show = app.add_subcommand("show", "quiver, canonical numbering and matrices");
  add_common(show);
  CLI::App* roots = app.add_subcommand("roots", "positive roots / indecomposables");
  add_common(roots);
  CLI::App* arcmd = app.add_subcommand("ar", "Auslander-Reiten quiver");
  add_common(arcmd);
  arcmd->add_flag("--dot", dot, "emit GraphViz DOT");
  CLI::App* homext = app.add_subcommand("homext", "Hom/Ext dimension tables");
  add_common(homext);
  CLI::App* decomp = app.add_subcommand("decomp", "generic decomposition of d");
  add_common(decomp);
  decomp->add_option("--d", d_text, "dimension vector")->required();
  CLI::App* nonempty = app.add_subcommand("nonempty", "is Gr_e(M~_d) non-empty");
  add_common(nonempty);
  nonempty->add_option("--e", e_text, "subrepresentation dimension vector")->required();
  nonempty->add_option("--d", d_text, "ambient dimension vector")->required();
  CLI::App* fpoly = app.add_subcommand("fpoly", "F-polynomials");
  add_common(fpoly);
  fpoly->add_option("--d", d_text, "dimension vector of the generic module");
  fpoly->add_flag("--all", all, "table over all indecomposables");
  CLI::App* poincare = app.add_subcommand("poincare", "Poincare polynomial of Gr_e");
  add_common(poincare);
  poincare->add_option("--e", e_text, "subrepresentation dimension vector")->required();
  poincare->add_option("--d", d_text, "dimension vector of the generic module");
  poincare->add_option("--summands", summands_text,
                       "explicit summand roots, ';'-separated");
  CLI::App* cccmd = app.add_subcommand("cc", "Caldero-Chapoton cluster variables");
  add_common(cccmd);
  CLI::App* verify = app.add_subcommand("verify", "verify all primitive exchange relations");
  add_common(verify);
  auto add_oracle_options = [&](CLI::App* cmd) {
    cmd->add_option("--rep", rep_file, "representation fixture (JSON)")
        ->required();
    cmd->add_option("--e", e_text, "subrepresentation dimension vector")
        ->required();
    cmd->add_option("--primes", primes_text, "comma-separated primes")
        ->required();
    cmd->add_option("--degree-bound", degree_bound,
                    "interpolation degree bound (default <e,d-e>)");
    cmd->add_option("--budget", budget, "enumeration budget");
    cmd->add_option("--out", c.out_file, "write output to a file");
    cmd->add_option("--format", c.format, "output format");
  };
  CLI::App* oracle = app.add_subcommand(
      "oracle-count", "count subrepresentations over finite fields");
  add_oracle_options(oracle);
  // `oracle count` spelling.
  CLI::App* oracle_parent =
      app.add_subcommand("oracle", "finite-field validation oracle");
  oracle_parent->require_subcommand(1);
  CLI::App* oracle_count = oracle_parent->add_subcommand(
      "count", "count subrepresentations over finite fields");
  add_oracle_options(oracle_count);

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream osout, oserr;
    const int code = app.exit(e, osout, oserr);
    out << osout.str();
    err << oserr.str();
    return code == 0 ? 0 : 1;
  }

  // Per-command default formats; `nonempty` defaults to the text verdict.
  if (c.format.empty()) c.format = nonempty->parsed() ? "text" : "json";

  try {
    if (show->parsed()) {
      check_format(c.format, {"json", "text"});
      const Quiver q = load_quiver_file(c.quiver_file);
      const QuiverMatrices m = matrices(q);
      if (c.format == "text") {
        emit(c, to_quiver_text(q), out);
        return 0;
      }
      Json j;
      j["quiver"] = quiver_json(q);
      j["H"] = matrix_json(m.H);
      j["C"] = matrix_json(m.C);
      j["B"] = matrix_json(m.B);
      j["Phi"] = matrix_json(m.Phi);
      emit(c, dump(j), out);
    } else if (roots->parsed()) {
      check_format(c.format, {"json", "text"});
      const Quiver q = load_quiver_file(c.quiver_file);
      const ARQuiver ar(q);
      if (c.format == "text") {
        std::ostringstream os;
        os << ar.size() << " positive roots\n";
        for (int v = 0; v < ar.size(); ++v)
          os << ar.label(v) << " " << format_vector(ar.vertex(v).dim) << "\n";
        emit(c, os.str(), out);
        return 0;
      }
      Json j;
      j["count"] = ar.size();
      Json list = Json::array();
      for (int v = 0; v < ar.size(); ++v) {
        Json r;
        r["vertex"] = ar.label(v);
        r["dim"] = vector_json(ar.vertex(v).dim);
        list.push_back(r);
      }
      j["roots"] = list;
      emit(c, dump(j), out);
    } else if (arcmd->parsed()) {
      check_format(c.format, {"json", "dot"});
      const Quiver q = load_quiver_file(c.quiver_file);
      const ARQuiver ar(q);
      if (dot || c.format == "dot")
        emit(c, to_dot(ar), out);
      else
        emit(c, dump(ar_json(ar)), out);
    } else if (homext->parsed()) {
      check_format(c.format, {"json", "csv"});
      const Quiver q = load_quiver_file(c.quiver_file);
      const ARQuiver ar(q);
      const HomTable t(ar);
      if (c.format == "csv")
        emit(c, homext_csv(t), out);
      else
        emit(c, dump(homext_json(t)), out);
    } else if (decomp->parsed()) {
      check_format(c.format, {"json", "text"});
      const Quiver q = load_quiver_file(c.quiver_file);
      const ARQuiver ar(q);
      const HomTable t(ar);
      const DimVector d = parse_vector(d_text);
      const ModuleExpr m = generic_decomposition(t, d);
      if (c.format == "text") {
        std::ostringstream os;
        for (const auto& [v, mult] : m.summands())
          os << ar.label(v) << " " << format_vector(ar.vertex(v).dim) << " x"
             << mult << "\n";
        emit(c, os.str(), out);
        return 0;
      }
      Json j;
      j["d"] = vector_json(d);
      j["summands"] = module_expr_json(ar, m);
      emit(c, dump(j), out);
    } else if (nonempty->parsed()) {
      check_format(c.format, {"json", "text"});
      const Quiver q = load_quiver_file(c.quiver_file);
      const ARQuiver ar(q);
      const HomTable t(ar);
      const DimVector e = parse_vector(e_text);
      const DimVector d = parse_vector(d_text);
      const auto mindim = generic_min_dimension(t, e, d);
      if (c.format == "text") {
        std::ostringstream os;
        if (mindim)
          os << "non-empty, dimension " << *mindim << "\n";
        else
          os << "empty\n";
        emit(c, os.str(), out);
        return 0;
      }
      Json j;
      j["e"] = vector_json(e);
      j["d"] = vector_json(d);
      j["nonempty"] = mindim.has_value();
      if (mindim) j["dimension"] = *mindim;
      emit(c, dump(j), out);
    } else if (fpoly->parsed()) {
      check_format(c.format, {"json", "text"});
      const Quiver q = load_quiver_file(c.quiver_file);
      const ARQuiver ar(q);
      const FTable ft(ar);
      if (all != d_text.empty())
        throw DomainError("fpoly: pass exactly one of --d or --all");
      if (all) {
        if (c.format == "text") {
          std::ostringstream os;
          for (int v = 0; v < ar.size(); ++v)
            os << ar.label(v) << ": " << ft.of_vertex(v).to_string() << "\n";
          emit(c, os.str(), out);
          return 0;
        }
        Json list = Json::array();
        for (int v = 0; v < ar.size(); ++v) {
          Json jv;
          jv["vertex"] = ar.label(v);
          jv["dim"] = vector_json(ar.vertex(v).dim);
          jv["f_polynomial"] = poly_json(ft.of_vertex(v));
          jv["pretty"] = ft.of_vertex(v).to_string();
          list.push_back(jv);
        }
        emit(c, dump(list), out);
      } else {
        const HomTable t(ar);
        const DimVector d = parse_vector(d_text);
        const ModuleExpr m = generic_decomposition(t, d);
        const MultiPoly f = ft.of_module(m);
        if (c.format == "text") {
          emit(c, f.to_string() + "\n", out);
          return 0;
        }
        Json j;
        j["d"] = vector_json(d);
        j["summands"] = module_expr_json(ar, m);
        j["f_polynomial"] = poly_json(f);
        j["pretty"] = f.to_string();
        emit(c, dump(j), out);
      }
    } else if (poincare->parsed()) {
      check_format(c.format, {"json", "text"});
      const Quiver q = load_quiver_file(c.quiver_file);
      const ARQuiver ar(q);
      const FTable ft(ar);
      const PoincareTable pt(ar, ft);
      if (summands_text.empty() == d_text.empty())
        throw DomainError("poincare: pass exactly one of --d or --summands");
      ModuleExpr m;
      if (!d_text.empty()) {
        const HomTable t(ar);
        m = generic_decomposition(t, parse_vector(d_text));
      } else {
        m = parse_summands(ar, summands_text);
      }
      const DimVector e = parse_vector(e_text);
      const QPoly p = pt.of_module(m, e);
      if (c.format == "text") {
        emit(c, p.to_string() + "\n", out);
        return 0;
      }
      Json j;
      j["e"] = vector_json(e);
      j["summands"] = module_expr_json(ar, m);
      j["poincare"] = qpoly_json(p);
      j["pretty"] = p.to_string();
      j["euler_characteristic"] = p.eval_one().str();
      emit(c, dump(j), out);
    } else if (cccmd->parsed()) {
      check_format(c.format, {"json", "text"});
      const Quiver q = load_quiver_file(c.quiver_file);
      const ARQuiver ar(q);
      const FTable ft(ar);
      const QuiverMatrices m = matrices(q);
      if (c.format == "text") {
        std::ostringstream os;
        for (int v = 0; v < ar.size(); ++v)
          os << ar.label(v) << ": "
             << cc(ft, m, ModuleExpr::indecomposable(v)).to_string("x") << "\n";
        emit(c, os.str(), out);
        return 0;
      }
      Json list = Json::array();
      for (int v = 0; v < ar.size(); ++v) {
        const MultiPoly var = cc(ft, m, ModuleExpr::indecomposable(v));
        Json jv;
        jv["vertex"] = ar.label(v);
        jv["dim"] = vector_json(ar.vertex(v).dim);
        jv["g_vector"] = vector_json(g_vector(m, ar.vertex(v).dim));
        jv["cc_terms"] = poly_json(var);
        jv["pretty"] = var.to_string("x");
        list.push_back(jv);
      }
      emit(c, dump(list), out);
    } else if (verify->parsed()) {
      check_format(c.format, {"json", "text"});
      const Quiver q = load_quiver_file(c.quiver_file);
      const ARQuiver ar(q);
      const FTable ft(ar);
      const ExchangeReport report = verify_exchange(ft, matrices(q));
      if (c.format == "text") {
        std::ostringstream os;
        for (const auto& ch : report.checks)
          os << (ch.pass ? "pass" : "FAIL") << " " << ch.kind << " "
             << ch.label << "\n";
        for (const auto& note : report.notes) os << "note: " << note << "\n";
        emit(c, os.str(), out);
      } else {
        emit(c, dump(exchange_report_json(report)), out);
      }
      return report.all_pass() ? 0 : 2;
    } else if (oracle->parsed() || oracle_parent->parsed()) {
      check_format(c.format, {"json", "text"});
      const ExplicitRep rep = load_rep_file(rep_file);
      const DimVector e = parse_vector(e_text);
      const DimVector primes_vec = parse_vector(primes_text);
      std::vector<Int> primes(primes_vec.data(),
                              primes_vec.data() + primes_vec.size());
      if (degree_bound < 0) {
        const Int euler = euler_form(rep.quiver, e, DimVector(rep.dims - e));
        degree_bound = static_cast<int>(std::max<Int>(euler, 0));
      }
      std::vector<std::pair<Int, BigInt>> counts;
      for (Int p : primes) counts.emplace_back(p, count_subreps(rep, e, p, budget));
      Json j;
      j["e"] = vector_json(e);
      j["dims"] = vector_json(rep.dims);
      Json cj = Json::array();
      for (const auto& [p, cnt] : counts) {
        Json one;
        one["prime"] = p;
        one["count"] = cnt.str();
        cj.push_back(one);
      }
      j["counts"] = cj;
      j["degree_bound"] = degree_bound;
      bool allzero = true;
      for (const auto& [p, cnt] : counts) allzero = allzero && cnt == 0;
      if (allzero) {
        j["interpolation"] = "empty";
        j["chi"] = "0";
      } else {
        const CountInterpolation ip = interpolate_count(counts, degree_bound);
        if (ip.polynomial) {
          j["interpolation"] = qpoly_json(ip.poly);
          j["pretty"] = ip.poly.to_string("t");
          j["chi"] = ip.poly.eval_one().str();
        } else {
          j["interpolation"] = "failed";
          j["note"] = ip.note;
        }
      }
      if (c.format == "text") {
        std::ostringstream os;
        os << (j.contains("pretty") ? j["pretty"].get<std::string>()
                                    : j.contains("chi") ? "0" : "not polynomial")
           << "\n";
        emit(c, os.str(), out);
        return 0;
      }
      emit(c, dump(j), out);
    }
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dynq
