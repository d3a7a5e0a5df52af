// Command-line front end: exact spectra of tensor-power Yang-Baxter
// operators, quantum matrix algebra bases, intertwiner spaces, Schur/Weyl
// module data, the quantum determinant, and the named verification suites.

#include <qpf/qpf.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using qpf::ordered_json;

struct OutputOptions {
  std::string format = "table";
  std::string out_file;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--out", out.out_file, "Also write the JSON form to a file");
}

int emit(const OutputOptions& out, const ordered_json& j, const std::string& table) {
  if (out.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << table;
  if (!out.out_file.empty()) {
    std::ofstream f(out.out_file);
    if (!f) {
      std::cerr << "error: cannot open " << out.out_file << "\n";
      return 1;
    }
    f << j.dump(2) << "\n";
  }
  return 0;
}

ordered_json report_json(const qpf::Report& rep) {
  ordered_json j;
  j["suite"] = rep.name;
  ordered_json claims = ordered_json::array();
  for (const auto& c : rep.claims) {
    ordered_json cj;
    cj["claim"] = c.claim;
    cj["lhs"] = c.lhs;
    cj["rhs"] = c.rhs;
    cj["pass"] = c.pass;
    claims.push_back(std::move(cj));
  }
  j["claims"] = std::move(claims);
  j["all_pass"] = rep.all_pass();
  return j;
}

std::string report_table(const qpf::Report& rep) {
  std::string s;
  for (const auto& c : rep.claims) {
    s += c.pass ? "[PASS] " : "[FAIL] ";
    s += c.claim;
    if (!c.pass) s += "  (lhs=" + c.lhs + ", rhs=" + c.rhs + ")";
    s += "\n";
  }
  s += rep.all_pass() ? "all claims passed\n" : "FAILURES present\n";
  return s;
}

mpq_class parse_rational(const std::string& s) {
  mpq_class r(s);
  r.canonicalize();
  return r;
}

std::vector<int> parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (cur.empty()) throw CLI::ValidationError("--lambda", "empty part");
      parts.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return parts;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with quantum matrix algebras, braid-group "
               "intertwiners and quantum polynomial functors over Q(q)"};
  app.require_subcommand(1);

  // ---- spectrum ----
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "Exact eigenvalue multiplicities of the Yang-Baxter operator of V_n^(xd)");
  int sp_n = 2, sp_d = 1;
  long sp_maxexp = -1;
  bool sp_square = false;
  OutputOptions sp_out;
  spectrum_cmd->add_option("--n", sp_n, "Base dimension n")->required()->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--d", sp_d, "Tensor power d")->required()->check(CLI::PositiveNumber);
  spectrum_cmd->add_flag("--square", sp_square,
                         "Report the operator on the tensor square of the carrier "
                         "(the operator of V^(xd) always acts there; presentation flag)");
  spectrum_cmd->add_option("--max-exp", sp_maxexp, "Candidate exponent bound (default 2*(2d)^2)");
  add_output_options(spectrum_cmd, sp_out);

  // ---- dims ----
  auto* dims_cmd = app.add_subcommand("dims", "Evaluation dimension of a functor at n");
  std::string dims_functor;
  int dims_d = 1, dims_n = 1, dims_m = -1;
  OutputOptions dims_out;
  dims_cmd->add_option("--functor", dims_functor, "One of tensor|sym|ext|div|gamma")
      ->required()
      ->check(CLI::IsMember({"tensor", "sym", "ext", "div", "gamma"}));
  dims_cmd->add_option("--d", dims_d)->required()->check(CLI::PositiveNumber);
  dims_cmd->add_option("--n", dims_n)->required()->check(CLI::PositiveNumber);
  dims_cmd->add_option("--m", dims_m, "Source rank for gamma (Hom-functor)");
  add_output_options(dims_cmd, dims_out);

  // ---- basis ----
  auto* basis_cmd = app.add_subcommand("basis", "Ordered monomial basis of A_q(m,n)_d");
  int b_m = 1, b_n = 1, b_d = 0;
  OutputOptions b_out;
  basis_cmd->add_option("--m", b_m)->required()->check(CLI::PositiveNumber);
  basis_cmd->add_option("--n", b_n)->required()->check(CLI::PositiveNumber);
  basis_cmd->add_option("--d", b_d)->required()->check(CLI::NonNegativeNumber);
  add_output_options(basis_cmd, b_out);

  // ---- intertwiners ----
  auto* int_cmd = app.add_subcommand("intertwiners", "Dimension (and basis) of Hom_{B_d}(V_m^(xd), V_n^(xd))");
  int i_m = 1, i_n = 1, i_d = 1;
  bool i_dump = false;
  OutputOptions i_out;
  int_cmd->add_option("--m", i_m)->required()->check(CLI::PositiveNumber);
  int_cmd->add_option("--n", i_n)->required()->check(CLI::PositiveNumber);
  int_cmd->add_option("--d", i_d)->required()->check(CLI::PositiveNumber);
  int_cmd->add_flag("--dump", i_dump, "Include the basis matrices");
  add_output_options(int_cmd, i_out);

  // ---- schur ----
  auto* schur_cmd = app.add_subcommand("schur", "Dimension and image basis of S_lambda(n) or W_lambda(n)");
  std::string s_lambda;
  int s_n = 1;
  bool s_weyl = false;
  OutputOptions s_out;
  schur_cmd->add_option("--lambda", s_lambda, "Partition, e.g. 2,1")->required();
  schur_cmd->add_option("--n", s_n)->required()->check(CLI::PositiveNumber);
  schur_cmd->add_flag("--weyl", s_weyl, "Weyl functor instead of Schur");
  add_output_options(schur_cmd, s_out);

  // ---- det ----
  auto* det_cmd = app.add_subcommand("det", "Quantum determinant of A_q(n,n) in normal form");
  int det_n = 1;
  std::string det_qvalue;
  OutputOptions det_out;
  det_cmd->add_option("--n", det_n)->required()->check(CLI::PositiveNumber);
  det_cmd->add_option("--qvalue", det_qvalue, "Also evaluate coefficients at a rational q");
  add_output_options(det_cmd, det_out);

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "Run a named invariant suite");
  std::string v_suite;
  int v_max_n = -1, v_max_d = -1;
  OutputOptions v_out;
  verify_cmd->add_option("--suite", v_suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"hecke", "yb", "confluence", "pairing", "cauchy", "fft", "jsw",
                             "duality", "braiding"}));
  verify_cmd->add_option("--max-n", v_max_n, "Cap on dimensions/ranks where the suite sweeps");
  verify_cmd->add_option("--max-d", v_max_d, "Cap on tensor degree where the suite sweeps");
  add_output_options(verify_cmd, v_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (spectrum_cmd->parsed()) {
      if (spectrum_cmd->count("--max-exp") > 0 && sp_maxexp < 0) {
        std::cerr << "error: --max-exp must be >= 0\n" << spectrum_cmd->help();
        return 2;
      }
      qpf::YBSpace space = qpf::tensor_power_space(qpf::standard_space(sp_n), sp_d);
      long maxexp = sp_maxexp >= 0 ? sp_maxexp : qpf::default_max_exp(sp_d);
      qpf::SpectrumReport rep = qpf::spectrum(space, maxexp);
      ordered_json j;
      j["n"] = sp_n;
      j["d"] = sp_d;
      j["square"] = sp_square;
      j["max_exp"] = maxexp;
      j["dim"] = rep.dim;
      j["complete"] = rep.complete;
      ordered_json entries = ordered_json::array();
      for (const auto& e : rep.entries) {
        ordered_json ej;
        ej["eigenvalue"] = qpf::eigenvalue_string(e.sign, e.exponent);
        ej["multiplicity"] = e.multiplicity;
        entries.push_back(std::move(ej));
      }
      j["entries"] = std::move(entries);
      std::string table = qpf::format_spectrum_row(rep) + "\n" +
                          "dim " + std::to_string(rep.dim) +
                          (rep.complete ? ", complete\n" : ", INCOMPLETE under candidate family\n");
      return emit(sp_out, j, table);
    }

    if (dims_cmd->parsed()) {
      qpf::FunctorPtr f;
      if (dims_functor == "tensor") f = qpf::tensor_power_functor(dims_d);
      else if (dims_functor == "sym") f = qpf::sym_power_functor(dims_d);
      else if (dims_functor == "ext") f = qpf::ext_power_functor(dims_d);
      else if (dims_functor == "div") f = qpf::divided_power_functor(dims_d);
      else {
        if (dims_m < 1) {
          std::cerr << "error: --functor gamma requires --m\n" << dims_cmd->help();
          return 2;
        }
        f = qpf::gamma_dm_functor(dims_d, dims_m);
      }
      long dim = qpf::evaluate(*f, dims_n).carrier_dim;
      ordered_json j;
      j["functor"] = dims_functor;
      j["d"] = dims_d;
      j["n"] = dims_n;
      if (dims_functor == "gamma") j["m"] = dims_m;
      j["dim"] = dim;
      return emit(dims_out, j, std::to_string(dim) + "\n");
    }

    if (basis_cmd->parsed()) {
      const auto& basis = qpf::degree_basis(b_m, b_n, b_d);
      ordered_json j;
      j["shape"] = {b_m, b_n};
      j["degree"] = b_d;
      j["count"] = basis.size();
      ordered_json elems = ordered_json::array();
      std::string table;
      for (const auto& w : basis) {
        qpf::QMatrixElement e;
        e.m = b_m;
        e.n = b_n;
        e.add(w, qpf::LaurentPoly(1));
        elems.push_back(qpf::element_to_json(e));
        table += qpf::monomial_to_string(w) + "\n";
      }
      j["elements"] = std::move(elems);
      table += "count " + std::to_string(basis.size()) + "\n";
      return emit(b_out, j, table);
    }

    if (int_cmd->parsed()) {
      const auto& sp = qpf::intertwiner_space(i_m, i_n, i_d);
      ordered_json j;
      j["m"] = i_m;
      j["n"] = i_n;
      j["d"] = i_d;
      j["dim"] = sp.dim();
      std::string table = "dim " + std::to_string(sp.dim()) + "\n";
      if (i_dump) {
        ordered_json basis = ordered_json::array();
        for (const auto& x : sp.basis) {
          ordered_json rows = ordered_json::array();
          for (long r = 0; r < x.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (long c = 0; c < x.cols(); ++c) row.push_back(x.at(r, c).to_string());
            rows.push_back(std::move(row));
          }
          basis.push_back(std::move(rows));
        }
        j["basis"] = std::move(basis);
        for (const auto& x : sp.basis) {
          for (long r = 0; r < x.rows(); ++r) {
            for (long c = 0; c < x.cols(); ++c) table += x.at(r, c).to_string() + (c + 1 < x.cols() ? " " : "");
            table += "\n";
          }
          table += "--\n";
        }
      }
      return emit(i_out, j, table);
    }

    if (schur_cmd->parsed()) {
      qpf::PartitionShape lambda;
      try {
        lambda = qpf::PartitionShape(parse_partition(s_lambda));
      } catch (const std::exception& e) {
        std::cerr << "error: bad --lambda: " << e.what() << "\n";
        return 2;
      }
      qpf::SchurData data = s_weyl ? qpf::weyl_functor(lambda, s_n) : qpf::schur_functor(lambda, s_n);
      ordered_json j;
      j["lambda"] = lambda.parts;
      j["n"] = s_n;
      j["kind"] = s_weyl ? "weyl" : "schur";
      j["dim"] = data.dim();
      ordered_json basis = ordered_json::array();
      for (const auto& v : data.image_basis) {
        ordered_json row = ordered_json::array();
        for (const auto& x : v) row.push_back(x.to_string());
        basis.push_back(std::move(row));
      }
      j["image_basis"] = std::move(basis);
      std::string table = "dim " + std::to_string(data.dim()) + "\n";
      for (const auto& v : data.image_basis) {
        for (size_t i = 0; i < v.size(); ++i) table += v[i].to_string() + (i + 1 < v.size() ? " " : "");
        table += "\n";
      }
      return emit(s_out, j, table);
    }

    if (det_cmd->parsed()) {
      qpf::QMatrixElement det = qpf::quantum_determinant(det_n);
      ordered_json j = qpf::element_to_json(det);
      std::string table = qpf::element_to_text(det) + "\n";
      if (!det_qvalue.empty()) {
        mpq_class q0 = parse_rational(det_qvalue);
        if (q0 == 0) {
          std::cerr << "error: --qvalue must be nonzero\n";
          return 2;
        }
        ordered_json spec = ordered_json::array();
        for (const auto& [w, c] : det.terms) {
          ordered_json t;
          t["word"] = qpf::monomial_to_string(w);
          t["value"] = c.evaluate(q0).get_str();
          spec.push_back(std::move(t));
        }
        j["specialized_at"] = q0.get_str();
        j["specialized_terms"] = std::move(spec);
      }
      return emit(det_out, j, table);
    }

    if (verify_cmd->parsed()) {
      qpf::Report rep;
      if (v_suite == "hecke") rep = qpf::suite_hecke(v_max_n > 0 ? v_max_n : 4);
      else if (v_suite == "yb") rep = qpf::suite_yb(v_max_n > 0 ? v_max_n : 3, v_max_d > 0 ? v_max_d : 3);
      else if (v_suite == "confluence")
        rep = qpf::suite_confluence(v_max_n > 0 ? v_max_n : 3, v_max_d > 0 ? v_max_d : 3);
      else if (v_suite == "pairing") rep = qpf::suite_pairing();
      else if (v_suite == "cauchy")
        rep = qpf::suite_cauchy(v_max_n > 0 ? v_max_n : 3, v_max_d > 0 ? v_max_d : 4);
      else if (v_suite == "fft") rep = qpf::suite_fft(v_max_n > 0 ? v_max_n : 2, v_max_d > 0 ? v_max_d : 2);
      else if (v_suite == "jsw") rep = qpf::suite_jsw(v_max_n > 0 ? v_max_n : 3, v_max_d > 0 ? v_max_d : 4);
      else if (v_suite == "duality")
        rep = qpf::suite_duality(v_max_n > 0 ? v_max_n : 3, v_max_d > 0 ? v_max_d : 3);
      else rep = qpf::suite_braiding(v_max_n > 0 ? v_max_n : 2);
      int rc = emit(v_out, report_json(rep), report_table(rep));
      if (rc != 0) return rc;
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
