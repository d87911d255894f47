// Command-line driver: validates voltage-graph files, builds covers, and runs
// the complexity / characteristic-element / tower / Kida / quantum-walk
// machinery, emitting deterministic text, JSON, or CSV reports.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "iwagraph/arborescence.hpp"
#include "iwagraph/char_element.hpp"
#include "iwagraph/complexity.hpp"
#include "iwagraph/errors.hpp"
#include "iwagraph/graph_io.hpp"
#include "iwagraph/invariants.hpp"
#include "iwagraph/qwalk.hpp"

using nlohmann::ordered_json;
using namespace iwagraph;

namespace {

struct Options {
  std::string graph_path;
  std::string beta_path;
  std::string group_spec;
  std::string out_path;
  std::string format = "text";
  std::uint32_t prime = 0;  // 0: take from the file
  int dims = 0;
  std::uint32_t nmax = 3;
  int box = 4;
  std::string a_value = "3";
  int jobs = 1;
  bool force_size = false;
  bool check_orientation_route = false;
};

ordered_json laurent_json(const LaurentPolynomial& f) {
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : f.terms()) {
    ordered_json t;
    t["exponents"] = e;
    t["coefficient"] = rational_str(c);
    terms.push_back(t);
  }
  return terms;
}

ordered_json cyclo_json(const CyclotomicNumber& x) {
  ordered_json j;
  j["prime"] = x.prime();
  j["level"] = x.level();
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(rational_str(c));
  j["coefficients"] = coeffs;
  return j;
}

ordered_json fit_json(const GrowthFit& fit) {
  ordered_json j;
  j["mu"] = rational_str(fit.mu);
  j["lambda"] = rational_str(fit.lambda);
  ordered_json mu_i = ordered_json::array(), lambda_i = ordered_json::array();
  for (const auto& m : fit.mu_i) mu_i.push_back(rational_str(m));
  for (const auto& l : fit.lambda_i) lambda_i.push_back(rational_str(l));
  j["mu_i"] = mu_i;
  j["lambda_i"] = lambda_i;
  j["nu"] = rational_str(fit.nu);
  j["note"] = "secondary coefficients are empirical (stable for computed range)";
  return j;
}

// Q in the T variable for d = 1: clear u^-k, substitute u = 1 + T.
std::string t_form(const LaurentPolynomial& f) {
  if (f.dims() != 1 || f.is_zero()) return f.is_zero() ? "0" : "";
  std::int32_t min_exp = f.terms().begin()->first[0];
  long k = min_exp < 0 ? -min_exp : 0;
  Poly<Rational> one_plus_t({Rational(1), Rational(1)});
  Poly<Rational> poly;
  for (const auto& [e, c] : f.terms())
    poly += one_plus_t.pow(static_cast<unsigned long>(e[0] + k)) * c;
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
    if (poly.coeffs()[i] == 0) continue;
    if (!first) out << " + ";
    out << rational_str(poly.coeffs()[i]);
    if (i > 0) out << "*T" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) out << "0";
  if (k > 0) out << ", times (1+T)^-" << k;
  return out.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw input_error("cannot write '" + opt.out_path + "'");
    out << text;
  }
}

void enforce_size(const Options& opt, const GraphBundle& b, std::uint32_t nmax) {
  if (opt.force_size) return;
  double size = b.graph.vertex_count();
  for (std::uint32_t i = 0; i < nmax; ++i)
    for (int j = 0; j < b.d; ++j) size *= b.p;
  if (size > 2500)
    throw input_error(
        "top layer exceeds the |V| p^{d nmax} <= 2500 guideline; rerun with "
        "--force-size to override");
}

GraphBundle load(const Options& opt) {
  if (opt.graph_path.empty()) throw input_error("--graph is required");
  GraphBundle b = load_graph_file(opt.graph_path);
  if (opt.prime != 0) {
    if (!is_prime(opt.prime)) throw input_error("--prime must be prime");
    b.p = opt.prime;
  }
  if (opt.dims != 0) {
    if (opt.dims < 1) throw input_error("--dims must be >= 1");
    if (opt.dims != b.d)
      throw input_error("--dims disagrees with the file's voltage arity");
  }
  return b;
}

FiniteGroup parse_group_spec(const std::string& spec) {
  std::vector<std::uint32_t> orders;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, 'x')) {
    if (token.empty()) throw input_error("bad --group spec '" + spec + "'");
    orders.push_back(static_cast<std::uint32_t>(std::stoul(token)));
  }
  if (orders.empty()) throw input_error("bad --group spec '" + spec + "'");
  return FiniteGroup::abelian(orders);
}

// Reduce the Z^d voltage into a finite abelian group, coordinate r of the
// group taking the voltage coordinate r mod the group order (cycling through
// the voltage coordinates when arities differ).
FiniteVoltage reduce_into(const ZdVoltage& alpha, const FiniteGroup& g) {
  FiniteVoltage out;
  const auto& orders = g.abelian_orders();
  for (std::size_t k = 0; k < alpha.pairs(); ++k) {
    const Exponents& v = alpha.on_pair(k);
    std::vector<std::uint32_t> coords;
    for (std::size_t r = 0; r < orders.size(); ++r) {
      std::int64_t x = v[r % v.size()] % static_cast<std::int64_t>(orders[r]);
      coords.push_back(static_cast<std::uint32_t>((x + orders[r]) % orders[r]));
    }
    out.per_pair.push_back(g.abelian_element(coords));
  }
  return out;
}

int run_validate(const Options& opt) {
  GraphBundle b = load(opt);
  ValidationReport r = validate_graph(b.graph);
  if (opt.format == "json") {
    ordered_json j;
    j["command"] = "validate";
    j["ok"] = r.ok;
    j["failure"] = r.failure;
    emit(opt, j.dump(2) + "\n");
  } else {
    emit(opt, r.ok ? "valid\n" : "invalid: " + r.failure + "\n");
  }
  return r.ok ? 0 : 2;
}

int run_cover(const Options& opt) {
  GraphBundle b = load(opt);
  enforce_size(opt, b, opt.nmax);
  Cover layer = tower_layer(b.graph, b.alpha, b.p, opt.nmax);
  GraphBundle out{layer.graph, pullback(layer, b.alpha), b.p, b.d};
  emit(opt, graph_to_json(out));
  return 0;
}

int run_kappa(const Options& opt) {
  GraphBundle b = load(opt);
  ValidationReport vr = validate_graph(b.graph);
  if (!vr.ok) throw input_error("invalid graph: " + vr.failure);
  Rational kappa = kappa_matrix_tree(b.graph);
  if (opt.format == "json") {
    ordered_json j;
    j["command"] = "kappa";
    j["kappa"] = rational_str(kappa);
    emit(opt, j.dump(2) + "\n");
  } else {
    emit(opt, rational_str(kappa) + "\n");
  }
  return 0;
}

int run_charelem(const Options& opt) {
  GraphBundle b = load(opt);
  ValidationReport vr = validate_graph(b.graph);
  if (!vr.ok) throw input_error("invalid graph: " + vr.failure);
  CharElement q =
      opt.check_orientation_route
          ? char_element_sec5(b.graph, b.graph.default_orientation(), b.alpha, b.p)
          : char_element_direct(b.graph, b.alpha, b.p);
  ordered_json j;
  j["command"] = "charelem";
  j["p"] = b.p;
  j["d"] = b.d;
  j["route"] = q.provenance == CharElement::Route::direct ? "direct" : "orientation";
  j["q_u_form"] = q.poly.str();
  j["q_terms"] = laurent_json(q.poly);
  if (b.d == 1) j["q_t_form"] = t_form(q.poly);
  if (!q.poly.is_zero()) {
    NormalizedLaurent norm = laurent_normalize(q.poly, b.p);
    j["mu"] = norm.mu;
    j["unit_part"] = laurent_json(norm.unit);
  } else {
    j["mu"] = nullptr;
  }
  if (opt.format == "json") {
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "Q (u form): " << q.poly.str() << "\n";
    if (b.d == 1) out << "Q (T form): " << t_form(q.poly) << "\n";
    if (!q.poly.is_zero()) {
      NormalizedLaurent norm = laurent_normalize(q.poly, b.p);
      out << "mu = " << norm.mu << ", unit part: " << norm.unit.str() << "\n";
    } else {
      out << "Q = 0\n";
    }
    emit(opt, out.str());
  }
  return 0;
}

int run_product_check(const Options& opt) {
  GraphBundle b = load(opt);
  ValidationReport vr = validate_graph(b.graph);
  if (!vr.ok) throw input_error("invalid graph: " + vr.failure);
  FiniteGroup g = parse_group_spec(opt.group_spec.empty() ? "2" : opt.group_spec);
  ProductFormulaResult r = product_formula_kappa(b.graph, g, reduce_into(b.alpha, g));
  ordered_json j;
  j["command"] = "product-check";
  j["group"] = g.abelian_orders();
  j["kappa_base"] = rational_str(r.kappa_base);
  j["kappa_direct"] = rational_str(r.kappa_cover_direct);
  j["kappa_product"] = rational_str(r.kappa_cover_product);
  ordered_json hs = ordered_json::array();
  for (const auto& entry : r.h_values) {
    ordered_json h;
    h["character"] = entry.psi.str();
    h["value"] = cyclo_json(entry.value);
    h["valuation"] = entry.value.valuation().str();
    hs.push_back(h);
  }
  j["h_values"] = hs;
  if (opt.format == "json") {
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "kappa(X) = " << rational_str(r.kappa_base)
        << ", kappa(cover) = " << rational_str(r.kappa_cover_direct)
        << " (product route: " << rational_str(r.kappa_cover_product) << ")\n";
    for (const auto& entry : r.h_values)
      out << "  h" << entry.psi.str() << " = " << entry.value.str()
          << "  [v_p = " << entry.value.valuation().str() << "]\n";
    emit(opt, out.str());
  }
  return 0;
}

ordered_json tower_json(const IwasawaReport& r) {
  ordered_json j;
  j["command"] = "tower";
  j["p"] = r.p;
  j["d"] = r.d;
  j["nmax"] = r.nmax;
  j["q_terms"] = laurent_json(r.q.poly);
  j["q_zero"] = r.q_zero;
  if (r.zero_case) {
    ordered_json z;
    z["first_zero_layer"] = r.zero_case->first_zero_layer;
    z["vanishing_characters"] = r.zero_case->vanishing_characters;
    z["nonzero_q"] = r.zero_case->nonzero_q;
    j["zero_case"] = z;
  } else {
    j["zero_case"] = nullptr;
    j["mu"] = rational_str(r.mu);
    j["lambda_Q"] = r.lambda.lambda_Q;
    j["lambda"] = r.lambda.lambda_tower;
    ordered_json cert = ordered_json::array();
    for (const auto& [a, mult] : r.lambda.certificate) {
      ordered_json c;
      c["a"] = a;
      c["multiplicity"] = mult;
      cert.push_back(c);
    }
    j["lambda_certificate"] = cert;
    j["lambda_box_used"] = r.lambda.box_used;
    j["lambda_cross_check_ok"] = r.lambda.cross_check_ok;
    j["secondary"] = fit_json(r.fit);
    j["stable_from"] = r.stable_from;
    j["stable_from_provable"] = r.stable_from_provable;
    j["closed_form_ok"] = r.closed_form_ok;
  }
  ordered_json table = ordered_json::array();
  for (const auto& row : r.table) {
    ordered_json t;
    t["n"] = row.n;
    t["vertices"] = row.vertices;
    t["kappa_matrix_tree"] = rational_str(row.kappa_mt);
    t["kappa_product"] = rational_str(row.kappa_product);
    t["v_p"] = row.kappa_zero ? "inf" : rational_str(row.v_p);
    table.push_back(t);
  }
  j["table"] = table;
  ordered_json ext = ordered_json::array();
  for (const auto& [n, v] : r.extended) {
    ordered_json t;
    t["n"] = n;
    t["v_p"] = rational_str(v);
    ext.push_back(t);
  }
  j["extended"] = ext;
  return j;
}

std::string tower_text(const IwasawaReport& r) {
  std::ostringstream out;
  out << "tower: p = " << r.p << ", d = " << r.d << ", nmax = " << r.nmax << "\n";
  out << "Q = " << r.q.poly.str() << "\n";
  if (r.zero_case) {
    out << "zero case: kappa vanishes from layer " << r.zero_case->first_zero_layer
        << "\n";
    if (r.zero_case->nonzero_q)
      out << "NOTE: Q is nonzero yet an evaluation vanished at";
    else
      out << "vanishing characters:";
    for (const auto& s : r.zero_case->vanishing_characters) out << " " << s;
    out << "\n";
  } else {
    out << "mu = " << rational_str(r.mu) << ", lambda = " << r.lambda.lambda_tower
        << " (lambda_Q = " << r.lambda.lambda_Q << ")\n";
    if (!r.lambda.certificate.empty()) {
      out << "lambda certificate:";
      for (const auto& [a, mult] : r.lambda.certificate) {
        out << " (";
        for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
        out << ")^" << mult;
      }
      out << " [box " << r.lambda.box_used << ", cross-check "
          << (r.lambda.cross_check_ok ? "ok" : "MISMATCH") << "]\n";
    }
    out << "secondary (empirical): nu = " << rational_str(r.fit.nu);
    for (std::size_t i = 0; i < r.fit.mu_i.size(); ++i)
      out << ", mu_" << (i + 1) << " = " << rational_str(r.fit.mu_i[i]) << ", lambda_"
          << (i + 1) << " = " << rational_str(r.fit.lambda_i[i]);
    out << "\n";
    out << "closed form " << (r.closed_form_ok ? "matches" : "UNVERIFIED")
        << " from layer " << r.stable_from;
    if (r.stable_from_provable >= 0)
      out << " (provable bound: " << r.stable_from_provable << ")";
    out << "\n";
  }
  out << std::setw(4) << "n" << std::setw(10) << "|V_n|" << std::setw(28) << "kappa_n"
      << std::setw(10) << "v_p" << "\n";
  for (const auto& row : r.table) {
    std::string kappa = rational_str(row.kappa_mt);
    if (kappa.size() > 26) kappa = "(" + std::to_string(kappa.size()) + " digits)";
    out << std::setw(4) << row.n << std::setw(10) << row.vertices << std::setw(28)
        << kappa << std::setw(10) << (row.kappa_zero ? "inf" : rational_str(row.v_p))
        << "\n";
  }
  for (const auto& [n, v] : r.extended)
    out << std::setw(4) << n << std::setw(10) << "-" << std::setw(28)
        << "(recurrence)" << std::setw(10) << rational_str(v) << "\n";
  return out.str();
}

std::string tower_csv(const IwasawaReport& r) {
  std::ostringstream out;
  out << "n,vertices,kappa_matrix_tree,kappa_product,v_p,kind\n";
  for (const auto& row : r.table)
    out << row.n << "," << row.vertices << "," << rational_str(row.kappa_mt) << ","
        << rational_str(row.kappa_product) << ","
        << (row.kappa_zero ? "inf" : rational_str(row.v_p)) << ",layer\n";
  for (const auto& [n, v] : r.extended)
    out << n << ",,,," << rational_str(v) << ",extended\n";
  return out.str();
}

int run_tower(const Options& opt) {
  GraphBundle b = load(opt);
  enforce_size(opt, b, opt.nmax);
  IwasawaReport r = tower_report(b.graph, b.alpha, b.p, opt.nmax, opt.box, opt.jobs);
  if (opt.format == "json")
    emit(opt, tower_json(r).dump(2) + "\n");
  else if (opt.format == "csv")
    emit(opt, tower_csv(r));
  else
    emit(opt, tower_text(r));
  return 0;
}

int run_kida(const Options& opt) {
  GraphBundle b = load(opt);
  if (opt.beta_path.empty()) throw input_error("kida needs --beta");
  BetaBundle beta = load_beta_file(opt.beta_path, b.graph);
  KidaReport r =
      kida_verify(b.graph, b.alpha, b.p, beta.group, beta.beta, opt.box, opt.jobs);
  ordered_json j;
  j["command"] = "kida";
  j["degree"] = r.degree;
  j["d"] = r.d;
  j["hypotheses_ok"] = r.hypotheses_ok;
  j["hypothesis_failure"] = r.hypothesis_failure;
  if (r.hypotheses_ok) {
    j["mu_x"] = rational_str(r.mu_x);
    j["mu_y"] = rational_str(r.mu_y);
    j["lambda_x"] = r.lambda_x;
    j["lambda_y"] = r.lambda_y;
    j["relation_holds"] = r.relation_holds;
  }
  if (opt.format == "json") {
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    if (!r.hypotheses_ok) {
      out << "hypotheses failed: " << r.hypothesis_failure << "\n";
    } else {
      out << "[Y:X] = " << r.degree << ", d = " << r.d << "\n";
      out << "mu(X) = " << rational_str(r.mu_x) << ", mu(Y) = " << rational_str(r.mu_y)
          << "\n";
      out << "lambda(X) = " << r.lambda_x << ", lambda(Y) = " << r.lambda_y << "\n";
      out << "relation " << (r.relation_holds ? "holds" : "FAILS") << "\n";
    }
    emit(opt, out.str());
  }
  if (r.hypotheses_ok && !r.relation_holds) return 1;
  return 0;
}

int run_qwalk(const Options& opt) {
  GraphBundle b = load(opt);
  enforce_size(opt, b, opt.nmax);
  Rational a = parse_rational(opt.a_value);
  QwalkGrowthReport r = qwalk_growth(b.graph, b.alpha, b.p, a, opt.nmax, opt.jobs);
  ordered_json j;
  j["command"] = "qwalk";
  j["a"] = rational_str(r.a);
  j["p"] = r.p;
  j["d"] = r.d;
  j["nmax"] = r.nmax;
  if (r.eigenvalue_layer) {
    j["eigenvalue_layer"] = *r.eigenvalue_layer;
  } else {
    j["eigenvalue_layer"] = nullptr;
    j["q_a_terms"] = laurent_json(r.q_a.poly);
    j["mu_q"] = rational_str(r.mu_q);
    j["lambda_q"] = r.lambda_q;
    j["chi_term"] = rational_str(r.chi_term);
    j["fitted"] = fit_json(r.fit);
    j["stable_from"] = r.stable_from;
    j["remark_bound"] = r.remark_bound;
    j["mu_decomposition_ok"] = r.mu_decomposition_ok;
    ordered_json table = ordered_json::array();
    for (const auto& row : r.table) {
      ordered_json t;
      t["n"] = row.n;
      t["darts"] = row.darts;
      t["v_p"] = rational_str(row.v_p_factored);
      if (row.direct_computed) t["v_p_direct"] = rational_str(row.v_p_direct);
      if (row.predicted_valid) t["prediction"] = rational_str(row.v_p_predicted);
      table.push_back(t);
    }
    j["table"] = table;
  }
  if (opt.format == "json") {
    emit(opt, j.dump(2) + "\n");
    return r.eigenvalue_layer ? 1 : 0;
  }
  if (opt.format == "csv") {
    std::ostringstream out;
    out << "n,darts,v_p,v_p_direct,prediction\n";
    for (const auto& row : r.table)
      out << row.n << "," << row.darts << "," << rational_str(row.v_p_factored) << ","
          << (row.direct_computed ? rational_str(row.v_p_direct) : "") << ","
          << (row.predicted_valid ? rational_str(row.v_p_predicted) : "") << "\n";
    emit(opt, out.str());
    return r.eigenvalue_layer ? 1 : 0;
  }
  std::ostringstream out;
  if (r.eigenvalue_layer) {
    out << "a = " << rational_str(r.a) << " hits the spectrum at layer "
        << *r.eigenvalue_layer << "\n";
    emit(opt, out.str());
    return 1;
  }
  out << "qwalk: a = " << rational_str(r.a) << ", p = " << r.p << ", d = " << r.d
      << "\n";
  out << "mu(Q_a) = " << rational_str(r.mu_q) << ", lambda(Q_a) = " << r.lambda_q
      << ", chi v_p(a^2-1) = " << rational_str(r.chi_term) << "\n";
  out << "fitted mu = " << rational_str(r.fit.mu)
      << ", lambda = " << rational_str(r.fit.lambda)
      << ", nu = " << rational_str(r.fit.nu) << " (stable from " << r.stable_from
      << ")\n";
  out << "mu decomposition " << (r.mu_decomposition_ok ? "holds" : "FAILS") << "\n";
  if (r.remark_bound >= 0)
    out << "provable stabilization bound: n >= " << r.remark_bound << "\n";
  out << std::setw(4) << "n" << std::setw(8) << "darts" << std::setw(12) << "v_p"
      << std::setw(12) << "direct" << std::setw(12) << "predicted" << "\n";
  for (const auto& row : r.table) {
    out << std::setw(4) << row.n << std::setw(8) << row.darts << std::setw(12)
        << rational_str(row.v_p_factored) << std::setw(12)
        << (row.direct_computed ? rational_str(row.v_p_direct) : "-") << std::setw(12)
        << (row.predicted_valid ? rational_str(row.v_p_predicted) : "-") << "\n";
  }
  emit(opt, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Iwasawa invariants of weighted-graph towers"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--graph", opt.graph_path, "graph JSON file")->required();
    cmd->add_option("--prime", opt.prime, "override the tower prime");
    cmd->add_option("--dims", opt.dims, "expected voltage arity (checked)");
    cmd->add_option("--out", opt.out_path, "write the report to a file");
    cmd->add_option("--format", opt.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--jobs", opt.jobs, "worker threads (no semantic effect)");
    cmd->add_flag("--force-size", opt.force_size, "override the layer size guard");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the graph axioms");
  add_common(validate);
  CLI::App* cover = app.add_subcommand("cover", "emit tower layer --nmax as JSON");
  add_common(cover);
  cover->add_option("--nmax", opt.nmax, "layer index");
  CLI::App* kappa = app.add_subcommand("kappa", "weighted complexity");
  add_common(kappa);
  CLI::App* charelem = app.add_subcommand("charelem", "characteristic element");
  add_common(charelem);
  charelem->add_flag("--check", opt.check_orientation_route,
                     "also run the orientation route and compare");
  CLI::App* product = app.add_subcommand("product-check",
                                         "two-route complexity of a finite cover");
  add_common(product);
  product->add_option("--group", opt.group_spec, "abelian group, e.g. 2, 4, 2x2");
  CLI::App* tower = app.add_subcommand("tower", "Iwasawa invariants along the tower");
  add_common(tower);
  tower->add_option("--nmax", opt.nmax, "largest layer");
  tower->add_option("--box", opt.box, "trial-division box for d >= 2");
  CLI::App* kida = app.add_subcommand("kida", "degree relation for a p-power cover");
  add_common(kida);
  kida->add_option("--beta", opt.beta_path, "finite-group voltage JSON")->required();
  kida->add_option("--box", opt.box, "trial-division box for d >= 2");
  CLI::App* qwalk = app.add_subcommand("qwalk", "quantum-walk valuation growth");
  add_common(qwalk);
  qwalk->add_option("--a", opt.a_value, "evaluation point (rational)");
  qwalk->add_option("--nmax", opt.nmax, "largest layer");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(opt);
    if (cover->parsed()) return run_cover(opt);
    if (kappa->parsed()) return run_kappa(opt);
    if (charelem->parsed()) return run_charelem(opt);
    if (product->parsed()) return run_product_check(opt);
    if (tower->parsed()) return run_tower(opt);
    if (kida->parsed()) return run_kida(opt);
    if (qwalk->parsed()) return run_qwalk(opt);
  } catch (const consistency_error& e) {
    std::cerr << "verification mismatch: " << e.what() << "\n";
    return 1;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
