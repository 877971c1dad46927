// Command-line driver: batch verification of the centre-of-block structure
// for the small Ree groups at q = 3^{2k+1}, plus table exporters.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ree/center.hpp"

using nlohmann::json;
using namespace ree;

namespace {

struct Options {
  int k = 1;
  int epsilon = +1;
  int jobs = 0;
  bool allow_big = false;
  std::string format = "json";
  std::string what;
  bool legend = false;
  bool expand_families = false;
  std::string out;
};

json report_of(const CheckReport& rep) {
  json j;
  j["suite"] = rep.suite;
  j["checks"] = rep.checks;
  j["failures"] = rep.failures.size() + rep.dropped;
  j["status"] = rep.ok() ? "pass" : "fail";
  if (!rep.ok()) {
    j["detail"] = json::array();
    for (const auto& f : rep.failures) j["detail"].push_back(f.what);
  }
  return j;
}

void emit(const json& j, const Options& opt) {
  if (!opt.out.empty()) {
    std::ofstream os(opt.out);
    os << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

std::string timestamp() {
  char buf[64];
  const std::time_t now = std::time(nullptr);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

// The epsilon for which Burnside's formula over the table yields non-negative
// integers; exactly one sign does.
std::pair<int, NTensor> resolved_burnside_tensor(const FieldSpec& spec, int jobs) {
  std::optional<std::pair<int, NTensor>> good;
  for (int eps : {+1, -1}) {
    auto t = NBurnsideEngine(build_ntable(spec, eps)).try_tensor(jobs);
    if (t) {
      if (good) throw std::logic_error("both epsilon signs produce valid tensors");
      good = {eps, std::move(*t)};
    }
  }
  if (!good) throw std::runtime_error("no epsilon sign yields a valid Burnside tensor");
  return std::move(*good);
}

struct NPipeline {
  json checks = json::array();
  bool ok = true;
  int resolved_epsilon = 0;
  std::optional<NTensor> tensor;       // aligned brute tensor (k=1) or Burnside
  std::optional<LoewyReport> loewy;
  json alignment;

  void add(const CheckReport& rep) {
    checks.push_back(report_of(rep));
    ok = ok && rep.ok();
  }
};

NPipeline run_normaliser(const Options& opt) {
  NPipeline out;
  const FieldSpec spec = field_build(opt.k);
  const NCharTable table = build_ntable(spec, opt.epsilon);

  CheckReport degrees{"degree identity"};
  ++degrees.checks;
  if (sum_degree_squares(table) != BigInt(spec.q) * spec.q * spec.q * (spec.q - 1))
    degrees.fail("sum of theta(1)^2 != |N|");
  out.add(degrees);
  out.add(verify_orthogonality(table));
  out.add(verify_inverse_conjugation(table));

  if (opt.k == 1 || opt.allow_big) {
    const ClassPartition part = enumerate_classes(spec, {opt.allow_big, opt.jobs});
    CheckReport census{"class census"};
    ++census.checks;
    if (part.class_count() != table.cols.count()) census.fail("class count != q+7");
    for (int c = 0; c < table.cols.count(); ++c) {
      ++census.checks;
      const auto& info = part.classes()[part.class_of_label(table.cols.label(c))];
      if (info.centralizer_order != table.cols.centralizer_order(c))
        census.fail("centralizer order mismatch on " + label_name(table.cols.label(c)));
    }
    out.add(census);
    const NTensor brute_class = bruteforce_tensor(part, identity_class_map(part), opt.jobs);
    const Alignment align = align_labels(table, part, brute_class, opt.jobs);
    out.resolved_epsilon = align.epsilon;
    out.alignment = {{"epsilon", align.epsilon},
                     {"swap_t", align.swap_t},
                     {"swap_jt", align.swap_jt},
                     {"swap_yt", align.swap_yt},
                     {"labelings_passing", align.passing},
                     {"labelings_tested", align.candidates}};
    CheckReport oracle{"oracle equivalence"};
    oracle.checks = static_cast<uint64_t>(brute_class.n) * brute_class.n * brute_class.n;
    if (align.passing < 1) oracle.fail("no labeling matches");
    out.add(oracle);
    out.tensor = remap_tensor(brute_class, align.column_to_class);
  } else {
    auto [eps, tensor] = resolved_burnside_tensor(spec, opt.jobs);
    out.resolved_epsilon = eps;
    out.tensor = std::move(tensor);
  }

  out.add(verify_symmetries(*out.tensor, table.cols));
  out.add(verify_column_sum(*out.tensor, table.cols));
  out.add(verify_defect_divisibility(*out.tensor, table.cols));

  NCenterAlgebra alg(spec, *out.tensor);
  out.add(alg.certify_radical());
  out.loewy = alg.loewy();
  CheckReport ll{"Loewy length of Z(kN)"};
  ++ll.checks;
  if (out.loewy->loewy_length != 2)
    ll.fail("LL(Z(kN)) = " + std::to_string(out.loewy->loewy_length) + " != 2");
  out.add(ll);
  return out;
}

struct GPipeline {
  json checks = json::array();
  bool ok = true;
  std::optional<LoewyReport> loewy;

  void add(const CheckReport& rep) {
    checks.push_back(report_of(rep));
    ok = ok && rep.ok();
  }
};

GPipeline run_ree_side(const Options& opt) {
  GPipeline out;
  const GProductEngine eng(build_gdata(opt.k));
  out.add(eng.verify_product_laws());
  const GCenterAlgebra alg(eng);
  out.add(alg.certify_radical());
  out.loewy = alg.loewy();
  CheckReport ll{"Loewy length of Z(kGe0)"};
  ll.checks = 3;
  if (out.loewy->loewy_length != 3)
    ll.fail("LL(Z(kGe0)) = " + std::to_string(out.loewy->loewy_length) + " != 3");
  if (out.loewy->radical_dims.size() < 2 || out.loewy->radical_dims[1] != 1)
    ll.fail("dim J^2 != 1");
  else {
    // the square is spanned by 2 sum C(R) + sum C(JR) + 2 sum C(JS)
    const F3Vec& b = out.loewy->square_basis[0];
    F3Vec beta(alg.dim(), 0);
    for (int c = 0; c < alg.dim(); ++c) {
      if (alg.kind_of(c) == GKind::R) beta[c] = 2;
      if (alg.kind_of(c) == GKind::JR) beta[c] = 1;
      if (alg.kind_of(c) == GKind::JS) beta[c] = 2;
    }
    F3Vec twice = beta;
    f3_axpy(twice, 1, beta);
    if (!(b == beta || b == twice)) ll.fail("J^2 generator is not the beta vector");
  }
  out.add(ll);
  return out;
}

int cmd_verify(const Options& opt, bool normaliser, bool ree) {
  json doc;
  doc["command"] = normaliser && ree ? "verify-all" : (normaliser ? "verify-normaliser" : "verify-ree");
  doc["k"] = opt.k;
  doc["epsilon"] = opt.epsilon;
  doc["generated_at"] = timestamp();
  bool ok = true;

  std::optional<NPipeline> np;
  if (normaliser || ree) {
    np = run_normaliser(opt);
    ok = ok && np->ok;
  }
  if (normaliser) {
    json ndims = json::array();
    for (int d : np->loewy->radical_dims) ndims.push_back(d);
    doc["normaliser"] = {{"algebra", "Z(kN)"},
                         {"dim_center", np->tensor->n},
                         {"radical_dims", ndims},
                         {"checks", np->checks},
                         {"resolved_epsilon", np->resolved_epsilon},
                         {"loewy_length", np->loewy ? np->loewy->loewy_length : -1}};
    if (!np->alignment.is_null()) doc["normaliser"]["alignment"] = np->alignment;
    doc["loewy_length"] = np->loewy->loewy_length;
  }
  if (ree) {
    GPipeline gp = run_ree_side(opt);
    ok = ok && gp.ok;
    json gside = {{"algebra", "Z(kGe0)"},
                  {"dim_center", np->tensor->n},  // q+7, same as k(b)
                  {"checks", gp.checks},
                  {"loewy_length", gp.loewy->loewy_length}};
    json dims = json::array();
    for (int d : gp.loewy->radical_dims) dims.push_back(d);
    gside["radical_dims"] = dims;
    if (opt.k == 1) {
      const GProductEngine eng(build_gdata(opt.k));
      const NColumns cols{field_build(opt.k)};
      const CheckReport ti = verify_ti_congruence(*np->tensor, cols, eng);
      gside["checks"].push_back(report_of(ti));
      ok = ok && ti.ok();
    }
    doc["ree"] = gside;
    doc["loewy_g"] = gp.loewy->loewy_length;
    doc["loewy_n"] = np->loewy->loewy_length;
    doc["isomorphic"] = !(gp.loewy->loewy_length != np->loewy->loewy_length);
    doc["verdict"] = gp.loewy->loewy_length != np->loewy->loewy_length
                         ? "Z(kGe0) and Z(kN) are not isomorphic"
                         : "inconclusive";
  }
  doc["status"] = ok ? "pass" : "fail";
  emit(doc, opt);
  return ok ? 0 : 1;
}

int cmd_export(const Options& opt) {
  const auto write = [&](const std::string& text) {
    if (!opt.out.empty()) std::ofstream(opt.out) << text;
    else std::cout << text;
  };
  if (opt.what == "chartab-n") {
    const NCharTable t = build_ntable(field_build(opt.k), opt.epsilon);
    if (opt.format == "csv") {
      write(ntable_csv(t, opt.expand_families));
    } else {
      json doc;
      doc["q"] = t.spec.q;
      doc["epsilon"] = t.epsilon;
      json cols = json::array();
      for (int c = 0; c < t.cols.count(); ++c)
        cols.push_back({{"label", label_name(t.cols.label(c))},
                        {"centralizer_order", t.cols.centralizer_order(c)}});
      doc["columns"] = cols;
      json rows = json::array();
      if (opt.expand_families) {
        const unsigned M = static_cast<unsigned>(t.spec.q - 1);
        for (int i = 0; i < t.alpha_count(); ++i) {
          json vals = json::array();
          for (int c = 0; c < t.cols.count(); ++c) vals.push_back(t.alpha_value(i, c, M).str());
          rows.push_back({{"name", "alpha_" + std::to_string(i)}, {"degree", "1"},
                          {"values", vals}});
        }
      } else {
        rows.push_back({{"name", "alpha_i"},
                        {"family_size", t.alpha_count()},
                        {"rule", "alpha_i(c) = zeta^(i*kappa(c)), kappa = image in Z/(q-1)"}});
      }
      for (const auto& r : t.singletons) {
        json vals = json::array();
        for (const auto& v : r.values) vals.push_back(to_string(v));
        rows.push_back({{"name", r.name}, {"degree", r.degree.str()}, {"values", vals}});
      }
      doc["rows"] = rows;
      write(doc.dump(2) + "\n");
    }
    return 0;
  }
  if (opt.what == "n-constants") {
    const FieldSpec spec = field_build(opt.k);
    const NCharTable table = build_ntable(spec, opt.epsilon);
    if (opt.k == 1 || opt.allow_big) {
      const ClassPartition part = enumerate_classes(spec, {opt.allow_big, opt.jobs});
      const NTensor brute_class = bruteforce_tensor(part, identity_class_map(part), opt.jobs);
      const Alignment align = align_labels(table, part, brute_class, opt.jobs);
      write(tensor_csv(remap_tensor(brute_class, align.column_to_class), table.cols));
    } else {
      write(tensor_csv(resolved_burnside_tensor(spec, opt.jobs).second, table.cols));
    }
    return 0;
  }
  if (opt.what == "g-products") {
    const GProductEngine eng(build_gdata(opt.k));
    write(eng.product_table_json(opt.legend));
    return 0;
  }
  if (opt.what == "class-census") {
    const ClassPartition part = enumerate_classes(field_build(opt.k), {opt.allow_big, opt.jobs});
    write(census_csv(part));
    return 0;
  }
  std::cerr << "unknown export target '" << opt.what << "'\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the centre-of-block Loewy structure for the small Ree groups"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* sub, bool with_eps = true) {
    sub->add_option("--k", opt.k, "field parameter, q = 3^(2k+1)")->check(CLI::PositiveNumber);
    if (with_eps)
      sub->add_option("--epsilon", opt.epsilon, "sign parameter of the character table")
          ->check(CLI::IsMember({-1, 1}));
    sub->add_option("--jobs", opt.jobs, "worker threads (0 = all cores)");
    sub->add_flag("--allow-big", opt.allow_big, "opt in to full enumeration for k >= 2");
    sub->add_option("--out", opt.out, "write the report/export to a file");
  };

  auto* vn = app.add_subcommand("verify-normaliser", "class census, character table, "
                                "structure-constant laws and LL(Z(kN)) = 2");
  add_common(vn);
  auto* vr = app.add_subcommand("verify-ree", "product table, block idempotent, "
                                "LL(Z(kGe0)) = 3 and the comparison verdict");
  add_common(vr);
  auto* va = app.add_subcommand("verify-all", "both verification suites");
  add_common(va);
  auto* ex = app.add_subcommand("export", "write tables as CSV/JSON");
  add_common(ex);
  ex->add_option("--what", opt.what, "chartab-n | n-constants | g-products | class-census")
      ->required();
  ex->add_option("--format", opt.format, "csv | json (chartab-n only)")
      ->check(CLI::IsMember({"csv", "json"}));
  ex->add_flag("--legend", opt.legend, "name the recurring cells in g-products");
  ex->add_flag("--expand-families", opt.expand_families,
               "expand the alpha family to one row per character");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (vn->parsed() || va->parsed() || vr->parsed())
      return cmd_verify(opt, vn->parsed() || va->parsed(), vr->parsed() || va->parsed());
    return cmd_export(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json doc = {{"status", "fail"}, {"error", e.what()}};
    std::cerr << doc.dump(2) << "\n";
    return 1;
  }
}
