// k3check: command-line driver for the catalog, verification and the individual checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "k3/catalog.hpp"
#include "k3/jacobi_zeta.hpp"
#include "k3/report.hpp"
#include "k3/verify.hpp"

namespace {

using k3::report::json;
using k3::report::Document;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
  bool json = false;
  bool timing = false;
};

const auto g_start = std::chrono::steady_clock::now();

void print_checks(std::ostream& os, const json& checks, const std::string& prefix = "") {
  for (const auto& c : checks) {
    std::string st = c["status"].get<std::string>();
    for (auto& ch : st) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << prefix << st << "  " << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>() << "\n";
  }
}

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw k3::ParseError("expected a comma separated integer list, got '" + s + "'", out.size());
    }
    if (used != item.size()) throw k3::ParseError("trailing characters in '" + item + "'", out.size());
    out.push_back(v);
  }
  return out;
}

std::string suggest_primes(const k3::K3CatalogEntry& e) {
  auto ps = k3::default_primes(e);
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + std::to_string(ps[i]);
  return out;
}

int emit(const Document& doc, const Output& o, const std::function<void()>& human) {
  long long us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - g_start).count();
  if (o.json) {
    json j = doc.to_json();
    if (o.timing) j["timing_us"] = us;
    std::cout << j.dump(2) << "\n";
  } else {
    human();
    if (o.timing) std::cout << "time: " << us << " us\n";
  }
  return doc.ok ? 0 : kExitFail;
}

int cmd_catalog(std::optional<unsigned> k, const Output& o) {
  Document doc;
  doc.command = "catalog";
  if (k) {
    doc.inputs["k"] = *k;
    const auto& e = k3::catalog_entry(*k);
    doc.result["entry"] = k3::report::entry(e);
    return emit(doc, o, [&] {
      const json& j = doc.result["entry"];
      std::cout << "k = " << e.k << " (" << j["class"].get<std::string>() << ")\n";
      std::cout << "  equation: " << e.equation_text << "\n";
      std::cout << "  action:   " << j["action"].dump() << "\n";
      std::cout << "  S_X:      " << e.S.describe() << ", rank " << e.S.rank() << ", det " << e.S.determinant() << "\n";
      std::cout << "  T_X:      " << e.T.describe() << ", rank " << e.T.rank() << ", det " << e.T.determinant() << "\n";
      if (e.cover) {
        std::cout << "  cover:    m = " << e.m << " on " << e.cover->chart_text << "\n";
        std::cout << "            " << e.cover->map.describe(e.cover->chart.variables) << "\n";
        std::cout << "  characters:";
        for (const auto& b : e.expected_brackets) std::cout << " " << k3::to_bracket_string(b);
        std::cout << "\n";
      }
      if (e.fibration) {
        std::cout << "  fibers:   " << j["fibration"]["reducible_fibers"].dump();
        if (e.fibration->section)
          std::cout << ", P = (" << e.fibration->section->x.to_string() << ", " << e.fibration->section->y.to_string()
                    << "), h(P) = " << k3::to_string(*e.fibration->height);
        std::cout << ", disc(S) = " << e.fibration->disc << "\n";
      }
      std::cout << "  mirror:   " << e.mirror << "\n";
    });
  }
  json rows = json::array();
  for (const auto& e : k3::load_catalog()) rows.push_back(k3::report::entry(e));
  doc.result["entries"] = rows;
  return emit(doc, o, [&] {
    std::printf("%-4s %-15s %-4s %-28s %-7s %-7s %s\n", "k", "class", "m", "equation", "rank S", "rank T", "mirror");
    for (const auto& e : k3::load_catalog())
      std::printf("%-4u %-15s %-4s %-28s %-7zu %-7zu %s\n", e.k, e.unimodular ? "unimodular" : "non-unimodular",
                  e.m ? std::to_string(e.m).c_str() : "-", e.equation_text.c_str(), e.S.rank(), e.T.rank(),
                  e.mirror.c_str());
  });
}

int cmd_verify(std::optional<unsigned> k, bool all, const std::vector<std::uint32_t>& qs, const Output& o) {
  if (all == k.has_value()) throw k3::InvalidArgument("verify needs exactly one of --k or --all");
  if (all && !qs.empty()) throw k3::InvalidArgument("--q applies to a single entry; use --k");
  Document doc;
  doc.command = "verify";
  std::vector<const k3::K3CatalogEntry*> entries;
  if (k) {
    doc.inputs["k"] = *k;
    entries.push_back(&k3::catalog_entry(*k));
    const auto& e = *entries.front();
    for (auto q : qs) {
      try {
        k3::require_entry_prime(e, q);
      } catch (const k3::InvalidArgument& ex) {
        throw k3::NotAdmissible(std::string(ex.what()) + "; admissible primes: " + suggest_primes(e));
      }
    }
    if (!qs.empty()) doc.inputs["q"] = qs;
  } else {
    doc.inputs["all"] = true;
    for (const auto& e : k3::load_catalog()) entries.push_back(&e);
  }
  json reports = json::array();
  for (const auto* e : entries) {
    auto r = k3::verify_entry(*e, qs);
    reports.push_back(k3::report::entry_report(r));
    for (const auto& c : r.checks) doc.add_check("k=" + std::to_string(r.k) + " " + c.name, c.status, c.detail);
  }
  doc.result["entries"] = reports;
  return emit(doc, o, [&] {
    for (const auto& r : reports) {
      std::cout << "k = " << r["k"].get<unsigned>() << " primes " << r["primes"].dump() << ": "
                << (r["status"] == "pass" ? "PASS" : "FAIL") << "\n";
      print_checks(std::cout, r["checks"], "  ");
    }
    std::cout << (doc.ok ? "verification passed" : "verification FAILED") << "\n";
  });
}

int cmd_zeta(unsigned k, std::uint32_t q, const Output& o) {
  const auto& e = k3::catalog_entry(k);
  try {
    k3::require_entry_prime(e, q);
  } catch (const k3::InvalidArgument& ex) {
    throw k3::NotAdmissible(std::string(ex.what()) + "; admissible primes: " + suggest_primes(e));
  }
  Document doc;
  doc.command = "zeta";
  doc.inputs = {{"k", k}, {"q", q}};
  auto z = k3::zeta_report(e, q);
  doc.result = k3::report::zeta(z);
  doc.add_check("functional-equation", k3::functional_equation_holds(z.R_t, q) ? k3::CheckStatus::pass : k3::CheckStatus::fail,
                "roots of R_t stable under r -> q^2/r");
  if (e.elliptic) {
    auto count = k3::count_entry(k3::make_field(q), e).total;
    doc.result["count"] = count.str();
    doc.add_check("count", count == z.predicted_count ? k3::CheckStatus::pass : k3::CheckStatus::fail,
                  "smooth count " + count.str() + ", predicted " + z.predicted_count.str());
  } else {
    doc.add_check("count", k3::CheckStatus::skip, "affine-only oracle; smooth count out of scope");
  }
  return emit(doc, o, [&] {
    std::cout << "k = " << k << ", q = " << q << (z.m ? ", m = " + std::to_string(z.m) : "") << "\n";
    std::cout << "  n+ = " << z.n_plus << ", n- = " << z.n_minus << "\n";
    std::cout << "  R_a(T) = " << z.R_a.to_string() << "\n";
    std::cout << "  R_t(T) = " << z.R_t.to_string() << "\n";
    std::cout << "  trace = " << z.trace << ", predicted count = " << z.predicted_count << "\n";
    for (const auto& n : z.notes) std::cout << "  note: " << n << "\n";
    print_checks(std::cout, doc.checks, "  ");
  });
}

int cmd_jacobi(unsigned m, std::uint32_t q, const std::string& alpha, std::optional<std::uint32_t> g, const Output& o) {
  auto a = parse_int_list(alpha);
  if (a.size() != 3 && a.size() != 4) throw k3::InvalidArgument("--alpha needs 3 or 4 entries");
  auto c = a.size() == 3 ? k3::CharacterVector::from_bracket(m, {a[0], a[1], a[2]})
                         : k3::CharacterVector::from_full(m, {a[0], a[1], a[2], a[3]});
  auto f = g ? k3::make_field(q, *g) : k3::make_field(q);
  auto j = k3::jacobi_sum(f, m, c);
  Document doc;
  doc.command = "jacobi";
  doc.inputs = {{"m", m}, {"q", q}, {"alpha", alpha}, {"g", f.generator()}};
  doc.result = {{"alpha", k3::report::character(c)}, {"j", k3::report::cyclotomic(j)}};
  bool in_A = c.a[0] && c.a[1] && c.a[2] && c.a[3];
  if (in_A) {
    bool norm = j * j.conj() == k3::CycInt::from_integer(m, k3::BigInt(q) * q);
    doc.add_check("norm", norm ? k3::CheckStatus::pass : k3::CheckStatus::fail, "j * conj(j) = q^2");
  }
  return emit(doc, o, [&] {
    std::cout << j.to_string() << "\n";
    print_checks(std::cout, doc.checks);
  });
}

void add_count_result(Document& doc, const k3::EllipticCount& c) {
  json fibers = json::array();
  for (const auto& f : c.bad_fibers) fibers.push_back(k3::report::fiber(f));
  doc.result = {{"count", c.total.str()}, {"bad_fibers", fibers}, {"euler_sum", c.euler_sum}, {"trivial_rank", c.trivial_rank}};
}

int cmd_count(std::optional<unsigned> k, std::optional<unsigned> fermat, std::optional<std::string> equation,
              std::uint32_t q, const Output& o) {
  int given = k.has_value() + fermat.has_value() + equation.has_value();
  if (given != 1) throw k3::InvalidArgument("count needs exactly one of --k, --fermat, --equation");
  Document doc;
  doc.command = "count";
  doc.inputs["q"] = q;
  auto f = k3::make_field(q);
  std::string header;
  if (fermat) {
    doc.inputs["fermat"] = *fermat;
    doc.result = {{"count", k3::count_fermat(f, *fermat).str()}};
    header = "Fermat surface of degree " + std::to_string(*fermat);
  } else if (k) {
    doc.inputs["k"] = *k;
    const auto& e = k3::catalog_entry(*k);
    if (e.elliptic) {
      add_count_result(doc, k3::count_entry(f, e));
    } else {
      auto branch = k3::double_cover_branch(e.equation);
      doc.result = {{"affine_count", k3::count_affine_double_sextic(f, branch).str()},
                    {"note", "affine-only oracle; smooth count out of scope"}};
    }
    header = e.equation_text;
  } else {
    doc.inputs["equation"] = *equation;
    auto s = k3::parse_surface(*equation);
    add_count_result(doc, k3::count_elliptic_smooth(f, k3::WeierstrassModel::from_surface(s)));
    header = s.to_string();
  }
  return emit(doc, o, [&] {
    std::cout << header << " over F_" << q << "\n";
    for (auto it = doc.result.begin(); it != doc.result.end(); ++it) {
      if (it.key() == "bad_fibers") {
        std::cout << "  bad fibers:";
        for (const auto& b : *it) std::cout << " " << b["name"].get<std::string>() << "@" << b["location"].get<std::string>();
        std::cout << "\n";
      } else {
        std::cout << "  " << it.key() << " = " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      }
    }
  });
}

int cmd_lattice(std::optional<unsigned> k, std::optional<std::string> gram_text, const Output& o) {
  if (k.has_value() == gram_text.has_value()) throw k3::InvalidArgument("lattice needs exactly one of --k or --gram");
  Document doc;
  doc.command = "lattice";
  if (gram_text) {
    doc.inputs["gram"] = *gram_text;
    json g;
    try {
      g = json::parse(*gram_text);
    } catch (const json::parse_error& ex) {
      throw k3::ParseError(std::string("invalid Gram matrix: ") + ex.what(), ex.byte);
    }
    std::vector<std::vector<long long>> rows;
    try {
      rows = g.get<std::vector<std::vector<long long>>>();
    } catch (const json::exception&) {
      throw k3::LatticeError("Gram matrix must be a list of integer rows");
    }
    k3::GramLattice l = k3::explicit_lattice(rows);
    doc.result["lattice"] = k3::report::lattice(l);
    return emit(doc, o, [&] {
      const auto& j = doc.result["lattice"];
      std::cout << "rank " << j["rank"] << ", signature " << j["signature"].dump() << ", det "
                << j["determinant"].get<std::string>() << "\n";
      if (j.contains("discriminant_form")) std::cout << "discriminant form " << j["discriminant_form"].get<std::string>() << "\n";
    });
  }
  doc.inputs["k"] = *k;
  const auto& e = k3::catalog_entry(*k);
  doc.result = {{"S", k3::report::lattice(e.S)}, {"T", k3::report::lattice(e.T)}};
  for (const auto& c : k3::lattice_checks(e)) doc.add_check(c.name, c.status, c.detail);
  for (const auto& c : k3::fibration_checks(e, k3::default_primes(e).front())) doc.add_check(c.name, c.status, c.detail);
  return emit(doc, o, [&] {
    std::cout << "k = " << e.k << "\n  S_X = " << e.S.describe() << "\n  T_X = " << e.T.describe() << "\n";
    print_checks(std::cout, doc.checks, "  ");
  });
}

int cmd_mirror(unsigned k, const Output& o) {
  const auto& e = k3::catalog_entry(k);
  Document doc;
  doc.command = "mirror";
  doc.inputs["k"] = k;
  auto split = k3::mirror_split(e.T);
  json res{{"exists", split.exists}, {"expected", e.mirror}};
  if (split.exists) {
    res["method"] = split.method;
    res["complement"] = k3::report::lattice(*split.complement);
  } else {
    res["reason"] = split.reason;
  }
  doc.result = res;
  for (const auto& c : k3::mirror_checks(e)) doc.add_check(c.name, c.status, c.detail);
  return emit(doc, o, [&] {
    if (!split.exists)
      std::cout << "none: " << split.reason << "\n";
    else
      std::cout << "T_X = U2 + M via " << split.method << ", M = " << split.complement->describe() << "\n";
    print_checks(std::cout, doc.checks, "  ");
  });
}

int cmd_delsarte(const std::string& equation, const Output& o) {
  auto s = k3::parse_surface(equation);
  auto pi = k3::derive_cover(s);
  auto tc = k3::transcendental_characters(s, pi);
  auto g = k3::compute_G(pi);
  Document doc;
  doc.command = "delsarte";
  doc.inputs["equation"] = equation;
  json chars = json::array();
  for (const auto& c : tc.characters) chars.push_back(k3::report::character(c));
  doc.result = {{"surface", s.to_string()},
                {"m", pi.m},
                {"map", k3::report::monomial_map(pi, s.variables)},
                {"deck_group_order", g.order().str()},
                {"characters", chars},
                {"picard_number", tc.picard_number}};
  return emit(doc, o, [&] {
    std::cout << s.to_string() << "\n  m = " << pi.m << "\n  map: " << pi.describe(s.variables) << "\n  |G| = "
              << g.order() << "\n  " << tc.characters.size() << " transcendental characters:";
    for (const auto& c : tc.characters) std::cout << " " << k3::to_bracket_string(c);
    std::cout << "\n  rho = " << tc.picard_number << "\n";
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for non-symplectic K3 surfaces of Delsarte type"};
  app.require_subcommand(1);
  Output out;
  auto add_output = [&](CLI::App* c) {
    c->add_flag("--json", out.json, "emit the report as JSON");
    c->add_flag("--timing", out.timing, "include wall time in the report");
  };

  std::optional<unsigned> k, m_fermat;
  std::optional<std::string> equation_opt, gram_opt;
  unsigned k_req = 0, m = 0;
  std::uint32_t q = 0;
  std::optional<std::uint32_t> g;
  std::vector<std::uint32_t> qs;
  bool all = false;
  std::string alpha, equation;

  auto* catalog = app.add_subcommand("catalog", "list catalog entries");
  catalog->add_option("--k", k, "single entry");
  add_output(catalog);

  auto* verify = app.add_subcommand("verify", "run verify_entry");
  verify->add_option("--k", k, "catalog entry");
  verify->add_flag("--all", all, "all 16 entries with default primes");
  verify->add_option("--q", qs, "primes (default: two smallest q = 1 mod m)");
  add_output(verify);

  auto* zeta = app.add_subcommand("zeta", "zeta factors and predicted count");
  zeta->add_option("--k", k_req)->required();
  zeta->add_option("--q", q)->required();
  add_output(zeta);

  auto* jacobi = app.add_subcommand("jacobi", "Jacobi sum j(alpha)");
  jacobi->add_option("--m", m)->required();
  jacobi->add_option("--q", q)->required();
  jacobi->add_option("--alpha", alpha, "a1,a2,a3 or a0,a1,a2,a3")->required();
  jacobi->add_option("--g", g, "primitive root defining chi");
  add_output(jacobi);

  auto* count = app.add_subcommand("count", "point counts over F_q");
  count->add_option("--k", k);
  count->add_option("--fermat", m_fermat, "Fermat degree");
  count->add_option("--equation", equation_opt, "Weierstrass equation y^2 = x^3 + A(t) x + B(t)");
  count->add_option("--q", q)->required();
  add_output(count);

  auto* lattice = app.add_subcommand("lattice", "lattice checks");
  lattice->add_option("--k", k);
  lattice->add_option("--gram", gram_opt, "explicit Gram matrix as JSON rows");
  add_output(lattice);

  auto* mirror = app.add_subcommand("mirror", "U2 splitting of T_X");
  mirror->add_option("--k", k_req)->required();
  add_output(mirror);

  auto* delsarte = app.add_subcommand("delsarte", "derive the Fermat cover of a Delsarte surface");
  delsarte->add_option("--equation", equation)->required();
  add_output(delsarte);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    int rc = 0;
    if (*catalog) rc = cmd_catalog(k, out);
    else if (*verify) rc = cmd_verify(k, all, qs, out);
    else if (*zeta) rc = cmd_zeta(k_req, q, out);
    else if (*jacobi) rc = cmd_jacobi(m, q, alpha, g, out);
    else if (*count) rc = cmd_count(k, m_fermat, equation_opt, q, out);
    else if (*lattice) rc = cmd_lattice(k, gram_opt, out);
    else if (*mirror) rc = cmd_mirror(k_req, out);
    else if (*delsarte) rc = cmd_delsarte(equation, out);
    return rc;
  } catch (const k3::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitFail;
  }
}
