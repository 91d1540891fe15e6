#include "lielat/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <map>

#include "lielat/group.hpp"
#include "lielat/io.hpp"
#include "lielat/oracle.hpp"
#include "lielat/stability.hpp"

namespace lielat::cli {

namespace {

long long env_budget() {
  if (const char* s = std::getenv("LIELAT_BUDGET")) {
    try {
      long long b = std::stoll(s);
      if (b > 0) return b;
    } catch (...) {
    }
  }
  return 2000000;
}

Json witness_json(const AutoMap& w) {
  Json j;
  j["matrix"] = matrix_to_json(w.s);
  j["verified"] = w.verified;
  j["det"] = rational_str(w.det);
  j["vp_det"] = w.det_valuation.is_infinite() ? Json(nullptr) : Json(w.det_valuation.value());
  return j;
}

Json counts_json(const std::map<long long, long long>& counts) {
  Json j = Json::object();
  for (const auto& [k, v] : counts) j[std::to_string(k)] = v;
  return j;
}

struct Args {
  std::string lattice_spec;
  long long p = 0;
  std::string sub, sub_n, map, phi, g, h;
  long long k = 1;
  long long prec = 1;
  bool with_entries = false;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for Zp-Lie lattices"};
  app.require_subcommand(1);

  Args a;
  int exit_code = 0;
  Json result;

  auto add_lattice_opts = [&](CLI::App* cmd) {
    cmd->add_option("lattice", a.lattice_spec,
                    "lattice file or builtin:<name>[?dim=<d>]")
        ->required();
    cmd->add_option("--p", a.p, "prime (required for builtins, overrides file value)");
  };

  auto lattice = [&]() { return parse_lattice_spec(a.lattice_spec, Int(a.p)); };
  auto sub_of = [&](const LieLattice& l, const std::string& arg) {
    return Sublattice(l, parse_matrix_arg(arg));
  };

  std::vector<std::pair<std::string, std::function<void()>>> actions;
  auto cmd = [&](const std::string& name, const std::string& desc, auto configure,
                 std::function<void()> action) {
    CLI::App* c = app.add_subcommand(name, desc);
    add_lattice_opts(c);
    configure(c);
    actions.emplace_back(name, std::move(action));
    c->callback([&, name]() {
      for (auto& [n, act] : actions)
        if (n == name) act();
    });
  };
  auto no_opts = [](CLI::App*) {};

  cmd("validate", "check p-integrality and the Jacobi identity", no_opts, [&] {
    // parse_lattice_spec already validates; reaching here means pass.
    LieLattice l = lattice();
    result["command"] = "validate";
    result["valid"] = true;
    result["name"] = l.name;
    result["dim"] = l.dim;
  });

  cmd("killing", "Killing matrix, determinant and its valuation", no_opts, [&] {
    LieLattice l = lattice();
    KillingData kd = killing_matrix(l);
    result["command"] = "killing";
    result["matrix"] = matrix_to_json(kd.a);
    result["det"] = rational_str(kd.det_a);
    result["vp_det"] = kd.vp_det_a.is_infinite() ? Json(nullptr) : Json(kd.vp_det_a.value());
  });

  cmd("semisimple", "Cartan's criterion: det(Killing) != 0", no_opts, [&] {
    LieLattice l = lattice();
    SemisimpleCertificate c = is_semisimple(l);
    result["command"] = "semisimple";
    result["semisimple"] = c.semisimple;
    result["det_killing"] = rational_str(c.det_a);
  });

  cmd("powerful", "[L,L] in pL (4L for p = 2)", no_opts, [&] {
    LieLattice l = lattice();
    result["command"] = "powerful";
    result["powerful"] = is_powerful(l);
  });

  cmd("series", "lower central and derived series ranks", no_opts, [&] {
    LieLattice l = lattice();
    SeriesProfile sp = series_profile(l);
    result["command"] = "series";
    result["lower_central_ranks"] = sp.lower_central_ranks;
    result["derived_ranks"] = sp.derived_ranks;
    result["nilpotency_class"] = sp.nilpotency_class ? Json(*sp.nilpotency_class) : Json(nullptr);
    result["solvable"] = sp.solvable;
  });

  cmd("derivations", "derivation algebra dimension and nilpotency", no_opts, [&] {
    LieLattice l = lattice();
    DerivationAlgebra der = derivations(l);
    result["command"] = "derivations";
    result["dim"] = der.dim;
    result["nilpotent"] = der.nilpotent;
    result["chain_length"] = der.chain_length;
  });

  cmd("simplicity", "centroid-based simplicity / just-infinite report", no_opts, [&] {
    LieLattice l = lattice();
    SimplicityReport r = simplicity_report(l);
    result["command"] = "simplicity";
    result["semisimple"] = r.semisimple;
    result["centroid_dim"] = r.centroid_dim;
    result["simple"] = verdict_str(r.simple);
    result["just_infinite"] = verdict_str(r.just_infinite);
  });

  cmd(
      "index", "index exponent of a sublattice",
      [&](CLI::App* c) { c->add_option("--sub", a.sub, "basis matrix")->required(); },
      [&] {
        LieLattice l = lattice();
        Sublattice m = sub_of(l, a.sub);
        result["command"] = "index";
        result["index_exponent"] = m.index_exponent();
      });

  cmd(
      "gram", "B^T A B for a sublattice basis B",
      [&](CLI::App* c) { c->add_option("--sub", a.sub, "basis matrix")->required(); },
      [&] {
        LieLattice l = lattice();
        Sublattice m = sub_of(l, a.sub);
        result["command"] = "gram";
        result["matrix"] = matrix_to_json(gram(m));
      });

  cmd(
      "iso-check", "verify an isomorphism M -> N and compare indices",
      [&](CLI::App* c) {
        c->add_option("--m", a.sub, "basis matrix of M")->required();
        c->add_option("--n", a.sub_n, "basis matrix of N")->required();
        c->add_option("--phi", a.phi, "rational matrix of the map")->required();
      },
      [&] {
        LieLattice l = lattice();
        Sublattice m = sub_of(l, a.sub);
        Sublattice n = sub_of(l, a.sub_n);
        QMatrix phi = parse_matrix_arg(a.phi);
        IsoIndexReport r = iso_index_check(l, m, n, phi);
        IndexRatio ratio = index_ratio(l, m, n, phi);
        result["command"] = "iso-check";
        result["index_m"] = r.index_m;
        result["index_n"] = r.index_n;
        result["equal"] = r.equal;
        result["gram_checked"] = r.gram_checked;
        result["gram_equal"] = r.gram_equal;
        result["ratio_valuation"] = ratio.ratio_valuation;
      });

  cmd(
      "serre", "determinant-norm criterion for one automorphism",
      [&](CLI::App* c) { c->add_option("--map", a.map, "rational matrix")->required(); },
      [&] {
        LieLattice l = lattice();
        AutoMap am = automorphism_check(l, parse_matrix_arg(a.map));
        result["command"] = "serre";
        result["verified"] = am.verified;
        if (!am.verified) {
          result["passes"] = nullptr;
          exit_code = 2;
          return;
        }
        SerreVerdict v = serre_verdict(l, am);
        result["det"] = rational_str(am.det);
        result["vp_det"] = v.det_valuation;
        result["norm_det"] = "p^" + std::to_string(-v.det_valuation);
        result["passes"] = v.passes;
        Json ev = Json::array();
        for (const auto& s : v.eigen_valuations) ev.push_back(rational_str(s));
        result["eigen_valuations"] = ev;
      });

  cmd("stable", "index-stability verdict with certificate", no_opts, [&] {
    LieLattice l = lattice();
    StabilityVerdict v = stability_certificate(l, env_budget());
    result["command"] = "stable";
    result["status"] = status_str(v.status);
    result["certificate"] = certificate_str(v.certificate);
    switch (v.certificate) {
      case CertificateKind::Semisimple:
        result["det_killing"] = rational_str(v.det_killing);
        break;
      case CertificateKind::DerNilpotent:
        result["chain_length"] = v.chain_length;
        break;
      case CertificateKind::Witness:
        result["witness"] = witness_json(*v.witness);
        break;
      default:
        break;
    }
    result["notes"] = v.notes;
    if (v.status == StabilityStatus::Unknown) exit_code = 3;
  });

  cmd("witness-search", "search for an automorphism with |det| != 1", no_opts, [&] {
    LieLattice l = lattice();
    auto w = search_unstable_witness(l, env_budget());
    result["command"] = "witness-search";
    result["witness"] = w ? witness_json(*w) : Json(nullptr);
  });

  cmd(
      "enum", "enumerate sublattices of index exponent <= k",
      [&](CLI::App* c) {
        c->add_option("--k", a.k, "max index exponent")->required();
        c->add_flag("--entries", a.with_entries, "include HNF matrices in the output");
      },
      [&] {
        LieLattice l = lattice();
        EnumReport r = enum_subalgebras(l, a.k, env_budget());
        result["command"] = "enum";
        result["p"] = l.p.convert_to<long long>();
        result["max_exponent"] = r.max_exponent;
        result["total"] = static_cast<long long>(r.entries.size());
        result["counts"] = counts_json(r.counts);
        result["subalgebra_counts"] = counts_json(r.subalgebra_counts);
        if (a.with_entries) {
          Json entries = Json::array();
          for (const auto& en : r.entries) {
            Json e;
            e["basis"] = matrix_to_json(en.sub.basis());
            e["index_exponent"] = en.index_exp;
            e["subalgebra"] = en.subalgebra;
            entries.push_back(e);
          }
          result["entries"] = entries;
        }
      });

  cmd(
      "classify", "finite-precision isomorphism classes of enumerated subalgebras",
      [&](CLI::App* c) {
        c->add_option("--k", a.k, "max index exponent")->required();
        c->add_option("--prec", a.prec, "precision exponent e")->required();
      },
      [&] {
        LieLattice l = lattice();
        EnumReport r = enum_subalgebras(l, a.k, env_budget());
        std::vector<Sublattice> items;
        Json bases = Json::array();
        for (const auto& en : r.entries)
          if (en.subalgebra) {
            items.push_back(en.sub);
            bases.push_back(matrix_to_json(en.sub.basis()));
          }
        IsoClassReport c2 = classify_mod_pk(l, items, a.prec, env_budget());
        result["command"] = "classify";
        result["precision"] = c2.precision;
        result["method"] = c2.method;
        result["items"] = bases;
        result["classes"] = c2.classes;
      });

  cmd(
      "oracle-check", "brute-force index-stability verification",
      [&](CLI::App* c) {
        c->add_option("--k", a.k, "max index exponent")->required();
        c->add_option("--prec", a.prec, "precision exponent e")->required();
      },
      [&] {
        LieLattice l = lattice();
        OracleReport r = exhaustive_stability_check(l, a.k, a.prec, env_budget());
        result["command"] = "oracle-check";
        result["subalgebras"] = counts_json(r.enumeration.subalgebra_counts);
        result["pairs_screened"] = r.pairs_screened;
        result["inconclusive_pairs"] = r.inconclusive_pairs;
        Json viols = Json::array();
        for (const auto& v : r.violations) {
          Json e;
          e["m"] = matrix_to_json(r.enumeration.entries[v.m_index].sub.basis());
          e["n"] = matrix_to_json(r.enumeration.entries[v.n_index].sub.basis());
          e["witness"] = matrix_to_json(v.witness);
          e["index_m"] = v.report.index_m;
          e["index_n"] = v.report.index_n;
          viols.push_back(e);
        }
        result["violations"] = viols;
      });

  cmd(
      "bch", "group product via the truncated Hausdorff series",
      [&](CLI::App* c) {
        c->add_option("--x", a.g, "coordinates of the left factor")->required();
        c->add_option("--y", a.h, "coordinates of the right factor")->required();
        c->add_option("--prec", a.prec, "precision exponent e")->required();
      },
      [&] {
        LieLattice l = lattice();
        GroupElement g = make_element(l, parse_vector_arg(a.g), a.prec);
        GroupElement h = make_element(l, parse_vector_arg(a.h), a.prec);
        GroupElement prod = bch_mul(l, g, h);
        result["command"] = "bch";
        result["product"] = vector_to_json(prod.coordinates);
        result["precision"] = prod.precision;
      });

  cmd(
      "group-index", "group-side coset count vs lattice index",
      [&](CLI::App* c) {
        c->add_option("--sub", a.sub, "basis matrix")->required();
        c->add_option("--prec", a.prec, "precision exponent e")->required();
      },
      [&] {
        LieLattice l = lattice();
        Sublattice m = sub_of(l, a.sub);
        GroupIndexReport r = group_index_check(l, m, a.prec, env_budget());
        result["command"] = "group-index";
        result["coset_count"] = r.coset_count.str();
        result["lattice_index_exponent"] = r.lattice_index_exponent;
        result["agree"] = r.agree;
      });

  cmd("report", "full pipeline: invariants, simplicity, stability", no_opts, [&] {
    LieLattice l = lattice();
    KillingData kd = killing_matrix(l);
    SeriesProfile sp = series_profile(l);
    DerivationAlgebra der = derivations(l);
    SimplicityReport sr = simplicity_report(l);
    StabilityVerdict v = stability_certificate(l, env_budget());
    result["command"] = "report";
    result["name"] = l.name;
    result["p"] = l.p.convert_to<long long>();
    result["dim"] = l.dim;
    result["killing_det"] = rational_str(kd.det_a);
    result["semisimple"] = kd.det_a != 0;
    result["powerful"] = is_powerful(l);
    result["nilpotency_class"] = sp.nilpotency_class ? Json(*sp.nilpotency_class) : Json(nullptr);
    result["solvable"] = sp.solvable;
    result["derivations_dim"] = der.dim;
    result["derivations_nilpotent"] = der.nilpotent;
    result["centroid_dim"] = sr.centroid_dim;
    result["simple"] = verdict_str(sr.simple);
    result["just_infinite"] = verdict_str(sr.just_infinite);
    result["stability"] = status_str(v.status);
    result["certificate"] = certificate_str(v.certificate);
    if (v.witness) result["witness"] = witness_json(*v.witness);
    if (v.status == StabilityStatus::Unknown) exit_code = 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      err << app.help();
      return 0;
    }
    err << e.what() << "\n" << app.help();
    return 2;
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << " (partial: " << e.partial << ")\n";
    return 3;
  } catch (const NotALieAlgebra& e) {
    err << e.what() << " at triple (" << e.i << ", " << e.j << ", " << e.k << ")\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }

  out << result.dump(2) << "\n";
  return exit_code;
}

}  // namespace lielat::cli
