#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringprob/bounds.hpp"
#include "ringprob/catalog.hpp"
#include "ringprob/errors.hpp"
#include "ringprob/isoclinism.hpp"
#include "ringprob/probability.hpp"
#include "ringprob/report.hpp"
#include "ringprob/ring_io.hpp"
#include "ringprob/verify.hpp"

using namespace ringprob;

namespace {

CatalogEntry load_ring(const std::string& spec, std::size_t max_order) {
  BuildOptions opts;
  opts.max_order = max_order;
  constexpr std::string_view prefix = "builtin:";
  if (spec.starts_with(prefix)) {
    const auto name = spec.substr(prefix.size());
    return {name, share(builtin_from_spec(name, opts)), Provenance::Builtin, ""};
  }
  return load_ring_file(spec, opts);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep))
    if (!part.empty()) out.push_back(part);
  return out;
}

// A flat index, or colon-separated coordinates when the ring has a basis.
Index parse_element(const FiniteRing& ring, const std::string& text) {
  try {
    if (text.find(':') == std::string::npos) {
      const auto v = std::stoull(text);
      if (v >= ring.order()) throw Error(ErrorKind::InvalidArgument, "element " + text + " out of range");
      return static_cast<Index>(v);
    }
    if (!ring.basis()) throw Error(ErrorKind::InvalidArgument, "coordinates need a ring with a basis");
    std::vector<Index> coords;
    for (const auto& c : split(text, ':')) coords.push_back(static_cast<Index>(std::stoul(c)));
    return ring.from_coordinates(coords);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "cannot parse element '" + text + "'");
  }
}

// Comma-separated generators; "R" (or empty) for the whole ring, "0" for zero.
Subring parse_subring(const RingPtr& ring, const std::string& text) {
  if (text.empty() || text == "R") return Subring::whole(ring);
  std::vector<Index> gens;
  for (const auto& g : split(text, ',')) gens.push_back(parse_element(*ring, g));
  return closure(ring, gens);
}

std::string element_label(const FiniteRing& ring, Index x) {
  std::string s = std::to_string(x);
  if (ring.basis()) {
    s += " (";
    const auto c = ring.coordinates(x);
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ":" : "") + std::to_string(c[i]);
    s += ")";
  }
  return s;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact commuting probabilities of finite rings"};
  app.require_subcommand(1);

  std::string ring_spec = "builtin:nc4a", s_text, k_text, r_text = "0", out_path;
  std::string ring2_spec, s2_text, k2_text;
  bool json = false;
  std::size_t max_order = 256;

  auto add_common = [&](CLI::App* cmd, bool pair) {
    cmd->add_option("--ring", ring_spec, "ring file or builtin:<spec>, e.g. builtin:nc4a*zn:2");
    cmd->add_option("--max-order", max_order, "refuse rings larger than this");
    cmd->add_flag("--json", json, "JSON output");
    cmd->add_option("--out", out_path, "write output to a file");
    if (pair) {
      cmd->add_option("--s", s_text, "generators of S (comma-separated; R for the whole ring)");
      cmd->add_option("--k", k_text, "generators of K");
    }
  };

  auto* info = app.add_subcommand("info", "ring summary");
  add_common(info, false);
  auto* subrings = app.add_subcommand("subrings", "list all subrings");
  add_common(subrings, false);
  auto* prob = app.add_subcommand("prob", "Pr_r(S,K) by both methods");
  add_common(prob, true);
  prob->add_option("--r", r_text, "target element: index or coordinates a:b:...");
  auto* dist = app.add_subcommand("dist", "distribution of [s,k] over S x K");
  add_common(dist, true);
  auto* bounds = app.add_subcommand("bounds", "evaluate every bound for (S,K,r)");
  add_common(bounds, true);
  bounds->add_option("--r", r_text, "target element");
  auto* iso = app.add_subcommand("isoclinic", "search for a Z-isoclinism between two pairs");
  add_common(iso, true);
  iso->add_option("--ring2", ring2_spec, "second ring")->required();
  iso->add_option("--s2", s2_text, "generators of S2");
  iso->add_option("--k2", k2_text, "generators of K2");
  auto* gen = app.add_subcommand("generate", "all rings of an order up to isomorphism");
  std::size_t gen_order = 4;
  gen->add_option("--order", gen_order, "additive order")->required();
  gen->add_option("--out", out_path, "write output to a file");
  auto* verify = app.add_subcommand("verify-all", "run every check over a catalog");
  std::string catalog_name = "default", r_mode = "all";
  unsigned threads = 1;
  std::size_t verify_max_order = 16;
  verify->add_option("--catalog", catalog_name, "default | acceptance")
      ->check(CLI::IsMember({"default", "acceptance"}));
  verify->add_option("--ring", ring_spec, "verify a single ring instead of a catalog");
  verify->add_option("--max-order", verify_max_order, "skip rings larger than this");
  verify->add_option("--r-mode", r_mode, "all | zero")->check(CLI::IsMember({"all", "zero"}));
  verify->add_option("--threads", threads, "worker threads");
  verify->add_flag("--json", json, "JSON report");
  verify->add_option("--out", out_path, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ostringstream os;
    if (*gen) {
      std::size_t i = 0;
      for (auto& ring : generate_rings(gen_order)) {
        os << serialize_ring({"gen" + std::to_string(gen_order) + "_" + std::to_string(i++),
                              share(std::move(ring)), Provenance::Generated, ""})
           << "\n";
      }
      write_output(out_path, os.str());
      return 0;
    }

    if (*verify) {
      Catalog catalog;
      if (verify->count("--ring")) {
        auto entry = load_ring(ring_spec, 256);
        catalog.add(std::move(entry));
      } else {
        catalog = catalog_name == "acceptance" ? acceptance_catalog() : default_catalog();
      }
      VerifyOptions opts;
      opts.max_order = verify_max_order;
      opts.r_mode = r_mode == "zero" ? RMode::Zero : RMode::All;
      opts.threads = threads;
      const auto report = verify_all(catalog, opts);
      write_output(out_path, json ? to_json(report) + "\n" : to_text(report));
      return report.exit_code();
    }

    const auto entry = load_ring(ring_spec, max_order);
    const RingPtr ring = entry.ring;
    const auto& R = *ring;

    if (*info) {
      const auto whole = Subring::whole(ring);
      const auto z = center(ring);
      os << "ring " << entry.name << "\n"
         << "order " << R.order() << "\n"
         << "additive type " << iso_type_text(abelian_iso_type(R, whole.bits())) << "\n"
         << "commutative " << (R.is_commutative() ? "yes" : "no") << "\n"
         << "center " << members_text(z.members()) << "\n"
         << "Pr(R) " << pr(whole, whole).fraction() << "\n";
      if (R.basis()) {
        os << "moduli";
        for (auto d : R.basis()->moduli) os << " " << d;
        os << "\n";
      }
    } else if (*subrings) {
      for (const auto& s : enumerate_subrings(ring)) {
        os << members_text(s.members()) << " size " << s.size() << (is_ideal(s) ? " ideal" : "")
           << (s.is_commutative() ? "" : " non-commutative") << "\n";
      }
    } else if (*prob) {
      const auto s = parse_subring(ring, s_text), k = parse_subring(ring, k_text);
      const auto r = R.element(parse_element(R, r_text));
      const auto naive = pr_r_naive(s, k, r), formula = pr_r_formula(s, k, r);
      if (json) {
        os << "{\"naive\": \"" << naive.fraction() << "\", \"formula\": \"" << formula.fraction()
           << "\", \"agree\": " << (naive == formula ? "true" : "false") << "}\n";
      } else {
        os << "Pr_r(S,K) naive   " << naive.fraction() << " = " << naive.decimal() << "\n"
           << "Pr_r(S,K) formula " << formula.fraction() << " = " << formula.decimal() << "\n";
      }
      if (!(naive == formula)) {
        write_output(out_path, os.str());
        return 1;
      }
    } else if (*dist) {
      const auto s = parse_subring(ring, s_text), k = parse_subring(ring, k_text);
      const auto d = pr_distribution(s, k);
      for (const auto& [r, v] : d.entries) os << element_label(R, r) << "\t" << v.fraction() << "\n";
    } else if (*bounds) {
      const auto s = parse_subring(ring, s_text), k = parse_subring(ring, k_text);
      BoundsEngine engine(ring);
      const auto report = engine.check_all(s, k, R.element(parse_element(R, r_text)));
      const auto chars = engine.characterize_quotients(s, k);
      if (json) {
        os << "{\"bounds\": " << to_json(report) << ",\n\"characterization\": " << to_json(chars) << "}\n";
      } else {
        os << "S/Z(S,K) " << iso_type_text(chars.s_quotient) << ", K/Z(K,S) "
           << iso_type_text(chars.k_quotient) << "\n";
        for (const auto& c : report.checks) os << to_text(c) << "\n";
        for (const auto& c : chars.checks) os << to_text(c) << "\n";
      }
      write_output(out_path, os.str());
      bool ok = report.all_passed();
      for (const auto& c : chars.checks) ok = ok && c.passed();
      return ok ? 0 : 1;
    } else if (*iso) {
      const auto entry2 = load_ring(ring2_spec, max_order);
      const auto s1 = parse_subring(ring, s_text), k1 = parse_subring(ring, k_text);
      const auto s2 = parse_subring(entry2.ring, s2_text), k2 = parse_subring(entry2.ring, k2_text);
      const auto w = find_z_isoclinism(s1, k1, s2, k2);
      if (!w) {
        os << (json ? "null\n" : "no Z-isoclinism\n");
        write_output(out_path, os.str());
        return 1;
      }
      const auto checks = check_invariance(*w);
      if (json) {
        os << "{\"witness\": " << witness_to_json(*w) << ",\n\"invariance\": " << to_json(checks) << "}\n";
      } else {
        os << "phi:";
        for (const auto& [a, b] : w->phi) os << " " << a << "->" << b;
        os << "\npsi:";
        for (const auto& [a, b] : w->psi) os << " " << a << "->" << b;
        os << "\n";
        for (const auto& c : checks) os << to_text(c) << "\n";
      }
    }
    write_output(out_path, os.str());
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
