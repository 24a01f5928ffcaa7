// Batch front-end: ingest space documents, run single constructions or the
// full proposition audit, emit deterministic text or JSON reports.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "mring/space_doc.hpp"
#include "mring/sweep.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAuditFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

std::vector<std::string> split_props(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_space(const mring::MeasurableSpace& space, const std::string& format) {
  if (format == "structured") {
    nlohmann::ordered_json doc;
    doc["points"] = space.ground().labels();
    doc["algebra"] = mring::serialize_algebra(space);
    doc["size"] = space.algebra().size();
    nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
    for (const auto& a : space.atoms()) {
      nlohmann::ordered_json atom = nlohmann::ordered_json::array();
      for (int p : a.members()) atom.push_back(space.ground().label(p));
      atoms.push_back(atom);
    }
    doc["atoms"] = atoms;
    nlohmann::ordered_json primes = nlohmann::ordered_json::array();
    for (const auto& s : space.algebra().sets())
      if (mring::is_prime_element(space, s)) {
        nlohmann::ordered_json prime = nlohmann::ordered_json::array();
        for (int p : s.members()) prime.push_back(space.ground().label(p));
        primes.push_back(prime);
      }
    doc["prime_elements"] = primes;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << "algebra (" << space.algebra().size() << " members):\n"
            << mring::render_algebra_text(space);
  std::cout << "atoms:\n";
  for (const auto& a : space.atoms())
    std::cout << "  " << mring::render_subset(a, space.ground()) << "\n";
  std::cout << "prime elements:\n";
  for (const auto& s : space.algebra().sets())
    if (mring::is_prime_element(space, s))
      std::cout << "  " << mring::render_subset(s, space.ground()) << "\n";
}

void print_morphism(const mring::SpaceMorphism& m, const std::string& format) {
  if (format == "structured") {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (int p = 0; p < m.source()->points(); ++p)
      pairs.push_back({m.source()->ground().label(p), m.target()->ground().label(m.apply(p))});
    doc["map"] = pairs;
    doc["injective"] = m.injective();
    doc["surjective"] = m.surjective();
    doc["forward_measurable"] = m.forward_measurable();
    doc["backward_measurable"] = m.backward_measurable();
    std::cout << doc.dump(2) << "\n";
    return;
  }
  for (int p = 0; p < m.source()->points(); ++p)
    std::cout << "  " << m.source()->ground().label(p) << " -> "
              << m.target()->ground().label(m.apply(p)) << "\n";
  std::cout << "  injective=" << m.injective() << " surjective=" << m.surjective()
            << " forward-measurable=" << m.forward_measurable()
            << " backward-measurable=" << m.backward_measurable() << "\n";
}

int report_exit(const mring::AuditReport& report) {
  if (!report.all_pass()) return kExitAuditFailure;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mring: rings of measurable functions on finite spaces"};
  app.require_subcommand(1);

  std::string doc_path, doc2_path, props_csv;
  std::string format = "text";
  std::uint64_t seed = 7;
  int max_points = 3;
  bool timings = false;

  app.add_option("--seed", seed, "seed for randomized function sampling");
  app.add_option("--format", format, "output format: text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--timings", timings, "append wall-clock timings (non-deterministic output)");

  auto* generate = app.add_subcommand("generate", "generate the sigma-algebra of a space document");
  generate->add_option("doc", doc_path, "space document (JSON)")->required();

  auto* audit = app.add_subcommand("audit", "run proposition audits on a space document");
  audit->add_option("doc", doc_path, "space document (JSON)")->required();
  audit->add_option("--props", props_csv, "comma-separated proposition ids (default: all)");

  auto* sweep_cmd = app.add_subcommand("sweep", "audit every sigma-algebra on 1..N points");
  sweep_cmd->add_option("--max-points", max_points, "largest ground-set size (1..5)");
  sweep_cmd->add_option("--props", props_csv, "comma-separated proposition ids (default: all)");

  auto* quotient = app.add_subcommand("quotient", "T-measurable quotient of a space");
  quotient->add_option("doc", doc_path, "space document (JSON)")->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Stone spectrum of a space");
  spectrum_cmd->add_option("doc", doc_path, "space document (JSON)")->required();

  auto* iso = app.add_subcommand("iso", "compare two spaces as rings and as spaces");
  iso->add_option("doc", doc_path, "first space document")->required();
  iso->add_option("doc2", doc2_path, "second space document")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      auto space = mring::SpaceDoc::load(doc_path).build_space();
      print_space(*space, format);
      return kExitPass;
    }

    if (audit->parsed()) {
      auto doc = mring::SpaceDoc::load(doc_path);
      auto space = doc.build_space();
      mring::AuditReport report;
      report.seed = seed;
      report.entries = mring::run_audits(space, doc.name, split_props(props_csv), seed);
      report.sort_entries();
      std::cout << (format == "structured" ? report.render_json(timings)
                                           : report.render_text(timings));
      return report_exit(report);
    }

    if (sweep_cmd->parsed()) {
      auto report = mring::sweep(max_points, seed, split_props(props_csv));
      std::cout << (format == "structured" ? report.render_json(timings)
                                           : report.render_text(timings));
      return report_exit(report);
    }

    if (quotient->parsed()) {
      auto doc = mring::SpaceDoc::load(doc_path);
      auto space = doc.build_space();
      auto q = mring::t_quotient(space);
      if (format == "text") std::cout << "quotient space:\n";
      print_space(*q.quotient, format);
      if (format == "text") std::cout << "theta:\n";
      print_morphism(q.theta, format);
      return kExitPass;
    }

    if (spectrum_cmd->parsed()) {
      auto doc = mring::SpaceDoc::load(doc_path);
      auto space = doc.build_space();
      auto spec = mring::spectrum(space);
      if (format == "text") std::cout << "spectrum space:\n";
      print_space(*spec.spectrum, format);
      if (spec.phi) {
        if (format == "text") std::cout << "phi:\n";
        print_morphism(*spec.phi, format);
      } else {
        std::cout << "phi: skipped (" << spec.phi_note << ")\n";
      }
      return kExitPass;
    }

    if (iso->parsed()) {
      auto x = mring::SpaceDoc::load(doc_path).build_space();
      auto y = mring::SpaceDoc::load(doc2_path).build_space();
      auto rings = mring::rings_isomorphic(x, y);
      auto spaces = mring::spaces_homeomorphic(x, y);
      std::cout << "rings: " << (rings.isomorphic ? "YES" : "NO") << " (" << rings.note << ")\n";
      std::cout << "spaces: " << (spaces.homeomorphic ? "YES" : "NO") << " (" << spaces.certificate
                << ")\n";
      if (rings.isomorphic && !spaces.homeomorphic) {
        std::string note;
        if (!mring::is_t_measurable(x)) note = "first space not T-measurable";
        else if (!mring::is_t_measurable(y)) note = "second space not T-measurable";
        std::cout << "note: " << note << "\n";
      }
      if (spaces.witness) {
        std::cout << "witness:\n";
        print_morphism(*spaces.witness, "text");
      }
      return kExitPass;
    }
  } catch (const mring::resource_error& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const mring::validation_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const mring::input_shape_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const mring::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAuditFailure;
  }
  return kExitPass;
}
