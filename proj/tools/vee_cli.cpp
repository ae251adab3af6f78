// vee: command-line front end for the n-Vee persistence library.
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "vee/examples.hpp"
#include "vee/fp.hpp"
#include "vee/io.hpp"
#include "vee/isometry.hpp"

using namespace vee;
using nlohmann::json;

namespace {

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("not an integer list: " + s);
    }
  }
  return out;
}

Poset need_nvee(const std::string& file) {
  Poset p = read_poset(file);
  if (!p.is_suspended()) throw ParseError("this command needs a weighted n-Vee");
  return p;
}

// "B:L[:K]" bounds (max branches, max length, max bars) or "l1,l2,..." for a fixed shape
ShapeBounds parse_shape(const std::string& s) {
  ShapeBounds b;
  if (s.empty()) return b;
  if (s.find(':') != std::string::npos) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) v.push_back(std::stoi(tok));
    if (v.size() < 2 || v.size() > 3) throw ParseError("shape bounds are B:L[:K]");
    b.max_branches = v[0];
    b.max_length = v[1];
    if (v.size() == 3) b.max_bars = v[2];
  } else {
    b.fixed_shape = parse_ints(s);
  }
  if (b.max_branches < 1 || b.max_length < 1 || b.max_bars < 0) throw ParseError("bad shape bounds");
  for (int l : b.fixed_shape)
    if (l < 1) throw ParseError("branch lengths must be positive");
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interleaving and bottleneck distances for n-Vee persistence modules"};
  app.require_subcommand(1);

  std::string poset_file, support_text, fa, fb, export_path, fields_text = "2", shape_text, which;
  int eps = 0, field = 2, trials = 1, jobs = 0;
  std::uint64_t seed = 1;
  bool count = false, timing = false;

  auto* validate = app.add_subcommand("validate", "check the n-Vee conditions");
  validate->add_option("poset", poset_file)->required();

  auto* sigma = app.add_subcommand("sigma", "list convex supports");
  sigma->add_option("poset", poset_file)->required();

  auto* width_cmd = app.add_subcommand("width", "width of a convex module");
  width_cmd->add_option("poset", poset_file)->required();
  width_cmd->add_option("support", support_text)->required();

  auto* dist = app.add_subcommand("dist", "interleaving distance by field search");
  dist->add_option("poset", poset_file)->required();
  dist->add_option("barcodeA", fa)->required();
  dist->add_option("barcodeB", fb)->required();
  dist->add_option("--fields", fields_text, "comma separated primes");

  auto* bott = app.add_subcommand("bottleneck", "bottleneck distance with its matching");
  bott->add_option("poset", poset_file)->required();
  bott->add_option("barcodeA", fa)->required();
  bott->add_option("barcodeB", fb)->required();

  auto* variety = app.add_subcommand("variety", "interleaving equations at a threshold");
  variety->add_option("poset", poset_file)->required();
  variety->add_option("barcodeA", fa)->required();
  variety->add_option("barcodeB", fb)->required();
  variety->add_option("--eps", eps)->required();
  variety->add_option("--export", export_path, "write text to PATH and JSON to PATH.json");
  variety->add_flag("--count", count);
  variety->add_option("--field", field);

  auto* iso = app.add_subcommand("isometry", "random D = D_B checks, one JSON line per instance");
  iso->add_option("--seed", seed);
  iso->add_option("--trials", trials);
  iso->add_option("--shape", shape_text, "B:L[:K] bounds or a fixed list of branch lengths");
  iso->add_option("--fields", fields_text);
  iso->add_option("--jobs", jobs, "worker threads (0: hardware)");
  iso->add_flag("--timing", timing);

  auto* suites = app.add_subcommand("suites", "run the brute-force property suites on a small n-Vee");
  suites->add_option("poset", poset_file)->required();

  auto* repro = app.add_subcommand("reproduce", "rerun a worked example against its fixtures");
  repro->add_option("example", which)->required()->check(CLI::IsMember({"ex4", "exnew"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      Poset p = read_poset(poset_file);
      auto v = validate_nvee(p);
      json j{{"ok", v.ok}};
      if (v.ok)
        j["branches"] = v.shape.branch_lengths;
      else
        j["failed_condition"] = v.failed_condition, j["reason"] = v.reason;
      std::cout << j.dump() << '\n';
      return v.ok ? 0 : 1;
    }
    if (*sigma) {
      Poset p = read_poset(poset_file);
      auto all = enumerate_sigma(p);
      for (const auto& s : all) std::cout << json(s).dump() << '\n';
      std::cout << "# " << all.size() << " supports\n";
      return 0;
    }
    if (*width_cmd) {
      Poset p = need_nvee(poset_file);
      std::cout << width(p, parse_support_text(p, support_text)) << '\n';
      return 0;
    }
    if (*dist) {
      Poset p = need_nvee(poset_file);
      Barcode A = read_barcode(p, fa), B = read_barcode(p, fb);
      Ladder ladder(p);
      json j;
      int best = -1;
      for (int q : parse_ints(fields_text)) {
        check_prime(q);
        auto d = interleaving_distance_ex(p, ladder, A, B, q);
        j["D"][std::to_string(q)] = d.eps;
        if (!d.exhaustive) j["exhaustive"] = false;
        best = best < 0 ? d.eps : std::min(best, d.eps);
      }
      j["eps"] = best;
      std::cout << j.dump() << '\n';
      return 0;
    }
    if (*bott) {
      Poset p = need_nvee(poset_file);
      Barcode A = read_barcode(p, fa), B = read_barcode(p, fb);
      Ladder ladder(p);
      PairTable tab(p, ladder, A, B);
      auto r = bottleneck(tab);
      std::string why;
      bool ok = is_admissible(tab, r.matching, r.eps, &why);
      json j = matching_json(r.matching);
      j["verified"] = ok;
      if (!ok) j["error"] = why;
      std::cout << j.dump() << '\n';
      return ok ? 0 : 1;
    }
    if (*variety) {
      Poset p = need_nvee(poset_file);
      Barcode A = read_barcode(p, fa), B = read_barcode(p, fb);
      Ladder ladder(p);
      if (eps < 0) throw ParseError("eps must be nonnegative");
      const auto& L = ladder.lam[ladder.index_at(eps)];
      auto sys = build_system(p, A, B, L, L);
      std::cout << sys.to_text(p);
      if (!export_path.empty()) {
        std::ofstream(export_path) << sys.to_text(p);
        std::ofstream(export_path + ".json") << sys.to_json(p) << '\n';
      }
      if (count) {
        check_prime(field);
        SolveOptions opt;
        opt.field = field;
        opt.count = true;
        std::cout << "# points over F" << field << ": " << *solve_over_field(sys, opt).count << '\n';
      }
      return 0;
    }
    if (*iso) {
      ShapeBounds bounds = parse_shape(shape_text);
      auto fields = parse_ints(fields_text);
      for (int q : fields) check_prime(q);
      std::vector<Report> reports(std::max(trials, 0));
      unsigned nthreads = jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
      std::atomic<int> next{0};
      auto work = [&] {
        for (int k; (k = next++) < trials;) {
          Instance inst = random_instance(seed + k, bounds);
          inst.fields = fields;
          reports[k] = verify_isometry(inst);
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
      bool all = true;
      for (const auto& r : reports) {
        std::cout << r.to_json(timing) << '\n';
        all = all && r.pass;
      }
      return all ? 0 : 1;
    }
    if (*suites) {
      Poset p = need_nvee(poset_file);
      bool all = true;
      for (const auto& r : run_lemma_suites(p)) {
        json j{{"suite", r.name}, {"ran", r.ran}, {"pass", r.pass}};
        if (!r.detail.empty()) j["detail"] = r.detail;
        std::cout << j.dump() << '\n';
        all = all && (!r.ran || r.pass);
      }
      return all ? 0 : 1;
    }
    if (*repro) {
      bool ok = which == "ex4" ? reproduce_ex4(std::cout) : reproduce_exnew(std::cout);
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  return 0;
}
