// Command-line front end: enumeration, Hall numbers, products, coproducts and the verification suite.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dhall/io.hpp"
#include "dhall/verify.hpp"

using namespace dhall;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

/// A file path or inline JSON.
json read_arg(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    return json::parse(in);
  }
  return json::parse(arg);
}

/// A representation given as JSON (rep or key), or as dimensions "2" / "1,1" meaning the semisimple one.
RepKey rep_arg(const Session& s, const std::string& arg) {
  if (arg.find_first_of("{[") == std::string::npos && !std::filesystem::is_regular_file(arg)) {
    KClass d = parse_dims(arg);
    if (d.size() != s.quiver().vertex_count()) throw std::invalid_argument("dimension vector size mismatch: " + arg);
    return s.key(semisimple_rep(s.quiver(), d, s.q()));
  }
  return rep_key_from_json(s, read_arg(arg));
}

struct Options {
  std::string quiver_path;
  int q = 2;
  std::string dims = "2,2";
  std::uint64_t budget = kDefaultBudget;

  SessionConfig config() const {
    SessionConfig c;
    c.quiver = quiver_path.empty() ? Quiver::linear(2) : Quiver::load(quiver_path);
    c.q = q;
    c.budget = budget;
    c.bound = parse_dims(dims);
    return c;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall algebras of quiver representations and of Z/2-graded complexes over F_q"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--quiver", opt.quiver_path, "quiver JSON {\"vertices\": [...], \"arrows\": [[s, t], ...]}; default A_2");
  app.add_option("--q", opt.q, "field size (2, 3 or 5)");
  app.add_option("--dims", opt.dims, "dimension bound, comma separated");
  app.add_option("--budget", opt.budget, "maximal enumeration size");

  auto* info = app.add_subcommand("info", "session parameters");

  auto* enumerate = app.add_subcommand("enumerate", "isoclasses below the bound");
  std::string kind = "reps";
  enumerate->add_option("--kind", kind)->check(CLI::IsMember({"reps", "complexes"}));

  auto* gnum = app.add_subcommand("gnum", "Hall number g^L_{M,N}");
  std::string gl, gm, gn;
  gnum->add_option("L", gl)->required();
  gnum->add_option("M", gm)->required();
  gnum->add_option("N", gn)->required();

  auto* mul = app.add_subcommand("mul", "product of two elements");
  std::string algebra = "dh", mx, my;
  mul->add_option("--algebra", algebra)->check(CLI::IsMember({"hall", "dh"}));
  mul->add_option("X", mx)->required();
  mul->add_option("Y", my)->required();

  auto* coproduct = app.add_subcommand("coproduct", "coproduct of an element");
  std::string chi_name = "chi0", cx, cop_kind = "delta";
  coproduct->add_option("--chi", chi_name)->check(CLI::IsMember({"euler", "chi0"}));
  coproduct->add_option("--algebra", algebra)->check(CLI::IsMember({"hall", "dh"}));
  coproduct->add_option("--kind", cop_kind, "delta or delta-prime (dh only)")->check(CLI::IsMember({"delta", "delta-prime"}));
  coproduct->add_option("X", cx)->required();

  auto* verify = app.add_subcommand("verify", "run verification checks");
  std::vector<std::string> checks{"all"};
  std::string report_path, verify_chi = "chi0";
  bool no_timing = false;
  verify->add_option("--checks", checks, "check ids or 'all'")->delimiter(',');
  verify->add_option("--chi", verify_chi)->check(CLI::IsMember({"euler", "chi0"}));
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_flag("--no-timing", no_timing, "report ms as 0 for byte-identical reports");

  CLI11_PARSE(app, argc, argv);

  SessionConfig cfg;
  try {
    cfg = opt.config();
    cfg.chi = verify_chi;
    cfg.checks = checks;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (*verify) {
      Verifier v(cfg);
      auto reports = v.run(checks);
      json out = json::array();
      for (const auto& r : reports) {
        out.push_back(to_json(r, !no_timing));
        std::cout << to_string(r.status) << "  " << r.check << "\n";
      }
      if (!report_path.empty()) std::ofstream(report_path) << out.dump(2) << "\n";
      return exit_code(reports);
    }

    Session s(cfg.quiver, cfg.q, cfg.budget);
    if (*info) {
      json j = {{"quiver", s.quiver().to_json()}, {"q", s.q()},           {"budget", s.budget()},
                {"bound", to_json(cfg.bound)},    {"threads", max_threads()}, {"checks", check_ids()}};
      json proj = json::array();
      for (int v = 0; v < s.quiver().vertex_count(); ++v) proj.push_back(to_json(s.projective(v).dims));
      j["projective_classes"] = proj;
      j["euler_matrix"] = s.quiver().euler_matrix();
      std::cout << j.dump(2) << "\n";
    } else if (*enumerate) {
      json out = json::array();
      if (kind == "reps") {
        for (const auto& k : s.catalog().classes_below(cfg.bound))
          out.push_back({{"key", to_json(k)}, {"rep", to_json(s.rep(k))}, {"aut", s.aut(k)}});
      } else {
        for (const auto& k : enumerate_complex_keys(s, cfg.bound)) out.push_back(to_json(k));
      }
      std::cout << out.dump(2) << "\n";
    } else if (*gnum) {
      HallAlgebra h(s);
      std::cout << h.g(rep_arg(s, gl), rep_arg(s, gm), rep_arg(s, gn)) << "\n";
    } else if (*mul) {
      if (algebra == "hall") {
        HallAlgebra h(s);
        std::cout << to_json(h.twisted_mul(h.basis(rep_arg(s, mx)), h.basis(rep_arg(s, my)))).dump(2) << "\n";
      } else {
        BridgelandAlgebra dh(s);
        auto x = dh_element_from_json(s, read_arg(mx)), y = dh_element_from_json(s, read_arg(my));
        std::cout << to_json(dh.dh_mul(x, y)).dump(2) << "\n";
      }
    } else if (*coproduct) {
      if (algebra == "hall") {
        HallAlgebra h(s);
        std::cout << to_json(h.green_coproduct(h.basis(rep_arg(s, cx)))).dump(2) << "\n";
      } else {
        BridgelandAlgebra dh(s);
        ChiMap chi = ChiMap::by_name(s.quiver(), chi_name);
        DHElement x = dh_element_from_json(s, read_arg(cx));
        DHTensor d = cop_kind == "delta" ? dh.delta(x, chi) : dh.delta_prime(x, chi);
        std::cout << to_json(d).dump(2) << "\n";
      }
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitConfig;
  } catch (const json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 0;
}
