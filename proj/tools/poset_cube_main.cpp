// poset-cube: inclusion-representation parameters of finite posets.
//
// Subcommands: params, check, decompose, rep, gen, enumerate, verify, dot.
// Exit codes: 0 true/success, 1 false, 2 input error, 3 cap exceeded,
// 4 inconclusive.  POSET_CUBE_CAP overrides the brute-force cap.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcube/characterization.hpp"
#include "pcube/errors.hpp"
#include "pcube/generators.hpp"
#include "pcube/io.hpp"
#include "pcube/poset.hpp"
#include "pcube/representation.hpp"
#include "pcube/solvers.hpp"
#include "pcube/verify.hpp"

namespace {

using namespace pcube;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Poset load_poset(const std::string& path) { return parse_poset(read_input(path)); }

Representation load_rep(const Poset& p, const std::string& path) {
  return representation_from_json(p, read_input(path));
}

int brute_cap() {
  const char* env = std::getenv("POSET_CUBE_CAP");
  if (!env || !*env) return kDefaultBruteCap;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > kGroundCap)
    throw std::invalid_argument("POSET_CUBE_CAP must be an integer in [1, 64]");
  return static_cast<int>(v);
}

nlohmann::ordered_json rep_json(const Poset& p, const Representation& r) {
  return nlohmann::ordered_json::parse(representation_to_json(p, r));
}

// --- params ------------------------------------------------------------------

struct ParamsOpts {
  std::string file;
  std::string method = "auto";
  bool witness = false;
  bool json = false;
};

int run_params(const ParamsOpts& o) {
  Poset p = load_poset(o.file);
  int cap = brute_cap();
  ParamReport pr;
  if (o.method == "brute")
    pr = params_brute(p, cap);
  else if (o.method == "decompose")
    pr = params_via_block_decomposition(p, cap);
  else
    pr = params_auto(p, cap);
  if (o.json) {
    nlohmann::ordered_json j;
    j["schema"] = "poset-cube/1";
    j["report"] = "params";
    j["n"] = pr.n;
    j["method"] = method_name(pr.method);
    j["ch"] = pr.ch;
    j["dim2"] = pr.dim2;
    j["cw"] = pr.cw;
    j["iir"] = pr.iir;
    if (o.witness) {
      nlohmann::ordered_json w;
      if (pr.ch_witness) w["ch"] = rep_json(p, *pr.ch_witness);
      if (pr.dim2_witness) w["dim2"] = rep_json(p, *pr.dim2_witness);
      if (pr.cw_witness) w["cw"] = rep_json(p, *pr.cw_witness);
      if (pr.iir_witness) w["iir"] = rep_json(p, *pr.iir_witness);
      j["witnesses"] = std::move(w);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "n       " << pr.n << "\n"
            << "method  " << method_name(pr.method) << "\n"
            << "ch      " << pr.ch << "\n"
            << "dim2    " << pr.dim2 << "\n"
            << "cw      " << pr.cw << "\n"
            << "iir     " << pr.iir << "\n";
  if (o.witness) {
    auto show = [&](const char* name, const std::optional<Representation>& w) {
      std::cout << "witness " << name << ":\n";
      if (w)
        std::cout << representation_to_json(p, *w);
      else
        std::cout << "(none)\n";
    };
    show("ch", pr.ch_witness);
    show("dim2", pr.dim2_witness);
    show("cw", pr.cw_witness);
    show("iir", pr.iir_witness);
  }
  return 0;
}

// --- check -------------------------------------------------------------------

struct CheckOpts {
  std::string file;
  std::string property;
  bool json = false;
};

int run_check(const CheckOpts& o) {
  Poset p = load_poset(o.file);
  PropertyReport rep;
  if (o.property == "no-chain-block")
    rep = check_property(p, PropertyKind::no_chain_block);
  else if (o.property == "two-down")
    rep = check_property(p, PropertyKind::two_down);
  else if (o.property == "parallel-pair")
    rep = check_property(p, PropertyKind::parallel_pair);
  else if (o.property == "miir")
    rep = in_miir(p);
  else if (o.property == "nmiir")
    rep = in_nmiir(p);
  else if (o.property == "mtd")
    rep = in_mtd(p);
  else if (o.property == "mcw")
    rep = in_mcw(p);
  else
    throw std::invalid_argument("unknown property: " + o.property);
  std::vector<std::string> witness;
  for (int x : rep.witness_elements) witness.push_back(p.label(x));
  if (o.json) {
    nlohmann::ordered_json j;
    j["schema"] = "poset-cube/1";
    j["report"] = "check";
    j["property"] = rep.property;
    j["holds"] = rep.holds;
    j["witness"] = witness;
    j["detail"] = rep.detail;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "property  " << rep.property << "\n"
              << "holds     " << (rep.holds ? "true" : "false") << "\n";
    if (!witness.empty()) {
      std::cout << "witness  ";
      for (const auto& w : witness) std::cout << " " << w;
      std::cout << "\n";
    }
    if (!rep.detail.empty()) std::cout << "detail    " << rep.detail << "\n";
  }
  return rep.holds ? 0 : 1;
}

// --- decompose ---------------------------------------------------------------

struct DecomposeOpts {
  std::string file;
  bool blocks = false;
  bool components = false;
  bool json = false;
};

int run_decompose(const DecomposeOpts& o) {
  if (o.blocks == o.components)
    throw std::invalid_argument("pass exactly one of --blocks or --components");
  Poset p = load_poset(o.file);
  Decomposition d = o.blocks ? block_decomposition(p) : component_decomposition(p);
  const char* kind = o.blocks ? "blocks" : "components";
  if (o.json) {
    nlohmann::ordered_json j;
    j["schema"] = "poset-cube/1";
    j["report"] = "decompose";
    j["kind"] = kind;
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (size_t i = 0; i < d.parts.size(); ++i) {
      const Poset& q = d.parts[i];
      nlohmann::ordered_json part;
      part["elements"] = q.labels();
      nlohmann::ordered_json rels = nlohmann::ordered_json::array();
      for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
          if (q.is_cover(x, y)) rels.push_back({q.label(x), q.label(y)});
      part["covers"] = std::move(rels);
      nlohmann::ordered_json emb = nlohmann::ordered_json::array();
      for (int id : d.embedding[i]) emb.push_back(p.label(id));
      part["embedding"] = std::move(emb);
      parts.push_back(std::move(part));
    }
    j["parts"] = std::move(parts);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "# " << kind << ": " << d.parts.size() << "\n";
  for (size_t i = 0; i < d.parts.size(); ++i) {
    std::cout << "\n# part " << i << "\n" << serialize_poset(d.parts[i]);
  }
  return 0;
}

// --- rep ---------------------------------------------------------------------

struct RepOpts {
  std::string action;
  std::string file;
  std::string rep_file;
};

int run_rep(const RepOpts& o) {
  Poset p = load_poset(o.file);
  int cap = brute_cap();
  if (o.action == "canonical") {
    std::cout << representation_to_json(p, canonical_representation(p));
    return 0;
  }
  if (o.action == "max-irreducible") {
    Representation w;
    max_irreducible_ground(p, &w, cap);
    std::cout << representation_to_json(p, w);
    return 0;
  }
  if (o.rep_file.empty())
    throw std::invalid_argument("action '" + o.action + "' needs --rep FILE");
  if (o.action == "validate") {
    Representation r = load_rep(p, o.rep_file);
    auto v = validate_representation(p, r);
    if (!v.ok) {
      std::cout << "invalid: " << v.message << "\n";
      return 2;
    }
    std::cout << "valid\n";
    return 0;
  }
  Representation r = load_rep(p, o.rep_file);
  auto v = validate_representation(p, r);
  if (!v.ok) throw invalid_representation(v.message);
  if (o.action == "reduce") {
    std::cout << representation_to_json(p, reduce_to_irreducible(p, r, cap));
    return 0;
  }
  if (o.action == "irreducible") {
    auto [irr, smaller] = is_irreducible(p, r, cap);
    if (irr) {
      std::cout << "irreducible\n";
      return 0;
    }
    std::cout << "reducible\n";
    if (smaller) std::cout << representation_to_json(p, *smaller);
    return 1;
  }
  throw std::invalid_argument("unknown action: " + o.action);
}

// --- gen ---------------------------------------------------------------------

struct GenOpts {
  std::string type;
  int n = -1;
  int i = -1;
  std::vector<int> a;
  std::string rep_file;
};

int run_gen(const GenOpts& o) {
  auto need_n = [&](const char* what) {
    if (o.n < 0) throw std::invalid_argument(std::string("--n required: ") + what);
    return o.n;
  };
  Poset p = gen::v();
  std::optional<Representation> rep;
  if (o.type == "chain")
    p = gen::chain(need_n("number of elements"));
  else if (o.type == "antichain")
    p = gen::antichain(need_n("number of elements"));
  else if (o.type == "v")
    p = gen::v();
  else if (o.type == "lambda")
    p = gen::lambda();
  else if (o.type == "z")
    p = gen::z();
  else if (o.type == "b")
    p = gen::b(need_n("chain length"));
  else if (o.type == "fan")
    p = gen::fan(need_n("number of minimal elements"));
  else if (o.type == "binomial-fan")
    p = gen::binomial_fan(need_n("half-window parameter"));
  else if (o.type == "sigma") {
    if (o.n < 0 && o.a.empty()) {
      p = gen::sigma_poset(gen::flagship_sigma());
    } else {
      if (o.n < 0 || o.a.empty())
        throw std::invalid_argument("sigma needs both --n and --a (or neither for the "
                                    "flagship instance)");
      p = gen::sigma_poset({o.n, o.a});
    }
  } else if (o.type == "twin") {
    int s = need_n("window size");
    if (o.i < 0) throw std::invalid_argument("twin needs --i (window offset in [3, s])");
    auto pr = gen::twin_representation(s, o.i);
    p = std::move(pr.first);
    rep = std::move(pr.second);
  } else {
    throw std::invalid_argument("unknown generator: " + o.type);
  }
  std::cout << serialize_poset(p);
  if (!o.rep_file.empty()) {
    if (!rep)
      throw std::invalid_argument("--rep-file applies only to generators that produce a "
                                  "representation (twin)");
    std::ofstream out(o.rep_file);
    if (!out) throw parse_error("cannot open file: " + o.rep_file);
    out << representation_to_json(p, *rep);
  }
  return 0;
}

// --- enumerate ---------------------------------------------------------------

struct EnumerateOpts {
  int n = 0;
  std::string out_dir;
};

int run_enumerate(const EnumerateOpts& o) {
  auto cat = enumerate_posets(o.n);
  if (o.out_dir.empty()) {
    std::cout << "# isomorphism types of size " << o.n << ": " << cat.size() << "\n";
    for (size_t i = 0; i < cat.size(); ++i)
      std::cout << "\n# type " << i << "\n" << serialize_poset(cat[i]);
    return 0;
  }
  std::filesystem::create_directories(o.out_dir);
  for (size_t i = 0; i < cat.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "n%d-%03zu-%016llx.poset", o.n, i,
                  static_cast<unsigned long long>(canonical_key(cat[i])));
    std::ofstream out(std::filesystem::path(o.out_dir) / name);
    if (!out) throw parse_error(std::string("cannot open file: ") + name);
    out << serialize_poset(cat[i]);
  }
  std::cout << cat.size() << " posets written to " << o.out_dir << "\n";
  return 0;
}

// --- verify ------------------------------------------------------------------

struct VerifyOpts {
  verify::Config cfg;
  bool json = false;
};

int run_verify(const VerifyOpts& o) {
  verify::Report rep = verify::run_all(o.cfg);
  if (!o.json) {
    long long exhaustive = 0;
    static const long long counts[] = {1, 2, 5, 16, 63, 318, 2045};
    for (int n = 1; n <= o.cfg.max_n; ++n) exhaustive += counts[n - 1];
    std::printf("catalog: %lld posets (n <= %d) exhaustive", exhaustive, o.cfg.max_n);
    if (o.cfg.max_n < 6)
      std::printf(", %d sampled of size 6 (seed %llu)", o.cfg.sample_n6,
                  static_cast<unsigned long long>(o.cfg.seed));
    std::printf("\n\n");
    for (const auto& cr : rep.checks)
      std::printf("%-32s %-13s checked=%-8lld failures=%lld\n", cr.name.c_str(),
                  verify::status_name(cr.status), cr.checked, cr.failures);
    std::printf("\n");
    for (const auto& cr : rep.checks)
      if (!cr.detail.empty())
        std::printf("%s: %s\n", cr.name.c_str(), cr.detail.c_str());
    std::printf("\nsummary: pass=%d fail=%d inconclusive=%d total=%d\n", rep.passed(),
                rep.failed(), rep.inconclusive(), static_cast<int>(rep.checks.size()));
  } else {
    std::cout << verify::report_to_json(rep);
  }
  if (rep.failed()) return 1;
  if (rep.inconclusive()) return 4;
  return 0;
}

// --- dot ---------------------------------------------------------------------

struct DotOpts {
  std::string file;
  std::string rep_file;
};

int run_dot(const DotOpts& o) {
  Poset p = load_poset(o.file);
  if (o.rep_file.empty()) {
    std::cout << to_dot(p);
    return 0;
  }
  Representation r = load_rep(p, o.rep_file);
  std::cout << to_dot(p, &r);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"inclusion-representation parameters of finite posets"};
  app.require_subcommand(1);

  ParamsOpts params_opts;
  auto* sub_params = app.add_subcommand(
      "params", "compute ch, dim2, cw and iir of a poset file");
  sub_params->add_option("file", params_opts.file, "poset file ('-' for stdin)")->required();
  sub_params->add_option("--method", params_opts.method, "brute | decompose | auto")
      ->check(CLI::IsMember({"brute", "decompose", "auto"}))
      ->capture_default_str();
  sub_params->add_flag("--witness", params_opts.witness, "print witness representations");
  sub_params->add_flag("--json", params_opts.json, "machine-readable output");

  CheckOpts check_opts;
  auto* sub_check = app.add_subcommand("check", "decide a structural property (exit 0/1)");
  sub_check->add_option("file", check_opts.file, "poset file ('-' for stdin)")->required();
  sub_check
      ->add_option("--property", check_opts.property,
                   "no-chain-block | two-down | parallel-pair | miir | nmiir | mtd | mcw")
      ->required()
      ->check(CLI::IsMember(
          {"no-chain-block", "two-down", "parallel-pair", "miir", "nmiir", "mtd", "mcw"}));
  sub_check->add_flag("--json", check_opts.json, "machine-readable output");

  DecomposeOpts dec_opts;
  auto* sub_dec = app.add_subcommand("decompose", "split into blocks or components");
  sub_dec->add_option("file", dec_opts.file, "poset file ('-' for stdin)")->required();
  sub_dec->add_flag("--blocks", dec_opts.blocks, "vertical block decomposition");
  sub_dec->add_flag("--components", dec_opts.components, "connected components");
  sub_dec->add_flag("--json", dec_opts.json, "machine-readable output");

  RepOpts rep_opts;
  auto* sub_rep = app.add_subcommand("rep", "work with representations");
  sub_rep
      ->add_option("action", rep_opts.action,
                   "canonical | validate | reduce | irreducible | max-irreducible")
      ->required()
      ->check(CLI::IsMember(
          {"canonical", "validate", "reduce", "irreducible", "max-irreducible"}));
  sub_rep->add_option("file", rep_opts.file, "poset file ('-' for stdin)")->required();
  sub_rep->add_option("--rep", rep_opts.rep_file, "representation JSON file");

  GenOpts gen_opts;
  auto* sub_gen = app.add_subcommand("gen", "emit a generated poset file");
  sub_gen
      ->add_option("type", gen_opts.type,
                   "chain | antichain | v | lambda | z | b | fan | binomial-fan | sigma | twin")
      ->required()
      ->check(CLI::IsMember({"chain", "antichain", "v", "lambda", "z", "b", "fan",
                             "binomial-fan", "sigma", "twin"}));
  sub_gen->add_option("--n", gen_opts.n, "size parameter (meaning depends on the type)");
  sub_gen->add_option("--i", gen_opts.i, "window offset for twin");
  sub_gen->add_option("--a", gen_opts.a, "comma-separated profile for sigma")->delimiter(',');
  sub_gen->add_option("--rep-file", gen_opts.rep_file,
                      "write the generated representation (twin) to this file");

  EnumerateOpts enum_opts;
  auto* sub_enum = app.add_subcommand("enumerate", "all isomorphism types of a given size");
  sub_enum->add_option("--n", enum_opts.n, "poset size (1..7)")->required();
  sub_enum->add_option("--out", enum_opts.out_dir, "write one poset file per type here");

  VerifyOpts verify_opts;
  auto* sub_verify = app.add_subcommand("verify", "run the exhaustive invariant suite");
  sub_verify->add_option("--max-n", verify_opts.cfg.max_n, "exhaustive catalog bound (1..7)")
      ->capture_default_str();
  sub_verify
      ->add_option("--sample-n6", verify_opts.cfg.sample_n6, "sampled 6-element posets")
      ->capture_default_str();
  sub_verify->add_option("--seed", verify_opts.cfg.seed, "sampling seed")
      ->capture_default_str();
  sub_verify
      ->add_option("--time-budget", verify_opts.cfg.time_budget, "seconds per check")
      ->capture_default_str();
  sub_verify->add_flag("--json", verify_opts.json, "machine-readable output only");

  DotOpts dot_opts;
  auto* sub_dot = app.add_subcommand("dot", "Hasse diagram as DOT");
  sub_dot->add_option("file", dot_opts.file, "poset file ('-' for stdin)")->required();
  sub_dot->add_option("--rep", dot_opts.rep_file, "annotate nodes with this representation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sub_params->parsed()) return run_params(params_opts);
    if (sub_check->parsed()) return run_check(check_opts);
    if (sub_dec->parsed()) return run_decompose(dec_opts);
    if (sub_rep->parsed()) return run_rep(rep_opts);
    if (sub_gen->parsed()) return run_gen(gen_opts);
    if (sub_enum->parsed()) return run_enumerate(enum_opts);
    if (sub_verify->parsed()) return run_verify(verify_opts);
    if (sub_dot->parsed()) return run_dot(dot_opts);
  } catch (const cap_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const invalid_representation& e) {
    std::cerr << "invalid representation: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
