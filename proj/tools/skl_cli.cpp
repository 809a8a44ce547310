// skl-cli: validate, decompose, classify, hunt forbidden subalgebras,
// generate example algebras and cross-check theorem equivalences.
//
// Exit codes: 0 success; 1 validation/crosscheck failure; 2 usage or parse
// error; 3 internal error (a theorem-backed invariant was breached).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewlat/classify.hpp"
#include "skewlat/cosets.hpp"
#include "skewlat/crosscheck.hpp"
#include "skewlat/generators.hpp"
#include "skewlat/json_report.hpp"
#include "skewlat/order_green.hpp"
#include "skewlat/skl_format.hpp"

namespace {

using namespace skewlat;

std::size_t max_carrier_from_env() {
  if (const char* v = std::getenv("SKL_MAX_CARRIER")) {
    const long parsed = std::strtol(v, nullptr, 10);
    if (parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return kDefaultMaxCarrier;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

SkewLattice load_algebra(const std::string& path) {
  return parse_algebra(read_file(path));
}

std::string brace_list(const SkewLattice& a, const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? "," : "") + a.name(xs[i]);
  return out + "}";
}

int cmd_validate(const std::string& path) {
  const auto alg = load_algebra(path);
  const auto rep = validate(alg);
  if (rep.ok) {
    std::cout << "ok: " << alg.size() << " elements, all laws hold\n";
    return 0;
  }
  for (const auto& f : rep.failures) {
    std::cout << "FAIL " << f.law << " at (";
    for (std::size_t i = 0; i < f.witness.size(); ++i)
      std::cout << (i ? "," : "") << f.witness[i];
    std::cout << ")\n";
  }
  return 1;
}

int cmd_decompose(const std::string& path, bool as_json) {
  const auto alg = load_algebra(path);
  if (!validate(alg).ok) {
    std::cerr << "algebra fails validation; run `skl-cli validate` first\n";
    return 1;
  }
  if (as_json) {
    std::cout << decomposition_to_json(alg).dump(2) << "\n";
    return 0;
  }
  const auto g = green_partitions(alg);
  const auto flags = handedness(alg);
  std::cout << "D-classes (" << g.d.num_classes() << "):\n";
  for (const auto& cls : g.d.classes())
    std::cout << "  " << brace_list(alg, cls) << "\n";
  std::cout << "handedness:" << (flags.rectangular ? " rectangular" : "")
            << (flags.left_handed ? " left-handed" : "")
            << (flags.right_handed ? " right-handed" : "")
            << (!flags.rectangular && !flags.left_handed && !flags.right_handed
                    ? " two-sided"
                    : "")
            << "\n";
  const auto dec = decomposition_to_json(alg);
  std::cout << "S/D covering relation:\n";
  for (const auto& edge : dec["hasse"])
    std::cout << "  " << brace_list(alg, g.d.members(edge[0].get<int>()))
              << " > " << brace_list(alg, g.d.members(edge[1].get<int>()))
              << "\n";
  for (const auto& pair : primitive_pairs(alg)) {
    const auto cp = coset_partitions(pair);
    std::cout << "pair " << brace_list(alg, pair.classes[0]) << " > "
              << brace_list(alg, pair.classes[1]) << ":\n";
    std::cout << "  lower-class cosets in upper:";
    for (const auto& c : cp.upper_cosets) std::cout << " " << brace_list(alg, c);
    std::cout << "\n  upper-class cosets in lower:";
    for (const auto& c : cp.lower_cosets) std::cout << " " << brace_list(alg, c);
    std::cout << "\n  coset bijections:\n";
    for (const auto& b : coset_bijections(pair)) {
      std::cout << "   ";
      for (const auto& [u, l] : b.pairs)
        std::cout << " " << alg.name(u) << ">" << alg.name(l);
      std::cout << "\n";
    }
  }
  for (const auto& triple : chain_triples(alg)) {
    const auto ac = ac_decomposition(triple);
    const auto rf = reflective_factorization(triple);
    std::cout << "chain " << brace_list(alg, triple.classes[0]) << " > "
              << brace_list(alg, triple.classes[1]) << " > "
              << brace_list(alg, triple.classes[2]) << ":\n";
    std::cout << "  components:";
    for (const auto& c : ac.components) std::cout << " " << brace_list(alg, c);
    std::cout << "\n  AC-cosets:";
    for (const auto& c : ac.ac_cosets) std::cout << " " << brace_list(alg, c);
    std::cout << "\n  reflective: " << (rf.reflective ? "yes" : "no")
              << ", factors as chain x rectangular: "
              << (rf.iso ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& path, bool as_json) {
  const auto alg = load_algebra(path);
  if (!validate(alg).ok) {
    std::cerr << "algebra fails validation; run `skl-cli validate` first\n";
    return 1;
  }
  const auto rep = classify_report(alg);
  if (as_json) {
    std::cout << classification_to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "properties:\n";
    for (const auto& [prop, v] : rep.verdicts)
      std::cout << "  " << std::left << std::setw(38) << prop
                << (v ? "true" : "false") << "\n";
    std::cout << "modes:\n";
    for (const auto& [prop, ms] : rep.modes)
      for (const auto& [mode, r] : ms) {
        std::cout << "  " << std::left << std::setw(38)
                  << (prop + "." + mode) << (r.holds ? "true" : "false");
        if (!r.witness.empty()) {
          std::cout << "  witness (";
          for (std::size_t i = 0; i < r.witness.size(); ++i)
            std::cout << (i ? "," : "") << r.witness[i];
          std::cout << ")";
        }
        std::cout << "\n";
      }
    std::cout << "agreement:\n";
    for (const auto& [prop, ok] : rep.agreement)
      std::cout << "  " << std::left << std::setw(38) << prop
                << (ok ? "agree" : "DISAGREE") << "\n";
    if (rep.forbidden)
      std::cout << "forbidden subalgebra: " << rep.forbidden->kind << "_"
                << rep.forbidden->n << "\n";
    else
      std::cout << "forbidden subalgebra: none\n";
  }
  return rep.all_agree() ? 0 : 1;
}

int cmd_forbidden(const std::string& path, bool as_json) {
  const auto alg = load_algebra(path);
  if (!validate(alg).ok) {
    std::cerr << "algebra fails validation; run `skl-cli validate` first\n";
    return 1;
  }
  const auto fw = find_forbidden(alg);
  if (as_json) {
    json out;
    if (fw) {
      json emb = json::object();
      for (int i = 0; i < fw->embedding.source.size(); ++i)
        emb[fw->embedding.source.name(i)] =
            fw->embedding.target.name(fw->embedding.map[i]);
      out = {{"kind", std::string(1, fw->kind)},
             {"n", fw->n},
             {"embedding", std::move(emb)}};
    } else {
      out = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (!fw) {
    std::cout << "none\n";
    return 0;
  }
  std::cout << fw->kind << "_" << fw->n << " embeds via:\n";
  for (int i = 0; i < fw->embedding.source.size(); ++i)
    std::cout << "  " << fw->embedding.source.name(i) << " -> "
              << fw->embedding.target.name(fw->embedding.map[i]) << "\n";
  return 0;
}

struct GenerateArgs {
  std::string kind;
  int n = 0, p = 0, q = 0, m = 0, k = 0;
  std::uint64_t seed = 0;
  std::string spec_path;
  std::vector<std::string> inputs;
  std::string out_path;
};

int cmd_generate(const GenerateArgs& args) {
  const std::size_t cap = max_carrier_from_env();
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw CLI::ValidationError("generate", what);
  };
  if (args.kind == "corpus") {
    const auto corpus = gen_corpus(args.seed);
    std::error_code ec;
    std::filesystem::create_directories(args.out_path, ec);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      std::ostringstream name;
      name << args.out_path << "/corpus_" << std::setw(3) << std::setfill('0')
           << i << ".skl";
      write_file(name.str(), serialize_algebra(corpus[i]));
    }
    std::cout << "wrote " << corpus.size() << " algebras to " << args.out_path
              << "\n";
    return 0;
  }

  SkewLattice alg;
  if (args.kind == "xn") {
    need(args.n >= 1, "--n is required (>= 1)");
    alg = gen_xn(args.n);
  } else if (args.kind == "yn") {
    need(args.n >= 1, "--n is required (>= 1)");
    alg = gen_yn(args.n);
  } else if (args.kind == "chain") {
    need(args.n >= 1, "--n is required (>= 1)");
    alg = gen_chain(args.n);
  } else if (args.kind == "rectangular") {
    need(args.p >= 1 && args.q >= 1, "--p and --q are required (>= 1)");
    alg = gen_rectangular(args.p, args.q);
  } else if (args.kind == "partialfn") {
    need(args.m >= 1 && args.k >= 1, "--m and --k are required (>= 1)");
    alg = gen_partial_functions(args.m, args.k, cap);
  } else if (args.kind == "primitive") {
    need(!args.spec_path.empty(), "--spec is required");
    alg = gen_primitive(
        primitive_spec_from_json(json::parse(read_file(args.spec_path))));
  } else if (args.kind == "product") {
    need(args.inputs.size() == 2, "product needs two input .skl files");
    alg = direct_product(load_algebra(args.inputs[0]),
                         load_algebra(args.inputs[1]), cap);
  } else {
    throw CLI::ValidationError("generate", "unknown kind '" + args.kind + "'");
  }
  write_file(args.out_path, serialize_algebra(alg));
  std::cout << "wrote " << alg.size() << "-element algebra to "
            << args.out_path << "\n";
  return 0;
}

int cmd_crosscheck(const std::vector<std::string>& paths, std::uint64_t seed) {
  std::vector<SkewLattice> corpus;
  if (paths.empty()) {
    corpus = gen_corpus(seed);
  } else {
    for (const auto& p : paths) corpus.push_back(load_algebra(p));
  }
  const auto res = crosscheck_corpus(corpus);
  std::cout << format_summary(res);
  std::cout << "elapsed: " << std::fixed << std::setprecision(2) << res.seconds
            << " s\n";
  return res.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite skew lattice analysis toolkit"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the skew lattice laws");
  validate_cmd->add_option("file", path, "input .skl file")->required();

  auto* decompose_cmd =
      app.add_subcommand("decompose", "D-classes, cosets, bijections, components");
  decompose_cmd->add_option("file", path, "input .skl file")->required();
  decompose_cmd->add_flag("--json", as_json, "emit JSON");

  auto* classify_cmd =
      app.add_subcommand("classify", "property hierarchy with all modes");
  classify_cmd->add_option("file", path, "input .skl file")->required();
  classify_cmd->add_flag("--json", as_json, "emit JSON");

  auto* forbidden_cmd =
      app.add_subcommand("forbidden", "search for an X_n / Y_n subalgebra");
  forbidden_cmd->add_option("file", path, "input .skl file")->required();
  forbidden_cmd->add_flag("--json", as_json, "emit JSON");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "write example algebras");
  generate_cmd
      ->add_option("kind", gen.kind,
                   "xn|yn|chain|rectangular|partialfn|primitive|product|corpus")
      ->required();
  generate_cmd->add_option("inputs", gen.inputs, "input .skl files (product)");
  generate_cmd->add_option("--n", gen.n, "size parameter (xn, yn, chain)");
  generate_cmd->add_option("--p", gen.p, "rectangular rows");
  generate_cmd->add_option("--q", gen.q, "rectangular columns");
  generate_cmd->add_option("--m", gen.m, "partialfn domain size");
  generate_cmd->add_option("--k", gen.k, "partialfn codomain size");
  generate_cmd->add_option("--seed", gen.seed, "corpus seed");
  generate_cmd->add_option("--spec", gen.spec_path, "primitive spec JSON file");
  generate_cmd->add_option("-o,--out", gen.out_path, "output path")->required();

  std::vector<std::string> cross_paths;
  std::uint64_t cross_seed = 0;
  auto* crosscheck_cmd = app.add_subcommand(
      "crosscheck", "assert every theorem-backed invariant over a corpus");
  crosscheck_cmd->add_option("files", cross_paths, "corpus .skl files");
  crosscheck_cmd->add_option("--seed", cross_seed, "seed when generating");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(path);
    if (decompose_cmd->parsed()) return cmd_decompose(path, as_json);
    if (classify_cmd->parsed()) return cmd_classify(path, as_json);
    if (forbidden_cmd->parsed()) return cmd_forbidden(path, as_json);
    if (generate_cmd->parsed()) return cmd_generate(gen);
    if (crosscheck_cmd->parsed()) return cmd_crosscheck(cross_paths, cross_seed);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
