// diored: reduction toolkit turning Diophantine equations into
// automorphism-search instances, with brute-force verification.
//
// Exit codes: 0 success; 1 no witness within bound / property check negative;
// 2 parse or precondition error; 3 resource cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "diored/oracle.hpp"
#include "diored/rational.hpp"
#include "diored/serialize.hpp"

namespace {

using namespace diored;

struct CommonArgs {
  std::string expr;
  std::string file;
  std::string out;
  std::string order = "grevlex";
  std::string mode = "Z";
  long long bound = 10;
  int c_max = 1000;
  unsigned long long eval_cap = 100000000ULL;
};

// input files hold one expression; '#' starts a comment
std::string read_expression_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open input file '" + path + "'");
  std::ostringstream joined;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    joined << line << ' ';
  }
  return joined.str();
}

Polynomial load_input(const CommonArgs& args) {
  std::string text = args.expr;
  if (text.empty() && !args.file.empty()) text = read_expression_file(args.file);
  if (text.empty()) fail(ErrorKind::InvalidArgument, "provide --f <expr> or --file <path>");
  std::vector<std::string> names = scan_variables(text);
  if (names.empty())
    return parse_poly(text, VarRegistry(std::vector<std::string>{"t1"}));
  return parse_poly(text, VarRegistry(std::move(names)));
}

void emit(const Json& payload, const std::string& out_path) {
  const std::string text = dump_json(payload);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot open output file '" + out_path + "'");
    out << text;
  }
}

int run_smooth(const CommonArgs& args) {
  Polynomial f = load_input(args);
  SmoothingOptions opts;
  opts.c_max = args.c_max;
  opts.order = order_kind_from_string(args.order);
  SmoothingResult result = smooth_lift(f, opts);
  Json payload;
  payload["schema_version"] = kSchemaVersion;
  payload["kind"] = "smoothing";
  payload["order"] = args.order;
  Json body = smoothing_to_json(result);
  for (auto& [key, value] : body.items()) payload[key] = value;
  emit(payload, args.out);
  std::cerr << "smooth: c = " << result.c << ", deg " << result.degree_in << " -> "
            << result.degree_out << ", certificate basis {1}\n";
  return 0;
}

int run_homog(const CommonArgs& args, const std::string& var) {
  Polynomial f = load_input(args);
  std::string fresh = var;
  if (fresh.empty()) {
    fresh = "t_h";
    for (int suffix = 1; f.registry().contains(fresh); ++suffix)
      fresh = "t_h_" + std::to_string(suffix);
  }
  Polynomial h = homogenize(f, fresh);
  Json payload;
  payload["schema_version"] = kSchemaVersion;
  payload["kind"] = "homogenization";
  payload["input"] = poly_to_json(f);
  payload["var"] = fresh;
  payload["result"] = poly_to_json(h);
  emit(payload, args.out);
  std::cerr << "homog: degree " << *h.total_degree() << " homogeneous form in '" << fresh
            << "'\n";
  return 0;
}

int run_foursq(const CommonArgs& args) {
  Polynomial f = load_input(args);
  std::vector<FourSquaresMap> vars;
  Polynomial out = four_squares_transform(f, vars);
  Json payload;
  payload["schema_version"] = kSchemaVersion;
  payload["kind"] = "four_squares";
  payload["input"] = poly_to_json(f);
  payload["result"] = poly_to_json(out);
  Json mapping = Json::array();
  for (const auto& entry : vars) {
    Json row;
    row["original"] = entry.original;
    row["fresh"] = entry.fresh;
    mapping.push_back(std::move(row));
  }
  payload["var_map"] = std::move(mapping);
  emit(payload, args.out);
  std::cerr << "foursq: " << f.registry().arity() << " -> " << out.registry().arity()
            << " variables, degree " << *f.total_degree() << " -> " << *out.total_degree()
            << "\n";
  return 0;
}

int run_lattice_s(const CommonArgs& args, int n) {
  LatticeSet S = build_S(n);
  Json payload;
  payload["schema_version"] = kSchemaVersion;
  payload["kind"] = "lattice_set";
  payload["n"] = n;
  Json pts = Json::array();
  for (const auto& p : S.points) {
    Json row = Json::array();
    for (long long c : p) row.push_back(c);
    pts.push_back(std::move(row));
  }
  payload["points"] = std::move(pts);
  emit(payload, args.out);
  std::cerr << "lattice-s: " << S.points.size() << " points in Z^" << n << "\n";
  return 0;
}

int run_stab_check(const CommonArgs& args, int n) {
  auto maps = stabilizer_bruteforce(n, static_cast<int>(args.bound));
  emit(stabilizer_to_json(n, static_cast<int>(args.bound), maps), args.out);
  std::cerr << "stab-check: " << maps.size() << " maps in the box, all of G form\n";
  return 0;
}

int run_ec_mul(const CommonArgs& args, long long k, const std::string& point) {
  Curve E = curve_37a1();
  ECPoint P = ECPoint::affine(0, 0);
  if (!point.empty()) {
    const auto comma = point.find(',');
    if (comma == std::string::npos)
      fail(ErrorKind::InvalidArgument, "expected --point x,y");
    P = ECPoint::affine(rational_from_string(point.substr(0, comma)),
                        rational_from_string(point.substr(comma + 1)));
  }
  ECPoint result = scalar_mul(k, P, E);
  Json payload;
  payload["schema_version"] = kSchemaVersion;
  payload["kind"] = "ec_mul";
  payload["curve"] = curve_to_json(E);
  payload["P"] = point_to_json(P);
  payload["k"] = k;
  payload["result"] = point_to_json(result);
  payload["on_curve"] = on_curve(result, E);
  emit(payload, args.out);
  std::cerr << "ec-mul: " << k << "*P computed\n";
  return 0;
}

CompileOptions compile_options(const CommonArgs& args) {
  CompileOptions opts;
  opts.mode = mode_from_string(args.mode);
  opts.c_max = args.c_max;
  opts.order = order_kind_from_string(args.order);
  return opts;
}

int run_compile(const CommonArgs& args) {
  Polynomial f = load_input(args);
  InstanceDescriptor desc = compile_instance(f, compile_options(args));
  emit(instance_to_json(desc), args.out);
  std::cerr << "compile: n = " << desc.n << ", c = " << desc.smoothing.c << ", mode "
            << to_string(desc.mode) << "\n";
  return 0;
}

int run_verify(const CommonArgs& args, const std::string& instance_path) {
  SearchOptions search;
  search.eval_cap = args.eval_cap;
  SearchReport report = [&] {
    if (!instance_path.empty()) {
      std::ifstream in(instance_path);
      if (!in) fail(ErrorKind::InvalidArgument, "cannot open instance '" + instance_path + "'");
      Json j = Json::parse(in, nullptr, true);
      return check_equivalence_on(instance_from_json(j), args.bound, search);
    }
    Polynomial f = load_input(args);
    EquivalenceOptions opts;
    opts.mode = mode_from_string(args.mode);
    opts.c_max = args.c_max;
    opts.order = order_kind_from_string(args.order);
    opts.search = search;
    return check_equivalence(f, args.bound, opts);
  }();
  emit(report_to_json(report), args.out);
  if (report.sigma_witnesses.empty()) {
    // a bounded search can never certify unsolvability
    std::cerr << "verify: consistent; no witness within bound B=" << report.bound << "\n";
    return 1;
  }
  std::cerr << "verify: consistent; " << report.f_zeros.size() << " zero(s), "
            << report.sigma_witnesses.size() << " automorphism witness(es) at bound B="
            << report.bound << "\n";
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"reduction toolkit: Diophantine equations to automorphism-search instances"};
  app.require_subcommand(1);

  CommonArgs args;
  int n = 3;
  long long k = 1;
  std::string hom_var;
  std::string point;
  std::string instance_path;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) {
      cmd->add_option("--f", args.expr, "inline polynomial expression");
      cmd->add_option("--file", args.file, "input file (one expression, # comments)");
    }
    cmd->add_option("--out", args.out, "write JSON output to a file instead of stdout");
    return cmd;
  };

  CLI::App* smooth = add_common(app.add_subcommand("smooth", "find the least smooth c"), true);
  smooth->add_option("--c-max", args.c_max, "search cap for c");
  smooth->add_option("--order", args.order, "term order (grevlex|lex)");

  CLI::App* homog = add_common(app.add_subcommand("homog", "homogenize an expression"), true);
  homog->add_option("--var", hom_var, "homogenization variable name");

  add_common(app.add_subcommand("foursq", "four-squares transform"), true);

  CLI::App* lattice = add_common(app.add_subcommand("lattice-s", "emit the lattice set S"), false);
  lattice->add_option("--n", n, "dimension (>= 3)")->required();

  CLI::App* stab = add_common(
      app.add_subcommand("stab-check", "enumerate the bounded stabilizer of S"), false);
  stab->add_option("--n", n, "dimension (>= 3)")->required();
  stab->add_option("--bound", args.bound, "entry box bound")->required();

  CLI::App* ecmul = add_common(app.add_subcommand("ec-mul", "scalar multiple on 37A1"), false);
  ecmul->add_option("--k", k, "scalar")->required();
  ecmul->add_option("--point", point, "base point x,y (default 0,0)");

  CLI::App* compile = add_common(app.add_subcommand("compile", "compile an instance"), true);
  compile->add_option("--mode", args.mode, "solvability mode (Z|N)");
  compile->add_option("--c-max", args.c_max, "search cap for c");
  compile->add_option("--order", args.order, "term order (grevlex|lex)");

  CLI::App* verify = add_common(app.add_subcommand("verify", "bounded equivalence check"), true);
  verify->add_option("--instance", instance_path, "verify a compiled instance file");
  verify->add_option("--bound", args.bound, "search box bound B");
  verify->add_option("--mode", args.mode, "solvability mode (Z|N)");
  verify->add_option("--c-max", args.c_max, "search cap for c");
  verify->add_option("--order", args.order, "term order (grevlex|lex)");
  verify->add_option("--eval-cap", args.eval_cap, "evaluation budget for box searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (smooth->parsed()) return run_smooth(args);
  if (homog->parsed()) return run_homog(args, hom_var);
  if (app.get_subcommand("foursq")->parsed()) return run_foursq(args);
  if (lattice->parsed()) return run_lattice_s(args, n);
  if (stab->parsed()) return run_stab_check(args, n);
  if (ecmul->parsed()) return run_ec_mul(args, k, point);
  if (compile->parsed()) return run_compile(args);
  if (verify->parsed()) return run_verify(args, instance_path);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ResourceCap:
      case ErrorKind::CSearchExhausted:
        return 3;
      case ErrorKind::EquivalenceViolation:
      case ErrorKind::PropertyViolation:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
