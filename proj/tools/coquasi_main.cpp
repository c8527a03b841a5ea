// coquasi: structure-constant checker for dual quasi-Hopf algebras.
//
// Subcommands: check, integrals, grouplike, antipode, verify-theorem,
// eval, example. Reports go to stdout, diagnostics to stderr; exit code 0
// means every check passed, 1 means a check failed (witness printed), 2
// means the input or usage was invalid.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coquasi/builders.hpp"
#include "coquasi/checks.hpp"
#include "coquasi/integrals.hpp"
#include "coquasi/io.hpp"
#include "coquasi/pipeline.hpp"
#include "coquasi/sweedler.hpp"

namespace {

using namespace coquasi;

int report_exit(const Report& rep) {
  std::cout << rep.to_string();
  return rep.ok() ? 0 : 1;
}

FieldSpec field_from_args(const std::vector<std::string>& args) {
  if (args.size() == 1 && args[0] == "Q") return FieldSpec::rationals();
  if (args.size() == 2 && args[0] == "Fp") return FieldSpec::prime_field(std::stoull(args[1]));
  throw Error("expected --field Q or --field Fp <p>");
}

std::string format_grouplike(const AlgebraInstance& H, const SparseTensor& a) {
  if (a.term_count() == 1 && a.entries().begin()->second.is_one())
    return H.basis[a.entries().begin()->first[0]];
  return format_tensor(H, a);
}

int cmd_check(const std::string& path, const std::string& level) {
  AlgebraInstance H = load_instance(path);
  Report rep;
  if (level == "coalgebra")
    rep = check_coalgebra(H);
  else if (level == "bialgebra")
    rep = check_dual_quasi_bialgebra(H);
  else
    rep = check_dual_quasi_hopf(H);
  return report_exit(rep);
}

int cmd_integrals(const std::string& path) {
  AlgebraInstance H = load_instance(path);
  Report pre = check_coalgebra(H);
  if (!pre.ok()) return report_exit(pre);
  auto show = [&](const char* side, const std::vector<SparseTensor>& basis) {
    if (basis.empty()) {
      std::cout << side << ": (none)\n";
      return;
    }
    for (const auto& T : basis) std::cout << side << ": " << format_tensor(H, T) << '\n';
  };
  show("left", left_integrals(H));
  show("right", right_integrals(H));
  return 0;
}

int cmd_grouplike(const std::string& path) {
  AlgebraInstance H = load_instance(path);
  Report pre = check_coalgebra(H);
  if (!pre.ok()) return report_exit(pre);
  auto left = left_integrals(H);
  if (left.size() != 1) {
    Report rep;
    rep.fail("integral-left-dim1", {Key{}, "dim " + std::to_string(left.size()), "dim 1"});
    return report_exit(rep);
  }
  Report ideal = check_ideal_property(H, left[0]);
  if (!ideal.ok()) return report_exit(ideal);
  SparseTensor a = distinguished_grouplike(H, left[0]);
  std::cout << "a = " << format_grouplike(H, a) << '\n';
  return 0;
}

int cmd_antipode(const std::string& path) {
  AlgebraInstance H = load_instance(path);
  AntipodeStatus st = antipode_status(H);  // throws MissingAntipodeData -> exit 2
  std::cout << "injective: " << (st.injective ? "yes" : "no") << '\n';
  std::cout << "surjective: " << (st.surjective ? "yes" : "no") << '\n';
  if (st.order)
    std::cout << "order: " << *st.order << '\n';
  else
    std::cout << "order: none\n";
  return st.injective && st.surjective ? 0 : 1;
}

int cmd_verify(const std::string& path) {
  AlgebraInstance H = load_instance(path);
  return report_exit(verify_theorem(H));
}

void merge_bind_file(Binding& b, const AlgebraInstance& H, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open bindings file '" + path + "'");
  std::string line;
  int lineno = 0;
  std::string current;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "functional") {
      std::string name;
      std::size_t arity = 0;
      if (!(ls >> name >> arity) || arity == 0 || arity > 3)
        throw SyntaxError(lineno, 1, "expected 'functional <name> <arity 1..3>'");
      b.functionals[name] =
          SparseTensor(Variance::Functional, H.field, std::vector<Index>(arity, H.dim));
      current = name;
    } else if (kw == "entry") {
      if (current.empty()) throw SyntaxError(lineno, 1, "'entry' before any 'functional'");
      std::string term;
      while (ls >> term) {
        auto colon = term.find(':');
        if (colon == std::string::npos)
          throw SyntaxError(lineno, 1, "expected labels:scalar, got '" + term + "'");
        Key key;
        std::string labels = term.substr(0, colon);
        std::size_t start = 0;
        while (start <= labels.size()) {
          auto comma = labels.find(',', start);
          std::string l = labels.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
          auto idx = H.label_index(l);
          if (!idx) throw UnknownBasisLabel(l);
          key.push_back(*idx);
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        b.functionals[current].add(key, Scalar::parse(H.field, term.substr(colon + 1)));
      }
    } else {
      throw SyntaxError(lineno, 1, "unknown bindings keyword '" + kw + "'");
    }
  }
}

int cmd_eval(const std::string& path, const std::string& identity_text, const std::string& bind,
             bool corpus) {
  AlgebraInstance H = load_instance(path);
  Binding b = default_binding(H);
  if (!bind.empty()) merge_bind_file(b, H, bind);

  Report rep;
  if (corpus) {
    for (const auto& [name, id] : builtin_corpus())
      rep.append(evaluate_identity(id, H, b, name));
  } else {
    // a corpus name selects the builtin identity, anything else parses as text
    const SweedlerIdentity* found = nullptr;
    for (const auto& [name, id] : builtin_corpus())
      if (name == identity_text) found = &id;
    if (found)
      rep = evaluate_identity(*found, H, b, identity_text);
    else
      rep = evaluate_identity(parse_identity(identity_text), H, b, "identity");
  }
  return report_exit(rep);
}

int cmd_example(const std::string& name, unsigned n, const std::string& zeta,
                const std::vector<std::string>& field_args, const std::string& out) {
  FieldSpec f = field_from_args(field_args);
  AlgebraInstance H;
  if (name == "group") {
    H = group_algebra(n, f);
  } else if (name == "twist") {
    if (zeta.empty()) throw Error("twist requires --zeta");
    H = twisted_group_algebra(CyclicGroupSpec(n, f, Scalar::parse(f, zeta)));
  } else if (name == "h4") {
    H = sweedler_h4(f);
  } else {
    throw Error("unknown example '" + name + "' (expected group, twist or h4)");
  }
  if (out.empty())
    std::cout << serialize_instance(H);
  else
    write_instance(H, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checker for dual quasi-Hopf algebras given by structure constants"};
  app.require_subcommand(1);

  std::size_t ceiling = 0;
  app.add_option("--ceiling", ceiling, "term-count ceiling for sparse expansions");

  std::string file, level = "hopf", identity, bind, example_name, zeta, out;
  bool corpus = false;
  unsigned n = 2;
  std::vector<std::string> field_args{"Q"};

  auto* check = app.add_subcommand("check", "run the axiom checkers on an instance file");
  check->add_option("file", file)->required();
  check->add_option("--level", level, "coalgebra, bialgebra or hopf (default)")
      ->check(CLI::IsMember({"coalgebra", "bialgebra", "hopf"}));

  auto* integrals = app.add_subcommand("integrals", "print bases of the left/right integrals");
  integrals->add_option("file", file)->required();

  auto* grouplike = app.add_subcommand("grouplike", "print the distinguished grouplike");
  grouplike->add_option("file", file)->required();

  auto* antipode = app.add_subcommand("antipode", "print antipode rank data and order");
  antipode->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify-theorem", "run the full nine-stage verification");
  verify->add_option("file", file)->required();

  auto* eval = app.add_subcommand("eval", "evaluate a Sweedler identity exhaustively");
  eval->add_option("file", file)->required();
  eval->add_option("--identity", identity, "identity text, or a builtin name like e3");
  eval->add_flag("--corpus", corpus, "evaluate all builtin identities");
  eval->add_option("--bind", bind, "extra functional bindings file");

  auto* example = app.add_subcommand("example", "generate an instance file");
  example->add_option("name", example_name, "group, twist or h4")->required();
  example->add_option("--n", n, "cyclic group order");
  example->add_option("--zeta", zeta, "root of unity for the twist");
  example->add_option("--field", field_args, "Q, or Fp <p>")->expected(1, 2);
  example->add_option("--out", out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (ceiling > 0) coquasi::set_term_ceiling(ceiling);

  try {
    if (app.got_subcommand(check)) return cmd_check(file, level);
    if (app.got_subcommand(integrals)) return cmd_integrals(file);
    if (app.got_subcommand(grouplike)) return cmd_grouplike(file);
    if (app.got_subcommand(antipode)) return cmd_antipode(file);
    if (app.got_subcommand(verify)) return cmd_verify(file);
    if (app.got_subcommand(eval)) {
      if (!corpus && identity.empty()) {
        std::cerr << "eval needs --identity or --corpus\n";
        return 2;
      }
      return cmd_eval(file, identity, bind, corpus);
    }
    if (app.got_subcommand(example)) return cmd_example(example_name, n, zeta, field_args, out);
  } catch (const coquasi::ChecksFailed& e) {
    std::cerr << e.what() << '\n' << e.report.to_string();
    return 2;
  } catch (const coquasi::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
