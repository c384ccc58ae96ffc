// sapb: certify, border and realize sign patterns from the command line.
//
// Matrix and pattern arguments are file paths, "-" for stdin, or "@NAME" for
// a catalog entry. Indices on the command line are 1-based.

#include "sap/border.hpp"
#include "sap/certify.hpp"
#include "sap/families.hpp"
#include "sap/inertia.hpp"
#include "sap/matrix.hpp"
#include "sap/pattern.hpp"
#include "sap/spectra.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sap;
using nlohmann::json;

enum Status : int {
  kOk = 0,
  kNotCertified = 1,
  kParseError = 2,
  kPrecondition = 3,
  kNonConvergence = 4,
};

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

RationalMatrix load_matrix(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return seed(arg.substr(1)).realization;
  return parse_matrix(read_source(arg));
}

SignPattern load_pattern(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return seed(arg.substr(1)).pattern;
  const std::string text = read_source(arg);
  // A rational matrix file stands for its sign pattern.
  try {
    return parse_pattern(text);
  } catch (const ParseError&) {
    return sign_of(parse_matrix(text));
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_rational(part));
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw ParseError("bad number '" + part + "'");
    }
    while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
    if (used != part.size()) throw ParseError("bad number '" + part + "'");
    out.push_back(v);
  }
  return out;
}

std::size_t zero_based(std::size_t one_based, const char* name) {
  if (one_based == 0) throw ParseError(std::string("--") + name + " is 1-based");
  return one_based - 1;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Output {
  bool as_json = false;
  json doc = json::object();
  std::ostringstream text;

  void emit() const {
    if (as_json) {
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << text.str();
    }
  }
};

void note_catalog(Output& out, const RationalMatrix& a) {
  const auto name = catalog_match(a);
  out.doc["catalog_match"] = name ? json(*name) : json(nullptr);
  if (name) out.text << "# catalog: " << *name << '\n';
}

void note_catalog(Output& out, const SignPattern& p) {
  const auto name = catalog_match(p);
  out.doc["catalog_match"] = name ? json(*name) : json(nullptr);
  if (name) out.text << "# catalog: " << *name << '\n';
}

void describe(std::ostringstream& os, const Certification& c) {
  os << "# nilpotent: " << yes_no(c.nilpotent) << '\n'
     << "# jacobian rank: " << c.jacobian_rank << " of " << c.realization.rows() << '\n'
     << "# spectrally arbitrary certified: " << yes_no(c.certifies_spectrally_arbitrary()) << '\n';
  if (c.certifies_spectrally_arbitrary())
    os << "# irreducible: " << yes_no(c.irreducible_check) << ", nonderogatory: " << yes_no(c.nonderogatory_check)
       << '\n';
}

std::string describe(const RefinedInertia& r) {
  std::ostringstream os;
  os << '(' << r.n_plus << ',' << r.n_minus << ',' << r.zero_mult << ',' << r.imag_pairs_count << ')';
  return os.str();
}

VariablePlacement placement_or_default(const RationalMatrix& a, const std::string& spec) {
  return spec.empty() ? all_nonzero_placement(a) : parse_placement(spec);
}

struct CommonOptions {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

// certify ------------------------------------------------------------------

struct CertifyArgs {
  std::string matrix;
  std::string placement;
};

int run_certify(const CertifyArgs& args, const CommonOptions& common) {
  Output out{common.json()};
  const auto a = load_matrix(args.matrix);
  note_catalog(out, a);
  const auto cert = certify_nilpotent_jacobian(a, placement_or_default(a, args.placement));
  out.doc["certification"] = to_json(cert);
  describe(out.text, cert);
  out.text << format_pattern(cert.pattern);
  out.emit();
  return cert.certifies_spectrally_arbitrary() ? kOk : kNotCertified;
}

// border -------------------------------------------------------------------

struct BorderArgs {
  std::string matrix;
  bool equal = false, unequal = false, general = false;
  std::size_t j = 0, k = 0, v = 0;
  std::string b = "1";
  std::string x, z;
  std::size_t count = 1;
  bool allow_cancellation = false;
};

int run_border(const BorderArgs& args, const CommonOptions& common) {
  Output out{common.json()};
  const auto a = load_matrix(args.matrix);
  note_catalog(out, a);
  const int modes = int(args.equal) + int(args.unequal) + int(args.general);
  if (modes != 1) throw ParseError("choose exactly one of --equal, --unequal, --general");

  if (args.general) {
    const auto x = parse_rational_list(args.x), z = parse_rational_list(args.z);
    const auto step = BorderStep::general(x, z);
    const auto b = apply_step(a, step);
    const auto cert = certify_nilpotent_jacobian(b);
    const auto cancel = last_row_cancellations(a, step, b);
    out.doc["step"] = to_json(step);
    out.doc["matrix"] = to_json(b);
    out.doc["pattern"] = to_json(sign_of(b));
    out.doc["cancellations"] = json::array();
    for (auto c : cancel) out.doc["cancellations"].push_back(c + 1);
    out.doc["certification"] = to_json(cert);
    describe(out.text, cert);
    for (auto c : cancel) out.text << "# cancellation in last row, column " << c + 1 << '\n';
    out.text << format_matrix(b);
    out.emit();
    return cert.certifies_spectrally_arbitrary() ? kOk : kNotCertified;
  }

  const std::size_t k = zero_based(args.k, "k");
  std::optional<std::size_t> v;
  if (args.v) v = zero_based(args.v, "v");
  BorderStep step = args.equal ? BorderStep::equal_index(k, v)
                               : BorderStep::unequal_index(zero_based(args.j, "j"), k, parse_rational(args.b), v);

  RationalMatrix b;
  if (v) {
    BorderOptions opts;
    opts.cancellation_is_error = !args.allow_cancellation;
    const auto res = recursive_border(a, step, args.count, opts);
    b = res.matrix;
    out.doc["provenance"] = to_json(res.provenance);
    for (const auto& round : res.provenance.rounds)
      out.text << "# round at order " << round.order << ": hypotheses hold, det B(n+1,v) = " << to_string(round.det_minor_after)
               << '\n';
  } else {
    if (args.count != 1) throw ParseError("--count needs --v (hypotheses are checked every round)");
    b = apply_step(a, step);
    out.doc["step"] = to_json(step);
    out.text << "# hypotheses not checked (no --v)\n";
  }
  const auto cert = certify_nilpotent_jacobian(b);
  out.doc["matrix"] = to_json(b);
  out.doc["pattern"] = to_json(sign_of(b));
  out.doc["certification"] = to_json(cert);
  describe(out.text, cert);
  out.text << format_matrix(b);
  out.emit();
  return cert.certifies_spectrally_arbitrary() ? kOk : kNotCertified;
}

// family -------------------------------------------------------------------

struct FamilyArgs {
  std::string name;
  std::size_t n = 4;
  bool matrix = false;
};

int run_family(const FamilyArgs& args, const CommonOptions& common) {
  Output out{common.json()};
  FamilyMember m;
  if (args.name == "Bn") {
    m = gen_bn(args.n);
  } else if (args.name == "Kn") {
    m = gen_kn(args.n);
  } else {
    throw ParseError("unknown family '" + args.name + "' (expected Bn or Kn)");
  }
  const auto& cert = *m.provenance.final_certification;
  out.doc["family"] = args.name;
  out.doc["n"] = args.n;
  out.doc["pattern"] = to_json(m.pattern);
  out.doc["matrix"] = to_json(m.realization);
  out.doc["nonzeros"] = m.pattern.nonzero_count();
  out.doc["provenance"] = to_json(m.provenance);
  out.doc["certification"] = to_json(cert);
  out.text << (args.matrix ? format_matrix(m.realization) : format_pattern(m.pattern));
  out.emit();
  return cert.certifies_spectrally_arbitrary() ? kOk : kNotCertified;
}

// inertia ------------------------------------------------------------------

struct InertiaArgs {
  std::string matrix;
  std::string placement;
  double tol = kDefaultInertiaTolerance;
  bool certify = false;
  bool equal = false, unequal = false;
  std::size_t j = 0, k = 0, v = 0;
  std::string b = "1";
};

int run_inertia(const InertiaArgs& args, const CommonOptions& common) {
  Output out{common.json()};
  const auto a = load_matrix(args.matrix);
  note_catalog(out, a);
  if (args.equal && args.unequal) throw ParseError("--equal and --unequal are exclusive");

  if (args.equal || args.unequal) {
    const auto placement = placement_or_default(a, args.placement);
    const std::size_t k = zero_based(args.k, "k"), v = zero_based(args.v, "v");
    const auto res = args.equal ? inertial_equal_index_border(a, k, v, placement, args.tol)
                                : inertial_unequal_index_border(a, zero_based(args.j, "j"), k, parse_rational(args.b),
                                                                v, placement, args.tol);
    out.doc["result"] = to_json(res);
    out.text << "# refined inertia before: " << describe(res.before.inertia.refined_inertia) << '\n'
             << "# refined inertia after: " << describe(res.after.inertia.refined_inertia) << " (expected "
             << describe(res.expected) << ")\n"
             << "# inertially arbitrary certified: " << yes_no(res.conclusion_holds) << '\n'
             << format_matrix(res.matrix);
    out.emit();
    return res.conclusion_holds ? kOk : kNotCertified;
  }

  if (args.certify || !args.placement.empty()) {
    const auto rep = certify_inertia_jacobian(a, placement_or_default(a, args.placement), args.tol);
    out.doc["report"] = to_json(rep);
    out.text << "refined inertia: " << describe(rep.inertia.refined_inertia)
             << (rep.inertia.imaginary_exact ? " exact" : " numeric") << '\n'
             << "jacobian rank: " << rep.certification.jacobian_rank << " of " << a.rows() << '\n'
             << "inertially arbitrary certified: " << yes_no(rep.hypothesis_satisfied) << '\n';
    out.emit();
    return rep.hypothesis_satisfied ? kOk : kNotCertified;
  }

  const auto ri = refined_inertia(a, args.tol);
  out.doc["inertia"] = to_json(ri);
  out.text << "refined inertia: " << describe(ri.refined_inertia) << (ri.imaginary_exact ? " exact" : " numeric")
           << '\n';
  out.emit();
  return kOk;
}

// realize ------------------------------------------------------------------

struct RealizeArgs {
  std::string matrix;
  std::string pattern;
  std::string placement;
  std::string target;
  bool random = false;
  unsigned seed = 0;
  double tol = 1e-10;
  int max_iters = 100;
};

int run_realize(const RealizeArgs& args, const CommonOptions& common) {
  Output out{common.json()};
  const auto a = load_matrix(args.matrix);
  note_catalog(out, a);
  const auto pattern = args.pattern.empty() ? sign_of(a) : load_pattern(args.pattern);
  std::vector<double> target;
  if (args.random == !args.target.empty()) throw ParseError("give exactly one of --target and --random");
  if (args.random) {
    std::mt19937 gen(args.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t i = 0; i < a.rows(); ++i) target.push_back(u(gen));
  } else {
    target = parse_double_list(args.target);
  }
  RealizeOptions opts;
  opts.tol = args.tol;
  opts.max_iters = args.max_iters;
  const auto r = realize_polynomial(pattern, a, placement_or_default(a, args.placement), target, opts);
  out.doc["target"] = target;
  out.doc["result"] = to_json(r);
  out.text.precision(17);
  out.text << "# residual " << r.residual << " after " << r.iterations << " iterations"
           << (r.used_homotopy ? " (homotopy)" : "") << '\n';
  for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < r.matrix.cols(); ++j) out.text << (j ? " " : "") << r.matrix(i, j);
    out.text << '\n';
  }
  out.emit();
  return kOk;
}

// equiv --------------------------------------------------------------------

struct EquivArgs {
  std::string p, q;
  bool superpattern = false;
};

int run_equiv(const EquivArgs& args, const CommonOptions& common) {
  Output out{common.json()};
  const auto p = load_pattern(args.p), q = load_pattern(args.q);
  const auto w = args.superpattern ? superpattern_of_equivalent(p, q) : equivalent(p, q);
  out.doc["relation"] = args.superpattern ? "superpattern_of_equivalent" : "equivalent";
  out.doc["found"] = w.has_value();
  out.doc["witness"] = w ? to_json(*w) : json(nullptr);
  if (w) {
    out.text << "witness: " << (w->negate ? "negate " : "") << (w->transpose ? "transpose " : "") << "permutation";
    for (auto i : w->permutation) out.text << ' ' << i + 1;
    out.text << " signature";
    for (auto s : w->signature) out.text << ' ' << (s > 0 ? '+' : '-');
    out.text << '\n';
  } else {
    out.text << "no witness\n";
  }
  out.emit();
  return w ? kOk : kNotCertified;
}

// catalog ------------------------------------------------------------------

int run_catalog(const std::string& name, const CommonOptions& common) {
  Output out{common.json()};
  const auto entry_json = [](const SeedEntry& e) {
    return json{{"name", e.name},
                {"pattern", to_json(e.pattern)},
                {"matrix", to_json(e.realization)},
                {"placement", to_json(e.placement)},
                {"kind", e.kind == SeedKind::Nilpotent ? "nilpotent" : "refined_inertia"},
                {"note", e.note}};
  };
  if (!name.empty()) {
    const auto& e = seed(name);
    out.doc = entry_json(e);
    out.text << "# " << e.name << (e.note.empty() ? "" : ": " + e.note) << '\n' << format_matrix(e.realization);
  } else {
    out.doc = json::array();
    for (const auto& e : seed_catalog()) {
      out.doc.push_back(entry_json(e));
      out.text << e.name << '\t' << e.realization.rows() << '\t'
               << (e.kind == SeedKind::Nilpotent ? "nilpotent" : "refined inertia") << '\n';
    }
  }
  out.emit();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign pattern certification and bordering"};
  app.require_subcommand(1);
  CommonOptions common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  CertifyArgs certify;
  auto* c = app.add_subcommand("certify", "Nilpotent-Jacobian certification");
  c->add_option("matrix", certify.matrix)->required();
  c->add_option("--placement", certify.placement, "Variable positions i,j;i,j (default: all nonzeros)");

  BorderArgs border;
  auto* b = app.add_subcommand("border", "Border a matrix to the next order");
  b->add_option("matrix", border.matrix)->required();
  b->add_flag("--equal", border.equal, "x = a_kk e_k, z = e_k");
  b->add_flag("--unequal", border.unequal, "x = b e_k, z = e_j");
  b->add_flag("--general", border.general, "Explicit x and z");
  b->add_option("--j", border.j);
  b->add_option("--k", border.k);
  b->add_option("--v", border.v, "Hypothesis column; enables checks and --count");
  b->add_option("--b", border.b);
  b->add_option("--x", border.x, "Comma-separated rationals");
  b->add_option("--z", border.z, "Comma-separated rationals");
  b->add_option("--count", border.count, "Number of recursive rounds")->check(CLI::NonNegativeNumber);
  b->add_flag("--allow-cancellation", border.allow_cancellation);

  FamilyArgs family;
  auto* f = app.add_subcommand("family", "Generate B_n or K_n");
  f->add_option("--name", family.name, "Bn or Kn")->required();
  f->add_option("--n", family.n)->required();
  f->add_flag("--matrix", family.matrix, "Print the realization instead of the pattern");

  InertiaArgs inertia;
  auto* in = app.add_subcommand("inertia", "Refined inertia and inertial bordering");
  in->add_option("matrix", inertia.matrix)->required();
  in->add_option("--placement", inertia.placement);
  in->add_option("--tol", inertia.tol)->check(CLI::PositiveNumber);
  in->add_flag("--certify", inertia.certify, "Check the refined-inertia Jacobian hypothesis");
  in->add_flag("--equal", inertia.equal);
  in->add_flag("--unequal", inertia.unequal);
  in->add_option("--j", inertia.j);
  in->add_option("--k", inertia.k);
  in->add_option("--v", inertia.v);
  in->add_option("--b", inertia.b);

  RealizeArgs realize;
  auto* r = app.add_subcommand("realize", "Realize a target characteristic polynomial");
  r->add_option("matrix", realize.matrix, "Certified seed realization")->required();
  r->add_option("--pattern", realize.pattern, "Pattern to stay in (default: sign of the seed)");
  r->add_option("--placement", realize.placement);
  r->add_option("--target", realize.target, "f_1,...,f_n");
  r->add_flag("--random", realize.random, "Uniform target coefficients in [-1, 1]");
  r->add_option("--seed", realize.seed, "RNG seed for --random");
  r->add_option("--tol", realize.tol)->check(CLI::PositiveNumber);
  r->add_option("--max-iters", realize.max_iters)->check(CLI::PositiveNumber);

  EquivArgs equiv;
  auto* e = app.add_subcommand("equiv", "Search for an equivalence witness");
  e->add_option("p", equiv.p)->required();
  e->add_option("q", equiv.q)->required();
  e->add_flag("--superpattern", equiv.superpattern, "Find T with p a superpattern of T(q)");

  std::string catalog_name;
  auto* cat = app.add_subcommand("catalog", "List seed patterns");
  cat->add_option("--name", catalog_name);

  for (auto* sub : {c, b, f, in, r, e, cat})
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*c) return run_certify(certify, common);
    if (*b) return run_border(border, common);
    if (*f) return run_family(family, common);
    if (*in) return run_inertia(inertia, common);
    if (*r) return run_realize(realize, common);
    if (*e) return run_equiv(equiv, common);
    if (*cat) return run_catalog(catalog_name, common);
  } catch (const BorderPreconditionError& err) {
    std::cerr << "precondition failed: " << err.what() << '\n';
    return kPrecondition;
  } catch (const CapabilityError& err) {
    std::cerr << err.what() << '\n';
    return kPrecondition;
  } catch (const NonConvergenceError& err) {
    std::cerr << "no convergence: " << err.what() << '\n';
    return kNonConvergence;
  } catch (const OrthantError& err) {
    std::cerr << "no convergence: " << err.what() << '\n';
    return kNonConvergence;
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << '\n';
    return kParseError;
  } catch (const InvalidPlacement& err) {
    std::cerr << "invalid placement: " << err.what() << '\n';
    return kParseError;
  } catch (const DimensionError& err) {
    std::cerr << "dimension error: " << err.what() << '\n';
    return kParseError;
  } catch (const std::out_of_range& err) {
    std::cerr << err.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& err) {
    std::cerr << err.what() << '\n';
    return kPrecondition;
  }
  return kParseError;
}
