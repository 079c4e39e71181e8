#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "tricanon/canonicalizer.hpp"
#include "tricanon/error.hpp"
#include "tricanon/json_io.hpp"
#include "tricanon/oracle.hpp"
#include "tricanon/validation.hpp"

namespace tricanon::cli {

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

SpatialMatrix read_tensor(const std::string& path) {
  const json j = read_json(path);
  try {
    return tensor_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Field parse_field_flag(const std::string& s) {
  if (s == "q" || s == "Q") return Field::rationals();
  if (s.size() > 2 && (s.rfind("gf", 0) == 0 || s.rfind("GF", 0) == 0)) {
    std::int64_t p = 0;
    std::istringstream is(s.substr(2));
    if (is >> p && is.eof()) return Field::prime(p);
  }
  throw ParseError("unknown field \"" + s + "\" (expected q or gf<p>)");
}

Dims parse_dims_flag(const std::string& s) {
  std::istringstream is(s);
  std::size_t m = 0, n = 0, q = 0;
  char c1 = 0, c2 = 0;
  if (!(is >> m >> c1 >> n >> c2 >> q) || c1 != ',' || c2 != ',' || !is.eof())
    throw ParseError("dims must be given as m,n,q");
  return {m, n, q};
}

json label_json(const CanonicalLabel& label) {
  json j = {{"label", tag_name(label.tag)}};
  if (label.param) j["param"] = element_to_json(*label.param);
  return j;
}

struct Options {
  std::string input;
  std::string output;
  bool certificate = false;
  bool log = false;
  std::vector<std::string> files;
  std::string field = "gf3";
  std::string dims;
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 1;
};

void emit(const json& report, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << report.dump(2) << '\n';
    return;
  }
  std::ofstream file(opt.output);
  if (!file) throw ParseError("cannot write " + opt.output);
  file << report.dump(2) << '\n';
}

std::string single_input(const Options& opt) {
  if (!opt.input.empty() && !opt.files.empty()) throw ParseError("give the input once");
  if (!opt.input.empty()) return opt.input;
  if (opt.files.size() != 1) throw ParseError("expected exactly one input file");
  return opt.files.front();
}

int cmd_canon(const Options& opt, std::ostream& out) {
  const SpatialMatrix a = read_tensor(single_input(opt));
  const CanonResult r = canonicalize(a);
  json report = label_json(r.label);
  report["canonical"] = tensor_to_json(r.canonical);
  report["mode_ranks"] = mode_ranks_to_json(r.ranks);
  if (opt.certificate) report["certificate"] = certificate_to_json(r.cert);
  if (opt.log) report["log"] = log_to_json(r.log);
  emit(report, opt, out);
  return kOk;
}

int cmd_equiv(const Options& opt, std::ostream& out) {
  if (opt.files.size() != 2) throw ParseError("equiv expects two tensor files");
  const SpatialMatrix a = read_tensor(opt.files[0]);
  const SpatialMatrix b = read_tensor(opt.files[1]);
  if (!(a.field() == b.field()))
    throw FieldMismatch("tensors over " + a.field().name() + " and " + b.field().name());
  json report;
  if (!(a.dims() == b.dims())) {
    report = {{"equivalent", false}, {"reason", "dimension mismatch"}};
  } else {
    const CanonResult ra = canonicalize(a), rb = canonicalize(b);
    const bool same = ra.label == rb.label;
    report = {{"equivalent", same},
              {"reason", same ? "canonical labels agree: " + ra.label.to_string()
                              : "canonical labels differ: " + ra.label.to_string() + " vs " +
                                    rb.label.to_string()},
              {"labels", {label_json(ra.label), label_json(rb.label)}}};
  }
  emit(report, opt, out);
  return kOk;
}

int cmd_invariants(const Options& opt, std::ostream& out) {
  const SpatialMatrix a = read_tensor(single_input(opt));
  const ModeRanks ranks = mode_ranks(a);
  json report = {{"dims", {a.m(), a.n(), a.q()}},
                 {"mode_ranks", mode_ranks_to_json(ranks)},
                 {"regular", ranks.as_dims() == a.dims()}};
  if (a.q() == 2) {
    const auto slices = slices_mode3(a);
    report["pencil_min_rank"] = pencil_min_rank(slices[0], slices[1]);
  }
  emit(report, opt, out);
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  if (opt.files.size() != 3) throw ParseError("verify expects tensor, certificate and expected files");
  const SpatialMatrix a = read_tensor(opt.files[0]);
  json cert_json = read_json(opt.files[1]);
  if (cert_json.contains("certificate")) cert_json = cert_json.at("certificate");
  json expected_json = read_json(opt.files[2]);
  if (expected_json.contains("canonical")) expected_json = expected_json.at("canonical");
  const SpatialMatrix expected = [&] {
    try {
      return tensor_from_json(expected_json);
    } catch (const json::exception& e) {
      throw ParseError(opt.files[2] + ": " + e.what());
    }
  }();
  const EquivCertificate c = certificate_from_json(cert_json, a.field(), a.dims());
  if (!(expected.field() == a.field())) throw FieldMismatch("expected tensor over another field");
  bool valid = false;
  try {
    valid = verify_certificate(a, c, expected);
  } catch (const ShapeMismatch&) {
    valid = false;
  }
  emit({{"valid", valid}}, opt, out);
  return valid ? kOk : kFailure;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const Field field = parse_field_flag(opt.field);
  if (opt.dims.empty()) throw ParseError("classify needs --dims m,n,q");
  const Dims dims = parse_dims_flag(opt.dims);
  const Classification cls = classify_all(field, dims, opt.budget, opt.threads);
  const CrossCheck check = cross_check_canonical_map(cls);

  json classes = json::array();
  for (std::size_t c = 0; c < cls.classes.size(); ++c) {
    json entry = {{"representative", tensor_to_json(cls.classes[c].representative)},
                  {"orbit_size", cls.classes[c].size}};
    if (check.class_labels[c]) {
      entry["canonical_label"] = label_json(*check.class_labels[c]);
    } else {
      entry["canonical_label"] = nullptr;
    }
    classes.push_back(std::move(entry));
  }
  std::uint64_t covered = 0;
  for (const auto& c : cls.classes) covered += c.size;
  json report = {{"field", field_to_json(field)},
                 {"dims", {dims.m, dims.n, dims.q}},
                 {"classes", std::move(classes)},
                 {"totals", {{"classes", cls.classes.size()}, {"tensors", covered}}},
                 {"theorem_validated", check.validated() && covered == cls.total},
                 {"unsupported_classes", check.unsupported_classes}};
  if (!check.failures.empty()) report["failures"] = check.failures;
  emit(report, opt, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical forms and equivalence of m x n x q spatial matrices", "tricanon"};
  app.require_subcommand(1);
  Options opt;

  auto* canon = app.add_subcommand("canon", "Canonical form of a tensor");
  canon->add_option("-i,--input", opt.input, "Tensor JSON file");
  canon->add_option("file", opt.files, "Tensor JSON file");
  canon->add_flag("--certificate", opt.certificate, "Include the certificate (R, S, T)");
  canon->add_flag("--log", opt.log, "Include the reduction log");
  canon->add_option("-o,--output", opt.output, "Write the report to a file");

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two tensors");
  equiv->add_option("files", opt.files, "Two tensor JSON files")->expected(2);
  equiv->add_option("-o,--output", opt.output, "Write the report to a file");

  auto* invariants = app.add_subcommand("invariants", "Mode ranks and pencil minimum rank");
  invariants->add_option("-i,--input", opt.input, "Tensor JSON file");
  invariants->add_option("file", opt.files, "Tensor JSON file");
  invariants->add_option("-o,--output", opt.output, "Write the report to a file");

  auto* verify = app.add_subcommand("verify", "Check a certificate");
  verify->add_option("files", opt.files, "Tensor, certificate and expected tensor files")->expected(3);
  verify->add_option("-o,--output", opt.output, "Write the report to a file");

  auto* classify = app.add_subcommand("classify", "Exhaustive orbit classification over GF(p)");
  classify->add_option("--field", opt.field, "Field: gf<p>")->capture_default_str();
  classify->add_option("--dims", opt.dims, "Dimensions m,n,q")->required();
  classify->add_option("--budget", opt.budget, "Maximum number of tensors")->capture_default_str();
  classify->add_option("--threads", opt.threads, "Worker threads")->capture_default_str();
  classify->add_option("-o,--output", opt.output, "Write the report to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*canon) return cmd_canon(opt, out);
    if (*equiv) return cmd_equiv(opt, out);
    if (*invariants) return cmd_invariants(opt, out);
    if (*verify) return cmd_verify(opt, out);
    return cmd_classify(opt, out);
  } catch (const CharacteristicTwo& e) {
    err << "error: " << e.what() << '\n';
    return kCharacteristicTwo;
  } catch (const UnsupportedRanks& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupportedRanks;
  } catch (const FieldMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kFieldMismatch;
  } catch (const SingularCertificate& e) {
    err << "error: " << e.what() << '\n';
    return kSingularCertificate;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidField& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const UnsupportedField& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const ShapeMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace tricanon::cli
