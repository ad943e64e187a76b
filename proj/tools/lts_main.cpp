#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lts/catalog.hpp"
#include "lts/classify.hpp"
#include "lts/embedding.hpp"
#include "lts/errors.hpp"
#include "lts/fingerprint.hpp"
#include "lts/io.hpp"

namespace {

using namespace lts;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kNegative = 2;
constexpr int kUnknown = 3;

struct Output {
  std::string text;
  int code = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TripleSystem load_lts(const std::string& path) { return io::parse_lts(read_file(path)); }

std::string rows_text(const std::vector<Vector>& rows) {
  std::string out;
  for (const auto& r : rows) out += to_string(r) + "\n";
  return out;
}

Output cmd_check(const std::string& path) {
  const auto v = check_axioms(load_lts(path));
  if (!v) return {"valid\n"};
  return {v->describe() + "\nresidual: " + to_string(v->residual) + "\n", kNegative};
}

Output cmd_embed(const std::string& path) {
  const StandardEmbedding e = standard_embedding(load_lts(path));
  return {io::serialize_lie({e.algebra, e.grading})};
}

Output cmd_series(const std::string& path) {
  const TripleSystem t = load_lts(path);
  const DerivedSeries s = derived_series(t, Subspace::full(t.dim()));
  std::string dims = "dims:";
  for (std::size_t d : s.dims()) dims += " " + std::to_string(d);
  return {dims + "\nsolvable: " + (s.solvable ? "yes" : "no") + "\n"};
}

Output cmd_radical(const std::string& path) { return {rows_text(lts_radical(load_lts(path)).basis_vectors())}; }

Output cmd_fingerprint(const std::string& path) { return {to_string(fingerprint(load_lts(path)))}; }

Output cmd_classify(const std::string& path) {
  const auto labels = classify(load_lts(path));
  if (labels.empty()) return {"no match\n", kNegative};
  std::string out;
  for (const auto& l : labels) out += l + "\n";
  return {out};
}

Output cmd_iso(const std::string& a, const std::string& b, std::size_t budget) {
  const IsoResult r = isomorphic(load_lts(a), load_lts(b), budget);
  switch (r.verdict) {
    case IsoVerdict::Isomorphic:
      return {"isomorphic\n" + to_string(*r.witness)};
    case IsoVerdict::NonIsomorphic:
      return {"non-isomorphic separator=" + *r.separator + "\n", kNegative};
    case IsoVerdict::Unknown:
      break;
  }
  return {"unknown\n", kUnknown};
}

Output cmd_catalog(bool list, const std::string& dump) {
  if (list) {
    std::string out;
    for (const auto& e : catalog::all_entries()) out += e.label + "\n";
    return {out};
  }
  const auto* e = catalog::find(dump);
  if (!e) throw CLI::ValidationError("--dump", "unknown catalog label '" + dump + "'");
  return {io::serialize_lts(e->system)};
}

Output cmd_lie_check(const std::string& path) {
  const io::LieFile f = io::parse_lie(read_file(path));
  if (auto v = check_jacobi(f.algebra)) return {v->describe() + "\nresidual: " + to_string(v->residual) + "\n", kNegative};
  if (f.grading)
    if (auto v = check_grading(f.algebra, *f.grading)) return {v->describe() + "\n", kNegative};
  return {"valid\n"};
}

Output cmd_lie_to_lts(const std::string& path) {
  const io::LieFile f = io::parse_lie(read_file(path));
  if (!f.grading) throw InvalidGrading("GRADE line required");
  return {io::serialize_lts(lie_to_lts(f.algebra, *f.grading))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie triple system toolkit"};
  app.require_subcommand(1);
  std::string out_path;
  std::string path, path2, dump;
  std::size_t budget = 1000000;
  bool list = false;
  std::function<Output()> run;

  auto file_command = [&](const std::string& name, const std::string& help, Output (*fn)(const std::string&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("path", path, "input file")->required();
    sub->add_option("-o", out_path, "write output to PATH");
    sub->callback([&, fn] { run = [&, fn] { return fn(path); }; });
  };
  file_command("check", "verify the triple system identities", cmd_check);
  file_command("embed", "write the standard embedding as a LIE file", cmd_embed);
  file_command("series", "derived series dimensions", cmd_series);
  file_command("radical", "basis of the radical", cmd_radical);
  file_command("fingerprint", "invariant fingerprint", cmd_fingerprint);
  file_command("classify", "matching catalog labels", cmd_classify);
  file_command("lie-check", "verify Jacobi and the grading of a LIE file", cmd_lie_check);
  file_command("lie-to-lts", "odd part of a graded LIE file as a triple system", cmd_lie_to_lts);

  auto* iso = app.add_subcommand("iso", "isomorphism test with witness");
  iso->add_option("a", path, "first file")->required();
  iso->add_option("b", path2, "second file")->required();
  iso->add_option("--budget", budget, "maximum candidate rows tried")->capture_default_str();
  iso->add_option("-o", out_path, "write output to PATH");
  iso->callback([&] { run = [&] { return cmd_iso(path, path2, budget); }; });

  auto* cat = app.add_subcommand("catalog", "catalog access");
  auto* list_opt = cat->add_flag("--list", list, "print all labels");
  auto* dump_opt = cat->add_option("--dump", dump, "print the LTS file of LABEL");
  list_opt->excludes(dump_opt);
  cat->add_option("-o", out_path, "write output to PATH");
  cat->callback([&] {
    if (!list && dump.empty()) throw CLI::RequiredError("--list or --dump");
    run = [&] { return cmd_catalog(list, dump); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kFailure;
  }

  Output result;
  try {
    result = run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  if (out_path.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << result.text)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kFailure;
    }
  }
  return result.code;
}
