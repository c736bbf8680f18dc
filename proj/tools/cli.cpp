#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "latpack/latpack.hpp"

namespace latpack::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  int n = 0;
  std::string file;
  std::string out_path;
  std::string report = "text";
  int cap = 0;  // 0: library default
  std::string pairing = "canonical";
  std::uint64_t seed = 0;
  bool verify = true;
};

struct Outcome {
  RunReport report;
  std::optional<std::string> payload;  // written to --out when set
};

int cap_or(const Options& o, int fallback) { return o.cap > 0 ? o.cap : fallback; }

PairingOptions pairing_of(const Options& o) {
  return {o.pairing == "seeded" ? Pairing::Seeded : Pairing::Canonical, o.seed};
}

void settle(RunReport& r) {
  bool ok = r.distinct_lines == r.expected_lines;
  for (const auto& [name, passed] : r.checks) ok = ok && passed;
  r.verdict = ok ? "pass" : "fail";
}

void packing_checks(RunReport& r, std::span<const SquareMatrix> ms) {
  auto rep = verify_packing(ms);
  r.distinct_lines = rep.distinct_lines;
  r.checks["latin"] = rep.all_latin;
  r.checks["strongly_asymmetric"] = rep.all_strongly_asymmetric;
  r.checks["packing"] = rep.is_packing;
  r.violations = std::move(rep.violations);
}

bool preserves_pairs(const PermGroup& g) {
  for (const auto& f : g.elements())
    for (int k = 1; 2 * k <= f.degree(); ++k)
      if ((f(2 * k - 1) + 1) / 2 != (f(2 * k) + 1) / 2) return false;
  return true;
}

std::string corpus_text(const std::vector<SquareMatrix>& ms, const std::string& source) {
  return render_corpus(MatrixCorpus{ms, source});
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Outcome construction(const std::string& command, const Options& o, const PackingSet& set,
                     std::size_t expected, const std::function<void(RunReport&)>& extra = {}) {
  Outcome out;
  auto& r = out.report;
  r.command = command;
  r.matrix_count = set.matrices.size();
  r.expected_lines = expected;
  if (o.verify) {
    packing_checks(r, set.matrices);
    if (extra) extra(r);
    settle(r);
  } else {
    r.verdict = "unverified";
  }
  out.payload = corpus_text(set.matrices, command + " " + std::to_string(o.n));
  return out;
}

Outcome cmd_pack_odd(const Options& o) {
  const auto set = pack_odd(o.n, pairing_of(o), cap_or(o, kPackOddCap));
  return construction("pack-odd", o, set, factorial(o.n));
}

Outcome cmd_pack_even(const Options& o) {
  const auto set = pack_even(o.n, pairing_of(o), cap_or(o, kPackEvenCap));
  return construction("pack-even", o, set, factorial(o.n));
}

Outcome cmd_pack_subgroup(const Options& o) {
  const auto set = pack_even_subgroup(o.n, pairing_of(o), cap_or(o, kPackEvenCap));
  const int m = o.n / 2;
  return construction("pack-subgroup", o, set, factorial(m) << m, [&](RunReport& r) {
    const auto g = line_set(set.matrices);
    r.checks["group"] = g.is_closed();
    r.checks["pair_partition_preserving"] = preserves_pairs(g);
  });
}

Outcome cmd_pack_single(const Options& o) {
  const PackingSet set{o.n, {pack_single(o.n)}};
  return construction("pack-single", o, set, 4 * static_cast<std::size_t>(o.n),
                      [&](RunReport& r) { r.checks["group"] = lines_form_group(set).is_group; });
}

Outcome cmd_mols(const Options& o) {
  const auto set = mols_packed(o.n, cap_or(o, kMolsCap));
  return construction("mols", o, set, static_cast<std::size_t>(o.n) * static_cast<std::size_t>(o.n - 1),
                      [&](RunReport& r) {
                        r.checks["orthogonal"] = verify_mols(set.matrices);
                        r.checks["group"] = lines_form_group(set).is_group;
                      });
}

Outcome cmd_min_lines(const Options& o) {
  const auto m = min_lines_square(o.n);
  Outcome out;
  auto& r = out.report;
  r.command = "min-lines";
  r.matrix_count = 1;
  r.expected_lines = o.n % 2 == 1 ? 2 * static_cast<std::size_t>(o.n) : static_cast<std::size_t>(o.n);
  if (o.verify) {
    const auto sym = classify_symmetry(m);
    r.distinct_lines = sym.distinct_lines;
    r.checks["latin"] = is_latin(m);
    r.checks["symmetric"] = sym.symmetric;
    if (o.n % 2 == 0) {
      r.checks["centrosymmetric"] = sym.centrosymmetric;
      r.checks["hankel_symmetric"] = sym.hankel_symmetric;
    }
    settle(r);
  } else {
    r.verdict = "unverified";
  }
  out.payload = corpus_text({m}, "min-lines " + std::to_string(o.n));
  return out;
}

Outcome cmd_subgroup_4n(const Options& o) {
  const auto g = subgroup_4n(o.n);
  Outcome out;
  auto& r = out.report;
  r.command = "subgroup-4n";
  r.expected_lines = 4 * static_cast<std::size_t>(o.n);
  if (o.verify) {
    r.distinct_lines = g.order();
    r.checks["group"] = g.is_closed();
    settle(r);
  } else {
    r.verdict = "unverified";
  }
  std::string text;
  for (const auto& p : g.elements()) {
    for (int i = 1; i <= p.degree(); ++i) {
      if (i > 1) text += ' ';
      text += std::to_string(p(i));
    }
    text += '\n';
  }
  out.payload = std::move(text);
  return out;
}

Outcome cmd_enumerate(const Options& o) {
  Outcome out;
  auto& r = out.report;
  r.command = "enumerate";
  const int n = o.n;
  r.expected_lines = n == 1 ? 1 : (n % 2 == 1 ? 2 * static_cast<std::size_t>(n) : static_cast<std::size_t>(n));
  std::size_t min_seen = SIZE_MAX;
  bool bound = true, classification = true;
  std::vector<SquareMatrix> all;
  r.matrix_count = enumerate_latin_squares(
      n,
      [&](const SquareMatrix& m) {
        if (!o.out_path.empty()) all.push_back(m);
        if (!o.verify) return;
        const auto s = classify_symmetry(m);
        min_seen = std::min(min_seen, s.distinct_lines);
        if (s.distinct_lines < r.expected_lines) bound = false;
        if (n > 1 && n % 2 == 1 && (s.distinct_lines == r.expected_lines) != (s.symmetric || s.hankel_symmetric))
          classification = false;
        if (n % 2 == 0 && (s.distinct_lines == r.expected_lines) != (s.symmetric && s.hankel_symmetric))
          classification = false;
      },
      cap_or(o, kLatinSweepCap));
  if (o.verify) {
    r.distinct_lines = min_seen;
    r.checks["lower_bound"] = bound;
    r.checks["classification"] = classification;
    settle(r);
  } else {
    r.verdict = "unverified";
  }
  if (!o.out_path.empty()) out.payload = corpus_text(all, "enumerate " + std::to_string(n));
  return out;
}

Outcome cmd_verify(const Options& o) {
  const auto corpus = parse_corpus(read_input(o.file));
  Outcome out;
  auto& r = out.report;
  r.command = "verify";
  r.parameters["file"] = o.file;
  const auto rep = verify_packing(corpus.matrices);
  r.matrix_count = rep.matrix_count;
  r.expected_lines = rep.total_lines;
  packing_checks(r, corpus.matrices);
  settle(r);
  return out;
}

Outcome cmd_classify(const Options& o) {
  const auto corpus = parse_corpus(read_input(o.file));
  Outcome out;
  auto& r = out.report;
  r.command = "classify";
  r.parameters["file"] = o.file;
  r.matrix_count = corpus.matrices.size();
  bool coherent = true;
  for (const auto& m : corpus.matrices) {
    const auto s = classify_symmetry(m);
    const int flags = int(s.symmetric) + int(s.centrosymmetric) + int(s.hankel_symmetric);
    coherent = coherent && flags != 2;
    r.symmetry.push_back(s);
  }
  r.checks["flag_coherence"] = coherent;
  settle(r);
  return out;
}

ordered_json location_json(const LineLocation& l) {
  return ordered_json{{"matrix", l.matrix + 1}, {"kind", std::string(to_string(l.kind))}, {"index", l.index}};
}

}  // namespace

std::string to_json(const RunReport& r) {
  ordered_json j;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["matrix_count"] = r.matrix_count;
  j["distinct_lines"] = r.distinct_lines;
  j["expected_lines"] = r.expected_lines;
  j["verdict"] = r.verdict;
  j["elapsed_ms"] = r.elapsed_ms;
  j["checks"] = r.checks;
  auto violations = ordered_json::array();
  for (const auto& v : r.violations) {
    auto e = location_json(v.at);
    e["duplicate_of"] = location_json(v.duplicate_of);
    violations.push_back(std::move(e));
  }
  j["violations"] = std::move(violations);
  if (!r.symmetry.empty()) {
    auto ms = ordered_json::array();
    for (std::size_t k = 0; k < r.symmetry.size(); ++k) {
      const auto& s = r.symmetry[k];
      ms.push_back({{"matrix", k + 1},
                    {"symmetric", s.symmetric},
                    {"centrosymmetric", s.centrosymmetric},
                    {"hankel_symmetric", s.hankel_symmetric},
                    {"distinct_lines", s.distinct_lines}});
    }
    j["matrices"] = std::move(ms);
  }
  return j.dump(2) + "\n";
}

std::string to_text(const RunReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << '\n';
  for (const auto& [k, v] : r.parameters) os << "parameter " << k << ": " << v << '\n';
  os << "matrix_count: " << r.matrix_count << '\n'
     << "distinct_lines: " << r.distinct_lines << '\n'
     << "expected_lines: " << r.expected_lines << '\n';
  for (const auto& [k, v] : r.checks) os << "check " << k << ": " << (v ? "pass" : "fail") << '\n';
  for (std::size_t k = 0; k < r.symmetry.size(); ++k) {
    const auto& s = r.symmetry[k];
    os << "matrix " << k + 1 << ": symmetric=" << s.symmetric << " centrosymmetric=" << s.centrosymmetric
       << " hankel_symmetric=" << s.hankel_symmetric << " distinct_lines=" << s.distinct_lines << '\n';
  }
  for (const auto& v : r.violations) {
    os << "violation: matrix " << v.at.matrix + 1 << ' ' << to_string(v.at.kind) << ' ' << v.at.index
       << " duplicates matrix " << v.duplicate_of.matrix + 1 << ' ' << to_string(v.duplicate_of.kind) << ' '
       << v.duplicate_of.index << '\n';
  }
  os << "verdict: " << r.verdict << '\n';
  os << "elapsed_ms: " << r.elapsed_ms << '\n';
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Latin squares packing permutation groups: constructions and verifiers", "latpack"};
  app.require_subcommand(1);
  Options o;
  std::function<Outcome(const Options&)> action;

  auto common = [&](CLI::App* sub, bool construction_flags) {
    sub->add_option("--report", o.report, "Report format")->check(CLI::IsMember({"text", "json"}));
    if (!construction_flags) return;
    sub->add_option("--out", o.out_path, "Write the matrix corpus to PATH ('-' for stdout)");
    sub->add_option("--cap", o.cap, "Override the enumeration cap")->check(CLI::PositiveNumber);
    sub->add_option("--pairing", o.pairing, "Double-coset / Boolean-vector pairing")
        ->check(CLI::IsMember({"canonical", "seeded"}));
    sub->add_option("--seed", o.seed, "Seed for --pairing seeded");
    sub->add_flag("--verify,!--no-verify", o.verify, "Self-check after construction (default on)");
  };
  auto numbered = [&](const char* name, const char* arg, const char* help, Outcome (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(arg, o.n, "Order")->required();
    common(sub, true);
    sub->callback([&action, fn] { action = fn; });
  };
  auto filed = [&](const char* name, const char* help, Outcome (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", o.file, "Corpus file ('-' for stdin)")->required();
    common(sub, false);
    sub->callback([&action, fn] { action = fn; });
  };
  numbered("pack-odd", "N", "Pack S_N, N odd >= 5, into addition squares", cmd_pack_odd);
  numbered("pack-even", "N", "Pack S_N, N even >= 6", cmd_pack_even);
  numbered("pack-subgroup", "N", "Pack the pair-partition-preserving subgroup of S_N", cmd_pack_subgroup);
  numbered("pack-single", "N", "Pack a group of order 4N into one Latin square", cmd_pack_single);
  numbered("mols", "P", "Packed mutually orthogonal Latin squares, P prime = 1 mod 4", cmd_mols);
  numbered("min-lines", "N", "Latin square with the fewest distinct lines", cmd_min_lines);
  numbered("subgroup-4n", "N", "A subgroup of S_N of order 4N, N even >= 6", cmd_subgroup_4n);
  numbered("enumerate", "N", "All Latin squares of order N with a line/symmetry sweep", cmd_enumerate);
  filed("verify", "Check whether a corpus is a packing", cmd_verify);
  filed("classify", "Symmetry report for each matrix of a corpus", cmd_classify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = action(o);
    outcome.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.n > 0) outcome.report.parameters["n"] = std::to_string(o.n);
    if (outcome.payload && !o.out_path.empty()) {
      if (o.out_path == "-") {
        out << *outcome.payload;
      } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw PreconditionError("cannot write " + o.out_path);
        f << *outcome.payload;
      }
    }
    std::ostream& report_stream = o.out_path == "-" ? err : out;
    report_stream << (o.report == "json" ? to_json(outcome.report) : to_text(outcome.report));
    return outcome.report.verdict == "fail" ? kVerificationFailed : kPass;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: malformed corpus: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace latpack::cli
