// uec_main.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end. Commands: encode, decode, shtarkov, redundancy,
// bounds, verify. Exit codes: 0 success, 1 assertion/verification failure,
// 2 usage error, 3 infeasible instance.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "uec/bounds.hpp"
#include "uec/classfile.hpp"
#include "uec/codec.hpp"
#include "uec/combinatorics.hpp"
#include "uec/errors.hpp"
#include "uec/json_io.hpp"
#include "uec/redundancy.hpp"
#include "uec/shtarkov.hpp"
#include "uec/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

struct Alphabet {
  std::vector<std::string> tokens;
  std::unordered_map<std::string, uec::Symbol> index;
};

Alphabet load_alphabet(const std::string& path) {
  Alphabet alphabet;
  alphabet.tokens = read_lines(path);
  while (!alphabet.tokens.empty() && alphabet.tokens.back().empty()) {
    alphabet.tokens.pop_back();
  }
  if (alphabet.tokens.empty()) {
    throw std::invalid_argument("alphabet file is empty: " + path);
  }
  for (std::size_t i = 0; i < alphabet.tokens.size(); ++i) {
    if (!alphabet.index.emplace(alphabet.tokens[i], static_cast<uec::Symbol>(i))
             .second) {
      throw std::invalid_argument("alphabet file has duplicate token: " +
                                  alphabet.tokens[i]);
    }
  }
  return alphabet;
}

int cmd_encode(const std::string& input, const std::string& alphabet_path,
               std::uint64_t block, const std::string& output) {
  const Alphabet alphabet = load_alphabet(alphabet_path);
  const std::uint32_t k = static_cast<std::uint32_t>(alphabet.tokens.size());

  std::vector<uec::Symbol> symbols;
  for (const std::string& token : read_lines(input)) {
    if (token.empty()) continue;
    const auto it = alphabet.index.find(token);
    if (it == alphabet.index.end()) {
      throw std::invalid_argument("token not in alphabet: " + token);
    }
    symbols.push_back(it->second);
  }
  if (symbols.empty()) throw std::invalid_argument("input has no tokens");

  std::vector<std::uint8_t> container;
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (std::size_t start = 0; start < symbols.size(); start += block) {
    const std::size_t len = std::min<std::size_t>(block, symbols.size() - start);
    const std::span<const uec::Symbol> chunk(symbols.data() + start, len);
    const uec::CodecParams params{k, len};
    const uec::CodewordLayout layout = uec::codeword_layout(chunk, params);
    uec::append_frame(container, chunk, k);
    blocks.push_back({{"n", len},
                      {"distinct", layout.distinct},
                      {"distinct_bits", layout.distinct_bits},
                      {"support_bits", layout.support_bits},
                      {"composition_bits", layout.composition_bits},
                      {"arrangement_bits", layout.arrangement_bits},
                      {"total_bits", layout.total_bits()}});
  }

  std::ofstream out(output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + output);
  out.write(reinterpret_cast<const char*>(container.data()),
            static_cast<std::streamsize>(container.size()));

  nlohmann::ordered_json summary;
  summary["command"] = "encode";
  summary["k"] = k;
  summary["tokens"] = symbols.size();
  summary["container_bytes"] = container.size();
  summary["blocks"] = std::move(blocks);
  std::cout << summary.dump(2) << "\n";
  return kExitOk;
}

int cmd_decode(const std::string& input, const std::string& alphabet_path,
               const std::string& output) {
  const Alphabet alphabet = load_alphabet(alphabet_path);
  const std::vector<std::uint8_t> container = read_bytes(input);

  std::ostringstream tokens;
  std::size_t offset = 0;
  std::uint64_t count = 0;
  while (offset < container.size()) {
    const uec::Frame frame = uec::read_frame(container, offset);
    if (frame.alphabet_size != alphabet.tokens.size()) {
      throw uec::DecodeError("container alphabet size does not match alphabet file");
    }
    for (uec::Symbol s : frame.symbols) {
      tokens << alphabet.tokens[s] << '\n';
      ++count;
    }
  }
  write_output(output, tokens.str());
  std::cerr << "decoded " << count << " tokens\n";
  return kExitOk;
}

int cmd_shtarkov(const std::string& class_path, std::uint64_t n,
                 const std::string& output) {
  const uec::ClassDescription desc = uec::load_class_file(class_path);
  nlohmann::ordered_json doc;
  if (desc.kind == uec::ClassDescription::Kind::kEnvelope) {
    const uec::EnvelopeBracket bracket =
        uec::shtarkov_sum_envelope_class(desc.envelope_class(), n);
    doc = uec::envelope_bracket_json(bracket);
    doc["class"] = desc.summary();
  } else {
    const uec::Distribution base = desc.base_distribution();
    const uec::ShtarkovReport report =
        uec::shtarkov_sum_permutation_class(base, n);
    doc = uec::shtarkov_report_json(report);
    doc["class"] = desc.summary();
    doc["upper_bound_logkfact"] = uec::log2_factorial(base.size());
    if (desc.kind == uec::ClassDescription::Kind::kZipf) {
      const double n_alpha = std::pow(static_cast<double>(n), desc.alpha);
      if (n_alpha <= static_cast<double>(desc.support) * (1.0 + 1e-9)) {
        doc["lower_bound_thm1"] =
            uec::worst_case_lower_bound_zipf(desc.alpha, desc.support, n).value;
      }
    }
  }
  write_output(output, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_redundancy(const std::string& class_path, std::uint64_t n, double tol,
                   const std::string& output) {
  const uec::ClassDescription desc = uec::load_class_file(class_path);
  const uec::Distribution base = desc.base_distribution();
  const uec::RedundancyReport report = uec::achieved_redundancy(base, n);

  nlohmann::ordered_json doc = uec::redundancy_report_json(report);
  doc["class"] = desc.summary();
  const double d = uec::expected_distinct(base, n);
  doc["expected_distinct"] = d;
  const uec::BoundReport bound =
      uec::distinct_upper_bound(base.size(), n, d);
  doc["distinct_upper_bound"] = uec::bound_report_json(bound);
  doc["upper_bound_margin_bits"] = bound.value - report.achieved_bits;
  doc["tol"] = tol;
  write_output(output, doc.dump(2) + "\n");
  return kExitOk;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) values.push_back(std::stod(item));
  }
  if (values.empty()) throw std::invalid_argument("empty grid list");
  return values;
}

int cmd_bounds(const std::string& alphas, const std::string& cs,
               const std::string& ks, const std::string& ns,
               const std::string& format, const std::string& output) {
  struct Row {
    std::string name;
    double alpha, c;
    std::uint64_t k, n;
    bool feasible;
    std::string note;
    uec::BoundReport report;
  };
  std::vector<Row> rows;
  auto run = [&](const std::string& name, double alpha, double c,
                 std::uint64_t k, std::uint64_t n, auto&& evaluator) {
    Row row{name, alpha, c, k, n, true, "", {}};
    try {
      row.report = evaluator();
    } catch (const std::invalid_argument& err) {
      row.feasible = false;
      row.note = err.what();
    }
    rows.push_back(std::move(row));
  };

  for (double alpha : parse_list(alphas)) {
    for (double c : parse_list(cs)) {
      for (double kd : parse_list(ks)) {
        for (double nd : parse_list(ns)) {
          const std::uint32_t k = static_cast<std::uint32_t>(kd);
          const std::uint64_t n = static_cast<std::uint64_t>(nd);
          run("worst_case_lower_bound_zipf", alpha, c, k, n, [&] {
            return uec::worst_case_lower_bound_zipf(alpha, k, n);
          });
          run("distinct_upper_bound", alpha, c, k, n, [&] {
            const double d =
                uec::expected_distinct(uec::zipf_distribution(alpha, k), n);
            return uec::distinct_upper_bound(k, n, d);
          });
          run("distinct_lower_bound", alpha, c, k, n, [&] {
            const uec::Distribution p = uec::zipf_distribution(alpha, k);
            std::vector<double> lambdas;
            for (double prob : p.probs()) {
              lambdas.push_back(static_cast<double>(n) * prob);
            }
            return uec::distinct_lower_bound(k, n, uec::expected_distinct(p, n),
                                             lambdas);
          });
          run("envelope_distinct_bound", alpha, c, k, n, [&] {
            return uec::envelope_distinct_bound(alpha, c, k, n);
          });
          run("zipf_small_lambda_sums", alpha, c, k, n, [&] {
            return uec::zipf_small_lambda_sums(alpha, k, n);
          });
          run("zipf_theorem_bounds", alpha, c, k, n, [&] {
            return uec::zipf_theorem_bounds(alpha, c, k, n);
          });
        }
      }
    }
  }

  if (format == "csv") {
    std::ostringstream os;
    os << "name,alpha,c,k,n,value,feasible,note,terms\n";
    for (const Row& row : rows) {
      os << row.name << ',' << row.alpha << ',' << row.c << ',' << row.k << ','
         << row.n << ',';
      if (row.feasible) os << row.report.value;
      os << ',' << (row.feasible ? "yes" : "no") << ",\"" << row.note << "\",\"";
      if (row.feasible) {
        for (std::size_t t = 0; t < row.report.terms.size(); ++t) {
          if (t) os << ';';
          os << row.report.terms[t].first << '=' << row.report.terms[t].second;
        }
      }
      os << "\"\n";
    }
    write_output(output, os.str());
  } else {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
      nlohmann::ordered_json entry;
      entry["name"] = row.name;
      entry["alpha"] = row.alpha;
      entry["c"] = row.c;
      entry["k"] = row.k;
      entry["n"] = row.n;
      entry["feasible"] = row.feasible;
      if (row.feasible) {
        entry["report"] = uec::bound_report_json(row.report);
      } else {
        entry["note"] = row.note;
      }
      doc.push_back(std::move(entry));
    }
    write_output(output, doc.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const uec::VerifyConfig& config,
               const std::string& output) {
  const std::vector<uec::SuiteResult> suites = uec::run_suites(suite, config);
  const nlohmann::ordered_json doc = uec::suites_json(suites, config);
  write_output(output, doc.dump(2) + "\n");
  bool pass = true;
  for (const auto& entry : suites) {
    for (const auto& check : entry.checks) {
      std::cerr << (check.pass ? "[PASS] " : (check.fatal ? "[FAIL] " : "[info] "))
                << entry.name << "/" << check.name << "\n";
    }
    pass = pass && entry.passed();
  }
  return pass ? kExitOk : kExitAssertionFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "uec: enumerative codec and redundancy laboratory for unordered "
      "distribution classes"};
  app.require_subcommand(1);

  std::string input, output, alphabet, class_path;
  std::string suite = "all";
  std::string format = "json";
  std::string alphas = "2", cs = "1", ks = "64", ns = "16";
  std::string seed_text = "0xC0FFEE";
  std::uint64_t n = 8;
  std::uint64_t block = 256;
  std::uint64_t trials = 100000;
  double tol = 1e-6;

  auto* encode = app.add_subcommand("encode", "encode a token file (one token per line)");
  encode->add_option("input", input, "token file")->required();
  encode->add_option("--alphabet", alphabet,
                     "newline-delimited alphabet file; line number = symbol")
      ->required();
  encode->add_option("--n", block, "block length (tokens per frame)");
  encode->add_option("--output,-o", output, "container file")->required();

  auto* decode = app.add_subcommand("decode", "decode a container file back to tokens");
  decode->add_option("input", input, "container file")->required();
  decode->add_option("--alphabet", alphabet, "alphabet file used at encode time")
      ->required();
  decode->add_option("--output,-o", output, "token file (default stdout)");

  auto* shtarkov = app.add_subcommand("shtarkov", "exact worst-case redundancy of a class");
  shtarkov->add_option("--class", class_path, "class description JSON file")
      ->required();
  shtarkov->add_option("--n", n, "sequence length");
  shtarkov->add_option("--output,-o", output, "report file (default stdout)");

  auto* redundancy = app.add_subcommand(
      "redundancy", "achieved expected redundancy of the codec against a source");
  redundancy->add_option("--class", class_path, "class description JSON file")
      ->required();
  redundancy->add_option("--n", n, "sequence length");
  redundancy->add_option("--tol", tol, "oracle tolerance in bits");
  redundancy->add_option("--output,-o", output, "report file (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "evaluate closed-form bounds on a grid");
  bounds->add_option("--alpha", alphas, "comma-separated powers");
  bounds->add_option("--c", cs, "comma-separated envelope coefficients");
  bounds->add_option("--k", ks, "comma-separated alphabet sizes");
  bounds->add_option("--n", ns, "comma-separated sequence lengths");
  bounds->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  bounds->add_option("--output,-o", output, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "codec|shtarkov|redundancy|concentration|all")
      ->check(CLI::IsMember({"codec", "shtarkov", "redundancy", "concentration", "all"}));
  verify->add_option("--seed", seed_text, "random seed (decimal or 0x hex)");
  verify->add_option("--trials", trials, "Monte Carlo trials");
  verify->add_option("--tol", tol, "oracle tolerance in bits");
  verify->add_option("--output,-o", output, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return err.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(encode)) {
      return cmd_encode(input, alphabet, block, output);
    }
    if (app.got_subcommand(decode)) {
      return cmd_decode(input, alphabet, output);
    }
    if (app.got_subcommand(shtarkov)) {
      return cmd_shtarkov(class_path, n, output);
    }
    if (app.got_subcommand(redundancy)) {
      return cmd_redundancy(class_path, n, tol, output);
    }
    if (app.got_subcommand(bounds)) {
      return cmd_bounds(alphas, cs, ks, ns, format, output);
    }
    if (app.got_subcommand(verify)) {
      const std::uint64_t seed = std::stoull(seed_text, nullptr, 0);
      return cmd_verify(suite, uec::VerifyConfig{seed, trials, tol}, output);
    }
  } catch (const uec::InstanceTooLargeError& err) {
    std::cerr << "infeasible: " << err.what() << "\n";
    return kExitInfeasible;
  } catch (const uec::DecodeError& err) {
    std::cerr << "decode error: " << err.what() << "\n";
    return kExitAssertionFailure;
  } catch (const std::invalid_argument& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitAssertionFailure;
  }
  return kExitUsage;
}
