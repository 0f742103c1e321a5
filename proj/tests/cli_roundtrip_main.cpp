// End-to-end CLI exercise: a seeded 1e4-token power-law stream is encoded in
// 256-token blocks and decoded back; the decoded token file must be byte
// identical. Also covers the usage-error paths (empty alphabet, unknown
// token) and the report commands.
//
// Usage: uec_cli_roundtrip --cli /path/to/uec

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "uec/model.hpp"
#include "uec/random.hpp"

namespace {

int failures = 0;

void expect(bool condition, const std::string& what) {
  if (condition) {
    std::printf("[ok] %s\n", what.c_str());
  } else {
    std::printf("[FAILED] %s\n", what.c_str());
    ++failures;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

int run(const std::string& command) {
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }
  if (cli.empty()) {
    std::fprintf(stderr, "missing --cli path\n");
    return 1;
  }
  const std::string quiet = " >cli_rt_stdout.txt 2>cli_rt_stderr.txt";

  // Alphabet of 512 words, one per line.
  {
    std::ostringstream alphabet;
    for (int i = 0; i < 512; ++i) alphabet << "w" << i << "\n";
    write_file("cli_rt_alphabet.txt", alphabet.str());
  }

  // Seeded power-law token stream, 1e4 tokens.
  {
    const uec::Distribution source = uec::zipf_distribution(2.0, 512);
    const uec::DiscreteSampler sampler(source);
    std::mt19937_64 rng(0xC0FFEE);
    std::ostringstream stream;
    for (int i = 0; i < 10000; ++i) stream << "w" << sampler(rng) << "\n";
    write_file("cli_rt_input.txt", stream.str());
  }

  expect(run("\"" + cli + "\" encode cli_rt_input.txt --alphabet cli_rt_alphabet.txt"
             " --n 256 --output cli_rt_stream.uec" + quiet) == 0,
         "encode exits 0");
  expect(run("\"" + cli + "\" decode cli_rt_stream.uec --alphabet cli_rt_alphabet.txt"
             " --output cli_rt_decoded.txt" + quiet) == 0,
         "decode exits 0");
  expect(read_file("cli_rt_decoded.txt") == read_file("cli_rt_input.txt"),
         "decoded token stream is byte-identical");

  const std::size_t packed = read_file("cli_rt_stream.uec").size();
  expect(packed > 0 && packed < read_file("cli_rt_input.txt").size(),
         "container is nonempty and smaller than the token file");

  // Usage errors: empty alphabet, token not in alphabet.
  write_file("cli_rt_empty.txt", "");
  expect(run("\"" + cli + "\" encode cli_rt_input.txt --alphabet cli_rt_empty.txt"
             " --n 16 --output cli_rt_x.uec" + quiet) == 2,
         "empty alphabet file is a usage error (exit 2)");
  write_file("cli_rt_badtok.txt", "w0\nnot-a-word\n");
  expect(run("\"" + cli + "\" encode cli_rt_badtok.txt --alphabet cli_rt_empty.txt"
             " --n 16 --output cli_rt_x.uec" + quiet) == 2,
         "unknown token is a usage error (exit 2)");

  // Truncated container: the final frame loses codeword bits, decode fails.
  // (A bit flip inside a rank field can yield another in-range rank and
  // decode to a different block; only structural damage is detectable.)
  {
    std::string bytes = read_file("cli_rt_stream.uec");
    bytes.pop_back();
    write_file("cli_rt_truncated.uec", bytes);
    expect(run("\"" + cli + "\" decode cli_rt_truncated.uec --alphabet "
               "cli_rt_alphabet.txt --output cli_rt_y.txt" + quiet) != 0,
           "truncated container fails to decode");
  }

  // Report commands run end to end.
  write_file("cli_rt_class.json", "{\"kind\":\"zipf\",\"alpha\":2.0,\"k\":8}\n");
  expect(run("\"" + cli + "\" shtarkov --class cli_rt_class.json --n 3"
             " --output cli_rt_sh.json" + quiet) == 0,
         "shtarkov report exits 0");
  expect(read_file("cli_rt_sh.json").find("log2_S") != std::string::npos,
         "shtarkov report carries log2_S");
  expect(run("\"" + cli + "\" redundancy --class cli_rt_class.json --n 4"
             " --output cli_rt_red.json" + quiet) == 0,
         "redundancy report exits 0");
  expect(run("\"" + cli + "\" bounds --alpha 2 --c 1 --k 64,8 --n 16"
             " --format csv --output cli_rt_bounds.csv" + quiet) == 0,
         "bounds grid exits 0");
  {
    const std::string csv = read_file("cli_rt_bounds.csv");
    expect(csv.find("zipf_theorem_bounds,2,1,64,16") != std::string::npos,
           "bounds CSV has the feasible row");
    expect(csv.find("no,") != std::string::npos,
           "bounds CSV marks the k<=n row infeasible");
  }

  // An oversized exact instance is reported as infeasible (exit 3).
  write_file("cli_rt_big.json", "{\"kind\":\"zipf\",\"alpha\":2.0,\"k\":4096}\n");
  expect(run("\"" + cli + "\" shtarkov --class cli_rt_big.json --n 64"
             " --output cli_rt_z.json" + quiet) == 3,
         "oversized instance exits 3");

  std::printf(failures == 0 ? "CLI ROUND TRIP: PASS\n" : "CLI ROUND TRIP: FAIL\n");
  return failures == 0 ? 0 : 1;
}
