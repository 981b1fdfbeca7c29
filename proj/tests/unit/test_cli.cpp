#include "cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hilbert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hilbert::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const char* name) { return std::string(HILBERT_TEST_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("construct prints the closed-form coefficients") {
    const Run r = run({"construct", "--variant", "theorem1", "--d", "2", "--p", "2", "--series", "zero",
                       "--max-degree", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,3,8,20\n");
  }

  TEST_CASE("output formats") {
    const std::vector<std::string> base{"expand", "--series", "catalan", "--max-degree", "4"};
    auto with = [&](const char* format) {
      auto args = base;
      args.push_back("--format");
      args.push_back(format);
      return run(args).out;
    };
    CHECK(run(base).out == "0,1,1,2,5\n");
    CHECK(with("csv") == "degree,coefficient\n0,0\n1,1\n2,1\n3,2\n4,5\n");
    CHECK(with("json") == "[\"0\",\"1\",\"1\",\"2\",\"5\"]\n");
    CHECK(with("table").rfind("degree  coefficient\n", 0) == 0);
    CHECK(run({"expand", "--series", "catalan", "--max-degree", "4", "--format", "xml"}).code == 1);
  }

  TEST_CASE("verify exit codes") {
    const std::vector<std::string> args{"verify", "--variant", "theorem1", "--d", "2", "--p", "2", "--series",
                                        "partition", "--max-degree", "12", "--engine", "auto"};
    const Run ok = run(args);
    CHECK(ok.code == 0);
    CHECK(ok.out.find("agreement") != std::string::npos);
    CHECK(ok.out == run(args).out);

    auto corrupted = args;
    corrupted.insert(corrupted.end(), {"--perturb-closed-form-at", "5"});
    const Run bad = run(corrupted);
    CHECK(bad.code == 3);
    CHECK(bad.out.find("MISMATCH at degree 5") != std::string::npos);

    CHECK(run({"verify", "--variant", "theorem14", "--d", "2", "--p", "2", "--max-degree", "6", "--engine",
               "automaton"})
              .code == 1);
    CHECK(run({"verify", "--variant", "corollary12", "--d", "2", "--p", "1", "--q", "1", "--max-degree", "9"}).code ==
          0);
  }

  TEST_CASE("rationalize") {
    const Run r = run({"rationalize", "--presentation", data_file("fib.pres")});
    CHECK(r.code == 0);
    CHECK(r.out == "(1 + t) / (1 - t - t^2)\n");
    CHECK(run({"rationalize", "--presentation", "/nonexistent.pres"}).code == 1);
  }

  TEST_CASE("error classes map to exit codes") {
    CHECK(run({"construct", "--variant", "theorem1", "--d", "1", "--series", "partition", "--max-degree", "6"}).code ==
          2);
    CHECK(run({"construct", "--variant", "theorem9", "--d", "2", "--max-degree", "6"}).code == 1);
    CHECK(run({"construct", "--variant", "theorem1", "--max-degree", "6"}).code == 1);
    CHECK(run({"expand", "--series", "nonsense", "--max-degree", "3"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);

    std::string short_file;
    for (int i = 0; i < 20; ++i) short_file += "1\n";
    CHECK(run({"analyze", "--coeffs-file", temp_file("hilbert_short.txt", short_file)}).code == 4);
    CHECK(run({"expand", "--series", "file:" + temp_file("hilbert_three.txt", "1\n2\n3\n"), "--max-degree", "5"})
              .code == 4);
  }

  TEST_CASE("analyze prints the JSON verdict") {
    std::string fib = "1\n1\n";
    long a = 1, b = 1;
    for (int i = 0; i < 60; ++i) {
      const long c = a + b;
      fib += std::to_string(c) + "\n";
      a = b;
      b = c;
    }
    const Run r = run({"analyze", "--coeffs-file", temp_file("hilbert_fib.txt", fib), "--max-order", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verdict\": \"RATIONAL\"") != std::string::npos);
    CHECK(r.out.find("\"K\": 4") != std::string::npos);
  }

  TEST_CASE("hr") {
    const Run r = run({"hr", "--n", "100"});
    CHECK(r.code == 0);
    CHECK(r.out.find("p(n) = 190569292\n") != std::string::npos);
    CHECK(run({"hr", "--n", "0"}).code == 1);
  }
}
