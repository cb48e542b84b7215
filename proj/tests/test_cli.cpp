#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "singquandle/cli.hpp"
#include "singquandle/corpus.hpp"
#include "singquandle/io.hpp"

using namespace sq;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "singquandle-cli-test") {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("sqp, ssqp and iso") {
  Result r = run({"sqp", "corpus:X-Z4"});
  CHECK(r.status == 0);
  CHECK(r.out == "4*s1^2*t1^2*s2*t2*s3^4*t3^4\n");

  r = run({"--format", "machine", "sqp", "corpus:X-Z4"});
  CHECK(r.out == "(2,2,1,1,4,4):4\n");

  r = run({"ssqp", "corpus:X-Z4", "--subset", "1,3"});
  CHECK(r.status == 0);
  CHECK(r.out == "2*s1^2*t1^2*s2*t2*s3^4*t3^4\n");

  r = run({"ssqp", "corpus:X-Z8-a", "--subset", "2,4"});
  CHECK(r.status == cli::exit_validation);
  CHECK(r.err.find("NotASubsingquandle") != std::string::npos);

  r = run({"iso", "corpus:X-Z4", "corpus:X-Z4"});
  CHECK(r.status == 0);
  CHECK(r.out == "isomorphic\n  1 -> 1\n  2 -> 2\n  3 -> 3\n  0 -> 0\n");

  r = run({"iso", "corpus:X-Z4", "corpus:Y-Z4"});
  CHECK(r.status == 0);
  CHECK(r.out == "not isomorphic (sqp-mismatch)\n");
  r = run({"--format", "machine", "iso", "corpus:X-Z4", "corpus:Y-Z4"});
  CHECK(r.out == "not-isomorphic\tsqp-mismatch\n");
}

TEST_CASE("color and phi") {
  Result r = run({"color", "corpus:1_1l", "corpus:X-Z8-a"});
  CHECK(r.status == 0);
  CHECK(r.out == "16\n");

  r = run({"color", "corpus:1_1l", "corpus:X-Z8-a", "--list"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("x y z | image\n", 0) == 0);
  CHECK(r.out.find("2 4 0 | {0,2,4,6}\n") != std::string::npos);
  CHECK(r.out.find("count: 16\n") != std::string::npos);

  r = run({"--format", "machine", "color", "corpus:6_11l", "corpus:X-Z8-a", "--list", "--term",
           "R1(x,y)*R2(x,y)"});
  CHECK(r.out.rfind("x\ty\tz\tw\tk\tR1(x,y)*R2(x,y)\timage\n", 0) == 0);
  CHECK(r.out.find("1\t3\t3\t7\t7\t7\t1,3,5,7\n") != std::string::npos);

  r = run({"color", "corpus:1_1l", "corpus:X-Z8-a", "--list", "--term", "q*x"});
  CHECK(r.status == cli::exit_parse);

  r = run({"phi", "corpus:K2", "corpus:X-Z8-b"});
  CHECK(r.status == 0);
  CHECK(r.out == "4*u^{s1^4*t1^4*s2^2*t2^2*s3*t3} + 4*u^{4*s1^4*t1^4*s3*t3}\n");

  r = run({"--format", "machine", "phi", "corpus:K1-pd", "corpus:X-Z8-b"});
  CHECK(r.out == "4\t(4,4,2,2,1,1):2\n4\t(4,4,2,2,1,1):1\n");
}

TEST_CASE("machine output is stable across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "machine", "phi", "corpus:6_11l", "corpus:X-Z8-a"},
           {"--format", "machine", "color", "corpus:K1", "corpus:X-Z8-b", "--list"},
           {"--format", "machine", "sqp", "corpus:Y-Z4"}}) {
    const Result a = run(args);
    const Result b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("gen affine and validate") {
  Result r = run({"gen", "affine", "--n", "4", "--t", "3", "--s", "2"});
  CHECK(r.status == 0);
  CHECK(parse_singquandle(r.out) == corpus::load_singquandle("X-Z4"));

  r = run({"gen", "affine", "--n", "4", "--t", "3", "--s", "2", "--display-order", "1,2,3,0"});
  CHECK(r.out.find("labels: 1 2 3 0\nstar:\n1 3 1 3\n0 2 0 2\n") != std::string::npos);

  r = run({"gen", "affine", "--n", "4", "--t", "3", "--s", "2", "--formula"});
  CHECK(r.out == "singquandle-formula n=4\nstar = 3*x + 2*y\nR1 = 2*x + 3*y\nR2 = x\n");

  r = run({"gen", "affine", "--n", "4", "--t", "2", "--s", "1"});
  CHECK(r.status == cli::exit_validation);
  CHECK(r.err.find("NotInvertible") != std::string::npos);

  TempDir dir;
  const std::string file = (dir.path / "z7.sq").string();
  r = run({"gen", "affine", "--n", "7", "--t", "3", "--s", "5", "-o", file});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  r = run({"validate", file});
  CHECK(r.status == 0);
  CHECK(r.out.find("singular-5: ok\n") != std::string::npos);
  CHECK(r.out.find("valid singquandle of order 7") != std::string::npos);

  const std::string broken = dir.write("broken.sq",
                                       "singquandle n=2\nstar:\n1 0\n0 1\nR1:\n0 0\n1 1\n"
                                       "R2:\n0 0\n1 1\n");
  r = run({"validate", broken});
  CHECK(r.status == cli::exit_validation);
  CHECK(r.out.find("idempotency: violated") != std::string::npos);
  CHECK(r.out.find("invalid: NotAQuandle") != std::string::npos);

  r = run({"--format", "machine", "validate", broken});
  CHECK(r.out.find("idempotency\tviolated\t1\n") != std::string::npos);
}

TEST_CASE("files, pd2rel and link detection") {
  TempDir dir;
  const std::string pd = dir.write("hopf.pd", "S[x,y,z,x2]\nP[z,x2,y,x]\n");
  const std::string pres = dir.write("hopf.txt", "generators: x, y, z\nx = R2(x,y)\nz = R1(x,y)\nz*x = y\n");
  const std::string bare_pd = dir.write("hopf.code", "S[x,y,z,x2] P[z,x2,y,x]");
  const std::string sq = dir.write("z8.sq", std::string(corpus::find("X-Z8-a").payload));

  for (const std::string& link : {pd, pres, bare_pd}) {
    const Result r = run({"color", link, sq});
    CHECK(r.status == 0);
    CHECK(r.out == "16\n");
  }

  Result r = run({"pd2rel", pd});
  CHECK(r.status == 0);
  CHECK(r.out == "generators: x, y, z, x2\nz = R1(x,y)\nx2 = R2(x,y)\ny = z*x2\nx = x2\n");
  CHECK(parse_presentation(r.out).relations().size() == 4);

  r = run({"pd2rel", "corpus:6_11l-pd"});
  CHECK(r.out.rfind("name: 6_11l\n", 0) == 0);
}

TEST_CASE("exit statuses") {
  CHECK(run({}).status == cli::exit_usage);
  CHECK(run({"frobnicate"}).status == cli::exit_usage);
  CHECK(run({"color", "corpus:1_1l"}).status == cli::exit_usage);
  CHECK(run({"--format", "xml", "sqp", "corpus:X-Z4"}).status == cli::exit_usage);
  CHECK(run({"sqp", "corpus:no-such-id"}).status == cli::exit_usage);
  CHECK(run({"sqp", "/no/such/file.sq"}).status == cli::exit_usage);

  const Result help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("pd2rel") != std::string::npos);

  TempDir dir;
  CHECK(run({"sqp", dir.write("bad.sq", "singquandle n=2\nstar:\n0 x\n")}).status == cli::exit_parse);
  CHECK(run({"pd2rel", dir.write("bad.pd", "P[a,b,c,d]")}).status == cli::exit_parse);
  CHECK(run({"color", dir.write("bad.pres", "generators: x\nx = y\n"), "corpus:X-Z4"}).status ==
        cli::exit_parse);

  const Result list = run({"corpus"});
  CHECK(list.status == 0);
  CHECK(list.out.find("X-Z4\tsingquandle\n") != std::string::npos);
  CHECK(list.out.find("K2-pd\tpd-code\n") != std::string::npos);
}
