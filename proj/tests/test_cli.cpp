#include "adnil/cli.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace adnil;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table command writes CSV") {
    const Run g2 = run({"table", "--type", "G2"});
    CHECK(g2.status == 0);
    CHECK(g2.out == "K,count\n0,1\n1,3\n2,2\n3,1\n4,0\n5,1\ntotal,8\n");
    const Run a1 = run({"table", "--type", "A", "--rank", "1"});
    CHECK(a1.out == "K,count\n0,1\n1,1\ntotal,2\n");
    const Run e7 = run({"table", "--type", "E7", "--workers", "2"});
    CHECK(e7.status == 0);
    CHECK(e7.out.find("\n17,1\ntotal,4160\n") != std::string::npos);
}

TEST_CASE("table methods") {
    const Run ray = run({"table", "--type", "C4", "--method", "ray"});
    const Run oracle = run({"table", "--type", "C4"});
    CHECK(ray.status == 0);
    CHECK(ray.out == oracle.out);
    CHECK(run({"table", "--type", "E6", "--method", "zigzag"}).status == 2);
}

TEST_CASE("JSON export round-trips") {
    const Run j = run({"table", "--type", "F4", "--format", "json"});
    CHECK(j.status == 0);
    CHECK(j.out.find("\"total\": \"105\"") != std::string::npos);
    const Distribution d = parse_distribution_json(j.out);
    CHECK(distribution_total(d) == 105);
    CHECK(parse_distribution_json(distribution_to_json(d, "F4", "oracle")) == d);
    Distribution big;
    big[0] = BigInt("123456789012345678901234567890");
    big[1] = 7;
    CHECK(parse_distribution_json(distribution_to_json(big, "X", "oracle")) == big);
}

TEST_CASE("output file") {
    const std::string path = "adnil_cli_test_output.csv";
    CHECK(run({"table", "--type", "G2", "--output", path}).status == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().rfind("K,count\n", 0) == 0);
    std::remove(path.c_str());
}

TEST_CASE("generating function command") {
    const Run c = run({"gf", "--family", "C", "--le", "3", "--order", "6"});
    CHECK(c.status == 0);
    CHECK(c.out == "power,coefficient\n0,1\n1,2\n2,6\n3,18\n4,54\n5,162\n6,486\n");
    const Run d = run({"gf", "--family", "D", "--exact", "0", "--order", "5"});
    CHECK(d.out == "power,coefficient\n0,0\n1,1\n2,1\n3,1\n4,1\n5,1\n");
    const Run a = run({"gf", "--family", "A", "--le", "0", "--order", "4"});
    CHECK(a.out == "power,coefficient\n0,1\n1,1\n2,1\n3,1\n4,1\n");
    CHECK(run({"gf", "--family", "C", "--le", "1", "--exact", "1"}).status == 2);
    CHECK(run({"gf", "--family", "E", "--le", "1"}).status == 2);
}

TEST_CASE("roots, enumerate and qt commands") {
    const Run r = run({"roots", "--type", "A2"});
    CHECK(r.out == "index,root,height,row,col\n0,a1+a2,2,1,1\n1,a1,1,1,2\n2,a2,1,2,1\n");
    const Run e = run({"enumerate", "--type", "A2"});
    CHECK(e.status == 0);
    CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 6);
    const Run q = run({"qt", "--family", "A", "--rank", "1"});
    CHECK(q.out == "class,dimension,count\n0,0,1\n1,1,1\n");
}

TEST_CASE("verify command") {
    const Run v = run({"verify", "--suite", "agreement", "--family", "A", "--max-rank", "4"});
    CHECK(v.status == 0);
    CHECK(v.out.find("FAIL") == std::string::npos);
    CHECK(v.out.find("A6 oracle=filling=recursion=zigzag  (429 ideals)") != std::string::npos);
    CHECK(run({"verify", "--suite", "table1", "--family", "G"}).status == 0);
    CHECK(run({"verify", "--suite", "nonsense"}).status == 2);
    const Run skipped = run({"verify", "--suite", "abelian", "--budget", "0.000001"});
    CHECK(skipped.status == 0);
    CHECK(skipped.out.find("SKIP") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).status == 2);
    CHECK(run({"table"}).status == 2);
    CHECK(run({"table", "--type", "Q3"}).status == 2);
    CHECK(run({"table", "--type", "E9"}).status == 2);
    CHECK(run({"table", "--type", "G2", "--format", "xml"}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("budget aborts a table run") {
    const Run r = run({"table", "--type", "E8", "--budget", "0.000001"});
    CHECK(r.status == 1);
    CHECK(r.err.find("budget") != std::string::npos);
}
