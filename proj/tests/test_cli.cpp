#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "indcut/dimacs.hpp"
#include "indcut/solver.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

const fs::path& scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::current_path() / "cli_scratch";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string binary() {
    const char* env = std::getenv("INDCUT_BIN");
    REQUIRE_MESSAGE(env != nullptr, "INDCUT_BIN must point at the CLI binary");
    return env;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

RunResult run(const std::string& args) {
    const fs::path out = scratch() / "stdout.txt";
    const fs::path err = scratch() / "stderr.txt";
    const std::string cmd =
        binary() + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path write_c4() {
    const fs::path p = scratch() / "c4.col";
    spit(p, "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
    return p;
}

fs::path write_prism() {
    const fs::path p = scratch() / "prism.col";
    spit(p, "p edge 6 9\ne 1 2\ne 1 3\ne 2 3\ne 4 5\ne 4 6\ne 5 6\ne 1 4\ne 2 5\ne 3 6\n");
    return p;
}

fs::path write_k4() {
    const fs::path p = scratch() / "k4.col";
    spit(p, "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    return p;
}

} // namespace

TEST_CASE("solve: cut found, certificate verifies, exit 0") {
    RunResult r = run("solve " + write_c4().string());
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["has_cut"] == true);
    REQUIRE(j["certificate"].is_array());

    std::ifstream in(write_c4());
    indcut::Graph g = indcut::read_dimacs_graph(in);
    indcut::VertexSet s(g.order());
    for (int id : j["certificate"].get<std::vector<int>>()) s.add(id - 1);
    CHECK(indcut::verify_cut(g, s));
}

TEST_CASE("solve: no cut exits 10") {
    RunResult r = run("solve " + write_prism().string());
    CHECK(r.exit_code == 10);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["has_cut"] == false);
    CHECK(j["certificate"].is_null());
}

TEST_CASE("solve: plain format") {
    RunResult r = run("solve --format plain " + write_prism().string());
    CHECK(r.exit_code == 10);
    CHECK(r.out.find("no independent cut") != std::string::npos);
}

TEST_CASE("solve: brute strategy refuses oversized graphs with exit 2") {
    const fs::path big = scratch() / "big.col";
    RunResult gen = run("gen maxdeg 30 4 0.4 --seed 3 -o " + big.string());
    REQUIRE(gen.exit_code == 0);
    RunResult r = run("solve --strategy brute " + big.string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("solve: parse errors exit 2 and name the line") {
    const fs::path bad = scratch() / "bad.col";
    spit(bad, "p edge 2 1\ne 1 1\n");
    RunResult r = run("solve " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("solve: dump-cover writes method tag plus one line per group") {
    const fs::path cover = scratch() / "prism.cover";
    RunResult r = run("solve --dump-cover " + cover.string() + " " +
                      write_prism().string());
    CHECK(r.exit_code == 10);
    std::istringstream in(slurp(cover));
    std::string method, g1, g2;
    REQUIRE(std::getline(in, method));
    REQUIRE(std::getline(in, g1));
    REQUIRE(std::getline(in, g2));
    CHECK(method == "windmill");
    CHECK(g1 == "1 2 3");
    CHECK(g2 == "4 5 6");
}

TEST_CASE("verify: accepts a real cut") {
    RunResult r = run("verify " + write_c4().string() + " 1 3");
    CHECK(r.exit_code == 0);
}

TEST_CASE("verify: connected remainder rejected with message") {
    RunResult r = run("verify " + write_k4().string() + " 1");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("removal leaves connected graph") != std::string::npos);
}

TEST_CASE("verify: dependent set rejected with message") {
    RunResult r = run("verify " + write_c4().string() + " 1 2");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("set not independent") != std::string::npos);
}

TEST_CASE("verify: out-of-range id exits 2") {
    RunResult r = run("verify " + write_c4().string() + " 99");
    CHECK(r.exit_code == 2);
}

TEST_CASE("reduce: single clause reports the chained sizes") {
    const fs::path cnf = scratch() / "one.cnf";
    spit(cnf, "p cnf 3 1\n1 2 3 0\n");
    const fs::path graph = scratch() / "one.col";
    RunResult r = run("reduce " + cnf.string() + " -o " + graph.string());
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("n'=7") != std::string::npos);
    CHECK(r.err.find("m'=3") != std::string::npos);
    CHECK(r.err.find("n''=17") != std::string::npos);
    CHECK(r.err.find("m''=18") != std::string::npos);
    CHECK(r.err.find("order=184") != std::string::npos);

    std::ifstream in(graph);
    indcut::Graph g = indcut::read_dimacs_graph(in);
    CHECK(g.order() == 184);
    CHECK(fs::exists(graph.string() + ".labels"));
    CHECK(slurp(graph.string() + ".labels").find("r1 ") != std::string::npos);
}

TEST_CASE("reduce: long clauses exit 2") {
    const fs::path cnf = scratch() / "long.cnf";
    spit(cnf, "p cnf 4 1\n1 2 3 4 0\n");
    RunResult r = run("reduce " + cnf.string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("gen windmill 2 emits the friendship graph") {
    RunResult r = run("gen windmill 2");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    indcut::Graph g = indcut::read_dimacs_graph(in);
    CHECK(g.order() == 5);
    CHECK(g.size() == 6);
}

TEST_CASE("gen maxdeg is reproducible byte for byte") {
    RunResult a = run("gen maxdeg 40 4 0.5 --seed 7");
    RunResult b = run("gen maxdeg 40 4 0.5 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
    RunResult c = run("gen maxdeg 40 4 0.5 --seed 8");
    CHECK(a.out != c.out);

    std::istringstream in(a.out);
    indcut::Graph g = indcut::read_dimacs_graph(in);
    CHECK(g.max_degree() <= 4);
}

TEST_CASE("gen dense keeps the degree floor") {
    RunResult r = run("gen dense 20 0.6 --seed 5");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    indcut::Graph g = indcut::read_dimacs_graph(in);
    CHECK(g.min_degree() >= 12);
}

TEST_CASE("gen dense rejects infeasible parameters") {
    CHECK(run("gen dense 20 1.5").exit_code == 2);
}

TEST_CASE("gen prismlike 3 is the prism") {
    RunResult r = run("gen prismlike 3");
    std::istringstream in(r.out);
    indcut::Graph g = indcut::read_dimacs_graph(in);
    CHECK(g.order() == 6);
    CHECK(g.size() == 9);
}

TEST_CASE("bench: prism row shows a single partition") {
    RunResult r = run("bench " + write_prism().string());
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string header, row;
    REQUIRE(std::getline(in, header));
    REQUIRE(std::getline(in, row));
    CHECK(header ==
          "instance,n,m,max_deg,cover_size,partitions,twosat_calls,has_cut,wall_ms");
    CHECK(row.find("prism.col,6,9,3,2,1,1,0,") != std::string::npos);
}

TEST_CASE("bench: empty directory gives a header-only CSV") {
    const fs::path dir = scratch() / "empty_dir";
    fs::create_directories(dir);
    RunResult r = run("bench --dir " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "instance,n,m,max_deg,cover_size,partitions,twosat_calls,has_cut,wall_ms\n");
}

TEST_CASE("bench: unreadable instances become error rows, run continues") {
    const fs::path bad = scratch() / "broken.col";
    spit(bad, "p edge 1\n");
    RunResult r = run("bench " + bad.string() + " " + write_prism().string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("broken.col,,,,,,,error,") != std::string::npos);
    CHECK(r.out.find("prism.col,6,9,") != std::string::npos);
}

TEST_CASE("bench: generator specs expand with seeds") {
    RunResult r = run("bench --gen maxdeg:14:4:0.5 --count 3 --seed 9");
    CHECK(r.exit_code == 0);
    int rows = 0;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3);
}

TEST_CASE("gen windmill --connect joins the centers") {
    RunResult r = run("gen windmill 1 1 --connect");
    std::istringstream in(r.out);
    indcut::Graph g = indcut::read_dimacs_graph(in);
    CHECK(g.order() == 6);
    CHECK(g.size() == 7); // two triangles plus the center-center edge
    CHECK(g.adjacent(0, 3));
}

TEST_CASE("gen windmill rejects a zero pair count") {
    CHECK(run("gen windmill 0").exit_code == 2);
}

TEST_CASE("solve honors the threads flag") {
    RunResult r = run("solve --threads 2 " + write_prism().string());
    CHECK(r.exit_code == 10);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["stats"]["threads"] == 2);
}

TEST_CASE("solve reads stdin when asked") {
    const fs::path out = scratch() / "stdin_out.txt";
    const std::string cmd = binary() + " solve - < " + write_c4().string() + " > " +
                            out.string() + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(slurp(out).find("\"has_cut\":true") != std::string::npos);
}

TEST_CASE("bench generator rows respect the degree-4 cover ceiling") {
    RunResult r = run(
        "bench --gen maxdeg:20:4:0.5 --gen maxdeg:30:4:0.5 --gen maxdeg:40:4:0.5 "
        "--count 2 --seed 11");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line); // header
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::vector<std::string> cols;
        std::istringstream ls(line);
        for (std::string c; std::getline(ls, c, ',');) cols.push_back(c);
        REQUIRE(cols.size() >= 9);
        const int n = std::stoi(cols[1]);
        const int cover = std::stoi(cols[4]);
        CHECK(cover <= 0.4 * n);
    }
    CHECK(rows == 6);
}

TEST_CASE("solve refuses infeasible enumerations with exit 2") {
    const fs::path p = scratch() / "necklace64.col";
    std::ostringstream text;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 64; ++i) {
        const int a = 3 * i, b = 3 * i + 1, c = 3 * i + 2;
        edges.insert(edges.end(), {{a, b}, {a, c}, {b, c}, {c, (3 * (i + 1)) % 192}});
    }
    indcut::Graph g(192, edges);
    std::ofstream out(p);
    indcut::write_dimacs_graph(out, g);
    out.close();
    RunResult r = run("solve " + p.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("refusing") != std::string::npos);
}
