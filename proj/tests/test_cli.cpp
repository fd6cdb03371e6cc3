#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    std::string out;
    int code;
};

// runs the tool under test (path in QTORUS_BIN) and captures stdout + exit code
RunResult run(const std::string& args) {
    const char* bin = std::getenv("QTORUS_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "QTORUS_BIN must point at the built binary");
    const std::string command = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        out.append(buffer, got);
    }
    const int status = pclose(pipe);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

const std::string& scratch_dir() {
    static const std::string dir = [] {
        char pattern[] = "/tmp/qtorus_cli_XXXXXX";
        const char* made = mkdtemp(pattern);
        REQUIRE(made != nullptr);
        return std::string(made);
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    const std::string path = scratch_dir() + "/" + name;
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
    return path;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("reduce reports the lattice data of the worked spectrum") {
    const std::string spec = write_file("fig.txt", "0\n4\n9\n");
    const RunResult r = run("reduce --spectrum " + spec);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "N = 36"));
    CHECK(contains(r.out, "p = (0, 4, 9)"));
    CHECK(contains(r.out, "eps = 1"));
    CHECK(contains(r.out, "delta_t = 1/36 turns"));

    const std::string single = write_file("single.txt", "7\n");
    const RunResult s = run("reduce --spectrum " + single);
    CHECK(s.code == 0);
    CHECK(contains(s.out, "N = 1"));
}

TEST_CASE("reduce flags irrational gaps and exits with the verdict code") {
    const std::string spec =
        write_file("irr.txt", "0\n1\n2.4142135623730950488016887242097\n");
    const RunResult r = run("reduce --spectrum " + spec + " --tol 1e-15 --max-den 1e6");
    CHECK(r.code == 2);
    CHECK(contains(r.out, "INCOMMENSURABLE"));
}

TEST_CASE("input mistakes map to exit code one") {
    CHECK(run("reduce --spectrum /nonexistent/spec.txt").code == 1);

    const std::string degenerate = write_file("degen.txt", "1\n1\n");
    CHECK(run("reduce --spectrum " + degenerate).code == 1);

    const std::string unsorted = write_file("unsorted.txt", "2\n1\n");
    CHECK(run("reduce --spectrum " + unsorted).code == 1);

    CHECK(run("").code == 1);                       // a subcommand is required
    CHECK(run("frobnicate").code == 1);             // unknown subcommand
    CHECK(run("reduce --no-such-flag").code == 1);  // unknown flag

    const std::string spec = write_file("fig2.txt", "0\n4\n9\n");
    const std::string state = write_file("short.txt", "amps:\n1\n1\n");
    CHECK(run("evolve --spectrum " + spec + " --state " + state).code == 1);
    CHECK(run("born --spectrum " + spec + " --eigen 5").code == 1);
    CHECK(run("born --spectrum " + spec + " --precision 10").code == 1);
}

TEST_CASE("torus emits the worked trajectory as CSV") {
    const std::string spec = write_file("fig3.txt", "0\n4\n9\n");
    const RunResult r = run("torus --spectrum " + spec);
    CHECK(r.code == 0);

    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "step,theta_1_frac,theta_2_frac,theta_1_dec,theta_2_dec");
    std::size_t rows = 0;
    std::string second;
    while (std::getline(lines, line)) {
        if (rows == 1) {
            second = line;
        }
        ++rows;
    }
    CHECK(rows == 36);  // --count defaults to one full recurrence
    CHECK(second == "1,1/9,1/4,0.111111111111,0.250000000000");

    // byte-identical rerun
    CHECK(run("torus --spectrum " + spec).out == r.out);

    const RunResult window = run("torus --spectrum " + spec + " --from 35 --count 2");
    CHECK(contains(window.out, "\n35,8/9,3/4,"));
    CHECK(contains(window.out, "\n36,0,0,"));
}

TEST_CASE("torus renders SVG for two free phases and refuses otherwise") {
    const std::string spec = write_file("fig4.txt", "0\n4\n9\n");
    const std::string out_path = scratch_dir() + "/fig.svg";
    const RunResult r = run("torus --spectrum " + spec + " --format svg --out " + out_path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());  // everything went to the file

    const std::string svg = read_file(out_path);
    CHECK(contains(svg, "<svg "));
    std::size_t circles = 0;
    for (std::size_t pos = svg.find("<circle"); pos != std::string::npos;
         pos = svg.find("<circle", pos + 1)) {
        ++circles;
    }
    CHECK(circles == 36);

    const std::string flat = write_file("flat.txt", "0\n1\n");
    CHECK(run("torus --spectrum " + flat + " --format svg").code == 1);

    CHECK(run("torus --spectrum " + spec + " --format json").code == 1);
}

TEST_CASE("evolve prints exact phases and step-independent probabilities") {
    const std::string spec = write_file("fig5.txt", "0\n4\n9\n");
    const RunResult r = run("evolve --spectrum " + spec + " --steps 7");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "step = 7"));
    CHECK(contains(r.out, "k=1 p=4 amp=1 phase=28/36 turns prob=1/3"));
    CHECK(contains(r.out, "k=2 p=9 amp=1 phase=27/36 turns prob=1/3"));

    const std::string state = write_file("unbalanced.txt", "amps:\n3/5\n0\n-4/5\n");
    const RunResult s = run("evolve --spectrum " + spec + " --state " + state + " --steps 1");
    CHECK(contains(s.out, "k=0 p=0 amp=3 phase=0/36 turns prob=9/25"));
    CHECK(contains(s.out, "k=2 p=9 amp=-4 phase=9/36 turns prob=16/25"));
}

TEST_CASE("born reports exact rationals and tagged decimals") {
    const std::string spec = write_file("fig6.txt", "0\n4\n9\n");
    const std::string state = write_file("state.txt", "amps:\n3/5\n0\n-4/5\n");
    const RunResult all = run("born --spectrum " + spec + " --state " + state);
    CHECK(all.code == 0);
    CHECK(contains(all.out, "P(k=0) = 9/25"));
    CHECK(contains(all.out, "P(k=1) = 0"));
    CHECK(contains(all.out, "P(k=2) = 16/25"));

    const std::string basis = write_file("basis.txt", "amps:\n1\n0\n0\n");
    const RunResult one = run("born --spectrum " + spec + " --state " + state +
                              " --analysis " + basis);
    CHECK(one.code == 0);
    CHECK(contains(one.out, "P = 9/25 (exact)"));

    const std::string ones = write_file("ones.txt", "amps:\n1\n1\n1\nstep: 2\n");
    const RunResult num = run("born --spectrum " + spec + " --state " + state +
                              " --analysis " + ones);
    CHECK(num.code == 0);
    CHECK(contains(num.out, "+/-"));  // numeric value carries its radius
}

TEST_CASE("fidelity against continuous evolution is one on the lattice") {
    const std::string spec = write_file("fig7.txt", "0\n4\n9\n");
    const RunResult r = run("fidelity --spectrum " + spec + " --steps 5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "step = 5"));
    CHECK(contains(r.out, "t = 5/36 turns"));
    CHECK(contains(r.out, "fidelity = 1.000000000000000"));
}

TEST_CASE("period respects the scan cap with a dedicated exit code") {
    const std::string spec = write_file("fig8.txt", "0\n4\n9\n");
    const RunResult r = run("period --spectrum " + spec);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "period = 36"));
    CHECK(contains(r.out, "recurrence_verified = true"));
    CHECK(contains(r.out, "distinct_states_strict = 36"));
    CHECK(contains(r.out, "distinct_states_ray = 36"));

    CHECK(run("period --spectrum " + spec + " --cap 10").code == 3);
}

TEST_CASE("generated spectra re-ingest to the reduction in their header") {
    const std::string path = scratch_dir() + "/random_spec.txt";
    const RunResult gen = run("randspec --seed 7 --dim 4 --bound 30 --out " + path);
    CHECK(gen.code == 0);

    const std::string body = read_file(path);
    CHECK(contains(body, "# random commensurable spectrum: seed=7 dim=4 bound=30"));

    // the header's eps and N must match an actual reduction of the file
    std::istringstream lines(body);
    std::string line, eps, modulus;
    while (std::getline(lines, line)) {
        const auto eps_pos = line.find("# eps=");
        if (eps_pos == 0) {
            const auto space = line.find(' ', 6);
            eps = line.substr(6, space - 6);
            modulus = line.substr(line.find("N=") + 2);
        }
    }
    REQUIRE_FALSE(eps.empty());
    const RunResult red = run("reduce --spectrum " + path);
    CHECK(red.code == 0);
    CHECK(contains(red.out, "eps = " + eps + "\n"));
    CHECK(contains(red.out, "N = " + modulus + "\n"));

    // same seed, same bytes; the round trip is exact
    const std::string again = scratch_dir() + "/random_spec2.txt";
    CHECK(run("randspec --seed 7 --dim 4 --bound 30 --out " + again).code == 0);
    CHECK(read_file(again) == body);
    CHECK(run("reduce --spectrum " + again).out == red.out);
}

TEST_CASE("stats reports reproducible modulus growth") {
    const RunResult a = run("stats --seed 11 --dims 2,3,4 --bound 50 --trials 60");
    CHECK(a.code == 0);
    CHECK(contains(a.out, "# D min_log10_N median_log10_N max_log10_N"));

    const RunResult b = run("stats --seed 11 --dims 2,3,4 --bound 50 --trials 60");
    CHECK(b.out == a.out);

    // medians do not decrease with dimension
    std::istringstream lines(a.out);
    std::string line;
    double previous = -1.0;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::istringstream fields(line);
        int d = 0;
        double low = 0, median = 0, high = 0;
        fields >> d >> low >> median >> high;
        REQUIRE(low <= median);
        REQUIRE(median <= high);
        REQUIRE(median >= previous);
        previous = median;
        ++rows;
    }
    CHECK(rows == 3);

    CHECK(run("stats --seed 11 --dims 1 --bound 50").code == 1);
    CHECK(run("stats --seed 11 --dims banana").code == 1);
}

TEST_CASE("output lands in a file when asked and on stdout otherwise") {
    const std::string spec = write_file("fig9.txt", "0\n4\n9\n");
    const std::string out_path = scratch_dir() + "/report.txt";
    const RunResult direct = run("reduce --spectrum " + spec);
    const RunResult filed = run("reduce --spectrum " + spec + " --out " + out_path);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(read_file(out_path) == direct.out);

    CHECK(run("reduce --spectrum " + spec + " --out /nonexistent/dir/report.txt").code == 1);
}
