#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eulerint/document.hpp"
#include "testutil.hpp"

using namespace eulerint;

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string tmp = (fs::temp_directory_path() / "eulerint_cli_out.txt").string();
    const std::string cmd = std::string(EULERINT_BIN_PATH) + " " + args + " > " + tmp + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::ostringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(status), ss.str()};
}

std::string first_line(const std::string& s) {
    return s.substr(0, s.find('\n'));
}

fs::path write_temp(const std::string& name, const std::string& text) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << text;
    return p;
}

bool cli_available() {
    return fs::exists(EULERINT_BIN_PATH);
}

}  // namespace

TEST_CASE("cli integrate methods agree") {
    if (!cli_available()) return;  // built without the tool
    auto I = testutil::unit_interval();
    Document doc = document_from_vertex_values(I, {Rat(0), Rat(1)});
    fs::path file = write_temp("interval_x.json", serialize_document(doc));

    RunResult closed = run_cli("integrate " + file.string() + " --measure floor --method closed");
    CHECK(closed.exit_code == 0);
    CHECK(first_line(closed.out) == "1");

    for (std::string method : {"levelset", "morse", "pushline"}) {
        RunResult r = run_cli("integrate " + file.string() + " --measure floor --method " + method);
        CHECK(r.exit_code == 0);
        CHECK(first_line(r.out) == first_line(closed.out));
    }

    RunResult riemann =
        run_cli("integrate " + file.string() + " --measure floor --method riemann:1000");
    CHECK(riemann.exit_code == 0);
    CHECK(riemann.out.find("bound 3/1000") != std::string::npos);

    RunResult ceil = run_cli("integrate " + file.string() + " --measure ceil --method closed");
    CHECK(first_line(ceil.out) == "0");
}

TEST_CASE("cli betti0 on a planar cone") {
    if (!cli_available()) return;
    auto K = grid_complex(4, 4, {Rat(0), Rat(4)}, {Rat(0), Rat(4)});
    RatVec vv(K->vertex_count(), Rat(0));
    vv[2 * 5 + 2] = Rat(5, 2);
    Document doc = document_from_vertex_values(K, vv);
    fs::path file = write_temp("cone.json", serialize_document(doc));

    RunResult r = run_cli("integrate " + file.string() + " --measure floor --method betti0");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "5/2");

    // Every method valid for this input returns the same exact value.
    for (std::string method : {"closed", "levelset", "morse", "pushline"}) {
        RunResult other =
            run_cli("integrate " + file.string() + " --measure floor --method " + method);
        CHECK(other.exit_code == 0);
        CHECK(first_line(other.out) == "5/2");
    }

    RunResult bad = run_cli("integrate " + file.string() + " --measure ceil --method betti0");
    CHECK(bad.exit_code == 3);
}

TEST_CASE("cli parse failures exit with 2") {
    if (!cli_available()) return;
    fs::path file = write_temp("broken.json", "{");
    RunResult r = run_cli("integrate " + file.string() + " --measure floor --method closed");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli transform width and dual round-trip") {
    if (!cli_available()) return;
    Document doc = document_from_cfun(cfun_const(testutil::unit_square(), 1));
    fs::path file = write_temp("square.json", serialize_document(doc));

    RunResult width = run_cli("transform " + file.string() + " --op width --xi 1,0");
    CHECK(width.exit_code == 0);
    CHECK(width.out == "xi=1,0 value=1\n");
    RunResult cent = run_cli("transform " + file.string() + " --op centroid --xi 1,0 --xi 1,1");
    CHECK(cent.out == "xi=1,0 value=1/2\nxi=1,1 value=1\n");

    fs::path out = fs::temp_directory_path() / "dual.json";
    RunResult dualed =
        run_cli("transform " + file.string() + " --op dual --out " + out.string());
    CHECK(dualed.exit_code == 0);
    std::ifstream in(out);
    std::ostringstream ss;
    ss << in.rdbuf();
    Document d = parse_document(ss.str());
    CHECK(d.kind == Document::Kind::CellAffine);

    // Width of a non-constructible integrand violates the precondition.
    auto I = testutil::unit_square();
    Document pl = document_from_vertex_values(I, RatVec(4, Rat(1)));
    fs::path plfile = write_temp("pl.json", serialize_document(pl));
    RunResult bad = run_cli("transform " + plfile.string() + " --op width --xi 1,0");
    CHECK(bad.exit_code == 3);
}

TEST_CASE("cli sensor runs deterministically") {
    if (!cli_available()) return;
    const std::string config = R"({
      "grid": {"nx": 10, "ny": 10, "x_range": ["0","10"], "y_range": ["0","10"]},
      "p": "1/4",
      "scene": {"disks": [{"center": ["3","3"], "radius": "1"},
                          {"center": ["7","7"], "radius": "1"}]}
    })";
    fs::path file = write_temp("sensor.json", config);
    fs::path csv1 = fs::temp_directory_path() / "report1.csv";
    fs::path csv2 = fs::temp_directory_path() / "report2.csv";
    RunResult r1 = run_cli("sensor " + file.string() + " --seeds 4 --out " + csv1.string());
    RunResult r2 = run_cli("sensor " + file.string() + " --seeds 4 --out " + csv2.string());
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    std::ifstream f1(csv1), f2(csv2);
    std::ostringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().find("seed,truth,raw_estimate,smoothed_estimate") == 0);

    // Rendering produces one raster per field per seed.
    fs::path dir = fs::temp_directory_path() / "eulerint_render";
    fs::remove_all(dir);
    RunResult r3 = run_cli("sensor " + file.string() + " --seeds 2 --render " + dir.string() +
                           " --out " + csv1.string());
    CHECK(r3.exit_code == 0);
    CHECK(fs::exists(dir / "raw_0.pgm"));
    CHECK(fs::exists(dir / "smoothed_0.pgm"));
    CHECK(fs::exists(dir / "raw_1.pgm"));
    CHECK(fs::exists(dir / "smoothed_1.pgm"));
    CHECK(fs::exists(dir / "network_0.svg"));
    {
        std::ifstream pgm(dir / "raw_0.pgm");
        std::string magic;
        pgm >> magic;
        CHECK(magic == "P2");
    }
}

TEST_CASE("cli sensor rejects bad configs") {
    if (!cli_available()) return;
    fs::path file = write_temp("bad_sensor.json", R"({"p": "1/4"})");
    RunResult r = run_cli("sensor " + file.string() + " --seeds 2");
    CHECK(r.exit_code == 2);
}
