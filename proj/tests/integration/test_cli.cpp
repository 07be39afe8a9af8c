// End-to-end runs of the command-line binary.

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("cbjc_it_" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Run cli(const std::string& args) {
    const fs::path dir = scratch("io");
    const std::string cmd = std::string(CBJC_BINARY) + " " + args + " > " + (dir / "out").string() + " 2> " +
                            (dir / "err").string();
    const int status = std::system(cmd.c_str());
    return {WEXITSTATUS(status), slurp(dir / "out"), slurp(dir / "err")};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

// Value following "key=" in a summary line.
double field(const std::string& text, const std::string& prefix, const std::string& key) {
    for (const auto& l : lines(text)) {
        if (l.rfind(prefix, 0) != 0) continue;
        const auto pos = l.find(key + "=");
        if (pos != std::string::npos) return std::stod(l.substr(pos + key.size() + 1));
    }
    FAIL("missing " << key << " in '" << prefix << "'");
    return 0.0;
}

}  // namespace

TEST_CASE("decay output is deterministic and self-describing") {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    const std::string common = " --engine common-bath --engine traditional --set run.t_max=30";
    REQUIRE(cli("decay --out " + a.string() + common).code == 0);
    REQUIRE(cli("decay --out " + b.string() + common).code == 0);
    const std::string fa = slurp(a / "decay_common-bath.csv");
    const std::string fb = slurp(b / "decay_common-bath.csv");
    // the echoed output directory differs; everything after the comment line must match bit for bit
    CHECK(fa.substr(fa.find('\n')) == fb.substr(fb.find('\n')));
    const auto rows = lines(fa);
    REQUIRE(rows.size() == 63);
    CHECK(rows[0].rfind("# config: system.omega_c=1 ", 0) == 0);
    CHECK(rows[0].find("run.engines=common-bath,traditional") != std::string::npos);
    CHECK(rows[1] == "t,photon,excited,rho_1p1p,rho_1m1m");
    CHECK(rows[2] == "0.00000000000000e+00,1.00000000000000e+00,0.00000000000000e+00,5.00000000000000e-01,"
                     "5.00000000000000e-01");
    CHECK(fs::exists(a / "decay_traditional.csv"));
}

TEST_CASE("t_max = 0 gives the initial row only") {
    const fs::path d = scratch("tzero");
    const Run r = cli("decay --out " + d.string() + " --engine exact --engine iteration --set run.t_max=0");
    REQUIRE(r.code == 0);
    CHECK(lines(slurp(d / "decay_exact.csv")).size() == 3);
    const auto it = lines(slurp(d / "decay_iteration.csv"));
    REQUIRE(it.size() == 3);
    CHECK(it[1] == "t,rho_1p1p,rho_1m1m");
}

TEST_CASE("config file plus flags") {
    const fs::path d = scratch("cfg");
    {
        std::ofstream cfg(d / "run.cfg");
        cfg << "# short run\nrun.t_max = 10\nrun.dt = 1\nrun.engines = common-bath\n";
    }
    const Run r = cli("decay --config " + (d / "run.cfg").string() + " --out " + d.string() + " --no-interference");
    REQUIRE(r.code == 0);
    const auto rows = lines(slurp(d / "decay_common-bath.csv"));
    CHECK(rows.size() == 13);
    CHECK(rows[0].find("run.interference=false") != std::string::npos);
}

TEST_CASE("errors are reported on one line with a nonzero exit") {
    const Run unknown = cli("decay --set nonsense.key=1");
    CHECK(unknown.code != 0);
    CHECK(unknown.err.rfind("error kind=configuration message=", 0) == 0);
    CHECK(lines(unknown.err).size() == 1);

    const Run io = cli("decay --engine common-bath --set run.t_max=1 --out /proc/cbjc_cannot_write");
    CHECK(io.code != 0);
    CHECK(io.err.rfind("error kind=io message=", 0) == 0);
    CHECK(io.err.find("/proc/cbjc_cannot_write") != std::string::npos);

    const Run missing = cli("spectrum --config /nonexistent/file.cfg");
    CHECK(missing.code != 0);
    CHECK(missing.err.rfind("error kind=io", 0) == 0);

    const Run usage = cli("teleport");
    CHECK(usage.code != 0);
    CHECK(usage.err.rfind("error kind=usage", 0) == 0);
}

TEST_CASE("quasidark run reaches the analytic values") {
    const fs::path d = scratch("qd");
    const Run r = cli("quasidark --out " + d.string());
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "quasidark initial=1g", "photon_deviation") < 1e-4);
    CHECK(field(r.out, "quasidark initial=1g", "excited_deviation") < 1e-4);
    CHECK(field(r.out, "quasidark initial=0e", "excited") == doctest::Approx(0.42225).epsilon(1e-4));
    CHECK(fs::exists(d / "quasidark_1g.csv"));
    CHECK(fs::exists(d / "quasidark_0e.csv"));

    const Run single = cli("quasidark --out " + d.string() + " --set bath.alpha_2=0");
    REQUIRE(single.code == 0);
    CHECK(field(single.out, "quasidark initial=1g", "photon") < 1e-4);
}

TEST_CASE("spectrum run") {
    const fs::path d = scratch("spectrum");
    const Run r = cli("spectrum --out " + d.string() + " --set drive.points=201");
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "spectrum interference", "asymmetry_ratio") > 1.0);
    const auto rows = lines(slurp(d / "spectrum_no_interference.csv"));
    CHECK(rows.size() == 203);
    CHECK(rows[1] == "omega_d,photon");

    const Run flat = cli("spectrum --out " + d.string() +
                         " --set drive.omega_d_min=0.97 --set drive.omega_d_max=1.03 --set drive.points=3");
    CHECK(flat.code == 0);
    CHECK(flat.err.find("no interior local maximum") != std::string::npos);

    const Run wide = cli("spectrum --out " + d.string() + " --set system.lambda=0.2 --set drive.points=201");
    REQUIRE(wide.code == 0);
    // no-interference line: peaks=pos:height,pos:height,...
    std::string list = lines(wide.out).at(1);
    list = list.substr(list.find("peaks=") + 6);
    list = list.substr(0, list.find(' '));
    std::vector<double> positions;
    std::istringstream items(list);
    for (std::string item; std::getline(items, item, ',');) positions.push_back(std::stod(item));
    REQUIRE(positions.size() >= 2);
    const double step = 0.8 / 200.0;
    CHECK(std::abs(positions.front() - 0.8) <= step);
    CHECK(std::abs(positions.back() - 1.2) <= step);
}

TEST_CASE("oracle comparison run") {
    const fs::path d = scratch("oracle");
    const Run r = cli("oracle-compare --out " + d.string() + " --set run.t_max=100");
    REQUIRE(r.code == 0);
    CHECK(field(r.out, "oracle iteration_vs_master", "max_population_deviation") < 1e-3);
    CHECK(fs::exists(d / "oracle_exact.csv"));
    CHECK(lines(slurp(d / "oracle_iteration.csv"))[1] ==
          "t,rho_1p1p_iteration,rho_1p1p_master,rho_1m1m_iteration,rho_1m1m_master");
}
