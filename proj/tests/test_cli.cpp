#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "cryocool/bundled.hpp"
#include "cryocool/constants.hpp"
#include "cryocool/format.hpp"
#include "cryocool/mccumber.hpp"
#include "cryocool/spectrum_io.hpp"

namespace fs = std::filesystem;
using namespace cryocool;

namespace {

std::string bin_path() {
    const char* env = std::getenv("CRYOCOOL_BIN");
    REQUIRE(env != nullptr);
    return env;
}

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "cryocool_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out = work_dir() / ("out" + std::to_string(counter) + ".txt");
    fs::path err = work_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = bin_path() + " " + args + " >" + out.string() + " 2>" + err.string();
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

struct Csv {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw std::runtime_error("no column " + name);
    }
    double value(std::size_t row, const std::string& name) const {
        return detail::parse_double(rows.at(row).at(col(name)));
    }
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = line.find(',', pos);
            cells.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (csv.columns.empty())
            csv.columns = cells;
        else
            csv.rows.push_back(cells);
    }
    return csv;
}

}  // namespace

TEST_CASE("sweep: nv-vacuum wavelength grid cools on every row") {
    CliResult r = run_cli("sweep --scenario nv-vacuum --power 0.1 --lambda 722:800:79");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 79);
    for (std::size_t i = 0; i < csv.rows.size(); ++i) REQUIRE(csv.value(i, "delta_T_K") <= 0.0);
    REQUIRE(r.err.find("min delta_T") != std::string::npos);
}

TEST_CASE("sweep: nv-water diameter sweep carries chi < 1 on cooling rows") {
    CliResult r = run_cli("sweep --scenario nv-water --diameter 10e-6:250e-6:25 --lambda 760");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 25);
    csv.col("chi");
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
        REQUIRE(csv.value(i, "delta_T_K") < 0.0);
        REQUIRE(csv.value(i, "chi") < 1.0);
    }
}

TEST_CASE("sweep: siv-vacuum quantum-efficiency sweep is monotone") {
    CliResult r = run_cli("sweep --scenario siv-vacuum --qe 0.6:1.0:9");
    REQUIRE(r.exit_code == 0);
    Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 9);
    double prev = 0.0;
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
        double qe = csv.value(i, "quantum_efficiency");
        double dT = csv.value(i, "delta_T_K");
        if (i > 0) {
            REQUIRE(qe > prev);
            REQUIRE(dT < csv.value(i - 1, "delta_T_K"));  // more efficiency, more cooling
        }
        prev = qe;
    }
}

TEST_CASE("sweep exit codes: usage error 2, whole-grid domain failure 1") {
    REQUIRE(run_cli("sweep --scenario does-not-exist").exit_code == 2);
    REQUIRE(run_cli("sweep --scenario nv-vacuum --lambda banana").exit_code == 2);
    REQUIRE(run_cli("sweep").exit_code == 2);
    CliResult all_domain = run_cli("sweep --scenario nv-vacuum --qe 0.2:0.45:3 --lambda 760");
    REQUIRE(all_domain.exit_code == 1);
    REQUIRE(run_cli("--help").exit_code == 0);
}

TEST_CASE("spectrum mean-lambda prints the bundled means") {
    CliResult nv = run_cli("spectrum mean-lambda bundled:nv-emission");
    REQUIRE(nv.exit_code == 0);
    double nv_nm = detail::parse_double(detail::trim(nv.out.substr(nv.out.find('=') + 1)));
    REQUIRE(std::abs(nv_nm - 721.0) < 2.0);
    CliResult siv = run_cli("spectrum mean-lambda bundled:siv-pl");
    REQUIRE(siv.exit_code == 0);
    double siv_nm = detail::parse_double(detail::trim(siv.out.substr(siv.out.find('=') + 1)));
    REQUIRE(std::abs(siv_nm - 741.0) < 2.0);
}

TEST_CASE("spectrum derive-siv-abs output passes the reciprocity round trip") {
    fs::path out = work_dir() / "siv_abs.csv";
    CliResult r = run_cli("spectrum derive-siv-abs --T 295 --zpl 738e-9 --out " + out.string());
    REQUIRE(r.exit_code == 0);
    spectra::Spectrum abs = spectra::load_spectrum_file(out.string());
    REQUIRE(abs.kind() == spectra::SpectrumKind::CrossSection);
    const auto& se = spectra::bundled::siv_emission();
    auto levels = spectra::bundled::siv_doublet();
    REQUIRE(abs.size() == se.size());
    for (std::size_t i = 0; i < abs.size(); ++i) {
        if (se.values()[i] <= 0.0) continue;
        double back = abs.values()[i] * spectra::mccumber_ratio(abs.wavelengths()[i], 295.0, levels);
        REQUIRE_THAT(back, Catch::Matchers::WithinRel(se.values()[i], 1e-9));
    }
}

TEST_CASE("spectrum calibrate-nv-abs pins the anchor row") {
    fs::path rel = work_dir() / "rel.csv";
    {
        std::ofstream f(rel);
        f << "# kind=intensity_arb\n532,1.0\n600,0.8\n700,0.5\n";
    }
    fs::path out = work_dir() / "cal.csv";
    CliResult r = run_cli("spectrum calibrate-nv-abs " + rel.string() +
                          " --anchor 532e-9:0.95e-20 --out " + out.string());
    REQUIRE(r.exit_code == 0);
    spectra::Spectrum cal = spectra::load_spectrum_file(out.string());
    REQUIRE(cal.values()[0] == 0.95e-20);
    REQUIRE_THAT(cal.values()[2], Catch::Matchers::WithinRel(0.475e-20, 1e-12));
}

TEST_CASE("figure fig2a emits three curves, each crossing zero") {
    fs::path dir = work_dir() / "fig2a";
    fs::create_directories(dir);
    CliResult r = run_cli("figure fig2a --outdir " + dir.string());
    REQUIRE(r.exit_code == 0);
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path().string());
    REQUIRE(files.size() == 3);
    for (const auto& f : files) {
        Csv csv = parse_csv(slurp(f));
        bool heating = false, cooling = false;
        for (std::size_t i = 0; i < csv.rows.size(); ++i) {
            double dT = csv.value(i, "delta_T_K");
            heating |= dT > 0.0;
            cooling |= dT < 0.0;
        }
        REQUIRE(heating);
        REQUIRE(cooling);
    }
    REQUIRE(run_cli("figure fig9z").exit_code == 2);
}

TEST_CASE("figure fig6b is byte-identical across runs and thread counts") {
    fs::path a = work_dir() / "fig6b_a";
    fs::path b = work_dir() / "fig6b_b";
    fs::create_directories(a);
    fs::create_directories(b);
    REQUIRE(run_cli("figure fig6b --outdir " + a.string()).exit_code == 0);
    REQUIRE(run_cli("figure fig6b --outdir " + b.string() + " --threads 4").exit_code == 0);
    std::size_t compared = 0;
    for (const auto& e : fs::directory_iterator(a)) {
        fs::path other = b / e.path().filename();
        REQUIRE(fs::exists(other));
        REQUIRE(slurp(e.path()) == slurp(other));
        ++compared;
    }
    REQUIRE(compared == 5);
}

TEST_CASE("scenario files load directly and via CRYOCOOL_DATA_PATH") {
    fs::path dir = work_dir() / "scenarios";
    fs::create_directories(dir);
    fs::path file = dir / "hot-nv.scenario";
    {
        CliResult dump = run_cli("sweep --scenario nv-vacuum --lambda 760 --out " +
                                 (work_dir() / "dump.csv").string());
        REQUIRE(dump.exit_code == 0);
        std::istringstream in(slurp(work_dir() / "dump.csv"));
        std::ofstream out(file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("# ", 0) == 0 && line.find('=') != std::string::npos &&
                line.rfind("# note", 0) != 0)
                out << line.substr(2) << "\n";
        }
    }
    CliResult direct = run_cli("sweep --scenario " + file.string() + " --lambda 760");
    REQUIRE(direct.exit_code == 0);

    fs::path cwd_relative = file.filename();
    std::string env_cmd = "CRYOCOOL_DATA_PATH=" + dir.string() + " " + bin_path() +
                          " sweep --scenario " + cwd_relative.string() + " --lambda 760 >" +
                          (work_dir() / "env_out.txt").string() + " 2>/dev/null";
    int status = std::system(env_cmd.c_str());
    REQUIRE(WIFEXITED(status));
    REQUIRE(WEXITSTATUS(status) == 0);
    Csv a = parse_csv(direct.out);
    Csv b = parse_csv(slurp(work_dir() / "env_out.txt"));
    REQUIRE(a.rows == b.rows);
}

TEST_CASE("solvent files swap the scenario solvent") {
    fs::path file = work_dir() / "solvents.csv";
    {
        std::ofstream f(file);
        f << "# test solvents\nsyrup, 3.456e-5, 700, 160\n";
    }
    CliResult r = run_cli("sweep --scenario nv-water --lambda 760 --solvents-file " + file.string() +
                          " --solvent syrup");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("env.solvent.name = syrup") != std::string::npos);
    REQUIRE(run_cli("sweep --scenario nv-water --lambda 760 --solvents-file " + file.string() +
                    " --solvent tar")
                .exit_code == 2);
    CliResult builtin = run_cli("sweep --scenario nv-water --lambda 760 --solvent H2O");
    REQUIRE(builtin.exit_code == 0);
    REQUIRE(builtin.out.find("env.solvent.A_K = 570.58") != std::string::npos);
}

TEST_CASE("list names the builtins") {
    CliResult r = run_cli("list");
    REQUIRE(r.exit_code == 0);
    for (const char* needle : {"nv-vacuum", "nv-water", "siv-vacuum", "nv-emission", "D2O"})
        REQUIRE(r.out.find(needle) != std::string::npos);
}
