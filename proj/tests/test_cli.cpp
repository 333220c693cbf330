#include "qfunc/cli.hpp"

#include "helpers.hpp"
#include "qfunc/frft.hpp"
#include "qfunc/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qfunc;
using qfunc::testing::dft_matrix;
using qfunc::testing::diff;

namespace {

namespace fs = std::filesystem;

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qfunc_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("mpoly reports the polynomial and the scalar power") {
    TempDir dir;
    const fs::path f3 = dir.path / "f3.json";
    write_json_file(f3, matrix_to_json(dft_matrix(3)));

    const auto r = invoke({"mpoly", f3.string()});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out.find("x^4 - 1; m=4, tau=1") != std::string::npos);
}

TEST_CASE("mpoly on the identity") {
    TempDir dir;
    const fs::path id = dir.path / "id.json";
    write_json_file(id, matrix_to_json(CMatrix::Identity(2, 2)));

    const auto r = invoke({"mpoly", id.string()});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out.find("x - 1; m=1, tau=1") != std::string::npos);
}

TEST_CASE("mpoly when no scalar power exists") {
    TempDir dir;
    CMatrix u(2, 2);
    u << Complex{1.0}, Complex{0.0}, Complex{0.0}, std::polar(1.0, 0.3);
    const fs::path p = dir.path / "u.json";
    write_json_file(p, matrix_to_json(u));

    const auto r = invoke({"mpoly", p.string()});
    CHECK(r.code == cli::kExitMathError);
    CHECK(r.out.find("no m <= 64") != std::string::npos);
    CHECK(r.out.find("x^2") != std::string::npos);
}

TEST_CASE("mpoly error paths") {
    TempDir dir;
    SUBCASE("missing file") {
        const auto r = invoke({"mpoly", (dir.path / "absent.json").string()});
        CHECK(r.code == cli::kExitUsage);
    }
    SUBCASE("malformed json") {
        const fs::path p = dir.path / "broken.json";
        std::ofstream(p) << "{not json";
        const auto r = invoke({"mpoly", p.string()});
        CHECK(r.code == cli::kExitUsage);
    }
    SUBCASE("non-unitary matrix") {
        const fs::path p = dir.path / "nonunitary.json";
        write_json_file(p, matrix_to_json(2.0 * CMatrix::Identity(2, 2)));
        const auto r = invoke({"mpoly", p.string()});
        CHECK(r.code == cli::kExitMathError);
    }
    SUBCASE("no arguments") {
        const auto r = invoke({});
        CHECK(r.code == cli::kExitUsage);
    }
}

TEST_CASE("build produces artifacts and a passing report") {
    TempDir dir;
    const fs::path f3 = dir.path / "f3.json";
    write_json_file(f3, matrix_to_json(dft_matrix(3)));
    const fs::path out = dir.path / "out";

    const auto r = invoke({"build", "--matrix", f3.string(), "--frft", "0.4", "--out",
                           out.string(), "--seed", "99"});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out.find("verdict: pass") != std::string::npos);

    for (const char* name : {"prep_matrix.json", "coeff_matrix.json", "ancilla_matrix.json",
                             "circuit.json", "report.json"}) {
        CHECK(fs::exists(out / name));
    }

    // emitted matrices re-parse to the same bits
    const CMatrix prep = matrix_from_json(read_json_file(out / "prep_matrix.json"));
    const CMatrix reparsed =
        matrix_from_json(nlohmann::json::parse(matrix_to_json(prep).dump()));
    CHECK(prep == reparsed);

    // identical config and seed give identical report bytes
    const std::string first = slurp(out / "report.json");
    const auto again = invoke({"build", "--matrix", f3.string(), "--frft", "0.4", "--out",
                               out.string(), "--seed", "99"});
    CHECK(again.code == cli::kExitPass);
    CHECK(slurp(out / "report.json") == first);
}

TEST_CASE("build from a circuit input uses its gate count for the bounds") {
    TempDir dir;
    const fs::path qft = dir.path / "qft3.json";
    write_json_file(qft, circuit_to_json(qft_circuit(3)));
    const fs::path out = dir.path / "out";

    const auto r = invoke({"build", "--circuit", qft.string(), "--fn", "identity", "--out",
                           out.string()});
    CHECK(r.code == cli::kExitPass);
    const auto report = read_json_file(out / "report.json");
    CHECK(report["cost"]["K"].get<int>() == 7);  // 3 + 3 + 1 gates
    CHECK(report["cost"]["bound_A"].get<int>() == 14 * 3 * 7);
}

TEST_CASE("build rejects a function off the unit circle") {
    TempDir dir;
    const fs::path f3 = dir.path / "f3.json";
    write_json_file(f3, matrix_to_json(dft_matrix(3)));

    nlohmann::json spec{{"variant", "samples"},
                        {"m", 4},
                        {"tau", {1.0, 0.0}},
                        {"samples", {{1.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}}}};
    const fs::path sp = dir.path / "spec.json";
    write_json_file(sp, spec);

    const auto r = invoke({"build", "--matrix", f3.string(), "--spec", sp.string()});
    CHECK(r.code == cli::kExitMathError);
    CHECK(r.err.find("|f(i)| = 2") != std::string::npos);
}

TEST_CASE("build rejects a power that is not scalar, with a hint") {
    TempDir dir;
    CMatrix u(2, 2);
    u << Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{0.0, 1.0};
    const fs::path p = dir.path / "u.json";
    write_json_file(p, matrix_to_json(u));

    const auto r = invoke({"build", "--matrix", p.string(), "--fn", "identity", "--m", "2"});
    CHECK(r.code == cli::kExitMathError);
    CHECK(r.err.find("m=4") != std::string::npos);
}

TEST_CASE("build wants exactly one function source") {
    TempDir dir;
    const fs::path f3 = dir.path / "f3.json";
    write_json_file(f3, matrix_to_json(dft_matrix(3)));
    const auto r = invoke({"build", "--matrix", f3.string()});
    CHECK(r.code == cli::kExitUsage);
}

TEST_CASE("simulate runs a circuit file") {
    TempDir dir;
    const fs::path qft1 = dir.path / "qft1.json";
    write_json_file(qft1, circuit_to_json(qft_circuit(1)));
    const fs::path out = dir.path / "state.json";

    const auto r = invoke({"simulate", "--circuit", qft1.string(), "--out", out.string()});
    CHECK(r.code == cli::kExitPass);
    const CVector v = state_from_json(read_json_file(out));
    REQUIRE(v.size() == 2);
    CHECK(std::abs(v[0] - Complex{1.0 / std::sqrt(2.0)}) < 1e-12);
    CHECK(std::abs(v[1] - Complex{1.0 / std::sqrt(2.0)}) < 1e-12);
}

TEST_CASE("frft command matches the library route") {
    TempDir dir;
    const fs::path in = dir.path / "in.json";
    const fs::path out = dir.path / "out.json";

    CVector psi = CVector::Zero(4);
    psi[1] = 1.0;
    write_json_file(in, state_to_json(psi));

    const auto r = invoke({"frft", "--n", "2", "--x", "0.7853981633974483", "--state",
                           in.string(), "--out", out.string()});
    CHECK(r.code == cli::kExitPass);
    const CVector got = state_from_json(read_json_file(out));
    CHECK(diff(got, frft_apply({2, 0.7853981633974483}, psi)) < 1e-12);
}

TEST_CASE("limitation command") {
    TempDir dir;
    SUBCASE("non-binomial case") {
        CMatrix u(2, 2);
        u << Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{0.0, 1.0};
        const fs::path p = dir.path / "u.json";
        write_json_file(p, matrix_to_json(u));
        const auto r = invoke({"limitation", p.string()});
        CHECK(r.code == cli::kExitPass);
        CHECK(r.out.find("first row squared norm: 3") != std::string::npos);
    }
    SUBCASE("binomial case is not applicable") {
        const fs::path p = dir.path / "f3.json";
        write_json_file(p, matrix_to_json(dft_matrix(3)));
        const auto r = invoke({"limitation", p.string()});
        CHECK(r.code == cli::kExitMathError);
    }
}

TEST_CASE("cost command") {
    SUBCASE("single row") {
        const auto r = invoke({"cost", "--k", "10", "--m", "4"});
        CHECK(r.code == cli::kExitPass);
        CHECK(r.out.find("m,mu,bound_A,bound_small,total_bound") != std::string::npos);
        CHECK(r.out.find("4,2,420,") != std::string::npos);
    }
    SUBCASE("bound is zero without ancillas") {
        const auto r = invoke({"cost", "--k", "10", "--m", "1"});
        CHECK(r.out.find("1,0,0,0,0") != std::string::npos);
    }
    SUBCASE("sweep stays monotone") {
        TempDir dir;
        const fs::path csv = dir.path / "table.csv";
        const auto r = invoke({"cost", "--k", "10", "--sweep", "--out", csv.string()});
        CHECK(r.code == cli::kExitPass);

        std::ifstream in(csv);
        std::string line;
        std::getline(in, line);  // header
        long long prev_a = -1;
        long long prev_total = -1;
        int rows = 0;
        while (std::getline(in, line)) {
            const auto c1 = line.find(',');
            const auto c2 = line.find(',', c1 + 1);
            const auto c3 = line.find(',', c2 + 1);
            const auto c4 = line.find(',', c3 + 1);
            const long long bound_a = std::stoll(line.substr(c2 + 1, c3 - c2 - 1));
            const long long total = std::stoll(line.substr(c4 + 1));
            CHECK(bound_a >= prev_a);
            CHECK(total >= prev_total);
            prev_a = bound_a;
            prev_total = total;
            ++rows;
        }
        CHECK(rows == 63);
    }
}
