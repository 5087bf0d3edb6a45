#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "qes/cli.hpp"

using nlohmann::json;
using qes::cli::run;

namespace {

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        out.push_back(line);
    }
    return out;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("solve emits exactly the documented keys")
    {
        auto r = run({"solve", "--dim", "3", "--a", "1", "--ell", "0"});
        REQUIRE(r.exit_code == 0);
        auto j = json::parse(r.out);
        std::set<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) {
            keys.insert(it.key());
        }
        CHECK(keys == std::set<std::string>{"a", "b", "c", "dimension", "ell", "ell_prime", "kappa0", "kappa1", "E0",
                                            "E1", "alpha", "beta", "gamma", "residuals"});
        CHECK(j["b"].get<double>() == -11.25);
        CHECK(j["c"].get<double>() == 3.515625);
        CHECK(j["gamma"].get<double>() / j["beta"].get<double>() == -1.875);
        CHECK(j["ell_prime"].is_null());
    }

    TEST_CASE("solve in two dimensions and across l")
    {
        auto two = json::parse(run({"solve", "--dim", "2", "--a", "1", "--m", "0"}).out);
        CHECK(two["b"].get<double>() == -12.0);
        CHECK(two["c"].get<double>() == 4.0);
        CHECK(two["gamma"].get<double>() == -2.0);

        auto r = run({"solve", "--dim", "3", "--a", "1", "--ell", "0", "--ell-prime", "1"});
        REQUIRE(r.exit_code == 0);
        auto cross = json::parse(r.out);
        CHECK(std::abs(cross["b"].get<double>() - -4.2011) < 1e-4);
        CHECK(std::abs(cross["E1"].get<double>() - 7.17713) < 1e-4);
        CHECK(cross["ell_prime"].get<int>() == 1);
        CHECK(cross["residuals"]["eta_form"].is_null());
    }

    TEST_CASE("check exit codes")
    {
        CHECK(run({"check", "--a", "1", "--b", "-11.25", "--c", "3.515625"}).exit_code == 0);
        auto bad = run({"check", "--a", "1", "--b", "0.04082", "--c", "0.18"});
        CHECK(bad.exit_code == 1);
        CHECK(bad.out.find("FAIL") != std::string::npos);
        auto j = json::parse(run({"check", "--a", "1", "--b", "0.04082", "--c", "0.18", "--json"}).out);
        CHECK(j["ground"]["satisfied"].get<bool>());
        CHECK_FALSE(j["excited"]["satisfied"].get<bool>());
        CHECK(std::abs(j["excited"]["residual"].get<double>() - 2.586404412) < 1e-8);
    }

    TEST_CASE("invalid input maps to exit code 2 with a structured record")
    {
        for (const std::vector<std::string>& args :
             {std::vector<std::string>{"solve", "--a", "-1"}, {"solve", "--ell", "2"}, {"check", "--b", "1"},
              {"solve", "--dim", "4"}, {"solve", "--dim", "3", "--m", "0"}, {"frobnicate"},
              {"verify", "--b", "1", "--c", "-1"}}) {
            auto r = run(args);
            CHECK(r.exit_code == 2);
            auto j = json::parse(r.out);
            CHECK(j.contains("error"));
            CHECK(j.contains("message"));
        }
        CHECK(json::parse(run({"solve", "--ell", "2"}).out)["error"] == "NoSolution");
    }

    TEST_CASE("verify verdicts")
    {
        auto ok = run({"verify", "--dim", "2", "--a", "1", "--m", "0"});
        CHECK(ok.exit_code == 0);
        auto j = json::parse(ok.out);
        CHECK(j["verdict"] == "pass");
        CHECK(j["states"].size() == 2);
        CHECK(j["tier"] == "exact");

        auto printed = run({"verify", "--a", "1", "--ell", "0", "--ell-prime", "1", "--b", "-4.2011", "--c", "0.75878"});
        CHECK(printed.exit_code == 0);
        CHECK(json::parse(printed.out)["tier"] == "rounded");

        auto cand = run({"verify", "--a", "1", "--b", "0.04082", "--c", "0.18", "--state", "excited", "--alpha", "1",
                         "--beta", "-0.1787", "--gamma", "0.8485", "--energy", "12.09621"});
        CHECK(cand.exit_code == 1);
        CHECK(json::parse(cand.out)["verdict"] == "fail");
    }

    TEST_CASE("radial CSV is self-describing")
    {
        auto r = run({"radial", "--a", "1", "--ell", "0", "--state", "excited", "--normalized"});
        REQUIRE(r.exit_code == 0);
        auto lines = lines_of(r.out);
        std::size_t i = 0;
        std::set<std::string> header;
        while (i < lines.size() && lines[i].starts_with("#")) {
            header.insert(lines[i].substr(2, lines[i].find('=') - 2));
            ++i;
        }
        for (const char* key : {"a", "b", "c", "state", "kappa", "E", "normalized", "N"}) {
            CHECK(header.count(key) == 1);
        }
        REQUIRE(i < lines.size());
        CHECK(lines[i] == "r,R");
        CHECK(lines.size() - i - 1 == 512);

        double sign_changes = 0;
        double prev = 0.0;
        for (std::size_t k = i + 1; k < lines.size(); ++k) {
            double v = std::stod(lines[k].substr(lines[k].find(',') + 1));
            if (prev != 0.0 && v != 0.0 && std::signbit(v) != std::signbit(prev)) {
                ++sign_changes;
            }
            if (v != 0.0) {
                prev = v;
            }
        }
        CHECK(sign_changes == 1);
    }

    TEST_CASE("radial of printed couplings is flagged as check would")
    {
        auto r = run({"radial", "--a", "1", "--b", "0.04082", "--c", "0.18", "--samples", "8"});
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.find("# ground_constraint=pass") != std::string::npos);
        CHECK(r.out.find("# excited_constraint=fail") != std::string::npos);
    }

    TEST_CASE("output is deterministic and can go to a file")
    {
        std::vector<std::string> args{"radial", "--dim", "2", "--a", "1", "--m", "0", "--normalized"};
        auto first = run(args);
        auto second = run(args);
        CHECK(first.out == second.out);

        auto path = std::filesystem::path(QES_TEST_TMPDIR) / "radial_out.csv";
        args.push_back("--output");
        args.push_back(path.string());
        auto third = run(args);
        CHECK(third.exit_code == 0);
        CHECK(third.out.empty());
        std::ifstream f(path);
        std::stringstream ss;
        ss << f.rdbuf();
        CHECK(ss.str() == first.out);
    }

    TEST_CASE("critique reports every stage")
    {
        auto r = run({"critique"});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("4.09621366269") != std::string::npos);
        auto j = json::parse(run({"critique", "--json"}).out);
        CHECK(j["ground"]["satisfied"].get<bool>());
        CHECK(std::abs(j["ground"]["E0"].get<double>() - 4.096214) < 1e-4);
        CHECK_FALSE(j["excited"]["same_l_satisfied"].get<bool>());
        CHECK(j["candidate"]["max_coefficient_residual"].get<double>() > 0.1);
        CHECK(j["corrected"]["b"].get<double>() == -11.25);
    }

    TEST_CASE("help")
    {
        auto r = run({"--help"});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("verify") != std::string::npos);
    }
}
