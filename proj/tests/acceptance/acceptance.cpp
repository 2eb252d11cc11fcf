// Acceptance run: one PASS/FAIL line per criterion, exit 1 on any failure.

#include "rpalab/session.hpp"
#include "rpalab/suites.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace rpa;
using rpalab::run_suite;

namespace {

class Criterion {
  public:
    explicit Criterion(int number) : number_(number), start_(std::chrono::steady_clock::now()) {}

    void check(bool ok, const std::string &what) {
        ok_ = ok_ && ok;
        if (!ok) failures_.push_back(what);
        ++checks_;
    }

    void suite(const std::string &name, std::uint64_t cases, std::uint64_t seed, const Filter &filter) {
        try {
            const rpalab::SuiteReport r = run_suite(name, cases, seed, filter);
            std::ostringstream what;
            what << name << "@" << filter.to_string() << " " << r.passed << "/" << r.cases;
            if (r.counterexample) what << " first counterexample " << r.counterexample->dump();
            check(r.failed == 0 && r.passed == cases, what.str());
            cases_ += r.cases;
        } catch (const std::exception &e) {
            check(false, name + "@" + filter.to_string() + " threw " + e.what());
        }
    }

    bool report() const {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::cout << "criterion " << number_ << ": " << (ok_ ? "PASS" : "FAIL") << " (" << checks_
                  << " checks, " << cases_ << " random cases, " << std::fixed;
        std::cout.precision(2);
        std::cout << secs << "s)\n";
        for (const auto &f : failures_) std::cout << "  failed: " << f << "\n";
        return ok_;
    }

  private:
    int number_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    int checks_ = 0;
    std::uint64_t cases_ = 0;
    std::vector<std::string> failures_;
};

const std::vector<Filter> &filter_kinds() {
    static const std::vector<Filter> kinds = {Filter::frechet(), Filter::principal(5),
                                              Filter::superset(IndexSet::evens())};
    return kinds;
}

std::string eval(rpalab::Session &s, const std::string &line) {
    return rpalab::execute(s, rpalab::parse_command(line)).text;
}

struct Process {
    int status = -1;
    std::string out;
};

Process run_cli(const std::string &args) {
    Process p;
    const std::string cmd = std::string("\"") + RPALAB_PATH + "\" " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) return p;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return p;
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

bool criterion_1() {
    Criterion c(1);
    for (const auto &f : filter_kinds()) {
        c.suite("ring", 1000, 101, f);
        c.suite("order", 1000, 102, f);
    }
    return c.report();
}

bool criterion_2() {
    Criterion c(2);
    for (Natural k : {1, 7, 100}) c.suite("oracle", 1000, 200 + k, Filter::principal(k));
    return c.report();
}

bool criterion_3() {
    Criterion c(3);
    c.suite("pointwise", 200, 301, Filter::frechet());
    return c.report();
}

bool criterion_4() {
    Criterion c(4);
    for (const auto &f : filter_kinds()) c.suite("complex", 500, 401, f);

    const Germ even(2, {Puiseux::constant(1), Puiseux()});
    const Germ odd(2, {Puiseux(), Puiseux::constant(1)});
    {
        const Filter f = Filter::frechet();
        const RpaReal a(even, f), b(odd, f);
        c.check((a * b).is_zero() && !a.is_zero() && !b.is_zero(), "even*odd is a zero divisor pair under frechet");
    }
    for (Natural k : {4, 5}) {
        const Filter f = Filter::principal(k);
        const RpaReal a(even, f), b(odd, f);
        c.check((a * b).is_zero() && (a.is_zero() || b.is_zero()),
                "a factor collapses under " + f.to_string());
    }
    return c.report();
}

bool criterion_5() {
    Criterion c(5);
    for (const auto &f : filter_kinds()) c.suite("wave", 500, 501, f);

    const Filter f = Filter::frechet();
    const Grid g({RpaReal::embed(0, f), RpaReal::omega(f)});
    const StepWave w = make_wave(g, {RpaComplex(RpaReal(Germ(Puiseux::monomial(1, -1)), f))});
    c.check(integrate(w) == RpaComplex::embed(1, 0, f), "integral of 1/n over [0, omega) is 1");
    return c.report();
}

bool criterion_6() {
    Criterion c(6);
    for (const auto &f : filter_kinds()) c.suite("heisenberg", 500, 601, f);

    for (const auto &f : filter_kinds()) {
        const Grid g = Grid::unit(2, f);
        const RpaComplex one = RpaComplex::embed(1, 0, f), zero = RpaComplex::embed(0, 0, f);
        const RpaComplex i = RpaComplex::i(f);
        const GridOperator sx(g, {{zero, one}, {one, zero}});
        const GridOperator sy(g, {{zero, -i}, {i, zero}});
        const StepWave psi = make_wave(g, {one, zero});
        const HeisenbergVerdict plain = heisenberg_holds(sx, sy, psi);
        c.check(plain.holds && plain.residual.is_zero(), "Pauli residual 0 under " + f.to_string());

        const RpaComplex inv_n(RpaReal(Germ(Puiseux::monomial(1, -1)), f));
        const HeisenbergVerdict scaled = heisenberg_holds(sx, inv_n * sy, psi);
        c.check(scaled.holds && scaled.residual.is_zero(), "(1/n) Pauli residual 0 under " + f.to_string());
    }
    return c.report();
}

bool criterion_7() {
    Criterion c(7);
    for (const auto &f : filter_kinds()) c.suite("proof-chain", 300, 701, f);
    return c.report();
}

bool criterion_8() {
    Criterion c(8);
    for (const auto &f : filter_kinds()) {
        c.suite("triangle", 200, 801, f);
        c.suite("bounds", 200, 802, f);
        c.suite("trace", 200, 803, f);
        c.suite("wintner", 200, 804, f);
    }
    // Deterministic sweep: every dimension 2..4 and every exponent 1..5.
    Sampler s(805, SampleOptions{.integral_exponents = true, .max_modulus = 2, .max_terms = 2,
                                 .max_numerator = 3, .max_denominator = 2, .max_exponent = 1});
    for (const auto &f : filter_kinds()) {
        for (std::size_t dim = 2; dim <= 4; ++dim) {
            const Grid g = s.grid(dim, f);
            const GridOperator a = s.op(g), b = s.op(g);
            for (unsigned n = 1; n <= 5; ++n) {
                c.check(power_commutator_residual(a, b, n).is_zero(),
                        "power identity dim " + std::to_string(dim) + " n " + std::to_string(n) + " under " +
                            f.to_string());
            }
        }
    }
    return c.report();
}

bool criterion_9() {
    Criterion c(9);
    for (const auto &f : filter_kinds()) {
        const RpaReal one = RpaReal::embed(1, f);
        const RpaReal n = RpaReal::omega(f);
        const auto kind = [](const RpaReal &x) { return classify(x).to_string(); };
        // Under a principal filter n is an ordinary number, so every unit is Finite.
        const std::string small = f.is_principal() ? "Finite" : "Infinitesimal";
        const std::string large = f.is_principal() ? "Finite" : "InfinitelyLarge";
        c.check(kind(one) == "Finite", "classify(1) under " + f.to_string());
        c.check(kind(rescale(one, n)) == small, "classify(rescale(1, n)) under " + f.to_string());
        c.check(kind(rescale(n * n, n)) == large, "classify(rescale(n^2, n)) under " + f.to_string());
    }
    rpalab::Session s;
    c.check(eval(s, "classify 1") == "Finite", "cli classify 1");
    c.check(eval(s, "classify rescale(1, n)") == "Infinitesimal", "cli classify rescale(1, n)");
    c.check(eval(s, "classify rescale(n^2, n)") == "InfinitelyLarge", "cli classify rescale(n^2, n)");
    return c.report();
}

bool criterion_10() {
    Criterion c(10);
    for (const auto &f : filter_kinds()) c.suite("roundtrip", 200, 1001, f);

    const std::string scripts = RPA_CLI_SCRIPTS;
    const Process pauli = run_cli("--format json \"" + scripts + "/pauli.rpa\"");
    const std::vector<std::string> out = lines(pauli.out);
    const std::string verdict =
        R"({"holds":true,"residual":{"modulus":1,"classes":[[]]},"classification":"Infinitesimal"})";
    c.check(pauli.status == 0, "pauli script exit " + std::to_string(pauli.status));
    c.check(out.size() == 5 && out[3] == verdict && out[4] == verdict, "pauli script JSON verdict: " + pauli.out);

    const Process broken = run_cli("--format json \"" + scripts + "/broken.rpa\"");
    c.check(broken.status == 4, "broken suite exit " + std::to_string(broken.status));
    try {
        const Json report = Json::parse(broken.out);
        c.check(report.at("failed").get<int>() > 0 && report.contains("counterexample") &&
                    report["counterexample"].contains("inputs"),
                "broken suite serialized counterexample");
    } catch (const std::exception &e) {
        c.check(false, std::string("broken suite output is not JSON: ") + e.what());
    }
    return c.report();
}

} // namespace

int main() {
    bool ok = true;
    for (auto *criterion : {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
                            criterion_7, criterion_8, criterion_9, criterion_10}) {
        ok = criterion() && ok;
    }
    return ok ? 0 : 1;
}
