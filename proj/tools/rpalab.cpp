// rpalab: command-line laboratory for reduced power algebras.

#include "rpalab/session.hpp"
#include "rpalab/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <unistd.h>

namespace {

using namespace rpalab;

enum Exit { Ok = 0, ParseFailure = 2, DomainFailure = 3, Counterexample = 4 };

struct Runner {
    Session session;
    Format format = Format::Text;
    bool interactive = false;

    void report(std::size_t line, std::optional<std::size_t> column, const std::string &code,
                const std::string &message) const {
        if (format == Format::Json) {
            Json j{{"error", code}, {"message", message}, {"line", line}};
            if (column) {
                j["column"] = *column;
            }
            std::cout << j.dump() << '\n';
            return;
        }
        std::cerr << "error: line " << line << ": " << code << ": " << message << '\n';
    }

    // Returns the exit status of one line.
    int run_line(const std::string &text, std::size_t line) {
        try {
            const Command cmd = parse_command(text);
            if (cmd.kind == Command::Kind::Empty) {
                return Ok;
            }
            const Output out = execute(session, cmd);
            std::cout << render(out, format) << '\n';
            return out.status;
        } catch (const ParseError &e) {
            report(line, e.column(), "E_PARSE", e.what());
            return ParseFailure;
        } catch (const FrontendError &e) {
            report(line, std::nullopt, e.code(), e.what());
            return DomainFailure;
        } catch (const rpa::Error &e) {
            report(line, std::nullopt, std::string(rpa::code_name(e.code())), e.what());
            return DomainFailure;
        }
    }

    int run(std::istream &in) {
        std::string text;
        std::size_t line = 0;
        int status = Ok;
        while (true) {
            if (interactive) {
                std::cout << "rpa> " << std::flush;
            }
            if (!std::getline(in, text)) {
                break;
            }
            ++line;
            status = run_line(text, line);
            if (status != Ok && !interactive) {
                return status;
            }
        }
        return interactive ? Ok : status;
    }
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact reduced power algebra laboratory: scalars, waves, operators and property fuzzing."};
    std::string filter_text = "frechet";
    std::string format_text = "text";
    std::string script;
    std::vector<std::string> commands;
    unsigned trunc = 4;
    std::uint64_t seed = 0;
    bool list = false;
    app.add_option("--filter", filter_text, "frechet | principal:K | superset:M:R1,R2,...")->capture_default_str();
    app.add_option("--trunc", trunc, "truncation order for sqrt and uncertainty")->capture_default_str();
    app.add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "default fuzz seed")->capture_default_str();
    app.add_option("-e,--eval", commands, "run a command (repeatable) instead of a script");
    app.add_flag("--list-suites", list, "print the fuzz suites and exit");
    app.add_option("script", script, "session file, one command per line; '-' or none reads stdin");
    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto &s : suites()) {
            std::cout << s.name << "  " << s.summary << '\n';
        }
        return Ok;
    }

    Runner runner;
    runner.format = format_text == "json" ? Format::Json : Format::Text;
    try {
        runner.session.filter = rpa::Filter::parse(filter_text);
    } catch (const rpa::Error &e) {
        runner.report(0, std::nullopt, std::string(rpa::code_name(e.code())), e.what());
        return DomainFailure;
    }
    runner.session.trunc = trunc;
    runner.session.seed = seed;

    if (!commands.empty()) {
        for (std::size_t k = 0; k < commands.size(); ++k) {
            if (const int status = runner.run_line(commands[k], k + 1); status != Ok) {
                return status;
            }
        }
        return Ok;
    }
    if (script.empty() || script == "-") {
        runner.interactive = script.empty() && isatty(STDIN_FILENO);
        return runner.run(std::cin);
    }
    std::ifstream file(script);
    if (!file) {
        std::cerr << "error: cannot open " << script << '\n';
        return DomainFailure;
    }
    return runner.run(file);
}
