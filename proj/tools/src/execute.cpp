#include "rpalab/session.hpp"
#include "rpalab/suites.hpp"

namespace rpalab {

using namespace rpa;

namespace {

std::string lower(std::string s) {
    for (auto &c : s) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return s;
}

RpaReal real_operand(const Value &v, std::string_view what) {
    const auto *z = std::get_if<RpaComplex>(&v);
    if (!z || !z->is_real()) {
        throw FrontendError("E_TYPE", std::string(what) + " expects a real scalar, got " +
                                          (z ? to_text(*z) : "a " + type_name(v)));
    }
    return z->re();
}

template <class T> const T &typed(const Value &v, std::string_view what, std::string_view expected) {
    if (const auto *x = std::get_if<T>(&v)) {
        return *x;
    }
    throw FrontendError("E_TYPE", std::string(what) + " expects " + std::string(expected) + ", got a " + type_name(v));
}

} // namespace

Output execute(Session &session, const Command &cmd) {
    const auto arg = [&](std::size_t k) { return evaluate(session, *cmd.exprs[k]); };
    Output out;
    switch (cmd.kind) {
    case Command::Kind::Empty:
        break;
    case Command::Kind::Let: {
        Value v = arg(0);
        out.text = cmd.name + " = " + value_text(v);
        out.json = Json{{"name", cmd.name}, {"value", value_json(v)}};
        session.bindings.insert_or_assign(cmd.name, std::move(v));
        break;
    }
    case Command::Kind::Show: {
        const Value v = arg(0);
        out.text = value_text(v);
        out.json = value_json(v);
        break;
    }
    case Command::Kind::Classify: {
        const std::string c = classify(real_operand(arg(0), "classify")).to_string();
        out.text = c;
        out.json = Json{{"classification", c}};
        break;
    }
    case Command::Kind::Cmp: {
        const std::string order =
            lower(to_string(compare(real_operand(arg(0), "cmp"), real_operand(arg(1), "cmp"))));
        out.text = order;
        out.json = Json{{"order", order}};
        break;
    }
    case Command::Kind::Heisenberg: {
        const auto a = arg(0), b = arg(1), psi = arg(2);
        const HeisenbergVerdict v = heisenberg_holds(typed<GridOperator>(a, "heisenberg", "an operator"),
                                                     typed<GridOperator>(b, "heisenberg", "an operator"),
                                                     typed<StepWave>(psi, "heisenberg", "a wave"));
        const std::string c = classify(v.residual).to_string();
        out.text = std::string("holds=") + (v.holds ? "true" : "false") + " residual=" + to_text(v.residual) +
                   " classification=" + c;
        out.json = Json{{"holds", v.holds}, {"residual", to_json(v.residual)}, {"classification", c}};
        break;
    }
    case Command::Kind::Wintner: {
        const auto a = arg(0), b = arg(1), c = arg(2);
        const WintnerVerdict v = wintner_check(typed<GridOperator>(a, "wintner", "an operator"),
                                               typed<GridOperator>(b, "wintner", "an operator"),
                                               typed<RpaComplex>(c, "wintner", "a scalar"));
        out.text = std::string("nonzero=") + (v.nonzero ? "true" : "false") + " trace=" + to_text(v.trace);
        out.json = Json{{"nonzero", v.nonzero}, {"trace", to_json(v.trace)}, {"residual", to_json(v.residual)}};
        break;
    }
    case Command::Kind::EvalAt: {
        const Rational v = eval_at(real_operand(arg(0), "evalat"), cmd.index);
        out.text = to_string(v);
        out.json = Json{{"index", cmd.index}, {"value", to_string(v)}};
        break;
    }
    case Command::Kind::Fuzz: {
        const SuiteReport r = run_suite(cmd.name, cmd.cases.value_or(100), cmd.seed.value_or(session.seed),
                                        session.filter);
        out.text = "fuzz " + r.suite + " [" + r.filter + ", seed " + std::to_string(r.seed) + "]: " +
                   std::to_string(r.passed) + "/" + std::to_string(r.cases) + " passed";
        if (r.counterexample) {
            out.text += "\ncounterexample: " + r.counterexample->dump();
        }
        out.json = to_json(r);
        out.status = r.failed ? 4 : 0;
        break;
    }
    }
    return out;
}

std::string render(const Output &output, Format format) {
    return format == Format::Json ? output.json.dump() : output.text;
}

} // namespace rpalab
