#include "wittbox/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wittbox/bounds.hpp"
#include "wittbox/counting.hpp"
#include "wittbox/errors.hpp"
#include "wittbox/parser.hpp"
#include "wittbox/reference_examples.hpp"
#include "wittbox/selftest.hpp"
#include "wittbox/witt_symbolic.hpp"

namespace wittbox {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_count(std::ostream& out, const CountReport& c) {
    out << "cardinality=" << c.cardinality << "\n";
    out << "ord_p=" << c.ord_p.to_string() << "\n";
    out << "ord_q=" << c.ord_q_string() << "\n";
}

void print_bounds(std::ostream& out, const BoundReport& rep, DegreeReading reading) {
    out << "reading=" << to_string(reading) << "\n";
    out << "closeness=" << yes_no(rep.closeness) << "\n";
    for (std::size_t k = 0; k < rep.degrees.size(); ++k) out << "deg.f" << k + 1 << "=" << rep.degrees[k] << "\n";
    for (std::size_t k = 0; k < rep.d_values.size(); ++k) out << "d.f" << k + 1 << "=" << rep.d_values[k] << "\n";
    for (const auto& b : rep.bounds) {
        if (b.value) out << "bound." << b.name << "=" << *b.value << "\n";
        out << "applicable." << b.name << "=" << yes_no(b.applicable) << "\n";
        if (b.divides) out << "verdict." << b.name << "=" << (*b.divides ? "PASS" : "FAIL") << "\n";
    }
}

struct CountFlags {
    std::uint64_t budget = std::uint64_t{1} << 24;
    unsigned threads = 0;
    unsigned partitions = 0;

    CountOptions options() const { return {budget, threads, partitions}; }
};

void add_count_flags(CLI::App* cmd, CountFlags& flags) {
    cmd->add_option("--budget", flags.budget, "Maximum number of box points to enumerate");
    cmd->add_option("--threads", flags.threads, "Worker threads (0 = hardware concurrency)");
    cmd->add_option("--partitions", flags.partitions, "Contiguous index ranges (0 = automatic)");
}

int paper_examples(std::ostream& out) {
    bool ok = true;
    for (const auto& ex : reference_examples()) {
        const ProblemInstance inst = parse_instance(ex.text);
        const CountReport count = count_zeros(inst);
        const BoundReport rep = bound_report(inst, count);
        const std::string key = "example." + ex.name + ".";
        out << key << "cardinality=" << count.cardinality << "\n";
        out << key << "ord_p=" << count.ord_p.to_string() << "\n";
        out << key << "closeness=" << yes_no(rep.closeness) << "\n";
        const BoundEntry* general = rep.find("general");
        if (general->value) out << key << "bound.general=" << *general->value << "\n";
        out << key << "applicable.general=" << yes_no(general->applicable) << "\n";
        out << key << "status=" << to_string(*rep.status()) << "\n";

        bool match = count.cardinality == ex.cardinality && rep.closeness == ex.closeness &&
                     general->applicable == ex.general_bound.has_value() && general->value == ex.general_bound &&
                     *rep.status() != VerifyStatus::fail;
        if (ex.ord_p) match = match && count.ord_p == Valuation(*ex.ord_p);
        out << key << "expected=" << (match ? "match" : "MISMATCH") << "\n";
        ok = ok && match;
    }
    out << "status=" << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? exit_ok : exit_assertion;
}

int selftest(std::ostream& out) {
    bool ok = true;
    for (const auto& suite : run_selftest()) {
        out << "selftest." << suite.name << "=" << (suite.passed ? "PASS" : "FAIL") << "\n";
        out << "selftest." << suite.name << ".checks=" << suite.checks << "\n";
        out << "selftest." << suite.name << ".detail=" << suite.detail << "\n";
        ok = ok && suite.passed;
    }
    out << "status=" << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? exit_ok : exit_assertion;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Witt-vector and Galois-ring toolkit for divisibility of zero counts over boxes", "wittbox"};
    app.require_subcommand(1);

    std::uint32_t p = 2;
    unsigned n = 1, r = 2;
    std::string kind = "sum";
    bool twisted = false;
    auto* polys = app.add_subcommand("witt-polys", "Print the r-fold Witt sum or product polynomials");
    polys->add_option("--p", p, "Prime")->required();
    polys->add_option("--n", n, "Highest index")->required();
    polys->add_option("--r", r, "Number of operands")->check(CLI::Range(2u, 16u));
    polys->add_option("--kind", kind, "sum or product")->required()->check(CLI::IsMember({"sum", "product"}));
    polys->add_flag("--twisted", twisted, "Substitute x_ij -> x_ij^(p^i)");

    std::string file;
    CountFlags flags;
    std::string reading_name = "any";
    auto add_reading = [&](CLI::App* cmd) {
        cmd->add_option("--reading", reading_name, "Degree condition of the second bound case: any or all")
            ->check(CLI::IsMember({"any", "all"}));
    };
    auto* count = app.add_subcommand("count", "Count the zeros of an instance");
    count->add_option("file", file, "Instance file")->required();
    add_count_flags(count, flags);
    auto* bound = app.add_subcommand("bound", "Evaluate the lower bounds of an instance");
    bound->add_option("file", file, "Instance file")->required();
    add_reading(bound);
    auto* verify = app.add_subcommand("verify", "Count and check every applicable bound");
    verify->add_option("file", file, "Instance file")->required();
    add_count_flags(verify, flags);
    add_reading(verify);
    auto* examples = app.add_subcommand("paper-examples", "Replay the published examples");
    auto* self = app.add_subcommand("selftest", "Run the property suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << (e.get_name() == "CallForAllHelp" ? app.help("", CLI::AppFormatMode::All) : app.help());
            return exit_ok;
        }
        err << "error.kind=usage\nerror.message=" << e.what() << "\n";
        return exit_invalid;
    }

    BoundOptions bound_options;
    bound_options.reading = reading_name == "all" ? DegreeReading::all : DegreeReading::any;

    if (*polys) {
        const WittGenRequest req{p, n, r, kind == "sum" ? WittOp::sum : WittOp::product};
        const auto result = twisted ? twisted_digit_polys(req) : *witt_op_polys(req);
        const std::string name = twisted ? (kind == "sum" ? "s" : "m") : (kind == "sum" ? "S" : "M");
        for (std::size_t k = 0; k < result.size(); ++k) out << name << "_" << k << "=" << result[k].to_string() << "\n";
        return exit_ok;
    }
    if (*count) {
        const ProblemInstance inst = parse_instance(read_file(file));
        print_count(out, count_zeros(inst, flags.options()));
        return exit_ok;
    }
    if (*bound) {
        const ProblemInstance inst = parse_instance(read_file(file));
        print_bounds(out, bound_report(inst, std::nullopt, bound_options), bound_options.reading);
        return exit_ok;
    }
    if (*verify) {
        const ProblemInstance inst = parse_instance(read_file(file));
        const CountReport c = count_zeros(inst, flags.options());
        const BoundReport rep = bound_report(inst, c, bound_options);
        print_count(out, c);
        print_bounds(out, rep, bound_options.reading);
        const VerifyStatus status = *rep.status();
        out << "status=" << to_string(status) << "\n";
        return status == VerifyStatus::fail ? exit_assertion : exit_ok;
    }
    if (*examples) return paper_examples(out);
    if (*self) return selftest(out);
    return exit_invalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const ParseError& e) {
        err << "error.kind=" << e.kind() << "\nerror.line=" << e.line() << "\nerror.message=" << e.what() << "\n";
        return exit_invalid;
    } catch (const BudgetExceeded& e) {
        err << "error.kind=" << e.kind() << "\nerror.message=" << e.what() << "\n";
        return exit_budget;
    } catch (const Error& e) {
        err << "error.kind=" << e.kind() << "\nerror.message=" << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "error.kind=internal\nerror.message=" << e.what() << "\n";
        return exit_assertion;
    }
}

}  // namespace wittbox
