#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace cob::cli;
    CLI::App app{"Exact change-of-basis matrices between polynomial bases"};
    app.require_subcommand(1);
    app.footer(grammar_help());

    std::string format = "text";
    auto check_format = [](const std::string& s) -> std::string {
        try {
            parse_format(s);
            return "";
        } catch (const UsageError& e) {
            return e.what();
        }
    };

    MatrixRequest mreq;
    auto* matrix = app.add_subcommand("matrix", "Print the change-of-basis matrix between two bases");
    matrix->add_option("--from", mreq.from, "Source basis descriptor")->required();
    matrix->add_option("--to", mreq.to, "Target basis descriptor")->required();
    matrix->add_option("--n", mreq.n, "Highest degree of the window")->required();
    matrix->add_option("--m", mreq.m, "Lowest degree of the window")->default_val(0);
    matrix->add_option("--format", format, "text, csv or json")->check(check_format);
    matrix->add_option("--decimal", mreq.decimals, "Append decimal approximations with this many places");

    ConvertRequest creq;
    int cn = -1, cm = -1;
    auto* convert = app.add_subcommand("convert", "Express a polynomial in a basis");
    convert->add_option("polynomial", creq.polynomial, "Polynomial in x, e.g. 16x^7-12x^5+5x^4+3x^2")->required();
    convert->add_option("--to", creq.to, "Target basis descriptor")->required();
    auto* opt_n = convert->add_option("--n", cn, "Highest degree of the window");
    auto* opt_m = convert->add_option("--m", cm, "Lowest degree of the window");
    convert->add_option("--format", format, "text, csv or json")->check(check_format);
    convert->add_option("--decimal", creq.decimals, "Append decimal approximations with this many places");

    VerifyRequest vreq;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", vreq.suite, "fixtures, groupoid or oracle")->required();
    verify->add_option("--n", vreq.n, "Highest degree of the groupoid window")->default_val(9);
    verify->add_option("--m", vreq.m, "Lowest degree of the groupoid window")->default_val(3);
    verify->add_option("--max-n", vreq.max_n, "Largest n for the oracle sweep")->default_val(12);
    verify->add_option("--bases", vreq.bases, "Comma-separated descriptors for the groupoid suite")->delimiter(',');
    verify->add_flag("--verbose,-v", vreq.verbose, "Print passing checks too");

    auto* list = app.add_subcommand("list", "List the families and the descriptor grammar");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    if (*matrix) {
        mreq.format = parse_format(format);
        return cmd_matrix(mreq, std::cout, std::cerr);
    }
    if (*convert) {
        creq.format = parse_format(format);
        if (*opt_n) creq.n = cn;
        if (*opt_m) creq.m = cm;
        return cmd_convert(creq, std::cout, std::cerr);
    }
    if (*verify) return cmd_verify(vreq, std::cout, std::cerr);
    if (*list) return cmd_list(std::cout);
    return Usage;
}
