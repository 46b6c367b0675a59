// Command implementations behind the cobtool executable.
#pragma once

#include "cob/basis.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cob::cli {

enum ExitCode { Ok = 0, Failure = 1, Usage = 2 };

// Bad command-line input: unparsable descriptors or polynomials, bases that do
// not share a span, polynomials outside the target span.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// family[:asc|:desc][:alt][:sup|:sup-][@N|@+o]
struct Descriptor {
    Family family = Family::Monomial;
    std::optional<Orientation> orientation;
    bool alternating = false;
    bool superposed = false;
    int sup_sign = 1;
    std::optional<families::TruncSource> trunc;
    std::string text;
};

Descriptor parse_descriptor(const std::string& text);

// Builds the basis on the window [m, n]. A monomial basis takes the degree step
// of its partner so that both sides span the same space.
BasisSpec resolve(const Descriptor& d, int m, int n, int partner_step = 1);

std::string grammar_help();

enum class Format { Text, Csv, Json };
Format parse_format(const std::string& name);

struct MatrixRequest {
    std::string from;
    std::string to;
    int n = 0;
    int m = 0;
    Format format = Format::Text;
    int decimals = -1;
};

struct ConvertRequest {
    std::string polynomial;
    std::string to;
    std::optional<int> n;
    std::optional<int> m;
    Format format = Format::Text;
    int decimals = -1;
};

struct VerifyRequest {
    std::string suite;
    int n = 9;
    int m = 3;
    int max_n = 12;
    std::vector<std::string> bases;
    bool verbose = false;
};

int cmd_matrix(const MatrixRequest& req, std::ostream& out, std::ostream& err);
int cmd_convert(const ConvertRequest& req, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err);
int cmd_list(std::ostream& out);

}  // namespace cob::cli
