#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coha/exterior.hpp"
#include "coha/report.hpp"

namespace coha::cli {

enum class Format { text, json };

struct CliConfig {
    std::string command;  // verify | apply | cartan | report-all
    int n = 0;
    std::string subcheck;
    Format format = Format::text;
    int jobs = 1;
    std::string op;
    std::string state;
};

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

// Parse failure with a 0-based character offset into the input.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::invalid_argument(message), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Accepts a bare monomial ("0,1,3", "" for the unit, any order; sorted
// with sign), the printed term grammar ("+1 * [0,1] -1/2 * [2]") or a
// JSON array of {"coeff": "p/q", "index": [..]} objects.
ExteriorElement parse_element(const std::string& text, int n);

std::string element_json(const ExteriorElement& a);
std::string report_json(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

const std::vector<std::string>& subchecks();
// Largest n accepted per subcheck; COHA_MAX_N (if set) replaces every cap.
int max_n(const std::string& subcheck);

VerificationReport run_subcheck(const std::string& subcheck, int n, int jobs);

// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coha::cli
