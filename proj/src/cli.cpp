#include "coha/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "coha/operators.hpp"
#include "coha/relations.hpp"
#include "coha/suites.hpp"

namespace coha::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

// Cursor over the element text used by the term-grammar parser.
class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    std::size_t pos() const { return pos_; }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string take_while(const std::string& allowed) {
        const auto start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || allowed.find(text_[pos_]) != std::string::npos))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    int integer() {
        skip_space();
        const auto start = pos_;
        std::string digits = take_while("");
        if (digits.empty()) fail("expected a non-negative integer");
        try {
            return std::stoi(digits);
        } catch (const std::out_of_range&) {
            throw ParseError(start, "integer too large");
        }
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

void add_checked(ExteriorElement& out, const std::vector<int>& gens, const Rational& c, int n, std::size_t pos) {
    for (int g : gens)
        if (g >= n) throw ParseError(pos, "generator " + std::to_string(g) + " outside [0, " + std::to_string(n) + ")");
    out += canonicalize(gens, n) * c;
}

// [i1,i2,...] with possibly no entries.
std::vector<int> index_list(Scanner& s) {
    std::vector<int> gens;
    s.expect('[');
    s.skip_space();
    if (s.peek() == ']') {
        s.expect(']');
        return gens;
    }
    while (true) {
        gens.push_back(s.integer());
        s.skip_space();
        if (s.peek() == ',') {
            s.expect(',');
            continue;
        }
        s.expect(']');
        return gens;
    }
}

ExteriorElement parse_terms(const std::string& text, int n) {
    Scanner s(text);
    ExteriorElement out(n);
    while (!s.done()) {
        const auto start = s.pos();
        if (s.peek() != '+' && s.peek() != '-') s.fail("expected a signed coefficient such as +1 or -1/2");
        std::string coeff(1, s.peek());
        s.expect(s.peek());
        coeff += s.take_while("/");
        Rational c;
        try {
            c = parse_rational(coeff);
        } catch (const std::invalid_argument& e) {
            throw ParseError(start, e.what());
        }
        s.expect('*');
        s.skip_space();
        const auto at = s.pos();
        add_checked(out, index_list(s), c, n, at);
    }
    return out;
}

ExteriorElement parse_monomial(const std::string& text, int n) {
    Scanner s(text);
    std::vector<int> gens;
    if (!s.done()) {
        while (true) {
            const auto at = s.pos();
            gens.push_back(s.integer());
            if (gens.back() >= n)
                throw ParseError(at, "generator " + std::to_string(gens.back()) + " outside [0, " + std::to_string(n) + ")");
            if (s.done()) break;
            s.expect(',');
        }
    }
    ExteriorElement out(n);
    add_checked(out, gens, 1, n, 0);
    return out;
}

ExteriorElement parse_json_element(const std::string& text, int n) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON element");
    }
    if (!doc.is_array()) throw ParseError(0, "JSON element must be an array of {coeff, index} objects");
    ExteriorElement out(n);
    for (const auto& term : doc) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("index"))
            throw ParseError(0, "each JSON term needs \"coeff\" and \"index\"");
        Rational c;
        try {
            const auto& raw = term["coeff"];
            c = raw.is_string() ? parse_rational(raw.get<std::string>()) : Rational(raw.get<long>());
            add_checked(out, term["index"].get<std::vector<int>>(), c, n, 0);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(0, std::string("bad JSON term: ") + e.what());
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, e.what());
        }
    }
    return out;
}

ordered_json element_to_json(const ExteriorElement& a) {
    ordered_json arr = ordered_json::array();
    for (const auto& [k, c] : a.terms()) arr.push_back({{"coeff", to_string(c)}, {"index", k.indices()}});
    return arr;
}

ordered_json report_to_json(const VerificationReport& r) {
    ordered_json cex = ordered_json::array();
    for (const auto& c : r.counterexamples)
        cex.push_back({{"relation", c.relation}, {"witness", c.witness}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    return {{"check", r.check},
            {"n", r.n},
            {"status", to_string(r.status)},
            {"relations_checked", r.relations_checked},
            {"counterexamples", cex},
            {"elapsed_ms", r.elapsed.count()}};
}

const std::map<std::string, int>& default_caps() {
    static const std::map<std::string, int> caps{
        {"serre", 8},  {"clifford", 12}, {"lemma-actions", 8}, {"transpose", 6},
        {"he-duality", 8}, {"equivalence", 6}, {"kernel", 10},
    };
    return caps;
}

int parse_jobs(const std::string& text) {
    if (text == "auto") return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::size_t used = 0;
    int jobs = 0;
    try {
        jobs = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || jobs < 1) throw std::invalid_argument("--jobs must be a positive integer or 'auto'");
    return jobs;
}

void print_usage_error(std::ostream& err, const std::string& message) { err << "error: " << message << '\n'; }

int check_n(const std::string& subcheck, int n, std::ostream& err) {
    if (n < 1) {
        print_usage_error(err, "--n must be >= 1");
        return kUsage;
    }
    if (n > max_n(subcheck)) {
        print_usage_error(err, subcheck + " is capped at n = " + std::to_string(max_n(subcheck)) + " (set COHA_MAX_N to override)");
        return kUsage;
    }
    return kPass;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (default_caps().count(cfg.subcheck) == 0) {
        print_usage_error(err, "unknown subcheck '" + cfg.subcheck + "'");
        return kUsage;
    }
    if (int rc = check_n(cfg.subcheck, cfg.n, err); rc != kPass) return rc;
    const VerificationReport r = run_subcheck(cfg.subcheck, cfg.n, cfg.jobs);
    out << (cfg.format == Format::json ? report_json(r) + "\n" : report_text(r));
    return r.passed() ? kPass : kFail;
}

int cmd_report_all(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    for (const auto& name : subchecks())
        if (int rc = check_n(name, cfg.n, err); rc != kPass) return rc;
    bool all = true;
    ordered_json arr = ordered_json::array();
    std::string text;
    for (const auto& name : subchecks()) {
        const VerificationReport r = run_subcheck(name, cfg.n, cfg.jobs);
        all = all && r.passed();
        arr.push_back(report_to_json(r));
        text += report_text(r);
    }
    out << (cfg.format == Format::json ? arr.dump(2) + "\n" : text);
    return all ? kPass : kFail;
}

int cmd_apply(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.n < 1) {
        print_usage_error(err, "--n must be >= 1");
        return kUsage;
    }
    if (cfg.n > max_n("clifford")) {
        print_usage_error(err, "apply is capped at n = " + std::to_string(max_n("clifford")));
        return kUsage;
    }
    ExteriorElement state;
    try {
        state = parse_element(cfg.state, cfg.n);
    } catch (const ParseError& e) {
        err << "error: cannot parse --state at position " << e.position() << ": " << e.what() << '\n';
        err << "  " << cfg.state << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
        return kUsage;
    }
    GradedOperator op(cfg.n);
    try {
        op = operator_by_name(cfg.op, cfg.n);
    } catch (const std::exception& e) {
        print_usage_error(err, e.what());
        return kUsage;
    }
    const ExteriorElement image = op.apply(state);
    out << (cfg.format == Format::json ? element_json(image) : to_string(image)) << '\n';
    return kPass;
}

int cmd_cartan(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.n < 2) {
        print_usage_error(err, "cartan needs --n >= 2");
        return kUsage;
    }
    if (cfg.n > max_n("serre")) {
        print_usage_error(err, "cartan is capped at n = " + std::to_string(max_n("serre")));
        return kUsage;
    }
    const CartanMatrix expected = cartan_D(cfg.n + 1);
    CartanMatrix extracted(cfg.n + 1);
    try {
        extracted = extract_cartan(cfg.n);
    } catch (const std::domain_error& e) {
        err << "error: extraction failed: " << e.what() << '\n';
        return kFail;
    }
    const bool equal = extracted == expected;
    if (cfg.format == Format::json) {
        auto rows = [](const CartanMatrix& a) {
            ordered_json m = ordered_json::array();
            for (int i = 0; i < a.size(); ++i) {
                ordered_json row = ordered_json::array();
                for (int j = 0; j < a.size(); ++j) row.push_back(a.at(i, j));
                m.push_back(row);
            }
            return m;
        };
        ordered_json doc{{"n", cfg.n}, {"extracted", rows(extracted)}, {"expected", rows(expected)},
                         {"verdict", equal ? "EQUAL" : "DIFFERENT"}};
        out << doc.dump() << '\n';
    } else {
        std::ostringstream a, b;
        a << extracted;
        b << expected;
        std::istringstream la(a.str()), lb(b.str());
        out << "extracted [H_i,E_j] = a_ji E_j    D" << cfg.n + 1 << '\n';
        for (std::string x, y; std::getline(la, x) && std::getline(lb, y);) out << x << "    " << y << '\n';
        out << "verdict: " << (equal ? "EQUAL" : "DIFFERENT") << '\n';
    }
    return equal ? kPass : kFail;
}

}  // namespace

ExteriorElement parse_element(const std::string& text, int n) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '[') return parse_json_element(text, n);
    if (text.find('*') != std::string::npos) return parse_terms(text, n);
    return parse_monomial(text, n);
}

std::string element_json(const ExteriorElement& a) { return element_to_json(a).dump(); }

std::string report_json(const VerificationReport& r) { return report_to_json(r).dump(); }

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    os << r.check << " n=" << r.n << ": " << to_string(r.status) << " (" << r.relations_checked << " relations, "
       << r.elapsed.count() << " ms)\n";
    for (const auto& [k, v] : r.params) os << "  " << k << ": " << v << '\n';
    for (const auto& c : r.counterexamples) {
        os << "  FAIL " << c.relation << " at [";
        for (std::size_t i = 0; i < c.witness.size(); ++i) os << (i ? "," : "") << c.witness[i];
        os << "]: lhs = " << c.lhs << ", rhs = " << c.rhs << '\n';
    }
    return os.str();
}

const std::vector<std::string>& subchecks() {
    static const std::vector<std::string> names{"serre",      "clifford",    "lemma-actions", "transpose",
                                                "he-duality", "equivalence", "kernel"};
    return names;
}

int max_n(const std::string& subcheck) {
    if (const char* env = std::getenv("COHA_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
        }
    }
    auto it = default_caps().find(subcheck);
    return it == default_caps().end() ? 0 : it->second;
}

VerificationReport run_subcheck(const std::string& subcheck, int n, int jobs) {
    if (subcheck == "serre") return check_serre(n, jobs);
    if (subcheck == "clifford") return check_clifford(n, Annihilator::twisted, jobs);
    if (subcheck == "lemma-actions") return lemma_action_table(n);
    if (subcheck == "transpose") return verify_transpose_suite(n);
    if (subcheck == "he-duality") return verify_he_duality_suite(n);
    if (subcheck == "equivalence") return verify_equivalence_suite(n);
    if (subcheck == "kernel") return verify_kernel_suite(n);
    throw std::invalid_argument("unknown subcheck '" + subcheck + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification engine for the A1 cohomological Hall algebra representations", "coha"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string format = "text";
    std::string jobs = "1";
    auto common = [&](CLI::App* sub, bool with_jobs) {
        sub->add_option("--n", cfg.n, "number of generators / framing dimension")->required();
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        if (with_jobs) sub->add_option("--jobs", jobs, "worker threads or 'auto'");
    };

    auto* verify = app.add_subcommand("verify", "run one verification suite");
    verify->add_option("subcheck", cfg.subcheck, "serre | clifford | lemma-actions | transpose | he-duality | equivalence | kernel")
        ->required();
    common(verify, true);

    auto* apply = app.add_subcommand("apply", "apply one operator to an element");
    apply->add_option("--op", cfg.op, "raise:i lower:i tlower:i H T:i S:i E:i F:i Hi:i")->required();
    apply->add_option("--state", cfg.state, "element, e.g. \"0,1\" or \"+1 * [0] -1/2 * [1]\"");
    common(apply, false);

    auto* cartan = app.add_subcommand("cartan", "extract the Cartan matrix and compare with D_{n+1}");
    common(cartan, false);

    auto* all = app.add_subcommand("report-all", "run every suite at one n");
    common(all, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        cfg.format = format == "json" ? Format::json : Format::text;
        cfg.jobs = parse_jobs(jobs);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        print_usage_error(err, e.what());
        return kUsage;
    } catch (const std::invalid_argument& e) {
        print_usage_error(err, e.what());
        return kUsage;
    }

    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (apply->parsed()) return cmd_apply(cfg, out, err);
    if (cartan->parsed()) return cmd_cartan(cfg, out, err);
    return cmd_report_all(cfg, out, err);
}

}  // namespace coha::cli
