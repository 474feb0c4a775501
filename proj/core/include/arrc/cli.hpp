#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace arrc::cli {

// Machine-readable run summary. overall_status is "pass" exactly when every
// verification record has equal = true and every numeric check met its
// tolerance.
struct Report {
    struct Verification {
        std::string statement_id;
        std::string parameter_name;
        long parameter = 0;
        std::string pipeline;
        std::string closed_form;
        bool equal = false;
        std::string residual;

        friend bool operator==(const Verification&, const Verification&) = default;
    };

    struct Numeric {
        std::string label;
        std::string value;
        bool pass = true;
        std::string note;

        friend bool operator==(const Numeric&, const Numeric&) = default;
    };

    std::string tool_version;
    std::string command;
    std::map<std::string, std::string> parameters;
    std::vector<Verification> verifications;
    std::vector<Numeric> numerics;
    std::string overall_status;

    bool pass() const { return overall_status == "pass"; }
    void finalize();  // recomputes overall_status from the records

    friend bool operator==(const Report&, const Report&) = default;
};

std::string render_text(const Report& r);
std::string render_json(const Report& r);
Report parse_json(const std::string& text);

// Entry point behind the command-line tool. Returns the process exit status:
// 0 when the report passes, 1 on verification failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrc::cli
