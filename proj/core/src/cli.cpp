#include <arrc/cli.hpp>

#include <arrc/constants.hpp>
#include <arrc/numerics.hpp>
#include <arrc/theorems.hpp>
#include <arrc/theta.hpp>
#include <arrc/version.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace arrc::cli {

using nlohmann::json;

void Report::finalize() {
    bool ok = true;
    for (const auto& v : verifications) ok = ok && v.equal;
    for (const auto& n : numerics) ok = ok && n.pass;
    overall_status = ok ? "pass" : "fail";
}

std::string render_text(const Report& r) {
    std::ostringstream out;
    out << "arrc " << r.tool_version << " -- " << r.command << "\n";
    for (const auto& [k, v] : r.parameters) out << "  " << k << " = " << v << "\n";
    for (const auto& v : r.verifications) {
        out << (v.equal ? "[ok]  " : "[FAIL] ") << v.statement_id;
        if (!v.parameter_name.empty()) out << " " << v.parameter_name << "=" << v.parameter;
        out << ": pipeline = " << v.pipeline;
        if (v.equal)
            out << "  (matches closed form, residual 0)";
        else
            out << "  closed form = " << v.closed_form << "  residual = " << v.residual;
        out << "\n";
    }
    for (const auto& n : r.numerics) {
        out << (n.pass ? "[ok]  " : "[FAIL] ") << n.label << " = " << n.value;
        if (!n.note.empty()) out << "  (" << n.note << ")";
        out << "\n";
    }
    out << "overall: " << r.overall_status << "\n";
    return out.str();
}

std::string render_json(const Report& r) {
    json j;
    j["tool_version"] = r.tool_version;
    j["command"] = r.command;
    j["parameters"] = r.parameters;
    json results = json::array();
    for (const auto& v : r.verifications) {
        json e;
        e["type"] = "verification";
        e["statement_id"] = v.statement_id;
        e["parameter_name"] = v.parameter_name;
        e["parameter"] = v.parameter;
        e["pipeline"] = v.pipeline;
        e["closed_form"] = v.closed_form;
        e["equal"] = v.equal;
        e["residual"] = v.residual;
        results.push_back(e);
    }
    for (const auto& n : r.numerics) {
        json e;
        e["type"] = "numeric";
        e["label"] = n.label;
        e["value"] = n.value;
        e["pass"] = n.pass;
        e["note"] = n.note;
        results.push_back(e);
    }
    j["results"] = results;
    j["overall_status"] = r.overall_status;
    return j.dump(2) + "\n";
}

Report parse_json(const std::string& text) {
    json j = json::parse(text);
    Report r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("parameters").items())
        r.parameters[k] = v.get<std::string>();
    for (const auto& e : j.at("results")) {
        if (e.at("type") == "verification") {
            Report::Verification v;
            v.statement_id = e.at("statement_id").get<std::string>();
            v.parameter_name = e.at("parameter_name").get<std::string>();
            v.parameter = e.at("parameter").get<long>();
            v.pipeline = e.at("pipeline").get<std::string>();
            v.closed_form = e.at("closed_form").get<std::string>();
            v.equal = e.at("equal").get<bool>();
            v.residual = e.at("residual").get<std::string>();
            r.verifications.push_back(std::move(v));
        } else {
            Report::Numeric n;
            n.label = e.at("label").get<std::string>();
            n.value = e.at("value").get<std::string>();
            n.pass = e.at("pass").get<bool>();
            n.note = e.at("note").get<std::string>();
            r.numerics.push_back(std::move(n));
        }
    }
    r.overall_status = j.at("overall_status").get<std::string>();
    return r;
}

namespace {

Report::Verification to_record(const theorems::VerificationResult& v) {
    Report::Verification rec;
    rec.statement_id = v.statement_id;
    rec.parameter_name = v.parameter_name;
    rec.parameter = v.parameter;
    rec.pipeline = v.pipeline_value.to_string();
    rec.closed_form = v.closed_form_value.to_string();
    rec.equal = v.equal;
    rec.residual = v.residual.to_string();
    return rec;
}

void run_identity_range(Report& report, const std::string& which, long g_min, long g_max) {
    for (long g = g_min; g <= g_max; ++g) {
        theorems::VerificationResult v = [&] {
            if (which == "lemma23") return theorems::lemma23(g);
            if (which == "r-integral") return theorems::r_integral(g);
            if (which == "theorem24") return theorems::theorem24(g);
            if (which == "prop31") return theorems::prop31(g);
            throw std::logic_error("unknown identity " + which);
        }();
        report.verifications.push_back(to_record(v));
    }
}

void run_section4(Report& report) {
    for (const auto& v : theorems::section4_assemble())
        report.verifications.push_back(to_record(v));
}

void run_g_formula(Report& report) {
    bool sum_ok = true;
    for (long r = 0; r <= 22; ++r) {
        long g = theorems::euler_characteristic_g(r);
        Report::Verification rec;
        rec.statement_id = "g_formula";
        rec.parameter_name = "r_plus";
        rec.parameter = r;
        rec.pipeline = std::to_string(g);
        rec.closed_form = std::to_string(20 - 2 * r);
        rec.equal = (g == 20 - 2 * r);
        rec.residual = rec.equal ? "0" : "?";
        sum_ok = sum_ok && (g + 2 * r == 20);
        report.verifications.push_back(std::move(rec));
    }
    report.numerics.push_back({"G + 2*r_plus", "20", sum_ok, "all r_plus in 0..22"});
    long g10 = theorems::euler_characteristic_g(10);
    report.numerics.push_back({"G at r_plus=10", std::to_string(g10), g10 == 0,
                               "fixed-point-free case"});
}

std::string format_complex(const Complex& z, long digits) {
    std::string re = z.re.to_string(digits);
    Real ai = abs(z.im);
    std::string im = ai.to_string(digits);
    return re + (z.im.sign() < 0 ? " - " : " + ") + im + "*i";
}

// --- Omega input -----------------------------------------------------------

Complex parse_complex_literal(const std::string& token, mpfr_prec_t prec) {
    std::string s;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex entry");

    // split at the last top-level '+'/'-' that is not a leading sign or an
    // exponent sign
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;
    }
    auto piece_value = [&](const std::string& p) -> std::pair<bool, Real> {
        // returns {is_imaginary, value}
        if (!p.empty() && (p.back() == 'i' || p.back() == 'I')) {
            std::string body = p.substr(0, p.size() - 1);
            if (body.empty() || body == "+") body = "1";
            if (body == "-") body = "-1";
            if (!body.empty() && body.back() == '*') body.pop_back();
            return {true, Real(body, prec)};
        }
        return {false, Real(p, prec)};
    };

    Real re(prec), im(prec);
    auto apply = [&](const std::string& p) {
        auto [imag, v] = piece_value(p);
        if (imag)
            im += v;
        else
            re += v;
    };
    if (split == std::string::npos) {
        apply(s);
    } else {
        apply(s.substr(0, split));
        apply(s.substr(split));
    }
    return {re, im};
}

Real json_number_to_real(const json& v, mpfr_prec_t prec) {
    if (v.is_string()) return Real(v.get<std::string>(), prec);
    if (v.is_number_integer()) return Real(static_cast<long>(v.get<long long>()), prec);
    return Real(v.get<double>(), prec);
}

theta::SiegelPoint load_omega_file(const std::string& path, long digits,
                                   bool digits_fixed) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open omega file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty omega file: " + path);

    if (text[first] == '{') {
        json j = json::parse(text);
        long g = j.at("g").get<long>();
        if (j.contains("digits") && !digits_fixed) digits = j.at("digits").get<long>();
        const mpfr_prec_t prec = bits_for_digits(digits);
        const auto& entries = j.at("omega");
        if (entries.size() != static_cast<size_t>(g * g))
            throw std::invalid_argument("omega must list g*g [re, im] pairs");
        std::vector<Complex> omega;
        omega.reserve(g * g);
        for (const auto& pair : entries) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("omega entries must be [re, im] pairs");
            omega.emplace_back(json_number_to_real(pair[0], prec),
                               json_number_to_real(pair[1], prec));
        }
        return theta::SiegelPoint(g, std::move(omega), digits);
    }

    // plain text: one row per line, whitespace-separated "re+im i" entries
    const mpfr_prec_t prec = bits_for_digits(digits);
    std::vector<std::vector<Complex>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream ls(line);
        std::vector<Complex> row;
        std::string token;
        while (ls >> token) row.push_back(parse_complex_literal(token, prec));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    long g = static_cast<long>(rows.size());
    std::vector<Complex> omega;
    for (const auto& row : rows) {
        if (static_cast<long>(row.size()) != g)
            throw std::invalid_argument("omega rows must form a square matrix");
        for (const auto& z : row) omega.push_back(z);
    }
    return theta::SiegelPoint(g, std::move(omega), digits);
}

theta::ThetaCharacteristic parse_characteristic(const std::string& text) {
    // "a;b" for general genus, "a,b" accepted when each side is a scalar
    std::string a_part, b_part;
    size_t semi = text.find(';');
    if (semi != std::string::npos) {
        a_part = text.substr(0, semi);
        b_part = text.substr(semi + 1);
    } else {
        size_t comma = text.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("characteristic must look like 'a;b' or 'a,b'");
        a_part = text.substr(0, comma);
        b_part = text.substr(comma + 1);
    }
    auto parse_side = [](const std::string& side) {
        std::vector<int> vals;
        std::string tok;
        auto flush = [&] {
            if (tok.empty()) return;
            if (tok == "0")
                vals.push_back(0);
            else if (tok == "1/2" || tok == "0.5")
                vals.push_back(1);
            else
                throw std::invalid_argument("characteristic entries must be 0 or 1/2, got " + tok);
            tok.clear();
        };
        for (char c : side) {
            if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
                flush();
            else
                tok += c;
        }
        flush();
        if (vals.empty()) throw std::invalid_argument("empty characteristic vector");
        return vals;
    };
    theta::ThetaCharacteristic ch;
    ch.a = parse_side(a_part);
    ch.b = parse_side(b_part);
    if (ch.a.size() != ch.b.size())
        throw std::invalid_argument("characteristic halves must have equal length");
    return ch;
}

void run_theta_invariance(Report& report, long g, long trials, long digits,
                          std::uint64_t seed) {
    theta::Rng rng(seed);
    const mpfr_prec_t prec = bits_for_digits(digits);
    Real tol("1e-" + std::to_string(digits - 8), prec);
    Real max_dev(prec);
    for (long t = 0; t < trials; ++t) {
        theta::SiegelPoint omega = theta::random_siegel_point(g, digits, rng);
        std::vector<long> gamma = theta::random_symplectic(g, rng);
        theta::SiegelPoint moved = theta::sp_transform(omega, gamma);
        Real n0 = theta::petersson_norm_chi(omega);
        Real n1 = theta::petersson_norm_chi(moved);
        Real dev = abs(n0 - n1);
        if (dev > max_dev) max_dev = dev;
        report.numerics.push_back({"trial " + std::to_string(t), dev.to_string(3),
                                   !(dev > tol), "|norm(gamma.omega) - norm(omega)|"});
    }
    report.numerics.push_back({"max deviation", max_dev.to_string(6), !(max_dev > tol),
                               "tolerance 1e-" + std::to_string(digits - 8)});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"symbolic and numeric verification of arithmetic Riemann-Roch identities"};
    app.name("arrc");
    app.require_subcommand(1);

    Report report;
    report.tool_version = arrc::version;
    std::string format = "text";

    long g_min = 2, g_max = 10;
    long digits = 30;
    long trials = 20;
    long theta_g = 1;
    std::uint64_t seed = 1;
    std::string expr, omega_path, char_spec;
    bool with_theta = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* verify = app.add_subcommand("verify", "re-derive one family of displayed identities");
    verify->require_subcommand(1);
    for (const char* name : {"lemma23", "r-integral", "theorem24", "prop31"}) {
        auto* sub = verify->add_subcommand(name);
        sub->add_option("--g-min", g_min, "smallest genus")->check(CLI::Range(2L, 64L));
        sub->add_option("--g-max", g_max, "largest genus")->check(CLI::Range(2L, 64L));
        add_format(sub);
        std::string id(name);
        sub->callback([&, id] {
            report.command = "verify " + id;
            report.parameters["g_min"] = std::to_string(g_min);
            report.parameters["g_max"] = std::to_string(g_max);
            if (g_max < g_min) throw CLI::ValidationError("--g-max must be >= --g-min");
            run_identity_range(report, id, g_min, g_max);
        });
    }
    {
        auto* sub = verify->add_subcommand("section4");
        add_format(sub);
        sub->callback([&] {
            report.command = "verify section4";
            run_section4(report);
        });
    }
    {
        auto* sub = verify->add_subcommand("g-formula");
        add_format(sub);
        sub->callback([&] {
            report.command = "verify g-formula";
            run_g_formula(report);
        });
    }

    auto* constants_cmd = app.add_subcommand("constants", "exact constant layer");
    {
        auto* sub = constants_cmd->add_subcommand("eval", "evaluate a canonical constant");
        sub->add_option("--expr", expr, "constant in canonical text form")->required();
        sub->add_option("--digits", digits, "decimal digits")->check(CLI::Range(10L, 2000L));
        add_format(sub);
        sub->callback([&] {
            report.command = "constants eval";
            report.parameters["expr"] = expr;
            report.parameters["digits"] = std::to_string(digits);
            Constant c = Constant::parse(expr);
            Real v = num::eval_constant(c, digits);
            report.numerics.push_back({c.to_string(), v.to_string(digits), true, "exact form"});
        });
    }

    auto* theta_cmd = app.add_subcommand("theta", "Riemann theta constants");
    {
        auto* sub = theta_cmd->add_subcommand("eval", "evaluate theta[a,b](0, Omega)");
        sub->add_option("--file", omega_path, "omega file (text matrix or json)")->required();
        sub->add_option("--char", char_spec, "characteristic, e.g. \"0;1/2\"")->required();
        auto* dig = sub->add_option("--digits", digits, "decimal digits")
                        ->check(CLI::Range(10L, 2000L));
        add_format(sub);
        sub->callback([&, dig] {
            report.command = "theta eval";
            report.parameters["file"] = omega_path;
            report.parameters["char"] = char_spec;
            auto omega = load_omega_file(omega_path, digits, dig->count() > 0);
            report.parameters["digits"] = std::to_string(omega.digits());
            auto ch = parse_characteristic(char_spec);
            auto val = theta::theta_constant(ch, omega);
            report.numerics.push_back({"theta" + ch.to_string(),
                                       format_complex(val.value, omega.digits()), true,
                                       "tail bound " + val.tail_bound.to_string(3) +
                                           ", radius " + std::to_string(val.radius)});
        });
    }
    {
        auto* sub = theta_cmd->add_subcommand("invariance", "Petersson norm invariance trials");
        sub->add_option("--g", theta_g, "genus")->check(CLI::Range(1L, 2L));
        sub->add_option("--trials", trials, "number of seeded trials")->check(CLI::Range(1L, 10000L));
        sub->add_option("--digits", digits, "decimal digits")->check(CLI::Range(10L, 200L));
        sub->add_option("--seed", seed, "random seed");
        add_format(sub);
        sub->callback([&] {
            report.command = "theta invariance";
            report.parameters["g"] = std::to_string(theta_g);
            report.parameters["trials"] = std::to_string(trials);
            report.parameters["digits"] = std::to_string(digits);
            report.parameters["seed"] = std::to_string(seed);
            run_theta_invariance(report, theta_g, trials, digits, seed);
        });
    }

    auto* chi_cmd = app.add_subcommand("chi", "Igusa product of even theta constants");
    {
        auto* sub = chi_cmd->add_subcommand("eval", "evaluate chi_g(Omega)");
        sub->add_option("--file", omega_path, "omega file (text matrix or json)")->required();
        auto* dig = sub->add_option("--digits", digits, "decimal digits")
                        ->check(CLI::Range(10L, 2000L));
        add_format(sub);
        sub->callback([&, dig] {
            report.command = "chi eval";
            report.parameters["file"] = omega_path;
            auto omega = load_omega_file(omega_path, digits, dig->count() > 0);
            report.parameters["digits"] = std::to_string(omega.digits());
            Complex v = theta::chi(omega);
            report.numerics.push_back({"chi_" + std::to_string(omega.genus()),
                                       format_complex(v, omega.digits()), true, ""});
            Real norm = theta::petersson_norm_chi(omega);
            report.numerics.push_back({"petersson norm", norm.to_string(omega.digits()), true, ""});
        });
    }

    auto* report_cmd = app.add_subcommand("report", "run the full symbolic verification suite");
    report_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    report_cmd->add_option("--g-min", g_min, "smallest genus")->check(CLI::Range(2L, 64L));
    report_cmd->add_option("--g-max", g_max, "largest genus")->check(CLI::Range(2L, 64L));
    report_cmd->add_flag("--with-theta", with_theta, "include the seeded theta invariance suites");
    report_cmd->add_option("--digits", digits, "digits for the theta suites");
    report_cmd->add_option("--trials", trials, "trials for the theta suites");
    report_cmd->add_option("--seed", seed, "seed for the theta suites");
    report_cmd->callback([&] {
        report.command = "report";
        report.parameters["g_min"] = std::to_string(g_min);
        report.parameters["g_max"] = std::to_string(g_max);
        if (g_max < g_min) throw CLI::ValidationError("--g-max must be >= --g-min");
        run_identity_range(report, "lemma23", g_min, g_max);
        run_identity_range(report, "r-integral", g_min, g_max);
        run_identity_range(report, "theorem24", g_min, g_max);
        run_identity_range(report, "prop31", g_min, std::min<long>(g_max, 8));
        run_section4(report);
        run_g_formula(report);
        if (with_theta) {
            report.parameters["digits"] = std::to_string(digits);
            report.parameters["trials"] = std::to_string(trials);
            report.parameters["seed"] = std::to_string(seed);
            run_theta_invariance(report, 1, trials, digits, seed);
            run_theta_invariance(report, 2, trials, digits, seed + 1);
        }
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    report.finalize();
    out << (format == "json" ? render_json(report) : render_text(report));
    return report.pass() ? 0 : 1;
}

}  // namespace arrc::cli
