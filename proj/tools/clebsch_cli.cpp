// clebsch: exact Clebsch-Gordan tables, closed-form stretched coefficients,
// conditional spin-pair distributions and seeded Monte Carlo checks.
//
// All quantum numbers on the command line are twice-values (2j, 2m), so
// half-integer spins are plain integers. Exact values are printed as
// rationals or signed square roots; decimal columns are display-only and
// rounded to 12 significant digits.

#include "clebsch/clebsch.hpp"
#include "clebsch/float_oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

std::string approx_str(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

// Double quantized to 12 significant digits so that JSON stays in sync with
// the text rendering.
double approx12(double value) { return std::strtod(approx_str(value).c_str(), nullptr); }

struct output_options {
    std::string format = "text";
    std::string path;  // empty = stdout
};

void write_output(const output_options& opts, const std::string& content) {
    if (opts.path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(opts.path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + opts.path + "'");
    file << content;
}

// --- spectra ----------------------------------------------------------------

// Grammar: binomial:<l_twice>:<p>  |  uniform:<l_twice>  |  explicit:<m=prob,...>
// with p and probs as exact fractions. The explicit carrier spin is inferred
// from the largest |m| given; omitted m-values get probability zero.
clebsch::spectrum_distribution parse_spectrum(const std::string& text) {
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument("bad spectrum '" + text + "': " + why);
    };
    auto parse_int = [&](const std::string& s) -> int {
        try {
            std::size_t used = 0;
            int value = std::stoi(s, &used);
            if (used != s.size()) fail("trailing characters in integer '" + s + "'");
            return value;
        } catch (const std::invalid_argument&) {
            fail("not an integer: '" + s + "'");
        } catch (const std::out_of_range&) {
            fail("integer out of range: '" + s + "'");
        }
        return 0;  // unreachable
    };

    std::size_t colon = text.find(':');
    if (colon == std::string::npos) fail("expected binomial:..., uniform:... or explicit:...");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    if (kind == "binomial") {
        std::size_t second = rest.find(':');
        if (second == std::string::npos) fail("binomial needs <l_twice>:<p>");
        int l_twice = parse_int(rest.substr(0, second));
        if (l_twice < 0) fail("negative l_twice");
        clebsch::rational p = clebsch::parse_rational(rest.substr(second + 1));
        if (p.is_negative() || p > clebsch::rational(1)) fail("p outside [0, 1]");
        return clebsch::spectrum_from_binomial(l_twice, p);
    }
    if (kind == "uniform") {
        int l_twice = parse_int(rest);
        if (l_twice < 0) fail("negative l_twice");
        return clebsch::uniform_spectrum(l_twice);
    }
    if (kind == "explicit") {
        clebsch::spectrum_distribution::prob_map probs;
        int l_twice = 0;
        std::stringstream parts(rest);
        std::string part;
        while (std::getline(parts, part, ',')) {
            std::size_t eq = part.find('=');
            if (eq == std::string::npos) fail("explicit entries are <m_twice>=<prob>");
            int m = parse_int(part.substr(0, eq));
            probs[m] = clebsch::parse_rational(part.substr(eq + 1));
            l_twice = std::max(l_twice, m < 0 ? -m : m);
        }
        if (probs.empty()) fail("explicit needs at least one entry");
        return clebsch::spectrum_distribution(l_twice, probs);
    }
    fail("unknown spectrum kind '" + kind + "'");
    throw std::logic_error("unreachable");
}

// --- table rendering ---------------------------------------------------------

json table_to_json(const clebsch::cg_table& table) {
    json doc;
    doc["j1_twice"] = table.j1().twice;
    doc["j2_twice"] = table.j2().twice;
    doc["entries"] = json::array();
    for (const auto& [key, amp] : table.entries()) {
        json entry;
        entry["J_twice"] = key.J_twice;
        entry["M_twice"] = key.M_twice;
        entry["m1_twice"] = key.m1_twice;
        entry["m2_twice"] = key.M_twice - key.m1_twice;
        entry["sign"] = amp.sign();
        entry["radicand_num"] = amp.radicand().numerator().str();
        entry["radicand_den"] = amp.radicand().denominator().str();
        entry["approx"] = approx12(amp.to_double());
        doc["entries"].push_back(entry);
    }
    return doc;
}

constexpr const char* kTableCsvHeader =
    "J_twice,M_twice,m1_twice,m2_twice,sign,radicand_num,radicand_den,approx\n";

std::string table_to_csv(const clebsch::cg_table& table) {
    std::string out = kTableCsvHeader;
    for (const auto& [key, amp] : table.entries()) {
        out += std::to_string(key.J_twice) + "," + std::to_string(key.M_twice) + "," +
               std::to_string(key.m1_twice) + "," + std::to_string(key.M_twice - key.m1_twice) +
               "," + std::to_string(amp.sign()) + "," + amp.radicand().numerator().str() + "," +
               amp.radicand().denominator().str() + "," + approx_str(amp.to_double()) + "\n";
    }
    return out;
}

std::string table_rows_text(const clebsch::cg_table& table, const std::string& indent) {
    std::string out;
    for (const auto& [key, amp] : table.entries()) {
        out += indent + std::to_string(key.J_twice) + " " + std::to_string(key.M_twice) + " " +
               std::to_string(key.m1_twice) + " " + std::to_string(key.M_twice - key.m1_twice) +
               "  " + amp.to_string() + "  " + approx_str(amp.to_double()) + "\n";
    }
    return out;
}

std::string table_to_text(const clebsch::cg_table& table) {
    std::string out = "# cg-table j1_twice=" + std::to_string(table.j1().twice) +
                      " j2_twice=" + std::to_string(table.j2().twice) +
                      " coefficients=" + std::to_string(table.coefficient_count()) + "\n";
    out += "# columns: J_twice M_twice m1_twice m2_twice coefficient approx\n";
    out += table_rows_text(table, "");
    return out;
}

// --- conditional rendering ---------------------------------------------------

json conditional_entries_json(const clebsch::conditional_report& report) {
    json entries = json::array();
    for (const auto& [cell, prob] : report.entries) {
        json entry;
        entry["m1_twice"] = cell.m1_twice;
        entry["m2_twice"] = cell.m2_twice;
        entry["prob_num"] = prob.numerator().str();
        entry["prob_den"] = prob.denominator().str();
        entry["approx"] = approx12(prob.to_double());
        entries.push_back(entry);
    }
    return entries;
}

// --- subcommand: table -------------------------------------------------------

int run_table(int j1_twice, int j2_twice, const output_options& opts) {
    clebsch::cg_table table =
        clebsch::build_cg_table(clebsch::spin(j1_twice), clebsch::spin(j2_twice));
    if (opts.format == "json")
        write_output(opts, table_to_json(table).dump(2) + "\n");
    else if (opts.format == "csv")
        write_output(opts, table_to_csv(table));
    else
        write_output(opts, table_to_text(table));
    return 0;
}

// --- subcommand: stretched ---------------------------------------------------

int run_stretched(int l1, std::int64_t k1, int l2, std::int64_t k2, const output_options& opts) {
    clebsch::rational value = clebsch::stretched_cg_squared(l1, k1, l2, k2);
    if (opts.format == "json") {
        json doc;
        doc["l1"] = l1;
        doc["k1"] = k1;
        doc["l2"] = l2;
        doc["k2"] = k2;
        doc["value_num"] = value.numerator().str();
        doc["value_den"] = value.denominator().str();
        doc["approx"] = approx12(value.to_double());
        write_output(opts, doc.dump(2) + "\n");
    } else if (opts.format == "csv") {
        write_output(opts, std::string("l1,k1,l2,k2,value_num,value_den,approx\n") +
                               std::to_string(l1) + "," + std::to_string(k1) + "," +
                               std::to_string(l2) + "," + std::to_string(k2) + "," +
                               value.numerator().str() + "," + value.denominator().str() + "," +
                               approx_str(value.to_double()) + "\n");
    } else {
        write_output(opts, "stretched_cg_squared(l1=" + std::to_string(l1) +
                               ", k1=" + std::to_string(k1) + ", l2=" + std::to_string(l2) +
                               ", k2=" + std::to_string(k2) + ") = " + value.to_string() +
                               " (approx " + approx_str(value.to_double()) + ")\n");
    }
    return 0;
}

// --- subcommand: conditional ---------------------------------------------------

int run_conditional(const std::string& spec1, const std::string& spec2, int total,
                    const output_options& opts) {
    clebsch::spectrum_distribution d1 = parse_spectrum(spec1);
    clebsch::spectrum_distribution d2 = parse_spectrum(spec2);
    clebsch::conditional_report report = clebsch::conditional_joint(d1, d2, total);

    if (opts.format == "json") {
        json doc;
        doc["spectrum1"] = spec1;
        doc["spectrum2"] = spec2;
        doc["total_m_twice"] = total;
        doc["entries"] = conditional_entries_json(report);
        write_output(opts, doc.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string out = "m1_twice,m2_twice,prob_num,prob_den,approx\n";
        for (const auto& [cell, prob] : report.entries)
            out += std::to_string(cell.m1_twice) + "," + std::to_string(cell.m2_twice) + "," +
                   prob.numerator().str() + "," + prob.denominator().str() + "," +
                   approx_str(prob.to_double()) + "\n";
        write_output(opts, out);
    } else {
        std::string out = "# conditional spectrum1=" + spec1 + " spectrum2=" + spec2 +
                          " total_m_twice=" + std::to_string(total) + "\n";
        out += "# columns: m1_twice m2_twice prob approx\n";
        for (const auto& [cell, prob] : report.entries)
            out += std::to_string(cell.m1_twice) + " " + std::to_string(cell.m2_twice) + "  " +
                   prob.to_string() + "  " + approx_str(prob.to_double()) + "\n";
        write_output(opts, out);
    }
    return 0;
}

// --- subcommand: sample --------------------------------------------------------

int run_sample(const std::string& spec1, const std::string& spec2, int total, std::uint64_t n,
               std::uint64_t seed, unsigned streams, const output_options& opts) {
    clebsch::spectrum_distribution d1 = parse_spectrum(spec1);
    clebsch::spectrum_distribution d2 = parse_spectrum(spec2);
    clebsch::sample_report report = clebsch::sample_conditional(d1, d2, total, n, seed, streams);

    if (opts.format == "json") {
        json doc;
        doc["spectrum1"] = spec1;
        doc["spectrum2"] = spec2;
        doc["total_m_twice"] = total;
        doc["n"] = report.accepted;
        doc["seed"] = report.seed;
        doc["streams"] = report.streams;
        doc["attempts"] = report.attempts;
        doc["acceptance_rate"] = approx12(report.acceptance_rate);
        doc["cells"] = json::array();
        for (const auto& cell : report.cells) {
            json c;
            c["m1_twice"] = cell.m1_twice;
            c["m2_twice"] = cell.m2_twice;
            c["count"] = cell.count;
            c["frequency"] = approx12(cell.frequency);
            c["exact_num"] = cell.exact_prob.numerator().str();
            c["exact_den"] = cell.exact_prob.denominator().str();
            c["exact_approx"] = approx12(cell.exact_prob.to_double());
            c["abs_error"] = approx12(cell.abs_error);
            c["std_error"] = approx12(cell.std_error);
            doc["cells"].push_back(c);
        }
        write_output(opts, doc.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string out =
            "m1_twice,m2_twice,count,frequency,exact_num,exact_den,exact_approx,abs_error,std_error\n";
        for (const auto& cell : report.cells)
            out += std::to_string(cell.m1_twice) + "," + std::to_string(cell.m2_twice) + "," +
                   std::to_string(cell.count) + "," + approx_str(cell.frequency) + "," +
                   cell.exact_prob.numerator().str() + "," + cell.exact_prob.denominator().str() +
                   "," + approx_str(cell.exact_prob.to_double()) + "," +
                   approx_str(cell.abs_error) + "," + approx_str(cell.std_error) + "\n";
        write_output(opts, out);
    } else {
        std::string out = "# sample spectrum1=" + spec1 + " spectrum2=" + spec2 +
                          " total_m_twice=" + std::to_string(total) +
                          " n=" + std::to_string(report.accepted) +
                          " seed=" + std::to_string(report.seed) +
                          " streams=" + std::to_string(report.streams) + "\n";
        out += "# attempts=" + std::to_string(report.attempts) +
               " acceptance_rate=" + approx_str(report.acceptance_rate) + "\n";
        out += "# columns: m1_twice m2_twice count frequency exact exact_approx abs_error std_error\n";
        for (const auto& cell : report.cells)
            out += std::to_string(cell.m1_twice) + " " + std::to_string(cell.m2_twice) + "  " +
                   std::to_string(cell.count) + " " + approx_str(cell.frequency) + "  " +
                   cell.exact_prob.to_string() + " " + approx_str(cell.exact_prob.to_double()) +
                   "  " + approx_str(cell.abs_error) + " " + approx_str(cell.std_error) + "\n";
        write_output(opts, out);
    }
    return 0;
}

// --- subcommand: verify ---------------------------------------------------------

struct verify_check {
    std::string name;
    int j1_twice;
    int j2_twice;
    bool pass;
};

int run_verify(int max_twice, const output_options& opts) {
    std::vector<verify_check> checks;
    for (int a = 0; a <= max_twice; ++a) {
        for (int b = 0; b <= max_twice; ++b) {
            clebsch::spin j1(a), j2(b);
            clebsch::cg_table table = clebsch::build_cg_table(j1, j2);

            clebsch::table_check_result invariants = clebsch::check_table_invariants(table);
            checks.push_back({"unitarity", a, b, invariants.pass()});

            bool annihilated = true;
            for (int J : clebsch::allowed_J_range(j1, j2))
                annihilated = annihilated &&
                              clebsch::raising_annihilates(clebsch::highest_weight(j1, j2, J), j1, j2);
            checks.push_back({"raising_annihilation", a, b, annihilated});

            checks.push_back({"stretched_closed_form", a, b, clebsch::verify_stretched_agreement(j1, j2).pass});

            bool conditional_ok = true;
            clebsch::rational p(1, 2);
            for (int M = a + b; M >= -(a + b); M -= 2) {
                clebsch::conditional_agreement_report t2 = clebsch::verify_conditional_agreement(j1, j2, p, M);
                conditional_ok = conditional_ok && t2.matches_cg && t2.p_independent;
            }
            checks.push_back({"conditional_equivalence", a, b, conditional_ok});

            checks.push_back(
                {"float_oracle", a, b, clebsch::max_squared_deviation(table) <= 1e-9});
        }
    }

    bool all_pass = true;
    for (const auto& check : checks) all_pass = all_pass && check.pass;

    if (opts.format == "json") {
        json doc;
        doc["max_twice"] = max_twice;
        doc["all_pass"] = all_pass;
        doc["checks"] = json::array();
        for (const auto& check : checks) {
            json c;
            c["name"] = check.name;
            c["j1_twice"] = check.j1_twice;
            c["j2_twice"] = check.j2_twice;
            c["pass"] = check.pass;
            doc["checks"].push_back(c);
        }
        write_output(opts, doc.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string out = "name,j1_twice,j2_twice,pass\n";
        for (const auto& check : checks)
            out += check.name + "," + std::to_string(check.j1_twice) + "," +
                   std::to_string(check.j2_twice) + "," + (check.pass ? "true" : "false") + "\n";
        write_output(opts, out);
    } else {
        std::string out;
        for (const auto& check : checks)
            out += std::string(check.pass ? "PASS" : "FAIL") + " " + check.name +
                   " j1_twice=" + std::to_string(check.j1_twice) +
                   " j2_twice=" + std::to_string(check.j2_twice) + "\n";
        out += std::string("VERIFY ") + (all_pass ? "PASS" : "FAIL") +
               " checks=" + std::to_string(checks.size()) + "\n";
        write_output(opts, out);
    }
    return all_pass ? 0 : 1;
}

// --- subcommand: demo-spin1 ------------------------------------------------------

struct spin1_demo {
    clebsch::cg_table table;
    std::vector<std::array<int, 2>> splits;  // (k1, k2) for k = 2
    std::vector<clebsch::rational> closed_values;
    clebsch::conditional_report binomial_conditional;
    clebsch::conditional_report uniform_conditional;
    bool binomial_matches_stretched = true;
    bool uniform_matches_singlet = true;
};

spin1_demo make_spin1_demo() {
    spin1_demo demo{clebsch::build_cg_table(clebsch::spin(2), clebsch::spin(2)),
                    {{{1, 1}, {0, 2}, {2, 0}}},
                    {},
                    clebsch::conditional_joint(clebsch::spectrum_from_binomial(2, {1, 2}),
                                               clebsch::spectrum_from_binomial(2, {1, 2}), 0),
                    clebsch::conditional_joint(clebsch::uniform_spectrum(2),
                                               clebsch::uniform_spectrum(2), 0)};
    for (const auto& split : demo.splits)
        demo.closed_values.push_back(clebsch::stretched_cg_squared(2, split[0], 2, split[1]));
    for (const auto& [cell, prob] : demo.binomial_conditional.entries)
        demo.binomial_matches_stretched =
            demo.binomial_matches_stretched &&
            prob == demo.table.lookup(4, 0, cell.m1_twice).squared();
    for (const auto& [cell, prob] : demo.uniform_conditional.entries)
        demo.uniform_matches_singlet =
            demo.uniform_matches_singlet && prob == demo.table.lookup(0, 0, cell.m1_twice).squared();
    return demo;
}

int run_demo_spin1(const output_options& opts) {
    spin1_demo demo = make_spin1_demo();

    if (opts.format == "json") {
        json doc;
        doc["table"] = table_to_json(demo.table);
        doc["stretched_squared"] = json::array();
        for (std::size_t i = 0; i < demo.splits.size(); ++i) {
            json value;
            value["k1"] = demo.splits[i][0];
            value["k2"] = demo.splits[i][1];
            value["value_num"] = demo.closed_values[i].numerator().str();
            value["value_den"] = demo.closed_values[i].denominator().str();
            value["approx"] = approx12(demo.closed_values[i].to_double());
            doc["stretched_squared"].push_back(value);
        }
        doc["binomial_conditional"] = json::object();
        doc["binomial_conditional"]["spectrum"] = "binomial:2:1/2";
        doc["binomial_conditional"]["total_m_twice"] = 0;
        doc["binomial_conditional"]["entries"] = conditional_entries_json(demo.binomial_conditional);
        doc["binomial_conditional"]["matches_stretched_squares"] = demo.binomial_matches_stretched;
        doc["uniform_conditional"] = json::object();
        doc["uniform_conditional"]["spectrum"] = "uniform:2";
        doc["uniform_conditional"]["total_m_twice"] = 0;
        doc["uniform_conditional"]["entries"] = conditional_entries_json(demo.uniform_conditional);
        doc["uniform_conditional"]["matches_singlet_squares"] = demo.uniform_matches_singlet;
        write_output(opts, doc.dump(2) + "\n");
        return 0;
    }

    if (opts.format == "csv") {
        std::string out = "section,J_twice,M_twice,m1_twice,m2_twice,value,approx\n";
        for (const auto& [key, amp] : demo.table.entries())
            out += "table," + std::to_string(key.J_twice) + "," + std::to_string(key.M_twice) +
                   "," + std::to_string(key.m1_twice) + "," +
                   std::to_string(key.M_twice - key.m1_twice) + "," + amp.to_string() + "," +
                   approx_str(amp.to_double()) + "\n";
        for (std::size_t i = 0; i < demo.splits.size(); ++i) {
            int m1 = 2 - 2 * demo.splits[i][0];
            int m2 = 2 - 2 * demo.splits[i][1];
            out += "stretched_squared,4,0," + std::to_string(m1) + "," + std::to_string(m2) + "," +
                   demo.closed_values[i].to_string() + "," +
                   approx_str(demo.closed_values[i].to_double()) + "\n";
        }
        for (const auto& [cell, prob] : demo.binomial_conditional.entries)
            out += "binomial_conditional,,0," + std::to_string(cell.m1_twice) + "," +
                   std::to_string(cell.m2_twice) + "," + prob.to_string() + "," +
                   approx_str(prob.to_double()) + "\n";
        for (const auto& [cell, prob] : demo.uniform_conditional.entries)
            out += "uniform_conditional,,0," + std::to_string(cell.m1_twice) + "," +
                   std::to_string(cell.m2_twice) + "," + prob.to_string() + "," +
                   approx_str(prob.to_double()) + "\n";
        write_output(opts, out);
        return 0;
    }

    std::string out;
    out += "spin-1 pair coupling walkthrough\n";
    out += "================================\n";
    out += "\n";
    out += "All quantum numbers below are twice-values (2j, 2m).\n";
    out += "\n";
    out += "[1] Exact CG table for j1_twice=2, j2_twice=2, built with ladder operators\n";
    out += "    (columns: J_twice M_twice m1_twice m2_twice coefficient approx)\n";
    out += table_rows_text(demo.table, "    ");
    out += "\n";
    out += "[2] Stretched closed form C(l1,k1)*C(l2,k2)/C(l,k), l1=l2=2, k=k1+k2=2\n";
    for (std::size_t i = 0; i < demo.splits.size(); ++i)
        out += "    k1=" + std::to_string(demo.splits[i][0]) +
               " k2=" + std::to_string(demo.splits[i][1]) + " -> " +
               demo.closed_values[i].to_string() + " (approx " +
               approx_str(demo.closed_values[i].to_double()) + ")\n";
    out += "    These equal the squared J_twice=4, M_twice=0 amplitudes above.\n";
    out += "\n";
    out += "[3] Conditional distribution, binomial spectra (binomial:2:1/2 each),\n";
    out += "    i.e. per-particle weights 1/4, 1/2, 1/4 on m = +1, 0, -1; total M_twice=0\n";
    out += "    (columns: m1_twice m2_twice prob approx)\n";
    for (const auto& [cell, prob] : demo.binomial_conditional.entries)
        out += "    " + std::to_string(cell.m1_twice) + " " + std::to_string(cell.m2_twice) +
               "  " + prob.to_string() + "  " + approx_str(prob.to_double()) + "\n";
    out += std::string("    matches the squared stretched (J_twice=4) amplitudes: ") +
           (demo.binomial_matches_stretched ? "yes" : "NO") + "\n";
    out += "\n";
    out += "[4] Conditional distribution, uniform spectra (uniform:2 each),\n";
    out += "    i.e. per-particle weights 1/3, 1/3, 1/3; total M_twice=0\n";
    out += "    (columns: m1_twice m2_twice prob approx)\n";
    for (const auto& [cell, prob] : demo.uniform_conditional.entries)
        out += "    " + std::to_string(cell.m1_twice) + " " + std::to_string(cell.m2_twice) +
               "  " + prob.to_string() + "  " + approx_str(prob.to_double()) + "\n";
    out += std::string("    matches the squared singlet (J_twice=0) amplitudes: ") +
           (demo.uniform_matches_singlet ? "yes" : "NO") + "\n";
    write_output(opts, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Clebsch-Gordan coefficients via ladder operators, the stretched\n"
                 "closed form, and conditional probability over spin spectra.\n"
                 "All spins and projections are given as twice-values (2j, 2m)."};
    app.require_subcommand(1);
    app.fallthrough();

    output_options opts;
    std::uint64_t seed = 42;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", opts.path, "Write output to this path instead of stdout");
    app.add_option("--seed", seed, "64-bit unsigned seed for sampling")->capture_default_str();

    int j1_twice = 0, j2_twice = 0;
    auto* cmd_table = app.add_subcommand("table", "Exact CG table for a (j1, j2) pair");
    cmd_table->add_option("--j1", j1_twice, "j1 twice-value (2*j1)")->required();
    cmd_table->add_option("--j2", j2_twice, "j2 twice-value (2*j2)")->required();

    int l1 = 0, l2 = 0;
    std::int64_t k1 = 0, k2 = 0;
    auto* cmd_stretched =
        app.add_subcommand("stretched", "Closed-form squared stretched coefficient");
    cmd_stretched->add_option("--l1", l1, "first twice-spin")->required();
    cmd_stretched->add_option("--k1", k1, "lowering count of particle 1")->required();
    cmd_stretched->add_option("--l2", l2, "second twice-spin")->required();
    cmd_stretched->add_option("--k2", k2, "lowering count of particle 2")->required();

    int max_twice = 0;
    auto* cmd_verify =
        app.add_subcommand("verify", "Cross-verify all routes for every pair up to a bound");
    cmd_verify->add_option("--max", max_twice, "largest twice-spin per particle")
        ->required()
        ->check(CLI::NonNegativeNumber);

    std::string spectrum1, spectrum2;
    int total = 0;
    auto* cmd_conditional =
        app.add_subcommand("conditional", "Exact conditional joint distribution given the total");
    cmd_conditional->add_option("--spectrum1", spectrum1, "first spectrum")->required();
    cmd_conditional->add_option("--spectrum2", spectrum2, "second spectrum")->required();
    cmd_conditional->add_option("--total", total, "total m twice-value")->required();

    std::uint64_t n = 1000000;
    unsigned streams = 1;
    auto* cmd_sample =
        app.add_subcommand("sample", "Seeded Monte Carlo check of the conditional distribution");
    cmd_sample->add_option("--spectrum1", spectrum1, "first spectrum")->required();
    cmd_sample->add_option("--spectrum2", spectrum2, "second spectrum")->required();
    cmd_sample->add_option("--total", total, "total m twice-value")->required();
    cmd_sample->add_option("--n", n, "accepted sample count")->capture_default_str();
    cmd_sample->add_option("--streams", streams, "independently seeded sub-streams")
        ->capture_default_str();

    auto* cmd_demo = app.add_subcommand("demo-spin1", "Full spin-1 pair walkthrough");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_table->parsed()) return run_table(j1_twice, j2_twice, opts);
        if (cmd_stretched->parsed()) return run_stretched(l1, k1, l2, k2, opts);
        if (cmd_verify->parsed()) return run_verify(max_twice, opts);
        if (cmd_conditional->parsed()) return run_conditional(spectrum1, spectrum2, total, opts);
        if (cmd_sample->parsed()) return run_sample(spectrum1, spectrum2, total, n, seed, streams, opts);
        if (cmd_demo->parsed()) return run_demo_spin1(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
