#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsv/hardhex.hpp"
#include "qsv/registry.hpp"

namespace {

using nlohmann::json;

json report_to_json(const qsv::VerifyReport& r) {
    json j;
    j["id"] = r.id;
    j["order"] = r.order;
    j["status"] = r.pass ? "pass" : "fail";
    j["coefficients"] = json::array();
    for (const auto& c : r.coefficients) j["coefficients"].push_back(qsv::to_string(c));
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"degree", r.first_mismatch->degree},
                               {"lhs", qsv::to_string(r.first_mismatch->lhs)},
                               {"rhs", qsv::to_string(r.first_mismatch->rhs)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

void print_report(const qsv::VerifyReport& r, const std::string& format) {
    if (format == "json") {
        std::cout << report_to_json(r).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "degree,coefficient\n";
        for (size_t d = 0; d < r.coefficients.size(); ++d)
            std::cout << d << "," << qsv::to_string(r.coefficients[d]) << "\n";
    } else {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " (order " << r.order << ")";
        if (!r.note.empty()) std::cout << " - " << r.note;
        if (r.first_mismatch)
            std::cout << " - first mismatch at degree " << r.first_mismatch->degree << ": "
                      << qsv::to_string(r.first_mismatch->lhs) << " vs "
                      << qsv::to_string(r.first_mismatch->rhs);
        std::cout << "\n";
    }
}

void print_series(const std::string& name, const qsv::Series& s, const std::string& format) {
    if (format == "json") {
        json j;
        j["id"] = name;
        j["order"] = s.order();
        j["status"] = "pass";
        j["first_mismatch"] = nullptr;
        j["coefficients"] = json::array();
        for (int d = 0; d <= s.order(); ++d)
            j["coefficients"].push_back(qsv::to_string(s.coeff(d)));
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "degree,coefficient\n";
        for (int d = 0; d <= s.order(); ++d)
            std::cout << d << "," << qsv::to_string(s.coeff(d)) << "\n";
    } else {
        std::cout << name << " = " << s.str() << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series and lattice-gas identity verifier"};
    app.require_subcommand(1);
    std::string format = "text";

    auto* verify = app.add_subcommand("verify", "verify one registered identity");
    std::string verify_id;
    long verify_order = 0;
    verify->add_option("--id", verify_id, "identity id (see report-all for the list)")
        ->required();
    verify->add_option("--order", verify_order, "series order / size bound (0 = default)");
    verify->add_option("--format", format, "json, csv, or text");

    auto* expand = app.add_subcommand("expand", "print coefficients of a named series");
    std::string expand_fn;
    long expand_order = 10;
    expand->add_option("--fn", expand_fn, "series name")->required();
    expand->add_option("--order", expand_order, "truncation order");
    expand->add_option("--format", format, "json, csv, or text");

    auto* hardhex = app.add_subcommand("hardhex", "count lattice-gas configurations on a torus");
    int rows = 4, cols = 4;
    hardhex->add_option("--rows", rows, "torus rows (>= 4)")->required();
    hardhex->add_option("--cols", cols, "torus cols (>= 4)")->required();
    hardhex->add_option("--format", format, "json, csv, or text");

    auto* report = app.add_subcommand("report-all", "run the whole verification suite");
    int jobs = 1;
    report->add_option("--jobs", jobs, "parallel workers");
    report->add_option("--format", format, "json, csv, or text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (format != "json" && format != "csv" && format != "text") {
        std::cerr << "unknown format: " << format << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            qsv::VerifyReport r = qsv::run_check(
                verify_id, verify_order > 0 ? std::optional<long>(verify_order) : std::nullopt);
            print_report(r, format);
            return r.pass ? 0 : 1;
        }
        if (expand->parsed()) {
            qsv::Series s = qsv::expand_function(expand_fn, static_cast<int>(expand_order));
            print_series(expand_fn, s, format);
            return 0;
        }
        if (hardhex->parsed()) {
            qsv::TriangularTorus t(rows, cols);
            qsv::OccupancyCounts c = qsv::count_configs(t);
            if (format == "json") {
                json j;
                j["rows"] = rows;
                j["cols"] = cols;
                j["sites"] = c.sites;
                j["g"] = json::array();
                for (const auto& g : c.g) j["g"].push_back(g.get_str());
                std::cout << j.dump(2) << "\n";
            } else if (format == "csv") {
                std::cout << "n,count\n";
                for (size_t n = 0; n < c.g.size(); ++n)
                    std::cout << n << "," << c.g[n].get_str() << "\n";
            } else {
                for (size_t n = 0; n < c.g.size(); ++n)
                    std::cout << "g[" << n << "] = " << c.g[n].get_str() << "\n";
            }
            return 0;
        }
        if (report->parsed()) {
            std::vector<qsv::VerifyReport> rs = qsv::run_all_checks(jobs);
            bool all = true;
            if (format == "json") {
                json j = json::array();
                for (const auto& r : rs) {
                    j.push_back(report_to_json(r));
                    all = all && r.pass;
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& r : rs) {
                    qsv::VerifyReport brief = r;
                    brief.coefficients.clear();
                    print_report(brief, format == "csv" ? "text" : format);
                    all = all && r.pass;
                }
                std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
            }
            return all ? 0 : 1;
        }
    } catch (const qsv::UnknownIdentity& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const qsv::BadParameter& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const qsv::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
