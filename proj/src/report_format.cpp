#include "clfcong/report_format.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <sstream>

namespace clfcong {

ReportFormat parse_report_format(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw Error(Errc::InvalidArgument, "unknown output format '" + std::string(name) + "'");
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size())
                line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

std::size_t failures(const std::vector<VerificationReport>& reports) {
    return static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; }));
}

} // namespace

std::string format_reports(const std::vector<VerificationReport>& reports, ReportFormat format) {
    const std::size_t failed = failures(reports);
    switch (format) {
    case ReportFormat::Json: {
        ordered_json doc;
        auto& rows = doc["results"] = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json row;
            row["check"] = r.check;
            row["p"] = r.p;
            row["exponent"] = r.exponent;
            row["lhs"] = r.error ? "" : to_string(r.lhs_residue);
            row["rhs"] = r.error ? "" : to_string(r.rhs_residue);
            row["valuation"] = r.valuation;
            row["pass"] = r.pass;
            row["error"] = r.error ? ordered_json(*r.error) : ordered_json(nullptr);
            rows.push_back(std::move(row));
        }
        doc["summary"] = {{"rows", reports.size()}, {"passed", reports.size() - failed}, {"failed", failed}};
        return doc.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
        std::string out = "check,p,exponent,lhs,rhs,valuation,pass,error\n";
        for (const auto& r : reports) {
            out += csv_field(r.check) + ',' + std::to_string(r.p) + ',' + std::to_string(r.exponent) + ',';
            out += (r.error ? "" : to_string(r.lhs_residue)) + ',';
            out += (r.error ? "" : to_string(r.rhs_residue)) + ',';
            out += std::to_string(r.valuation) + ',' + (r.pass ? "true" : "false") + ',';
            out += csv_field(r.error.value_or("")) + '\n';
        }
        return out;
    }
    case ReportFormat::Text: {
        std::vector<std::vector<std::string>> rows{{"CHECK", "P", "E", "LHS", "RHS", "VAL", "RESULT"}};
        for (const auto& r : reports) {
            if (r.error) {
                rows.push_back({r.check, std::to_string(r.p), std::to_string(r.exponent), "-", "-",
                                std::to_string(r.valuation), "ERROR: " + *r.error});
                continue;
            }
            rows.push_back({r.check, std::to_string(r.p), std::to_string(r.exponent), to_string(r.lhs_residue),
                            to_string(r.rhs_residue), std::to_string(r.valuation), r.pass ? "pass" : "FAIL"});
        }
        return table(rows) + std::to_string(reports.size()) + " rows, " + std::to_string(failed) + " failed\n";
    }
    }
    return {};
}

std::string format_identities(const std::vector<IdentitySummary>& summaries, ReportFormat format) {
    auto counter = [](const IdentitySummary& s) -> std::array<std::string, 3> {
        if (!s.first_failure)
            return {"", "", ""};
        return {s.first_failure->parameter, s.first_failure->lhs.str(), s.first_failure->rhs.str()};
    };
    std::size_t failed = 0;
    for (const auto& s : summaries)
        failed += s.passed() ? 0 : 1;

    switch (format) {
    case ReportFormat::Json: {
        ordered_json doc;
        auto& rows = doc["identities"] = ordered_json::array();
        for (const auto& s : summaries) {
            ordered_json row;
            row["id"] = s.id;
            row["domain"] = s.domain;
            row["cases"] = s.cases;
            row["failures"] = s.failures;
            row["pass"] = s.passed();
            if (s.first_failure) {
                auto [param, lhs, rhs] = counter(s);
                row["counterexample"] = {{"parameter", param}, {"lhs", lhs}, {"rhs", rhs}};
            } else {
                row["counterexample"] = nullptr;
            }
            rows.push_back(std::move(row));
        }
        doc["summary"] = {{"identities", summaries.size()}, {"failed", failed}};
        return doc.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
        std::string out = "id,domain,cases,failures,pass,parameter,lhs,rhs\n";
        for (const auto& s : summaries) {
            auto [param, lhs, rhs] = counter(s);
            out += csv_field(s.id) + ',' + csv_field(s.domain) + ',' + std::to_string(s.cases) + ',' +
                   std::to_string(s.failures) + ',' + (s.passed() ? "true" : "false") + ',' + csv_field(param) +
                   ',' + csv_field(lhs) + ',' + csv_field(rhs) + '\n';
        }
        return out;
    }
    case ReportFormat::Text: {
        std::vector<std::vector<std::string>> rows{{"IDENTITY", "DOMAIN", "CASES", "RESULT"}};
        for (const auto& s : summaries) {
            std::string result = "pass";
            if (!s.passed()) {
                auto [param, lhs, rhs] = counter(s);
                result = "FAIL (" + std::to_string(s.failures) + " cases; first at " + param + ": " + lhs +
                         " != " + rhs + ")";
            }
            rows.push_back({s.id, s.domain, std::to_string(s.cases), result});
        }
        return table(rows) + std::to_string(summaries.size()) + " identities, " + std::to_string(failed) +
               " failed\n";
    }
    }
    return {};
}

} // namespace clfcong
