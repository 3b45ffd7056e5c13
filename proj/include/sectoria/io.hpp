#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "complex_matrix.hpp"
#include "report.hpp"

namespace sectoria {

/// Shortest exact decimal for a double; the basis of byte-identical output.
inline std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Write-to-temp-then-rename so a failed run never leaves a partial file.
inline void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp(target);
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open for writing: " + tmp.string());
        os << content;
        os.flush();
        if (!os) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw std::runtime_error("rename failed: " + target.string() + ": " + ec.message());
    }
}

/// Matrix JSON: {"n": 2, "entries": [[[re, im], ...], ...]} row-major.
inline CMatrix matrix_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("matrix file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw std::runtime_error("matrix file: expected object with \"n\" and \"entries\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw std::runtime_error("matrix file: \"n\" must be a positive integer");
    const int n = j["n"].get<int>();
    const auto& rows = j["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::runtime_error("matrix file: \"entries\" must hold n rows");
    CMatrix a(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::runtime_error("matrix file: each row must hold n entries");
        for (int k = 0; k < n; ++k) {
            const auto& e = row[static_cast<std::size_t>(k)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw std::runtime_error("matrix file: entries must be [re, im] pairs");
            a(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    if (!a.is_finite()) throw std::runtime_error("matrix file: entries must be finite");
    return a;
}

inline CMatrix load_matrix_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read matrix file: " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return matrix_from_json_text(buf.str());
}

inline nlohmann::ordered_json point_json(cplx z) {
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

inline nlohmann::ordered_json report_json(const VerifyReport& rep) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    int passed = 0, failed = 0, vacuous = 0;
    for (const CheckItem& c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"params", c.params},
                          {"pass", c.pass},
                          {"worst", c.worst},
                          {"witness", c.witness},
                          {"vacuous", c.vacuous}});
        if (c.vacuous)
            ++vacuous;
        else if (c.pass)
            ++passed;
        else
            ++failed;
    }
    nlohmann::ordered_json out;
    out["checks"] = std::move(checks);
    out["counts"] = {{"total", rep.checks.size()},
                     {"passed", passed},
                     {"failed", failed},
                     {"vacuous", vacuous}};
    out["all_pass"] = rep.all_pass();
    return out;
}

/// Static standalone SVG: fixed frame [-1.15, 1.15]^2, math y-axis upward.
class SvgBuilder {
public:
    SvgBuilder() {
        body_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
                 "viewBox=\"-1.15 -1.15 2.3 2.3\">\n"
              << "<rect x=\"-1.15\" y=\"-1.15\" width=\"2.3\" height=\"2.3\" fill=\"white\"/>\n"
              << "<line x1=\"-1.15\" y1=\"0\" x2=\"1.15\" y2=\"0\" stroke=\"#cccccc\" "
                 "stroke-width=\"0.004\"/>\n"
              << "<line x1=\"0\" y1=\"-1.15\" x2=\"0\" y2=\"1.15\" stroke=\"#cccccc\" "
                 "stroke-width=\"0.004\"/>\n";
    }

    void polyline(const std::string& id, const std::vector<cplx>& pts, const std::string& color) {
        body_ << "<polyline id=\"" << id << "\" fill=\"none\" stroke=\"" << color
              << "\" stroke-width=\"0.008\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ << ' ';
            // svg y grows downward; negate so the plot is in math orientation
            body_ << fmt6(pts[i].real()) << ',' << fmt6(-pts[i].imag());
        }
        body_ << "\"/>\n";
    }

    std::string finish() { return body_.str() + "</svg>\n"; }

private:
    static std::string fmt6(double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", x == 0.0 ? 0.0 : x); // normalize -0
        return buf;
    }
    std::ostringstream body_;
};

} // namespace sectoria
