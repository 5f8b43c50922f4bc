#include "polarlab/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "polarlab/pauli.hpp"

namespace polarlab::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::Parse, msg); }

bool parse_real(const std::string& token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',' || c == ' ' || c == '\t' || c == ';' || c == '\r') {
            if (!cur.empty()) fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) fields.push_back(cur);
    return fields;
}

Mueller parse_grid_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<double>> rows;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto fields = split_fields(line);
        if (fields.empty()) continue;
        std::vector<double> row;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            double v = 0.0;
            if (!parse_real(fields[c], v)) {
                fail("row " + std::to_string(rows.size() + 1) + ", column " + std::to_string(c + 1) + " (line " +
                     std::to_string(line_no) + "): '" + fields[c] + "' is not a real number");
            }
            if (!std::isfinite(v)) {
                fail("row " + std::to_string(rows.size() + 1) + ", column " + std::to_string(c + 1) +
                     ": non-finite value");
            }
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    std::size_t total = 0;
    for (const auto& r : rows) total += r.size();
    if (total != 16) {
        std::ostringstream os;
        os << "Mueller grid: expected 16 values, found " << total;
        if (total < 16) os << " (" << 16 - total << " missing)";
        else os << " (" << total - 16 << " extra)";
        fail(os.str());
    }
    if (rows.size() != 4) fail("Mueller grid: expected 4 rows, found " + std::to_string(rows.size()));
    Mueller M;
    for (int r = 0; r < 4; ++r) {
        if (rows[r].size() != 4) {
            fail("Mueller grid: row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                 " values, expected 4");
        }
        for (int c = 0; c < 4; ++c) M(r, c) = rows[r][c];
    }
    return M;
}

double real_value(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where + ": expected a real number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(where + ": non-finite value");
    return v;
}

const json& require(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) fail(std::string("missing key \"") + key + "\"");
    return doc.at(key);
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed document: ") + e.what());
    }
}

Mueller parse_mueller_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const json doc = parse_json_text(text);
        const json& arr = require(doc, "mueller");
        if (!arr.is_array()) fail("\"mueller\" must be an array of 16 reals");
        if (arr.size() != 16) {
            fail("\"mueller\": expected 16 values, found " + std::to_string(arr.size()));
        }
        Mueller M;
        for (int k = 0; k < 16; ++k) {
            M(k / 4, k % 4) = real_value(arr[k], "mueller[" + std::to_string(k) + "] (row " +
                                                     std::to_string(k / 4 + 1) + ", column " +
                                                     std::to_string(k % 4 + 1) + ")");
        }
        return M;
    }
    return parse_grid_text(text);
}

Mueller parse_mueller_file(const std::string& path) { return parse_mueller_text(read_file(path)); }

cplx parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) {
        fail(where + ": complex value must be a [re, im] pair" +
             (j.is_array() ? " (found " + std::to_string(j.size()) + " entries)" : ""));
    }
    return {real_value(j[0], where + ".re"), real_value(j[1], where + ".im")};
}

Eigen::MatrixXcd parse_complex_matrix(const json& j, int rows, int cols, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) {
        fail(where + ": expected " + std::to_string(rows) + " rows" +
             (j.is_array() ? ", found " + std::to_string(j.size()) : ""));
    }
    Eigen::MatrixXcd M(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            fail(where + ": row " + std::to_string(r + 1) + " must hold " + std::to_string(cols) + " complex entries");
        }
        for (int c = 0; c < cols; ++c) {
            M(r, c) = parse_complex(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
        }
    }
    return M;
}

Jones parse_jones(const json& j, const std::string& where) { return parse_complex_matrix(j, 2, 2, where); }

JonesEnsemble parse_ensemble(const json& doc) {
    const json& list = require(doc, "jones_ensemble");
    if (!list.is_array() || list.empty()) fail("\"jones_ensemble\" must be a nonempty list");
    std::vector<EnsembleMember> members;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string where = "jones_ensemble[" + std::to_string(k) + "]";
        const json& m = list[k];
        if (!m.is_object() || !m.contains("weight") || !m.contains("jones")) {
            fail(where + ": member needs \"weight\" and \"jones\"");
        }
        members.push_back({real_value(m["weight"], where + ".weight"), parse_jones(m["jones"], where + ".jones")});
    }
    try {
        return JonesEnsemble(std::move(members), 1e-9);
    } catch (const Error& e) {
        fail(e.what());
    }
}

JonesEnsemble ParamEnsemble::at(double t) const {
    std::vector<EnsembleMember> out;
    out.reserve(members.size());
    for (const auto& m : members) {
        if (!m.parameterized) {
            out.push_back({m.weight, m.fixed});
            continue;
        }
        const double g = m.generator.norm();
        const Jones J = g > 0.0 ? su2_rotation(m.generator / g, t * g) : Jones(Jones::Identity());
        out.push_back({m.weight, J});
    }
    return JonesEnsemble(std::move(out), 1e-9);
}

ParamEnsemble parse_param_ensemble(const json& doc) {
    const json& list = require(doc, "jones_ensemble");
    if (!list.is_array() || list.empty()) fail("\"jones_ensemble\" must be a nonempty list");
    ParamEnsemble ens;
    double total = 0.0;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string where = "jones_ensemble[" + std::to_string(k) + "]";
        const json& m = list[k];
        if (!m.is_object() || !m.contains("weight")) fail(where + ": member needs \"weight\"");
        ParamMember pm;
        pm.weight = real_value(m["weight"], where + ".weight");
        if (!(pm.weight > 0.0)) fail(where + ": weight must be positive");
        if (m.contains("generator")) {
            const json& g = m["generator"];
            if (!g.is_array() || g.size() != 3) fail(where + ".generator: expected 3 reals");
            pm.parameterized = true;
            for (int i = 0; i < 3; ++i) pm.generator[i] = real_value(g[i], where + ".generator");
        } else if (m.contains("jones")) {
            pm.fixed = parse_jones(m["jones"], where + ".jones");
        } else {
            fail(where + ": member needs \"jones\" or \"generator\"");
        }
        total += pm.weight;
        ens.members.push_back(pm);
    }
    if (std::abs(total - 1.0) > 1e-9) fail("ensemble weights sum to " + format_double(total) + ", expected 1");
    return ens;
}

KrausSet parse_kraus(const json& doc) {
    const json& list = require(doc, "kraus");
    if (!list.is_array() || list.empty()) fail("\"kraus\" must be a nonempty list");
    KrausSet ks;
    for (std::size_t k = 0; k < list.size(); ++k) ks.push_back(parse_jones(list[k], "kraus[" + std::to_string(k) + "]"));
    return ks;
}

Eigen::Matrix4cd parse_choi(const json& doc, const Tolerances& tol) {
    const Eigen::Matrix4cd rho = parse_complex_matrix(require(doc, "choi"), 4, 4, "choi");
    const double dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol.hermitian) fail("\"choi\" is not Hermitian (deviation " + format_double(dev) + ")");
    return rho;
}

Spinor parse_probe(const std::string& spec) {
    const auto fields = split_fields(spec);
    std::vector<double> v;
    for (const auto& f : fields) {
        double x = 0.0;
        if (!parse_real(f, x) || !std::isfinite(x)) fail("probe: '" + f + "' is not a real number");
        v.push_back(x);
    }
    if (v.size() == 4) {
        Spinor psi{cplx(v[0], v[1]), cplx(v[2], v[3])};
        const double n = psi.norm();
        if (!(n > 0.0)) fail("probe: zero spinor");
        return psi / n;
    }
    if (v.size() == 3) {
        const Bloch u{v[0], v[1], v[2]};
        if (!(u.norm() > 0.0)) fail("probe: zero Bloch vector");
        return bloch_to_spinor(u);
    }
    fail("probe: expected 4 numbers (spinor re,im,re,im) or 3 (Bloch vector), found " + std::to_string(v.size()));
}

GridSpec parse_grid(const std::string& spec) {
    GridSpec g;
    const auto a = spec.find(':');
    const auto b = a == std::string::npos ? a : spec.find(':', a + 1);
    if (a == std::string::npos || b == std::string::npos) fail("grid: expected start:stop:count");
    if (!parse_real(spec.substr(0, a), g.start) || !parse_real(spec.substr(a + 1, b - a - 1), g.stop)) {
        fail("grid: start and stop must be real numbers");
    }
    const std::string count = spec.substr(b + 1);
    const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), g.count);
    if (ec != std::errc() || ptr != count.data() + count.size() || g.count < 1) {
        fail("grid: count must be an integer >= 1");
    }
    return g;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace polarlab::io
