#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polarlab/channel.hpp"
#include "polarlab/ensemble.hpp"
#include "polarlab/types.hpp"

namespace polarlab::io {

using json = nlohmann::json;

std::string read_file(const std::string& path);

/// Accepts a 4x4 real grid (comma and/or whitespace separated, '#' comments)
/// or a JSON document with key "mueller" holding 16 row-major reals.
Mueller parse_mueller_text(const std::string& text);
Mueller parse_mueller_file(const std::string& path);

/// Complex scalar encoded as [re, im].
cplx parse_complex(const json& j, const std::string& where);

/// Row-major complex matrix: array of rows, each an array of [re, im] pairs.
Eigen::MatrixXcd parse_complex_matrix(const json& j, int rows, int cols, const std::string& where);

Jones parse_jones(const json& j, const std::string& where);

/// {"jones_ensemble": [{"weight": w, "jones": [[...]]}, ...]}
JonesEnsemble parse_ensemble(const json& doc);

/// Ensemble whose members are either fixed ("jones") or parameterized
/// retarders ("generator": [g1, g2, g3] -> exp(-i t g.sigma / 2)).
struct ParamMember {
    double weight = 0.0;
    bool parameterized = false;
    Jones fixed;
    Eigen::Vector3d generator = Eigen::Vector3d::Zero();
};

struct ParamEnsemble {
    std::vector<ParamMember> members;
    JonesEnsemble at(double t) const;
};

ParamEnsemble parse_param_ensemble(const json& doc);

/// {"kraus": [matrix, ...]}
KrausSet parse_kraus(const json& doc);

/// {"choi": 4x4 complex}; Hermiticity checked.
Eigen::Matrix4cd parse_choi(const json& doc, const Tolerances& tol = {});

json parse_json_text(const std::string& text);

/// Four numbers: spinor (re0, im0, re1, im1), normalized on input.
/// Three numbers: Bloch vector, mapped to the spinor with c0 real nonnegative.
Spinor parse_probe(const std::string& spec);

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
};

/// "start:stop:count"
GridSpec parse_grid(const std::string& spec);

/// Shortest round-trip decimal representation.
std::string format_double(double x);

/// FNV-1a 64-bit digest as 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace polarlab::io
