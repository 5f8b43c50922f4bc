#include "polarlab/app.hpp"

#include <limits>
#include <sstream>

#include "polarlab/channel.hpp"
#include "polarlab/characteristic.hpp"
#include "polarlab/coherency.hpp"
#include "polarlab/ensemble.hpp"
#include "polarlab/holonomy.hpp"
#include "polarlab/kernels.hpp"
#include "polarlab/pauli.hpp"

namespace polarlab {

using ojson = nlohmann::ordered_json;

namespace {

ojson to_json(cplx z) { return ojson::array({z.real(), z.imag()}); }

template <typename Derived>
ojson real_matrix(const Eigen::MatrixBase<Derived>& m) {
    ojson rows = ojson::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(static_cast<double>(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename Derived>
ojson complex_matrix(const Eigen::MatrixBase<Derived>& m) {
    ojson rows = ojson::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename Derived>
ojson real_vector(const Eigen::MatrixBase<Derived>& v) {
    ojson out = ojson::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(static_cast<double>(v[k]));
    return out;
}

ojson spinor_json(const Spinor& psi) { return ojson::array({to_json(psi[0]), to_json(psi[1])}); }

ojson tolerances_json(const Tolerances& t) {
    ojson j;
    j["spinor_norm"] = t.spinor_norm;
    j["unitary"] = t.unitary;
    j["rotation"] = t.rotation;
    j["antisymmetry"] = t.antisymmetry;
    j["hermitian"] = t.hermitian;
    j["physical"] = t.physical;
    j["degenerate_gap"] = t.degenerate_gap;
    j["coherent_core"] = t.coherent_core;
    j["nonregular"] = t.nonregular;
    j["singular"] = t.singular;
    j["pi_branch"] = t.pi_branch;
    j["phase_undefined"] = t.phase_undefined;
    j["trace_preserving"] = t.trace_preserving;
    j["kraus_completeness"] = t.kraus_completeness;
    return j;
}

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::Validate: return "validate";
        case Mode::AnalyzeMueller: return "analyze-mueller";
        case Mode::AnalyzeChannel: return "analyze-channel";
        case Mode::Synth: return "synth";
        case Mode::Sweep: return "sweep";
    }
    return "unknown";
}

void set_error(RunResult& out, ErrorCode code, const std::string& message) {
    ojson e;
    e["code"] = to_string(code);
    e["exit_status"] = exit_status(code);
    e["message"] = message;
    out.report["error"] = std::move(e);
    out.exit_status = exit_status(code);
}

std::vector<Spinor> parse_probes(const std::vector<std::string>& raw) {
    std::vector<Spinor> probes;
    for (const auto& p : raw) probes.push_back(io::parse_probe(p));
    return probes;
}

ojson validity_json(const ValidityReport& v) {
    ojson j;
    j["verdict"] = v.physical() ? "PHYSICAL" : "NONPHYSICAL";
    j["m00"] = v.m00;
    j["eigenvalues"] = real_vector(v.eigenvalues);
    j["min_eigenvalue"] = v.min_eigenvalue;
    j["violation"] = v.violation;
    if (!v.reason.empty()) j["reason"] = v.reason;
    return j;
}

ojson spectrum_json(const CharacteristicDecomposition& d) {
    const Eigen::Matrix4cd& V = d.spectrum.eigenvectors;
    Eigen::Matrix4cd synth = Eigen::Matrix4cd::Zero();
    for (int k = 0; k < 4; ++k) synth += d.spectrum.lambdas[k] * V.col(k) * V.col(k).adjoint();
    const Eigen::Matrix4cd Hn = mueller_to_cov(d.normalized);

    ojson j;
    j["lambdas"] = real_vector(d.spectrum.lambdas);
    j["degenerate_gaps"] = ojson::array({d.spectrum.degenerate[0], d.spectrum.degenerate[1], d.spectrum.degenerate[2]});
    j["eigenvectors"] = complex_matrix(V);
    j["orthonormality_residual"] = (V.adjoint() * V - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff();
    j["reconstruction_residual"] = (synth - Hn).cwiseAbs().maxCoeff();
    return j;
}

ojson purity_json(const CharacteristicDecomposition& d) {
    ojson j;
    j["P1"] = d.purity.P1;
    j["P2"] = d.purity.P2;
    j["P3"] = d.purity.P3;
    j["weights"] = real_vector(d.weights());
    j["no_coherent_core"] = d.no_coherent_core;
    j["core_not_unique"] = d.core_not_unique;
    return j;
}

ojson components_json(const CharacteristicDecomposition& d) {
    ojson j;
    j["pure_core"] = real_matrix(d.pure_core);
    j["dominant_jones"] = complex_matrix(d.spectrum.jones[0]);
    j["mixture2"] = real_matrix(d.mixture2);
    j["mixture3"] = real_matrix(d.mixture3);
    j["depolarizer"] = real_matrix(d.depolarizer);
    j["nonpure"] = d.nonpure ? real_matrix(*d.nonpure) : ojson(nullptr);
    j["reconstruction_residual"] = (d.reconstruct() - d.normalized).cwiseAbs().maxCoeff();
    j["grouped_residual"] = (d.reconstruct_grouped() - d.normalized).cwiseAbs().maxCoeff();
    return j;
}

ojson discriminant_json(const CharacteristicDecomposition& d) {
    ojson j;
    j["rho"] = complex_matrix(d.discriminant.rho);
    j["trace"] = d.discriminant.rho.trace().real();
    j["max_imag"] = d.discriminant.max_imag;
    j["nonregular"] = d.discriminant.nonregular;
    j["mueller"] = real_matrix(d.discriminant_mueller);
    j["weight"] = d.discriminant_weight;
    return j;
}

ojson holonomy_json(const CharacteristicDecomposition& d, const HolonomyReport& h, const Tolerances& tol) {
    const Eigen::Matrix3d block = d.pure_core.bottomRightCorner<3, 3>();
    ojson j;
    j["rotation"] = real_matrix(h.rotation);
    j["stretch"] = real_matrix(h.stretch);
    j["generator"] = real_matrix(h.generator);
    j["axis"] = real_vector(h.axis_angle.axis);
    j["angle"] = h.axis_angle.angle;
    j["pi_branch"] = h.axis_angle.pi_branch;
    j["degenerate"] = h.degenerate;
    j["canonical_lift"] = complex_matrix(h.canonical_lift);
    j["coherent_weight"] = h.P1;
    j["polar_residual"] = (h.rotation * h.stretch - block).cwiseAbs().maxCoeff();
    j["exp_residual"] = (so3_exp(h.generator, tol) - h.rotation).cwiseAbs().maxCoeff();
    j["lift_residual"] = (su2_to_so3(h.canonical_lift, tol) - h.rotation).cwiseAbs().maxCoeff();
    return j;
}

// Probe aligned with the rotation axis; the lift overlap there is exp(-i theta/2).
Spinor axis_probe(const HolonomyReport& h) { return bloch_to_spinor(h.axis_angle.axis); }

void run_analyze_mueller(const AnalysisRequest& req, const std::string& text, RunResult& out) {
    const Mueller M = io::parse_mueller_text(text);
    const std::vector<Spinor> requested = parse_probes(req.probes);

    const ValidityReport validity = validate_mueller(M, req.tol);
    out.report["validity"] = validity_json(validity);
    if (!validity.physical()) {
        set_error(out, ErrorCode::NonPhysical, "Mueller matrix is not physically realizable: " + validity.reason);
        return;
    }
    const CharacteristicDecomposition d = characteristic_decompose(M, req.tol);
    out.report["spectrum"] = spectrum_json(d);
    out.report["purity"] = purity_json(d);
    out.report["components"] = components_json(d);
    out.report["discriminant"] = discriminant_json(d);

    const HolonomyReport h = extract_amg(d, req.tol);
    out.report["holonomy"] = holonomy_json(d, h, req.tol);

    const bool default_probe = requested.empty();
    const std::vector<Spinor> probes = default_probe ? std::vector<Spinor>{axis_probe(h)} : requested;
    ojson phases = ojson::array();
    bool undefined = false;
    for (const auto& psi : probes) {
        ojson s;
        s["probe"] = spinor_json(psi);
        s["bloch"] = real_vector(spinor_to_bloch(psi, req.tol));
        s["source"] = default_probe ? "rotation-axis" : "user";
        const cplx lift = (psi.adjoint() * h.canonical_lift * psi)(0, 0);
        s["lift_overlap_modulus"] = std::abs(lift);
        try {
            const PhaseSample p = coherent_visibility(d, h, psi, req.tol);
            s["geometric_phase"] = p.geometric_phase;
            s["coherent_visibility_modulus"] = p.coherent_visibility_modulus;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PhaseUndefined) throw;
            s["geometric_phase"] = nullptr;
            s["coherent_visibility_modulus"] = nullptr;
            s["error"] = to_string(e.code());
            undefined = true;
        }
        phases.push_back(std::move(s));
    }
    out.report["phases"] = std::move(phases);
    if (undefined) set_error(out, ErrorCode::PhaseUndefined, "geometric phase undefined at a requested probe");
}

void run_analyze_channel(const AnalysisRequest& req, const std::string& text, RunResult& out) {
    const io::json doc = io::parse_json_text(text);
    ChoiState choi;
    ojson validity;
    if (doc.contains("kraus")) {
        const KrausSet ks = io::parse_kraus(doc);
        choi = choi_from_kraus(ks, req.tol);
        validity["source"] = "kraus";
        validity["kraus_count"] = ks.size();
        validity["completeness_deviation"] = choi.completeness_deviation;
        validity["cptp_warning"] = choi.cptp_warning;
    } else if (doc.contains("choi")) {
        choi = choi_from_matrix(io::parse_choi(doc, req.tol), req.tol);
        validity["source"] = "choi";
    } else {
        throw Error(ErrorCode::Parse, "channel document needs \"kraus\" or \"choi\"");
    }
    const double trace = choi.rho.trace().real();
    validity["trace"] = trace;
    if (!(trace > 0.0)) {
        validity["verdict"] = "NONPHYSICAL";
        out.report["validity"] = std::move(validity);
        set_error(out, ErrorCode::NonPhysical, "Choi matrix has nonpositive trace");
        return;
    }
    const HermitianSpectrum raw = hermitian_eig(choi.rho / trace, req.tol);
    validity["eigenvalues"] = real_vector(raw.eigenvalues);
    validity["min_eigenvalue"] = raw.eigenvalues[3];
    const bool physical = raw.eigenvalues[3] >= -req.tol.physical;
    validity["verdict"] = physical ? "PHYSICAL" : "NONPHYSICAL";
    out.report["validity"] = std::move(validity);
    if (!physical) {
        set_error(out, ErrorCode::NonPhysical, "Choi matrix is not positive semidefinite");
        return;
    }

    const CharacteristicDecomposition d = characteristic_decompose_cov(choi.rho, req.tol);
    out.report["spectrum"] = spectrum_json(d);
    out.report["purity"] = purity_json(d);

    const TraceCheck tp = check_trace_preservation(choi, req.tol);
    ojson ch;
    ch["trace_preserving"] = tp.preserving;
    ch["tp_deviation"] = tp.deviation;
    out.report["channel"] = ch;

    const ChannelCoreReport core = channel_core(choi, req.tol);
    ch["kraus_dominant"] = complex_matrix(core.kraus_dominant);
    ch["tp_core"] = core.tp_core;
    ch["dissipative"] = core.dissipative;
    ch["unitary_factor"] = complex_matrix(core.unitary_factor);
    ch["positive_factor"] = complex_matrix(core.positive_factor);
    ch["polar_degenerate"] = core.polar_degenerate;
    ch["polar_residual"] =
        (core.unitary_factor * core.positive_factor - core.kraus_dominant).cwiseAbs().maxCoeff();
    ch["special_unitary"] = complex_matrix(core.special_unitary);
    ch["global_phase"] = core.global_phase;
    ch["generator_angle"] = core.generator.angle;
    ch["generator_axis"] = real_vector(core.generator.axis);
    ch["pi_branch"] = core.generator.pi_branch;
    out.report["channel"] = std::move(ch);
}

void run_synth(const AnalysisRequest& req, const std::string& text, RunResult& out) {
    const std::vector<Spinor> probes = parse_probes(req.probes);
    Mueller M;
    std::optional<JonesEnsemble> ens;
    if (req.input_path.empty()) {
        M = random_physical_mueller(*req.seed, req.rank);
        out.report["meta"]["seed"] = *req.seed;
        out.report["meta"]["rank"] = req.rank;
    } else {
        ens = io::parse_ensemble(io::parse_json_text(text));
        M = ensemble_to_mueller(*ens);
    }
    ojson flat = ojson::array();
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) flat.push_back(M(r, c));
    }
    out.report["mueller"] = std::move(flat);
    out.report["validity"] = validity_json(validate_mueller(M, req.tol));

    if (ens && !probes.empty()) {
        ojson phases = ojson::array();
        for (const auto& psi : probes) {
            const cplx v = ensemble_visibility(*ens, psi);
            ojson s;
            s["probe"] = spinor_json(psi);
            s["visibility"] = to_json(v);
            s["modulus"] = std::abs(v);
            s["arg"] = std::abs(v) > req.tol.phase_undefined ? ojson(std::arg(v)) : ojson(nullptr);
            phases.push_back(std::move(s));
        }
        out.report["phases"] = std::move(phases);
    }

    std::ostringstream os;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) os << (c ? "," : "") << io::format_double(M(r, c));
        os << '\n';
    }
    out.table = os.str();
}

void run_sweep(const AnalysisRequest& req, const std::string& text, RunResult& out) {
    if (!req.grid) throw Error(ErrorCode::Usage, "sweep requires --grid start:stop:count");
    const io::ParamEnsemble pens = io::parse_param_ensemble(io::parse_json_text(text));
    const std::vector<Spinor> probes = parse_probes(req.probes);
    if (probes.size() > 1) throw Error(ErrorCode::Usage, "sweep takes a single --probe");
    const Spinor psi = probes.empty() ? Spinor(1.0, 0.0) : probes.front();

    const auto grid = linear_grid(req.grid->start, req.grid->stop, req.grid->count);
    const VisibilityCurve curve =
        sweep_visibility([&](double t) { return pens.at(t); }, grid, psi, req.tol);

    ojson samples = ojson::array();
    std::ostringstream os;
    os << "param,re_v,im_v,arg_v,abs_v\n";
    for (const auto& s : curve) {
        const double arg = s.arg.value_or(std::numeric_limits<double>::quiet_NaN());
        ojson row;
        row["param"] = s.parameter;
        row["re_v"] = s.visibility.real();
        row["im_v"] = s.visibility.imag();
        row["arg_v"] = s.arg ? ojson(*s.arg) : ojson(nullptr);
        row["abs_v"] = s.modulus;
        samples.push_back(std::move(row));
        os << io::format_double(s.parameter) << ',' << io::format_double(s.visibility.real()) << ','
           << io::format_double(s.visibility.imag()) << ',' << io::format_double(arg) << ','
           << io::format_double(s.modulus) << '\n';
    }
    out.report["meta"]["probe"] = spinor_json(psi);
    out.report["sweep"] = std::move(samples);
    out.table = os.str();
}

void flatten(const ojson& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else if (j.is_number_float()) {
        os << prefix << ',' << io::format_double(j.get<double>()) << '\n';
    } else if (j.is_string()) {
        os << prefix << ',' << j.get<std::string>() << '\n';
    } else {
        os << prefix << ',' << j.dump() << '\n';
    }
}

}  // namespace

Mode parse_mode(const std::string& name) {
    if (name == "validate") return Mode::Validate;
    if (name == "analyze-mueller") return Mode::AnalyzeMueller;
    if (name == "analyze-channel") return Mode::AnalyzeChannel;
    if (name == "synth") return Mode::Synth;
    if (name == "sweep") return Mode::Sweep;
    throw Error(ErrorCode::Usage, "unknown mode '" + name + "'");
}

std::string RunResult::render() const {
    if (as_table && !table.empty()) return table;
    if (as_table) {
        std::ostringstream os;
        os << "key,value\n";
        flatten(report, "", os);
        return os.str();
    }
    return report.dump(2) + "\n";
}

RunResult run_request(const AnalysisRequest& req) {
    RunResult out;
    out.as_table = req.format == Format::Table || (req.format == Format::Auto && req.mode == Mode::Sweep);

    ojson meta;
    meta["tool"] = "polarlab";
    meta["version"] = kToolVersion;
    meta["mode"] = mode_name(req.mode);
    meta["input"] = req.input_path;
    meta["tolerances"] = tolerances_json(req.tol);
    out.report["meta"] = std::move(meta);

    try {
        std::string text;
        if (!req.input_path.empty()) {
            text = io::read_file(req.input_path);
            out.report["meta"]["input_digest"] = "fnv1a64:" + io::digest(text);
        } else if (req.mode != Mode::Synth || !req.seed) {
            throw Error(ErrorCode::Usage, "an input file is required");
        }
        switch (req.mode) {
            case Mode::Validate: {
                const ValidityReport v = validate_mueller(io::parse_mueller_text(text), req.tol);
                out.report["validity"] = validity_json(v);
                if (!v.physical()) set_error(out, ErrorCode::NonPhysical, "Mueller matrix is not physically realizable: " + v.reason);
                break;
            }
            case Mode::AnalyzeMueller: run_analyze_mueller(req, text, out); break;
            case Mode::AnalyzeChannel: run_analyze_channel(req, text, out); break;
            case Mode::Synth: run_synth(req, text, out); break;
            case Mode::Sweep: run_sweep(req, text, out); break;
        }
    } catch (const Error& e) {
        set_error(out, e.code(), e.what());
    }
    return out;
}

}  // namespace polarlab
