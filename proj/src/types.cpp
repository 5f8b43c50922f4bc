#include "polarlab/types.hpp"

namespace polarlab {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidSpinor: return "invalid-spinor";
        case ErrorCode::InvalidUnitary: return "invalid-unitary";
        case ErrorCode::NotHermitian: return "not-hermitian";
        case ErrorCode::NotRotation: return "not-rotation";
        case ErrorCode::NotAntisymmetric: return "not-antisymmetric";
        case ErrorCode::InvalidSpectrum: return "invalid-spectrum";
        case ErrorCode::NonPhysical: return "nonphysical";
        case ErrorCode::NoCoherentCore: return "no-coherent-core";
        case ErrorCode::CoreNotUnique: return "core-not-unique";
        case ErrorCode::PhaseUndefined: return "phase-undefined";
        case ErrorCode::InvalidEnsemble: return "invalid-ensemble";
        case ErrorCode::Parse: return "parse-error";
        case ErrorCode::Usage: return "usage-error";
    }
    return "unknown";
}

int exit_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPhysical: return 2;
        case ErrorCode::NoCoherentCore:
        case ErrorCode::CoreNotUnique: return 3;
        case ErrorCode::Parse:
        case ErrorCode::NotHermitian:
        case ErrorCode::InvalidEnsemble: return 4;
        case ErrorCode::PhaseUndefined: return 5;
        default: return 1;
    }
}

}  // namespace polarlab
