#pragma once

#include "nippas/surrogate.hpp"

#include <iosfwd>
#include <string>

namespace nippas {

inline constexpr const char* kSurrogateFormatTag = "nippas_surrogate_v1";

/// Evaluation-ready part of a dumped surrogate: the basis and the QoI
/// coefficient matrix.
struct LoadedSurrogate {
    BasisSpec basis;
    Eigen::MatrixXd coeff_qoi;

    Vector eval(const Vector& z) const;
};

/// Structured-text dump: version tag, box, graded-lex index list and the QoI
/// coefficient matrix, all floats with 17 significant digits so values
/// round-trip exactly.
void save_surrogate(std::ostream& out, const SurrogateState& state);
void save_surrogate_file(const std::string& path, const SurrogateState& state);

LoadedSurrogate load_surrogate(std::istream& in);
LoadedSurrogate load_surrogate_file(const std::string& path);

}  // namespace nippas
