#include "nippas/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nippas {

Vector LoadedSurrogate::eval(const Vector& z) const {
    return coeff_qoi.transpose() * basis_row(basis, z);
}

void save_surrogate(std::ostream& out, const SurrogateState& state) {
    const int n = state.num_nodes();
    if (n == 0) throw std::logic_error("save_surrogate: empty surrogate");
    const int d = state.basis.dim();
    const auto n_qoi = state.coeff_qoi.cols();

    out << kSurrogateFormatTag << "\n";
    out << "dim " << d << "\n";
    out << "qoi_dim " << n_qoi << "\n";
    out.precision(17);
    out << "box_lo";
    for (int i = 0; i < d; ++i) out << " " << state.basis.box.lo[i];
    out << "\nbox_hi";
    for (int i = 0; i < d; ++i) out << " " << state.basis.box.hi[i];
    out << "\nnum_basis " << n << "\n";
    for (const MultiIndex& m : state.basis.indices) {
        out << "index";
        for (int deg : m.degrees) out << " " << deg;
        out << "\n";
    }
    for (int i = 0; i < n; ++i) {
        out << "coeff";
        for (int j = 0; j < n_qoi; ++j) out << " " << state.coeff_qoi(i, j);
        out << "\n";
    }
}

void save_surrogate_file(const std::string& path, const SurrogateState& state) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_surrogate: cannot write " + path);
    save_surrogate(out, state);
}

namespace {

void expect(std::istream& in, const std::string& literal) {
    std::string token;
    in >> token;
    if (token != literal)
        throw std::runtime_error("load_surrogate: expected '" + literal + "', got '" + token +
                                 "'");
}

}  // namespace

LoadedSurrogate load_surrogate(std::istream& in) {
    expect(in, kSurrogateFormatTag);
    int d = 0, n_qoi = 0, n = 0;
    expect(in, "dim");
    in >> d;
    expect(in, "qoi_dim");
    in >> n_qoi;
    if (!in || d < 1 || n_qoi < 1) throw std::runtime_error("load_surrogate: bad header");

    Vector lo(d), hi(d);
    expect(in, "box_lo");
    for (int i = 0; i < d; ++i) in >> lo[i];
    expect(in, "box_hi");
    for (int i = 0; i < d; ++i) in >> hi[i];
    expect(in, "num_basis");
    in >> n;
    if (!in || n < 1) throw std::runtime_error("load_surrogate: bad basis size");

    LoadedSurrogate loaded{BasisSpec(BoundingBox(lo, hi)), Eigen::MatrixXd(n, n_qoi)};
    for (int i = 0; i < n; ++i) {
        expect(in, "index");
        std::vector<int> degrees(d);
        for (int a = 0; a < d; ++a) in >> degrees[a];
        loaded.basis.indices.emplace_back(std::move(degrees));
    }
    for (int i = 0; i < n; ++i) {
        expect(in, "coeff");
        for (int j = 0; j < n_qoi; ++j) in >> loaded.coeff_qoi(i, j);
    }
    if (!in) throw std::runtime_error("load_surrogate: truncated file");
    return loaded;
}

LoadedSurrogate load_surrogate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_surrogate: cannot open " + path);
    return load_surrogate(in);
}

}  // namespace nippas
