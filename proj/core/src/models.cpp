#include "nippas/models.hpp"

#include <Eigen/Dense>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace nippas {

int QoiSpec::output_size(int n_pde) const {
    switch (kind) {
        case Kind::identity: return n_pde;
        case Kind::select: return 1;
        case Kind::matrix: return static_cast<int>(matrix.rows());
    }
    return 0;
}

Vector QoiSpec::apply(const Vector& v) const {
    switch (kind) {
        case Kind::identity: return v;
        case Kind::select: {
            if (index < 0 || index >= v.size())
                throw std::invalid_argument("QoiSpec: selector index out of range");
            Vector out(1);
            out[0] = v[index];
            return out;
        }
        case Kind::matrix: {
            if (matrix.cols() != v.size())
                throw std::invalid_argument("QoiSpec: matrix/solution size mismatch");
            return matrix * v;
        }
    }
    throw std::logic_error("QoiSpec: unreachable");
}

double QoiSpec::norm2() const {
    switch (kind) {
        case Kind::identity: return 1.0;
        case Kind::select: return 1.0;
        case Kind::matrix: {
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(matrix);
            return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
        }
    }
    return 0.0;
}

const Eigen::SparseMatrix<double>& BlackBoxModel::operator_matrix(int) const {
    throw std::logic_error(name() + ": operator matrices are not exposed");
}

Vector BlackBoxModel::full_source(const Vector&) const {
    throw std::logic_error(name() + ": full source is not exposed");
}

Vector BlackBoxModel::apply_qoi_map(const Vector&) const {
    throw std::logic_error(name() + ": QoI map is not exposed");
}

namespace {

std::string key_of(const Vector& z) {
    std::string key;
    key.reserve(static_cast<std::size_t>(z.size()) * 16);
    char buf[17];
    for (int i = 0; i < z.size(); ++i) {
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(double));
        std::memcpy(&bits, &z[i], sizeof(bits));
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(bits));
        key += buf;
    }
    return key;
}

}  // namespace

const Vector& ReferenceCache::get(const Vector& z,
                                  const std::function<Vector(const Vector&)>& eval) {
    const std::string key = key_of(z);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    return map_.emplace(key, eval(z)).first->second;
}

void ReferenceCache::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("ReferenceCache: cannot write " + path);
    out << "nippas_reference_cache_v1 " << map_.size() << "\n";
    out.precision(17);
    for (const auto& [key, value] : map_) {
        out << key << " " << value.size();
        for (int i = 0; i < value.size(); ++i) out << " " << value[i];
        out << "\n";
    }
}

void ReferenceCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    std::string tag;
    std::size_t count = 0;
    in >> tag >> count;
    if (tag != "nippas_reference_cache_v1") return;
    for (std::size_t k = 0; k < count; ++k) {
        std::string key;
        int n = 0;
        in >> key >> n;
        if (!in || n < 0) break;
        Vector v(n);
        for (int i = 0; i < n; ++i) in >> v[i];
        if (!in) break;
        map_.emplace(std::move(key), std::move(v));
    }
}

AnalyticToy::AnalyticToy(BoundingBox box, std::function<double(const Vector&)> f,
                         std::string label)
    : box_(std::move(box)), f_(std::move(f)), label_(std::move(label)) {
    if (!f_) throw std::invalid_argument("AnalyticToy: null function");
}

double AnalyticToy::coefficient(int l, const Vector&) const {
    if (l != 0) throw std::invalid_argument("AnalyticToy: term index out of range");
    return 1.0;
}

Vector AnalyticToy::qoi_source(const Vector& z) const {
    Vector s(1);
    s[0] = f_(z);
    return s;
}

BlackBoxSample AnalyticToy::do_sample(const Vector& z, bool) const {
    if (z.size() != dim()) throw std::invalid_argument("AnalyticToy: dimension mismatch");
    BlackBoxSample out;
    out.qoi = Vector(1);
    out.qoi[0] = f_(z);
    out.term_values.push_back(out.qoi);
    return out;
}

}  // namespace nippas
