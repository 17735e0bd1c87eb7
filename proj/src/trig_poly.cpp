#include "barron/trig_poly.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace barron {

TrigPoly::TrigPoly(int d, int B) : dim(d), bound(B) {
    if (d < 1 || B < 0) throw std::invalid_argument("TrigPoly: bad dimensions");
    Eigen::Index n = 1;
    for (int i = 0; i < d; ++i) n *= side();
    coeffs = Eigen::VectorXcd::Zero(n);
}

Eigen::Index TrigPoly::flatten(const Eigen::VectorXi& k) const {
    if (k.size() != dim) throw std::invalid_argument("TrigPoly: index dimension mismatch");
    Eigen::Index idx = 0, stride = 1;
    for (int i = 0; i < dim; ++i) {
        if (std::abs(k[i]) > bound) throw std::out_of_range("TrigPoly: index outside lattice");
        idx += (k[i] + bound) * stride;
        stride *= side();
    }
    return idx;
}

Eigen::VectorXi TrigPoly::unflatten(Eigen::Index idx) const {
    Eigen::VectorXi k(dim);
    for (int i = 0; i < dim; ++i) {
        k[i] = int(idx % side()) - bound;
        idx /= side();
    }
    return k;
}

Complex& TrigPoly::coeff1(int k) {
    Eigen::VectorXi v(1);
    v[0] = k;
    return coeff(v);
}

Complex TrigPoly::coeff1(int k) const {
    Eigen::VectorXi v(1);
    v[0] = k;
    return coeff(v);
}

Complex eval(const TrigPoly& p, const Eigen::VectorXd& x) {
    if (x.size() != p.dim) throw std::invalid_argument("eval: dimension mismatch");
    // per-axis tables exp(2 pi i k x_i), built by recurrence
    const int side = p.side();
    std::vector<Eigen::VectorXcd> table(p.dim);
    for (int i = 0; i < p.dim; ++i) {
        table[i].resize(side);
        const Complex step = std::polar(1.0, 2.0 * M_PI * x[i]);
        Complex cur = std::polar(1.0, -2.0 * M_PI * p.bound * x[i]);
        for (int k = 0; k < side; ++k) {
            table[i][k] = cur;
            cur *= step;
        }
    }
    Complex acc(0.0, 0.0);
    Eigen::VectorXi digit = Eigen::VectorXi::Zero(p.dim);
    for (Eigen::Index idx = 0; idx < p.lattice_size(); ++idx) {
        Complex e = table[0][digit[0]];
        for (int i = 1; i < p.dim; ++i) e *= table[i][digit[i]];
        acc += p.coeffs[idx] * e;
        int axis = 0;
        while (axis < p.dim && ++digit[axis] == side) digit[axis++] = 0;
    }
    return acc;
}

double vdv_coefficient(int k, long j) {
    if (k < 1) throw std::invalid_argument("vdv_coefficient: order must be >= 1");
    auto fejer = [k](long u) {
        const double t = double(k) - double(std::labs(u));
        return t > 0.0 ? t / double(k) : 0.0;
    };
    return fejer(j) + fejer(j - k) + fejer(j + k);
}

TrigPoly vdv_filter(const TrigPoly& p, int N) {
    if (N < 1) throw std::invalid_argument("vdv_filter: order must be >= 1");
    TrigPoly q(p.dim, std::min(p.bound, 2 * N));
    for (Eigen::Index idx = 0; idx < q.lattice_size(); ++idx) {
        const Eigen::VectorXi k = q.unflatten(idx);
        double mult = 1.0;
        for (int i = 0; i < p.dim; ++i) mult *= vdv_coefficient(N, k[i]);
        q.coeffs[idx] = mult * p.coeff(k);
    }
    return q;
}

PolyNorms norms(const TrigPoly& p) {
    PolyNorms n;
    n.l2 = p.coeffs.norm();
    n.l1_coeff = p.coeffs.cwiseAbs().sum();
    return n;
}

int sparsity(const TrigPoly& p, double threshold) {
    int count = 0;
    for (Eigen::Index i = 0; i < p.coeffs.size(); ++i)
        if (std::abs(p.coeffs[i]) > threshold) ++count;
    return count;
}

void write_trig_poly_csv(std::ostream& os, const TrigPoly& p) {
    os << std::setprecision(17);
    for (Eigen::Index idx = 0; idx < p.lattice_size(); ++idx) {
        const Eigen::VectorXi k = p.unflatten(idx);
        for (int i = 0; i < p.dim; ++i) os << k[i] << ',';
        os << p.coeffs[idx].real() << ',' << p.coeffs[idx].imag() << '\n';
    }
}

TrigPoly read_trig_poly_csv(std::istream& is, int dim, int bound) {
    TrigPoly p(dim, bound);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        Eigen::VectorXi k(dim);
        std::string tok;
        for (int i = 0; i < dim; ++i) {
            std::getline(ss, tok, ',');
            k[i] = std::stoi(tok);
        }
        std::getline(ss, tok, ',');
        const double re = std::stod(tok);
        std::getline(ss, tok, ',');
        const double im = std::stod(tok);
        p.coeff(k) = Complex(re, im);
    }
    return p;
}

}  // namespace barron
