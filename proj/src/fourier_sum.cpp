#include "barron/fourier_sum.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace barron {

FourierSum hermitian_symmetrize(const FourierSum& f) {
    FourierSum g;
    g.dim = f.dim;
    const int n = f.atom_count();
    int zeros = 0;
    for (int j = 0; j < n; ++j)
        if (f.freqs.col(j).isZero(0.0)) ++zeros;
    g.freqs.resize(f.dim, 2 * n - zeros);
    g.amps.resize(2 * n - zeros);
    int k = 0;
    for (int j = 0; j < n; ++j) {
        if (f.freqs.col(j).isZero(0.0)) {
            g.freqs.col(k) = f.freqs.col(j);
            g.amps[k++] = Complex(f.amps[j].real(), 0.0);
        } else {
            g.freqs.col(k) = f.freqs.col(j);
            g.amps[k++] = 0.5 * f.amps[j];
            g.freqs.col(k) = -f.freqs.col(j);
            g.amps[k++] = 0.5 * std::conj(f.amps[j]);
        }
    }
    return g;
}

bool is_hermitian(const FourierSum& f, double tol) {
    const int n = f.atom_count();
    for (int j = 0; j < n; ++j) {
        bool found = false;
        for (int k = 0; k < n && !found; ++k) {
            if ((f.freqs.col(k) + f.freqs.col(j)).norm() <= tol &&
                std::abs(f.amps[k] - std::conj(f.amps[j])) <= tol)
                found = true;
        }
        if (!found) return false;
    }
    return true;
}

Complex evaluate_complex(const FourierSum& f, const Eigen::VectorXd& x) {
    if (x.size() != f.dim)
        throw std::invalid_argument("evaluate: x has dimension " + std::to_string(x.size()) +
                                    ", FourierSum has dimension " + std::to_string(f.dim));
    Complex acc(0.0, 0.0);
    const Eigen::VectorXd phases = 2.0 * M_PI * (f.freqs.transpose() * x);
    for (int j = 0; j < f.atom_count(); ++j)
        acc += f.amps[j] * std::polar(1.0, phases[j]);
    return acc;
}

double evaluate(const FourierSum& f, const Eigen::VectorXd& x) {
    return evaluate_complex(f, x).real();
}

double barron_norm_bound(const FourierSum& f, const Weight& w) {
    double acc = 0.0;
    for (int j = 0; j < f.atom_count(); ++j)
        acc += w(Eigen::VectorXd(f.freqs.col(j))) * std::abs(f.amps[j]);
    return acc;
}

double holder_norm_bound(const FourierSum& f, const Weight& w) {
    return std::pow(2.0 * M_PI, w.sigma + 2.0) * barron_norm_bound(f, w);
}

FourierSum affine_pullback(const FourierSum& f, const Eigen::VectorXd& a,
                           const Eigen::VectorXd& t0) {
    if (a.size() != f.dim || t0.size() != f.dim)
        throw std::invalid_argument("affine_pullback: dimension mismatch");
    for (int i = 0; i < f.dim; ++i)
        if (a[i] == 0.0 || std::abs(a[i]) > 1.0)
            throw std::invalid_argument("affine_pullback: need 0 < |a_i| <= 1");
    FourierSum g;
    g.dim = f.dim;
    g.freqs = a.asDiagonal() * f.freqs;
    g.amps.resize(f.atom_count());
    for (int j = 0; j < f.atom_count(); ++j) {
        const double phase = 2.0 * M_PI * t0.dot(f.freqs.col(j));
        g.amps[j] = f.amps[j] * std::polar(1.0, phase);
    }
    return g;
}

void write_fourier_sum(std::ostream& os, const FourierSum& f, double sigma) {
    os << std::setprecision(17);
    os << f.dim << ' ' << sigma << '\n';
    for (int j = 0; j < f.atom_count(); ++j) {
        for (int i = 0; i < f.dim; ++i) os << f.freqs(i, j) << ' ';
        os << f.amps[j].real() << ' ' << f.amps[j].imag() << '\n';
    }
}

std::pair<FourierSum, double> read_fourier_sum(std::istream& is) {
    FourierSum f;
    double sigma = 0.0;
    if (!(is >> f.dim >> sigma)) throw std::runtime_error("read_fourier_sum: bad header");
    std::vector<Eigen::VectorXd> freqs;
    std::vector<Complex> amps;
    Eigen::VectorXd xi(f.dim);
    double re, im;
    while (true) {
        bool ok = true;
        for (int i = 0; i < f.dim && ok; ++i) ok = bool(is >> xi[i]);
        if (!ok) break;
        if (!(is >> re >> im)) throw std::runtime_error("read_fourier_sum: truncated atom");
        freqs.push_back(xi);
        amps.push_back(Complex(re, im));
    }
    f.freqs.resize(f.dim, int(freqs.size()));
    f.amps.resize(int(amps.size()));
    for (size_t j = 0; j < freqs.size(); ++j) {
        f.freqs.col(int(j)) = freqs[j];
        f.amps[int(j)] = amps[j];
    }
    return {f, sigma};
}

}  // namespace barron
