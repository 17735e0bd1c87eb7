#pragma once

#include <Eigen/Core>
#include <complex>
#include <iosfwd>
#include <vector>

namespace barron {

using Complex = std::complex<double>;

// Trigonometric polynomial sum_{|k|_inf <= bound} c_k exp(2 pi i <k, x>) on the
// torus [-1/2,1/2]^d.  Coefficients are stored densely over the box lattice;
// the flat index of k is sum_i (k_i + bound) * (2*bound+1)^i.
struct TrigPoly {
    int dim = 1;
    int bound = 0;
    Eigen::VectorXcd coeffs;

    TrigPoly() = default;
    TrigPoly(int d, int B);

    int side() const { return 2 * bound + 1; }
    Eigen::Index lattice_size() const { return coeffs.size(); }

    Eigen::Index flatten(const Eigen::VectorXi& k) const;
    Eigen::VectorXi unflatten(Eigen::Index idx) const;

    Complex& coeff(const Eigen::VectorXi& k) { return coeffs[flatten(k)]; }
    Complex coeff(const Eigen::VectorXi& k) const { return coeffs[flatten(k)]; }

    // 1-D convenience
    Complex& coeff1(int k);
    Complex coeff1(int k) const;
};

Complex eval(const TrigPoly& p, const Eigen::VectorXd& x);

// Fourier coefficient of the 1-D de la Vallee Poussin kernel of order k:
// hat F_k(j) + hat F_k(j-k) + hat F_k(j+k) with hat F_k(j) = max(0, (k-|j|)/k).
// Equals 1 for |j| <= k and 0 for |j| >= 2k.  Throws for k < 1.
double vdv_coefficient(int k, long j);

// Coefficient-wise multiplication by the tensor-product de la Vallee Poussin
// multiplier of order N; coefficients with |j|_inf <= N are unchanged and the
// result is supported in |j|_inf <= 2N.
TrigPoly vdv_filter(const TrigPoly& p, int N);

struct PolyNorms {
    double l2 = 0.0;
    double l1_coeff = 0.0;
};
PolyNorms norms(const TrigPoly& p);

// number of coefficients with modulus above the (default 1e-12) zero threshold
int sparsity(const TrigPoly& p, double threshold = 1e-12);

// CSV rows "k_1,...,k_d,re,im"
void write_trig_poly_csv(std::ostream& os, const TrigPoly& p);
TrigPoly read_trig_poly_csv(std::istream& is, int dim, int bound);

}  // namespace barron
