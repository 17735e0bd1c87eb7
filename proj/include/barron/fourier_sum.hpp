#pragma once

#include <Eigen/Core>
#include <complex>
#include <iosfwd>
#include <vector>

namespace barron {

using Complex = std::complex<double>;

// Finite atomic frequency measure sum_j c_j exp(2 pi i <x, xi_j>).
// Frequencies are the columns of `freqs`; amplitudes live in `amps`.
struct FourierSum {
    int dim = 1;
    Eigen::MatrixXd freqs;   // dim x n
    Eigen::VectorXcd amps;   // n

    int atom_count() const { return int(amps.size()); }
};

// w(xi) = (1 + |xi|)^sigma, submultiplicative and >= 1.
struct Weight {
    double sigma = 1.0;
    double operator()(const Eigen::VectorXd& xi) const {
        return std::pow(1.0 + xi.norm(), sigma);
    }
    double operator()(double xi) const { return std::pow(1.0 + std::abs(xi), sigma); }
};

// Pair each atom (xi, c) with (-xi, conj(c)) so that the sum evaluates real.
// Atoms at xi = 0 keep their real part.  Evaluation is unchanged for inputs
// that were already real-valued on R^d.
FourierSum hermitian_symmetrize(const FourierSum& f);

bool is_hermitian(const FourierSum& f, double tol = 1e-12);

// Re sum_j c_j exp(2 pi i <x, xi_j>).  Throws on dimension mismatch.
double evaluate(const FourierSum& f, const Eigen::VectorXd& x);

// Full complex value, used where the imaginary part itself is under test.
Complex evaluate_complex(const FourierSum& f, const Eigen::VectorXd& x);

// sum_j (1 + |xi_j|)^sigma |c_j|; an upper bound for the Barron norm
// (the true norm is an infimum over representations).
double barron_norm_bound(const FourierSum& f, const Weight& w);

// (2 pi)^{sigma+2} * barron_norm_bound, the Hoelder-norm bound.
double holder_norm_bound(const FourierSum& f, const Weight& w);

// Pullback along t -> D_a t + t0 with |a_i| <= 1, a_i != 0.  Each atom
// (xi, c) maps to (D_a xi, c * exp(2 pi i <t0, xi>)); the weighted mass
// never increases.  Throws if some a_i = 0 or |a_i| > 1.
FourierSum affine_pullback(const FourierSum& f, const Eigen::VectorXd& a,
                           const Eigen::VectorXd& t0);

// Flat text record: one line "d sigma", then one line per atom
// "xi_1 ... xi_d re(c) im(c)".  Round-trip stable to 1e-15.
void write_fourier_sum(std::ostream& os, const FourierSum& f, double sigma);
std::pair<FourierSum, double> read_fourier_sum(std::istream& is);

}  // namespace barron
