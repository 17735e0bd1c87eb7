#include "barron/partition.hpp"

#include <stdexcept>

namespace barron {

double endpoint(int n) {
    if (n < 0) throw std::invalid_argument("endpoint: n must be >= 0");
    if (n > 1073) return 0.5;  // 2^{-n} underflows; a_n saturates
    return 0.5 * (1.0 - std::ldexp(1.0, -n));
}

Cell cell(const CellIndex& idx) {
    const int d = int(idx.n.size());
    if (idx.theta.size() != d) throw std::invalid_argument("cell: index dimension mismatch");
    Cell c;
    c.idx = idx;
    c.fwd_scale.resize(d);
    c.fwd_offset.resize(d);
    c.inv_scale.resize(d);
    c.inv_offset.resize(d);
    for (int i = 0; i < d; ++i) {
        const int n = idx.n[i];
        if (n < 0 || std::abs(idx.theta[i]) != 1) throw std::invalid_argument("cell: bad index");
        const double th = double(idx.theta[i]);
        const double center = 0.5 * (endpoint(n) + endpoint(n + 1));
        const double two_up = std::ldexp(1.0, n + 1);    // 2^{n+1}
        const double two_dn = std::ldexp(1.0, -(n + 1));  // 2^{-(n+1)}
        // theta=+: Phi(x) = 2^{n+1}(x - center); theta=-: Phi(x) = Phi^+(-x)
        c.fwd_scale[i] = th * two_up;
        c.fwd_offset[i] = -two_up * center;
        c.inv_scale[i] = th * two_dn;
        c.inv_offset[i] = th * center;
    }
    return c;
}

bool Cell::contains(const Eigen::VectorXd& x) const {
    const int d = int(idx.n.size());
    if (x.size() != d) throw std::invalid_argument("Cell::contains: dimension mismatch");
    for (int i = 0; i < d; ++i) {
        const double lo = endpoint(idx.n[i]), hi = endpoint(idx.n[i] + 1);
        if (idx.theta[i] > 0) {
            if (!(x[i] >= lo && x[i] < hi)) return false;
        } else {
            if (!(x[i] < 0.0 && -x[i] >= lo && -x[i] < hi)) return false;
        }
    }
    return true;
}

double Cell::volume() const {
    double v = 1.0;
    for (int i = 0; i < idx.n.size(); ++i) v *= std::ldexp(1.0, -(idx.n[i] + 2));
    return v;
}

std::optional<CellIndex> locate(const Eigen::VectorXd& x) {
    const int d = int(x.size());
    CellIndex idx;
    idx.n.resize(d);
    idx.theta.resize(d);
    for (int i = 0; i < d; ++i) {
        idx.theta[i] = x[i] >= 0.0 ? 1 : -1;
        const double u = std::abs(x[i]);
        if (u >= 0.5) return std::nullopt;  // no dyadic interval reaches 1/2
        int n = u > 0.0 ? std::max(0, int(std::floor(-std::log2(1.0 - 2.0 * u)))) : 0;
        while (n > 0 && u < endpoint(n)) --n;
        while (u >= endpoint(n + 1)) ++n;
        idx.n[i] = n;
    }
    return idx;
}

namespace {

void enumerate_rec(int dim, int axis, int remaining, Eigen::VectorXi& cur, double epsilon,
                   std::vector<Eigen::VectorXi>& out) {
    if (axis == dim) {
        if (epsilon * std::exp2(cur.sum() / 4.0) < 1.0) out.push_back(cur);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        cur[axis] = v;
        enumerate_rec(dim, axis + 1, remaining - v, cur, epsilon, out);
    }
    cur[axis] = 0;
}

}  // namespace

std::vector<Eigen::VectorXi> active_set(double epsilon, int dim) {
    if (epsilon <= 0.0) throw std::invalid_argument("active_set: epsilon must be > 0");
    if (dim < 1) throw std::invalid_argument("active_set: dim must be >= 1");
    std::vector<Eigen::VectorXi> out;
    if (epsilon >= 1.0) return out;
    const int max_l1 = int(std::ceil(4.0 * std::log2(1.0 / epsilon)));
    Eigen::VectorXi cur = Eigen::VectorXi::Zero(dim);
    enumerate_rec(dim, 0, max_l1, cur, epsilon, out);
    return out;
}

long budget(const Eigen::VectorXi& n, double epsilon, double lambda, double kappa0) {
    const int l1 = n.sum();
    if (!(epsilon * std::exp2(l1 / 4.0) < 1.0))
        throw std::invalid_argument("budget: cell is not active for this epsilon");
    return long(std::ceil(budget_value<double>(l1, epsilon, lambda, kappa0)));
}

}  // namespace barron
