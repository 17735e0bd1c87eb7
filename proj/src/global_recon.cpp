#include "barron/global_recon.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace barron {

namespace {

std::vector<Eigen::VectorXi> sign_patterns(int dim) {
    std::vector<Eigen::VectorXi> out;
    const int count = 1 << dim;
    for (int mask = 0; mask < count; ++mask) {
        Eigen::VectorXi theta(dim);
        for (int i = 0; i < dim; ++i) theta[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(theta);
    }
    return out;
}

}  // namespace

std::vector<Eigen::VectorXd> GlobalPlan::all_points() const {
    std::vector<Eigen::VectorXd> pts;
    pts.reserve(size_t(total_samples));
    for (const auto& c : cells) pts.insert(pts.end(), c.pullback_points.begin(), c.pullback_points.end());
    return pts;
}

GlobalPlan make_global_plan(double epsilon, double sigma, int dim, double kappa0,
                            std::uint64_t seed, double kappa3, double kappa4) {
    if (epsilon <= 0.0) throw std::invalid_argument("make_global_plan: epsilon must be > 0");
    GlobalPlan plan;
    plan.epsilon = epsilon;
    plan.sigma = sigma;
    plan.dim = dim;
    plan.lambda = 0.5 + sigma / dim;
    plan.seed = seed;
    if (epsilon >= 1.0) return plan;  // empty: zero reconstruction

    const auto active = active_set(epsilon, dim);
    const auto thetas = sign_patterns(dim);
    std::uint64_t cell_counter = 0;
    for (const auto& n : active) {
        const long m = budget(n, epsilon, plan.lambda, kappa0);
        const double local_eps = epsilon * std::exp2(n.sum() / 4.0);
        for (const auto& theta : thetas) {
            GlobalPlan::CellPlan cp;
            cp.idx = CellIndex{n, theta};
            cp.geometry = cell(cp.idx);
            cp.local = make_plan_sized(local_eps, sigma, dim, m,
                                       seed ^ (0x5851f42d4c957f2dull * ++cell_counter), kappa3,
                                       kappa4);
            cp.pullback_points.reserve(size_t(m));
            for (const auto& z : cp.local.points)
                cp.pullback_points.push_back(cp.geometry.inverse(z));
            plan.total_samples += m;
            plan.cells.push_back(std::move(cp));
        }
    }
    return plan;
}

PiecewiseReconstruction reconstruct_global(const Eigen::VectorXd& sample_values,
                                           const GlobalPlan& plan, const PlateauCutoff& cutoff,
                                           const ToleranceConfig& solver_cfg) {
    if (sample_values.size() != plan.total_samples)
        throw std::invalid_argument("reconstruct_global: sample_values misaligned with plan");
    PiecewiseReconstruction rec;
    rec.epsilon = plan.epsilon;
    rec.dim = plan.dim;
    rec.pieces.resize(plan.cells.size());

    std::vector<long> offsets(plan.cells.size());
    long off = 0;
    for (size_t i = 0; i < plan.cells.size(); ++i) {
        offsets[i] = off;
        off += plan.cells[i].local.m;
    }

    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(plan.cells.size());
    auto worker = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= plan.cells.size()) break;
            const auto& cp = plan.cells[i];
            try {
                const Eigen::VectorXd slice = sample_values.segment(offsets[i], cp.local.m);
                rec.pieces[i] = PiecewiseReconstruction::Piece{
                    cp.idx, cp.geometry, reconstruct_local(slice, cp.local, cutoff, solver_cfg)};
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n_threads =
        std::max(1u, std::min(std::thread::hardware_concurrency(), unsigned(plan.cells.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (size_t i = 0; i < plan.cells.size(); ++i) {
        if (errors[i]) {
            std::ostringstream msg;
            msg << "reconstruct_global: cell n=(";
            for (int j = 0; j < plan.dim; ++j) msg << plan.cells[i].idx.n[j] << (j + 1 < plan.dim ? "," : "");
            msg << ") theta=(";
            for (int j = 0; j < plan.dim; ++j)
                msg << (plan.cells[i].idx.theta[j] > 0 ? '+' : '-');
            msg << ") failed";
            try {
                std::rethrow_exception(errors[i]);
            } catch (const std::exception& e) {
                throw std::runtime_error(msg.str() + ": " + e.what());
            }
        }
    }
    return rec;
}

double evaluate_piecewise(const PiecewiseReconstruction& r, const Eigen::VectorXd& x) {
    if (x.size() != r.dim) throw std::invalid_argument("evaluate_piecewise: dimension mismatch");
    for (int i = 0; i < r.dim; ++i)
        if (std::abs(x[i]) > 0.5) throw std::domain_error("evaluate_piecewise: x outside Omega");
    const auto idx = locate(x);
    if (!idx) return 0.0;
    for (const auto& piece : r.pieces) {
        if ((piece.idx.n.array() == idx->n.array()).all() &&
            (piece.idx.theta.array() == idx->theta.array()).all())
            return eval(piece.h, piece.geometry.forward(x)).real();
    }
    return 0.0;  // inactive cell
}

void write_piecewise(const std::string& directory, const PiecewiseReconstruction& r) {
    namespace fs = std::filesystem;
    fs::create_directories(directory);
    std::ofstream manifest(fs::path(directory) / "manifest.txt");
    manifest << std::setprecision(17);
    manifest << r.dim << ' ' << r.epsilon << ' ' << r.pieces.size() << '\n';
    for (size_t i = 0; i < r.pieces.size(); ++i) {
        const auto& p = r.pieces[i];
        const std::string name = "cell_" + std::to_string(i) + ".csv";
        manifest << name << ' ' << p.h.bound;
        for (int j = 0; j < r.dim; ++j) manifest << ' ' << p.idx.n[j];
        for (int j = 0; j < r.dim; ++j) manifest << ' ' << p.idx.theta[j];
        for (int j = 0; j < r.dim; ++j)
            manifest << ' ' << p.geometry.fwd_scale[j] << ' ' << p.geometry.fwd_offset[j];
        manifest << '\n';
        std::ofstream coeffs(fs::path(directory) / name);
        write_trig_poly_csv(coeffs, p.h);
    }
}

PiecewiseReconstruction read_piecewise(const std::string& directory) {
    namespace fs = std::filesystem;
    std::ifstream manifest(fs::path(directory) / "manifest.txt");
    if (!manifest) throw std::runtime_error("read_piecewise: missing manifest in " + directory);
    PiecewiseReconstruction r;
    size_t pieces = 0;
    manifest >> r.dim >> r.epsilon >> pieces;
    r.pieces.resize(pieces);
    for (size_t i = 0; i < pieces; ++i) {
        std::string name;
        int bound = 0;
        manifest >> name >> bound;
        CellIndex idx;
        idx.n.resize(r.dim);
        idx.theta.resize(r.dim);
        for (int j = 0; j < r.dim; ++j) manifest >> idx.n[j];
        for (int j = 0; j < r.dim; ++j) manifest >> idx.theta[j];
        double dummy;
        for (int j = 0; j < 2 * r.dim; ++j) manifest >> dummy;  // maps are rebuilt from idx
        std::ifstream coeffs(fs::path(directory) / name);
        if (!coeffs) throw std::runtime_error("read_piecewise: missing " + name);
        r.pieces[i] = PiecewiseReconstruction::Piece{idx, cell(idx),
                                                     read_trig_poly_csv(coeffs, r.dim, bound)};
    }
    return r;
}

}  // namespace barron
