#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "barron/cutoff.hpp"
#include "barron/local_recon.hpp"
#include "barron/partition.hpp"
#include "barron/trig_poly.hpp"

namespace barron {

// Sampling plan for the patched reconstruction on all of Omega: one local
// plan per active cell, with that plan's points pulled back into the cell's
// enlarged neighborhood via Psi.
struct GlobalPlan {
    double epsilon = 0.5;
    double sigma = 1.0;
    int dim = 1;
    double lambda = 1.5;
    std::uint64_t seed = 0;

    struct CellPlan {
        CellIndex idx;
        Cell geometry;
        LocalPlan local;  // local_eps = eps * 2^{|n|_1/4}, points in Omega
        std::vector<Eigen::VectorXd> pullback_points;  // Psi(z_i), the actual samples
    };
    std::vector<CellPlan> cells;
    long total_samples = 0;

    // sample locations in plan order (concatenated per cell)
    std::vector<Eigen::VectorXd> all_points() const;
};

// One local plan per active cell with budget(n) = ceil(kappa0 * ...) samples;
// deterministic given the seed.  For eps >= 1 the plan is empty (the zero
// reconstruction already meets the sup bound).
GlobalPlan make_global_plan(double epsilon, double sigma, int dim, double kappa0,
                            std::uint64_t seed, double kappa3 = 1.0, double kappa4 = 1.0);

struct PiecewiseReconstruction {
    double epsilon = 0.5;
    int dim = 1;
    struct Piece {
        CellIndex idx;
        Cell geometry;
        TrigPoly h;
    };
    std::vector<Piece> pieces;
};

// Per-cell ell^1 recoveries from the pulled-back samples (the sample of f at
// Psi(z) is the sample of g = f o Psi at z).  Values must be aligned with
// plan.all_points().  Cell solves run concurrently; any cell failure aborts
// the whole reconstruction with that cell named in the error.
PiecewiseReconstruction reconstruct_global(const Eigen::VectorXd& sample_values,
                                           const GlobalPlan& plan, const PlateauCutoff& cutoff,
                                           const ToleranceConfig& solver_cfg = {});

// h_n^theta(Phi_n^theta(x)) on the unique cell containing x, 0 on inactive
// cells.  Throws for x outside Omega.
double evaluate_piecewise(const PiecewiseReconstruction& r, const Eigen::VectorXd& x);

// directory of per-cell coefficient CSVs plus a manifest with the cell index
// and affine map coefficients
void write_piecewise(const std::string& directory, const PiecewiseReconstruction& r);
PiecewiseReconstruction read_piecewise(const std::string& directory);

}  // namespace barron
