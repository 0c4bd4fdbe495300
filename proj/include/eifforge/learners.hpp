#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eifforge/hilbert.hpp"

namespace eifforge {

struct LearnerConfig {
    // multipliers of the per-dimension Silverman reference bandwidth
    std::vector<double> bandwidth_grid{0.25, 0.5, 1.0, 2.0, 4.0};
    int cv_folds = 5;
    double propensity_clip = 0.01;
    int min_fold_size = 2;
    // raw-unit bandwidth override for density models; skips Silverman + CV
    std::optional<double> fixed_bandwidth;
};

enum class BandwidthSelect {
    CrossValidate, // K-fold CV over the multiplier grid
    Reference,     // multiplier 1.0, no CV (keeps fits linear in the response)
};

// Nadaraya-Watson regression with a product Gaussian kernel over standardized
// covariates. Duplicate covariate rows are collapsed into weighted rows, so
// prediction cost scales with the number of distinct patterns. Predictions are
// convex combinations of training responses; when every kernel weight
// underflows, the responses of the nearest rows are averaged.
class RegressionModel {
public:
    double predict(const DataRecord& r) const;
    double predict_vec(const double* x) const; // raw covariate values, covariate order

    const std::vector<std::string>& covariates() const { return cov_names_; }
    const std::vector<double>& bandwidths() const { return h_; } // standardized units
    double min_response() const { return ymin_; }
    double max_response() const { return ymax_; }
    bool is_constant() const { return constant_; }

private:
    friend RegressionModel fit_regression(const std::vector<DataRecord>&,
                                          const std::vector<std::string>&,
                                          const std::vector<double>&, const LearnerConfig&,
                                          BandwidthSelect);
    friend RegressionModel fit_propensity(const std::vector<DataRecord>&,
                                          const std::vector<std::string>&,
                                          const std::vector<double>&, const LearnerConfig&);

    std::vector<std::string> cov_names_;
    std::vector<double> means_, scales_; // standardization per covariate
    std::vector<double> xs_;             // collapsed standardized rows, row-major
    std::vector<double> wsum_;           // multiplicity per collapsed row
    std::vector<double> ysum_;           // response sum per collapsed row
    std::vector<double> h_;              // per-dim bandwidth, standardized units
    size_t rows_ = 0;
    double ymin_ = 0.0, ymax_ = 0.0;
    bool constant_ = false;
    double const_value_ = 0.0;
    double clip_lo_ = 0.0, clip_hi_ = 0.0;
    bool clipped_ = false;
};

RegressionModel fit_regression(const std::vector<DataRecord>& rows,
                               const std::vector<std::string>& covariates,
                               const std::vector<double>& y, const LearnerConfig& cfg,
                               BandwidthSelect sel = BandwidthSelect::CrossValidate);

double predict(const RegressionModel& m, const DataRecord& r);

// Product-Gaussian kernel density estimate with per-dimension Silverman
// bandwidths h_d = 1.06 * sd_d * n^(-1/5) scaled by a CV-selected multiplier.
class DensityModel {
public:
    double density_at(const DataRecord& r) const;
    double density_at_vec(const double* x) const;

    // Sub-model over a subset of dimensions: same points, same bandwidths.
    DensityModel marginal(const std::vector<std::string>& cols) const;

    const std::vector<std::string>& columns() const { return cols_; }
    const std::vector<double>& bandwidths() const { return h_; } // raw units
    size_t dim() const { return cols_.size(); }

private:
    friend DensityModel fit_density_model(const std::vector<DataRecord>&,
                                          const std::vector<std::string>&, const LearnerConfig&);

    std::vector<std::string> cols_;
    std::vector<double> xs_;   // collapsed rows, row-major
    std::vector<double> wsum_; // multiplicity per collapsed row
    std::vector<double> h_;
    size_t rows_ = 0;
    double total_weight_ = 0.0;
};

DensityModel fit_density_model(const std::vector<DataRecord>& rows,
                               const std::vector<std::string>& cols, const LearnerConfig& cfg);

double density_at(const DensityModel& m, const DataRecord& r);

// K-fold CV bandwidth selection over the multiplier grid. With a response,
// minimizes squared prediction error (returns standardized-unit bandwidths);
// without one, maximizes held-out log-likelihood of the KDE (raw units). Ties
// break toward the larger bandwidth.
std::vector<double> select_bandwidth(const std::vector<std::vector<double>>& X,
                                     const std::vector<double>* y_or_null,
                                     const std::vector<double>& grid, int folds);

// Regression of a binary response with predictions clipped to
// [clip, 1 - clip]. A constant response degenerates to a clipped constant.
RegressionModel fit_propensity(const std::vector<DataRecord>& rows,
                               const std::vector<std::string>& covariates,
                               const std::vector<double>& a, const LearnerConfig& cfg);

} // namespace eifforge
