#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinnet/metrology.hpp"

namespace spinnet {

enum class TargetKind { dn, qfi };

TargetKind target_from_string(const std::string& name);
std::string to_string(TargetKind target);

// (N, value) pairs; the common currency between GA output, fits, and models.
using DataSeries = std::vector<std::pair<double, double>>;

inline constexpr std::array<int, 4> kLayerSizes = {1, 64, 32, 1};

struct TrainConfig {
    int epochs = 4000;
    double learning_rate = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::uint64_t seed = 0;
};

// 1 -> 64 -> 32 -> 1 regressor, ReLU hiddens, identity output. Inputs are
// min-max scaled to [0,1] and targets standardized; the constants live in
// the model so a saved model predicts in raw units.
struct MlpModel {
    std::vector<Eigen::MatrixXd> weights;  // shapes 64x1, 32x64, 1x32
    std::vector<Eigen::VectorXd> biases;
    Parity parity = Parity::all;
    TargetKind target = TargetKind::dn;
    double x_min = 0.0;
    double x_max = 1.0;
    double y_mean = 0.0;
    double y_std = 1.0;
    std::uint64_t seed = 0;
};

// Uniform weights in +-sqrt(1/fan_in), zero biases.
MlpModel init_model(Parity parity, TargetKind target, std::uint64_t seed);

// Raw-unit prediction at raw-unit x.
double forward(const MlpModel& m, double x);

struct TrainResult {
    MlpModel model;
    std::vector<double> loss_history;  // raw-unit MSE, one entry per epoch (pre-update)
};

// Full-batch Adam for exactly cfg.epochs epochs on the parity-filtered
// subset of data. Deterministic given (data, cfg, parity, target).
TrainResult train(const DataSeries& data, const TrainConfig& cfg, Parity parity,
                  TargetKind target);

DataSeries predict_series(const MlpModel& m, const std::vector<double>& ns);

// Raw-unit MSE of the model over a series.
double mean_squared_error(const MlpModel& m, const DataSeries& data);

namespace detail {

struct Gradients {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
};

// Normalized-space batch loss and its analytic gradient; the normalization
// constants in the model are ignored here. Exposed so finite-difference
// checks can probe the bare network.
double batch_loss(const MlpModel& m, const std::vector<double>& xs,
                  const std::vector<double>& ys);
Gradients backprop(const MlpModel& m, const std::vector<double>& xs,
                   const std::vector<double>& ys);

}  // namespace detail

}  // namespace spinnet
