#include "spinnet/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spinnet/errors.hpp"
#include "spinnet/rng.hpp"

namespace spinnet {

namespace {

Eigen::VectorXd relu(const Eigen::VectorXd& z) { return z.cwiseMax(0.0); }

// Subgradient 0 at z = 0.
Eigen::VectorXd relu_grad(const Eigen::VectorXd& z) {
    return (z.array() > 0.0).cast<double>();
}

// Normalized-space forward pass keeping pre-activations for backprop.
struct Activations {
    Eigen::VectorXd z1, a1, z2, a2;
    double out = 0.0;
};

Activations net_forward(const MlpModel& m, double x) {
    Activations act;
    const Eigen::VectorXd input = Eigen::VectorXd::Constant(1, x);
    act.z1 = m.weights[0] * input + m.biases[0];
    act.a1 = relu(act.z1);
    act.z2 = m.weights[1] * act.a1 + m.biases[1];
    act.a2 = relu(act.z2);
    act.out = (m.weights[2] * act.a2 + m.biases[2])(0);
    return act;
}

void check_shapes(const MlpModel& m) {
    if (m.weights.size() != 3 || m.biases.size() != 3)
        throw std::invalid_argument("mlp: expected 3 weight layers");
    for (int l = 0; l < 3; ++l) {
        if (m.weights[l].rows() != kLayerSizes[l + 1] || m.weights[l].cols() != kLayerSizes[l] ||
            m.biases[l].size() != kLayerSizes[l + 1])
            throw std::invalid_argument("mlp: layer shape mismatch");
    }
}

DataSeries filter_parity(const DataSeries& data, Parity parity) {
    DataSeries kept;
    for (const auto& [n, y] : data) {
        const bool even = std::llround(n) % 2 == 0;
        if (parity == Parity::even && !even) continue;
        if (parity == Parity::odd && even) continue;
        kept.emplace_back(n, y);
    }
    return kept;
}

struct AdamState {
    detail::Gradients first;
    detail::Gradients second;
};

AdamState zero_adam_like(const MlpModel& m) {
    AdamState s;
    for (int l = 0; l < 3; ++l) {
        s.first.weights.push_back(Eigen::MatrixXd::Zero(m.weights[l].rows(), m.weights[l].cols()));
        s.first.biases.push_back(Eigen::VectorXd::Zero(m.biases[l].size()));
        s.second.weights.push_back(Eigen::MatrixXd::Zero(m.weights[l].rows(), m.weights[l].cols()));
        s.second.biases.push_back(Eigen::VectorXd::Zero(m.biases[l].size()));
    }
    return s;
}

template <typename Tensor>
void adam_step(Tensor& param, const Tensor& grad, Tensor& first, Tensor& second,
               const TrainConfig& cfg, double bias1, double bias2) {
    first = cfg.beta1 * first + (1.0 - cfg.beta1) * grad;
    second.array() = cfg.beta2 * second.array() + (1.0 - cfg.beta2) * grad.array().square();
    param.array() -= cfg.learning_rate * (first.array() / bias1) /
                     ((second.array() / bias2).sqrt() + cfg.epsilon);
}

}  // namespace

TargetKind target_from_string(const std::string& name) {
    if (name == "dn") return TargetKind::dn;
    if (name == "qfi") return TargetKind::qfi;
    throw std::invalid_argument("unknown target kind: " + name);
}

std::string to_string(TargetKind target) {
    switch (target) {
        case TargetKind::dn: return "dn";
        case TargetKind::qfi: return "qfi";
    }
    throw std::invalid_argument("unknown target kind enum value");
}

MlpModel init_model(Parity parity, TargetKind target, std::uint64_t seed) {
    MlpModel m;
    m.parity = parity;
    m.target = target;
    m.seed = seed;
    std::mt19937_64 rng = make_rng(seed);
    for (int l = 0; l < 3; ++l) {
        const int rows = kLayerSizes[l + 1];
        const int cols = kLayerSizes[l];
        const double limit = std::sqrt(1.0 / cols);
        Eigen::MatrixXd w(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) w(r, c) = uniform_range(rng, -limit, limit);
        m.weights.push_back(std::move(w));
        m.biases.push_back(Eigen::VectorXd::Zero(rows));
    }
    return m;
}

double forward(const MlpModel& m, double x) {
    check_shapes(m);
    const double span = m.x_max - m.x_min;
    const double xn = (x - m.x_min) / (span > 1e-12 ? span : 1.0);
    return net_forward(m, xn).out * m.y_std + m.y_mean;
}

namespace detail {

double batch_loss(const MlpModel& m, const std::vector<double>& xs,
                  const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("batch_loss: bad batch");
    double loss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = net_forward(m, xs[i]).out - ys[i];
        loss += r * r;
    }
    return loss / static_cast<double>(xs.size());
}

Gradients backprop(const MlpModel& m, const std::vector<double>& xs,
                   const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("backprop: bad batch");
    Gradients g;
    for (int l = 0; l < 3; ++l) {
        g.weights.push_back(Eigen::MatrixXd::Zero(m.weights[l].rows(), m.weights[l].cols()));
        g.biases.push_back(Eigen::VectorXd::Zero(m.biases[l].size()));
    }
    const double inv_m = 1.0 / static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Activations act = net_forward(m, xs[i]);
        const double delta_out = 2.0 * (act.out - ys[i]) * inv_m;

        g.weights[2] += delta_out * act.a2.transpose();
        g.biases[2](0) += delta_out;

        const Eigen::VectorXd delta2 =
            (m.weights[2].transpose() * delta_out).cwiseProduct(relu_grad(act.z2));
        g.weights[1] += delta2 * act.a1.transpose();
        g.biases[1] += delta2;

        const Eigen::VectorXd delta1 =
            (m.weights[1].transpose() * delta2).cwiseProduct(relu_grad(act.z1));
        g.weights[0] += delta1 * Eigen::RowVectorXd::Constant(1, xs[i]);
        g.biases[0] += delta1;
    }
    return g;
}

}  // namespace detail

TrainResult train(const DataSeries& data, const TrainConfig& cfg, Parity parity,
                  TargetKind target) {
    if (cfg.epochs < 1) throw std::invalid_argument("train: epochs must be >= 1");
    if (!(cfg.learning_rate > 0.0))
        throw std::invalid_argument("train: learning rate must be > 0");

    const DataSeries kept = filter_parity(data, parity);
    if (kept.size() < 2)
        throw std::invalid_argument("train: need >= 2 points after parity filter");

    TrainResult result;
    result.model = init_model(parity, target, cfg.seed);
    MlpModel& m = result.model;

    double x_lo = kept[0].first, x_hi = kept[0].first;
    double y_sum = 0.0;
    for (const auto& [x, y] : kept) {
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        y_sum += y;
    }
    m.x_min = x_lo;
    m.x_max = x_hi;
    m.y_mean = y_sum / static_cast<double>(kept.size());
    double var = 0.0;
    for (const auto& [x, y] : kept) var += (y - m.y_mean) * (y - m.y_mean);
    const double y_std = std::sqrt(var / static_cast<double>(kept.size()));
    m.y_std = y_std > 1e-12 ? y_std : 1.0;

    const double span = m.x_max - m.x_min;
    std::vector<double> xs, ys;
    for (const auto& [x, y] : kept) {
        xs.push_back((x - m.x_min) / (span > 1e-12 ? span : 1.0));
        ys.push_back((y - m.y_mean) / m.y_std);
    }

    AdamState adam = zero_adam_like(m);
    result.loss_history.reserve(cfg.epochs);
    for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
        const double loss = detail::batch_loss(m, xs, ys);
        if (!std::isfinite(loss)) throw NumericError("train: loss diverged");
        result.loss_history.push_back(loss * m.y_std * m.y_std);

        const detail::Gradients g = detail::backprop(m, xs, ys);
        const double bias1 = 1.0 - std::pow(cfg.beta1, epoch);
        const double bias2 = 1.0 - std::pow(cfg.beta2, epoch);
        for (int l = 0; l < 3; ++l) {
            adam_step(m.weights[l], g.weights[l], adam.first.weights[l],
                      adam.second.weights[l], cfg, bias1, bias2);
            adam_step(m.biases[l], g.biases[l], adam.first.biases[l], adam.second.biases[l],
                      cfg, bias1, bias2);
        }
    }
    return result;
}

DataSeries predict_series(const MlpModel& m, const std::vector<double>& ns) {
    DataSeries out;
    out.reserve(ns.size());
    for (double n : ns) out.emplace_back(n, forward(m, n));
    return out;
}

double mean_squared_error(const MlpModel& m, const DataSeries& data) {
    if (data.empty()) throw std::invalid_argument("mean_squared_error: empty series");
    double sum = 0.0;
    for (const auto& [x, y] : data) {
        const double r = forward(m, x) - y;
        sum += r * r;
    }
    return sum / static_cast<double>(data.size());
}

}  // namespace spinnet
