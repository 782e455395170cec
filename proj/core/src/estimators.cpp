#include "ridgekit/estimators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ridgekit/errors.hpp"

namespace ridgekit {

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    // Even length: midpoint of the two central order statistics.
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

[[noreturn]] void throw_degenerate(EstimatorId id, Eigen::Index j) {
    throw degenerate_coefficient_error(
        std::string(name(id)) + ": coefficient alpha[" + std::to_string(j) +
            "] is zero, the shrinkage formula is undefined",
        std::string(name(id)), static_cast<std::size_t>(j));
}

// Quantities shared by several formulas; computed once so that estimate()
// and estimate_all() run the exact same arithmetic.
struct ModelSummary {
    Eigen::VectorXd lambda;
    Eigen::VectorXd alpha2;     // alpha_j^2
    double sigma2;
    double lambda_max;
    double n_minus_p;
    Eigen::Index p;

    explicit ModelSummary(const CanonicalModel& m)
        : lambda(m.eig.eigenvalues),
          alpha2(m.alpha_ols.cwiseProduct(m.alpha_ols)),
          sigma2(m.sigma2_hat),
          lambda_max(m.eig.eigenvalues.maxCoeff()),
          n_minus_p(static_cast<double>(m.n - m.p)),
          p(m.p) {
        if (!(sigma2 > 0.0)) {
            throw numeric_error("estimate: sigma2_hat must be positive");
        }
        if (p < 1) {
            throw std::invalid_argument("estimate: model has no coefficients");
        }
    }

    // k_j = sqrt(sigma2 / (lambda_j alpha_j^2)), +inf where alpha_j is zero.
    Eigen::VectorXd ky_raw() const {
        return (sigma2 / (lambda.array() * alpha2.array())).sqrt().matrix();
    }

    // As ky_raw, but a zero coefficient is an error for formulas that need
    // every k_j finite.
    Eigen::VectorXd ky(EstimatorId id) const {
        if (const Eigen::Index j = first_zero_alpha(); j >= 0) {
            throw_degenerate(id, j);
        }
        return ky_raw();
    }

    // Literal reciprocals 1 / k_j, zero where alpha_j is zero. Computing the
    // reciprocal family from the same k_j values keeps order identities such
    // as max(1/k_j) = 1/min(k_j) exact.
    Eigen::VectorXd ky_reciprocal() const { return ky_raw().cwiseInverse(); }

    // sqrt(((n-p) sigma2 + lambda_max alpha_j^2) / (lambda_max sigma2)),
    // the reciprocal of the printed KM radical.
    Eigen::VectorXd km_terms() const {
        return ((n_minus_p * sigma2 + lambda_max * alpha2.array()) /
                (lambda_max * sigma2))
            .sqrt()
            .matrix();
    }

    Eigen::Index first_zero_alpha() const {
        for (Eigen::Index j = 0; j < alpha2.size(); ++j) {
            if (alpha2(j) == 0.0) return j;
        }
        return -1;
    }

    std::vector<double> to_vector(const Eigen::VectorXd& v) const {
        return std::vector<double>(v.data(), v.data() + v.size());
    }
};

double evaluate(EstimatorId id, const ModelSummary& s) {
    const double p = static_cast<double>(s.p);
    switch (id) {
        case EstimatorId::OLS:
            return 0.0;
        case EstimatorId::HK: {
            const double alpha2_max = s.alpha2.maxCoeff();
            if (alpha2_max == 0.0) throw_degenerate(id, 0);
            return s.sigma2 / alpha2_max;
        }
        case EstimatorId::HKB: {
            const double sum = s.alpha2.sum();
            if (sum == 0.0) throw_degenerate(id, 0);
            return p * s.sigma2 / sum;
        }
        case EstimatorId::LW: {
            const double sum = s.lambda.dot(s.alpha2);
            if (sum == 0.0) throw_degenerate(id, 0);
            return p * s.sigma2 / sum;
        }
        case EstimatorId::AD: {
            const double sum = s.alpha2.sum();
            if (sum == 0.0) throw_degenerate(id, 0);
            return 2.0 * p * s.sigma2 / (s.lambda_max * sum);
        }
        case EstimatorId::KM8:
            return s.km_terms().maxCoeff();
        case EstimatorId::KM12:
            return median(s.to_vector(s.km_terms()));
        case EstimatorId::Y1:
            return s.ky(id).mean();
        case EstimatorId::Y2:
            return std::exp(s.ky(id).array().log().mean());
        case EstimatorId::Y3:
            return median(s.to_vector(s.ky(id)));
        case EstimatorId::Y4:
            return s.ky(id).maxCoeff();
        case EstimatorId::Y5:
            return median(s.to_vector(s.ky_reciprocal()));
        case EstimatorId::Y6:
            return s.ky_reciprocal().maxCoeff();
        case EstimatorId::Y7:
            return s.ky_reciprocal().mean();
        case EstimatorId::Y8: {
            const double denom = s.ky_reciprocal().sum();
            if (denom == 0.0) throw_degenerate(id, s.first_zero_alpha());
            return p / denom;
        }
        case EstimatorId::Y9:
            return p / s.ky(id).sum();
    }
    throw std::invalid_argument("estimate: unknown estimator id");
}

}  // namespace

std::string_view name(EstimatorId id) {
    switch (id) {
        case EstimatorId::OLS: return "OLS";
        case EstimatorId::HK: return "HK";
        case EstimatorId::HKB: return "HKB";
        case EstimatorId::LW: return "LW";
        case EstimatorId::AD: return "AD";
        case EstimatorId::KM8: return "KM8";
        case EstimatorId::KM12: return "KM12";
        case EstimatorId::Y1: return "Y1";
        case EstimatorId::Y2: return "Y2";
        case EstimatorId::Y3: return "Y3";
        case EstimatorId::Y4: return "Y4";
        case EstimatorId::Y5: return "Y5";
        case EstimatorId::Y6: return "Y6";
        case EstimatorId::Y7: return "Y7";
        case EstimatorId::Y8: return "Y8";
        case EstimatorId::Y9: return "Y9";
    }
    return "?";
}

std::optional<EstimatorId> parse_estimator(std::string_view text) {
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    for (EstimatorId id : kAllEstimators) {
        if (upper == name(id)) return id;
    }
    return std::nullopt;
}

Eigen::VectorXd ky_vector(const CanonicalModel& m) {
    const ModelSummary summary(m);
    if (const Eigen::Index j = summary.first_zero_alpha(); j >= 0) {
        throw degenerate_coefficient_error(
            "k_Y: coefficient alpha[" + std::to_string(j) + "] is zero",
            "k_Y", static_cast<std::size_t>(j));
    }
    return summary.ky_raw();
}

KEstimate estimate(EstimatorId id, const CanonicalModel& m) {
    const ModelSummary summary(m);
    return {id, evaluate(id, summary)};
}

std::map<EstimatorId, KEstimate> estimate_all(const CanonicalModel& m) {
    const ModelSummary summary(m);
    std::map<EstimatorId, KEstimate> out;
    for (EstimatorId id : kAllEstimators) {
        out.emplace(id, KEstimate{id, evaluate(id, summary)});
    }
    return out;
}

}  // namespace ridgekit
