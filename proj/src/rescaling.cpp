// Copyright 2026 The fqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fqa/rescaling.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "fqa/error.hpp"

namespace fqa {

VanishingDerivativeError::VanishingDerivativeError(double tau, double fdot, double epsilon)
    : Error(fmt::format("rescaling derivative fdot = {:.6g} at tau = {:.6g} is not above {:g}",
                        fdot, tau, epsilon)),
      tau_(tau), fdot_(fdot) {}

std::string_view to_string(RescaleFamily family) noexcept {
    switch (family) {
    case RescaleFamily::identity:
        return "identity";
    case RescaleFamily::sine:
        return "sine";
    case RescaleFamily::polynomial:
        return "poly";
    }
    return "?";
}

std::optional<RescaleFamily> parse_rescale_family(std::string_view name) {
    if (name == "identity") {
        return RescaleFamily::identity;
    }
    if (name == "sine") {
        return RescaleFamily::sine;
    }
    if (name == "poly" || name == "polynomial") {
        return RescaleFamily::polynomial;
    }
    return std::nullopt;
}

void RescaleSpec::validate() const {
    if (family == RescaleFamily::identity) {
        return;
    }
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw InvalidArgument(fmt::format("rescaling parameter a must be positive, got {}", a));
    }
    if (!(t_f > 0.0) || !std::isfinite(t_f)) {
        throw InvalidArgument(fmt::format("rescaling final time t_f must be positive, got {}", t_f));
    }
}

std::string RescaleSpec::label() const {
    if (family == RescaleFamily::identity) {
        return "identity";
    }
    return fmt::format("{}-a{}-tf{}", to_string(family), a, t_f);
}

RescaleValue evaluate_unchecked(const RescaleSpec &spec, double tau) {
    using std::numbers::pi;
    const double a = spec.a;
    const double tf = spec.t_f;
    switch (spec.family) {
    case RescaleFamily::identity:
        return {tau, 1.0};
    case RescaleFamily::sine: {
        const double omega = 2.0 * pi * a / tf;
        return {a * tau - (tf / (2.0 * pi * a)) * (a - 1.0) * std::sin(omega * tau),
                a - (a - 1.0) * std::cos(omega * tau)};
    }
    case RescaleFamily::polynomial: {
        const double cubic = 2.0 * (a * a - a * a * a) / (tf * tf);
        const double quadratic = 3.0 * (a * a - a) / tf;
        return {((cubic * tau + quadratic) * tau + 1.0) * tau,
                (3.0 * cubic * tau + 2.0 * quadratic) * tau + 1.0};
    }
    }
    throw InvalidArgument("unknown rescaling family");
}

RescaleValue evaluate(const RescaleSpec &spec, double tau, double epsilon) {
    if (!std::isfinite(tau) || tau < 0.0) {
        throw InvalidArgument(fmt::format("rescaled time must be finite and >= 0, got {}", tau));
    }
    const auto value = evaluate_unchecked(spec, tau);
    if (!(value.fdot > epsilon)) {
        throw VanishingDerivativeError(tau, value.fdot, epsilon);
    }
    return value;
}

double rescaled_horizon(const RescaleSpec &spec) {
    if (spec.family == RescaleFamily::identity) {
        return spec.t_f;
    }
    return spec.t_f / spec.a;
}

} // namespace fqa
