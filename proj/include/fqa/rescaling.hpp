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

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace fqa {

/// Default guard on fdot: the feedback gain divides by it.
inline constexpr double kDefaultFdotEpsilon = 1e-6;

enum class RescaleFamily { identity, sine, polynomial };

[[nodiscard]] std::string_view to_string(RescaleFamily family) noexcept;
/// Accepts "identity", "sine", "poly" and "polynomial".
[[nodiscard]] std::optional<RescaleFamily> parse_rescale_family(std::string_view name);

/**
 * Time map t = f(tau) for the rescaled evolution H(f(tau)) fdot(tau).
 *
 *   sine:       f(tau) = a tau - t_f (a - 1) / (2 pi a) sin(2 pi a tau / t_f)
 *   polynomial: f(tau) = 2 (a^2 - a^3) / t_f^2 tau^3 + 3 (a^2 - a) / t_f tau^2 + tau
 *   identity:   f(tau) = tau
 *
 * Both non-trivial families fix f(0) = 0, f(t_f/a) = t_f and have unit slope
 * at both ends. The closed forms are evaluated for every tau >= 0, including
 * past t_f/a.
 */
struct RescaleSpec {
    RescaleFamily family = RescaleFamily::identity;
    double a = 1.0;
    double t_f = 1.0;

    static RescaleSpec identity() { return {}; }
    static RescaleSpec sine(double a, double t_f) { return {RescaleFamily::sine, a, t_f}; }
    static RescaleSpec polynomial(double a, double t_f) {
        return {RescaleFamily::polynomial, a, t_f};
    }

    /// Throws InvalidArgument unless a > 0 and t_f > 0 (ignored for identity).
    void validate() const;

    [[nodiscard]] std::string label() const;

    bool operator==(const RescaleSpec &) const = default;
};

struct RescaleValue {
    double f;
    double fdot;
};

/// Closed-form (f, fdot) with no guard on fdot.
[[nodiscard]] RescaleValue evaluate_unchecked(const RescaleSpec &spec, double tau);

/// Like evaluate_unchecked, but throws VanishingDerivativeError when
/// fdot <= epsilon.
[[nodiscard]] RescaleValue evaluate(const RescaleSpec &spec, double tau,
                                    double epsilon = kDefaultFdotEpsilon);

/// t_f / a for the rescaled families, t_f for identity.
[[nodiscard]] double rescaled_horizon(const RescaleSpec &spec);

} // namespace fqa
