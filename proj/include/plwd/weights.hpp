#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plwd {

/// Positive non-increasing sequence W_1, W_2, ... that scales the weight sum
/// of a path according to its length.
class WeightSequence {
public:
    enum class Form { Constant, InversePower, ExplicitList };

    static WeightSequence constant(double c);
    /// W_t = 1 / t^k.
    static WeightSequence inverse_power(double k);
    /// W_t = values[t - 1]; indices past the end are an error.
    static WeightSequence explicit_list(std::vector<double> values);

    /// Parses `const:<c>`, `invpow:<k>` or `list:v1,v2,...`.
    static WeightSequence parse(std::string_view text);

    Form form() const noexcept { return form_; }
    /// c for Constant, k for InversePower; unused for ExplicitList.
    double parameter() const noexcept { return parameter_; }
    std::span<const double> values() const noexcept { return values_; }

    /// W_t for t >= 1. Throws LengthExceeded past an explicit list.
    double at(std::size_t t) const;

    /// Round-trips through `parse`.
    std::string to_string() const;

    friend bool operator==(const WeightSequence&, const WeightSequence&) = default;

private:
    WeightSequence(Form form, double parameter, std::vector<double> values)
        : form_(form), parameter_(parameter), values_(std::move(values)) {}

    Form form_;
    double parameter_;
    std::vector<double> values_;
};

inline double weight_at(const WeightSequence& w, std::size_t t) { return w.at(t); }

struct WeightViolation {
    std::size_t index;  // first offending t
    std::string reason;
};

/// Checks positivity, finiteness and non-increase on [1, horizon] with exact
/// comparisons. Returns the first violation, or nullopt when the sequence is
/// usable for paths of up to `horizon` edges.
std::optional<WeightViolation> validate(const WeightSequence& w, std::size_t horizon);

/// True for InversePower with k >= 1.
bool is_power_law(const WeightSequence& w);

}  // namespace plwd
