#include "plwd/weights.hpp"

#include <charconv>
#include <cmath>

#include "plwd/error.hpp"
#include "plwd/format.hpp"

namespace plwd {

namespace {

double parse_number(std::string_view text, std::string_view context) {
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw Error(ErrorCode::InvalidWeightSequence,
                    "cannot read number '" + std::string(text) + "' in " + std::string(context));
    }
    return value;
}

}  // namespace

WeightSequence WeightSequence::constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw Error(ErrorCode::InvalidWeightSequence, "constant weight must be positive and finite");
    }
    return WeightSequence(Form::Constant, c, {});
}

WeightSequence WeightSequence::inverse_power(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw Error(ErrorCode::InvalidWeightSequence, "inverse power exponent must be positive and finite");
    }
    return WeightSequence(Form::InversePower, k, {});
}

WeightSequence WeightSequence::explicit_list(std::vector<double> values) {
    if (values.empty()) {
        throw Error(ErrorCode::InvalidWeightSequence, "explicit weight list is empty");
    }
    return WeightSequence(Form::ExplicitList, 0.0, std::move(values));
}

WeightSequence WeightSequence::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw Error(ErrorCode::InvalidWeightSequence,
                    "expected const:<c>, invpow:<k> or list:v1,v2,... but got '" + std::string(text) + "'");
    }
    const auto kind = text.substr(0, colon);
    const auto body = text.substr(colon + 1);
    if (kind == "const") {
        return constant(parse_number(body, text));
    }
    if (kind == "invpow") {
        return inverse_power(parse_number(body, text));
    }
    if (kind == "list") {
        std::vector<double> values;
        std::size_t start = 0;
        while (start <= body.size()) {
            const auto comma = body.find(',', start);
            const auto end = comma == std::string_view::npos ? body.size() : comma;
            values.push_back(parse_number(body.substr(start, end - start), text));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        return explicit_list(std::move(values));
    }
    throw Error(ErrorCode::InvalidWeightSequence, "unknown weight form '" + std::string(kind) + "'");
}

double WeightSequence::at(std::size_t t) const {
    if (t == 0) {
        throw Error(ErrorCode::InvalidParams, "weight index starts at 1");
    }
    switch (form_) {
        case Form::Constant:
            return parameter_;
        case Form::InversePower:
            return 1.0 / std::pow(static_cast<double>(t), parameter_);
        case Form::ExplicitList:
            if (t > values_.size()) {
                throw Error(ErrorCode::LengthExceeded, "weight list has " + std::to_string(values_.size()) +
                                                           " entries, index " + std::to_string(t) + " requested");
            }
            return values_[t - 1];
    }
    return 0.0;
}

std::string WeightSequence::to_string() const {
    switch (form_) {
        case Form::Constant:
            return "const:" + format_shortest(parameter_);
        case Form::InversePower:
            return "invpow:" + format_shortest(parameter_);
        case Form::ExplicitList: {
            std::string out = "list:";
            for (std::size_t i = 0; i < values_.size(); ++i) {
                if (i > 0) {
                    out += ',';
                }
                out += format_shortest(values_[i]);
            }
            return out;
        }
    }
    return {};
}

std::optional<WeightViolation> validate(const WeightSequence& w, std::size_t horizon) {
    if (w.form() == WeightSequence::Form::ExplicitList && horizon > w.values().size()) {
        return WeightViolation{w.values().size() + 1, "list ends before the required horizon " +
                                                          std::to_string(horizon)};
    }
    double previous = 0.0;
    for (std::size_t t = 1; t <= horizon; ++t) {
        const double value = w.at(t);
        if (!(value > 0.0) || !std::isfinite(value)) {
            return WeightViolation{t, "W_" + std::to_string(t) + " is not positive and finite"};
        }
        if (t > 1 && value > previous) {
            return WeightViolation{t, "W_" + std::to_string(t) + " exceeds W_" + std::to_string(t - 1)};
        }
        previous = value;
    }
    return std::nullopt;
}

bool is_power_law(const WeightSequence& w) {
    return w.form() == WeightSequence::Form::InversePower && w.parameter() >= 1.0;
}

}  // namespace plwd
