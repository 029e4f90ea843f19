#include "mofwe/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mofwe/errors.hpp"

namespace mofwe {

Dataset::Dataset(std::string label, std::vector<double> values)
    : label_(std::move(label)), values_(std::move(values)) {
    if (values_.empty())
        throw DataError("dataset '" + label_ + "' is empty");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]) || !(values_[i] > 0.0))
            throw DataError("dataset '" + label_ + "': value at index " + std::to_string(i)
                            + " is not a positive finite number");
    }
}

std::vector<double> Dataset::sorted_values() const {
    std::vector<double> s = values_;
    std::sort(s.begin(), s.end());
    return s;
}

double Dataset::min() const { return *std::min_element(values_.begin(), values_.end()); }
double Dataset::max() const { return *std::max_element(values_.begin(), values_.end()); }

double Dataset::mean() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(values_.size());
}

} // namespace mofwe
