#pragma once

#include <string>
#include <vector>

namespace mofwe {

/// An ordered sample of positive failure times. Values keep their input
/// order; sorted views are derived on demand.
class Dataset {
public:
    Dataset(std::string label, std::vector<double> values);

    const std::string& label() const { return label_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t n() const { return values_.size(); }

    std::vector<double> sorted_values() const;

    double min() const;
    double max() const;
    double mean() const;

private:
    std::string label_;
    std::vector<double> values_;
};

} // namespace mofwe
