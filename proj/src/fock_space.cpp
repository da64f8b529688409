#include "refcons/fock_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace refcons {

FockSpace::FockSpace(std::vector<Factor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw std::invalid_argument("FockSpace: at least one factor required");
    }
    std::size_t total = 1;
    for (const auto& f : factors_) {
        if (f.dim() == 0) {
            throw std::invalid_argument("FockSpace: factor '" + f.name + "' has dimension 0");
        }
        for (int n : f.labels) {
            if (n < 0) {
                throw std::invalid_argument("FockSpace: factor '" + f.name +
                                            "' has a negative number label");
            }
        }
        total *= f.dim();
    }

    labels_.assign(total, 0);
    std::size_t stride = total;
    for (const auto& f : factors_) {
        stride /= f.dim();
        for (std::size_t i = 0; i < total; ++i) {
            labels_[i] += f.labels[(i / stride) % f.dim()];
        }
    }
}

FockSpace FockSpace::reference(int cutoff) {
    if (cutoff < 0) {
        throw std::invalid_argument("FockSpace::reference: negative cutoff " +
                                    std::to_string(cutoff));
    }
    Factor f{"R", {}};
    f.labels.resize(static_cast<std::size_t>(cutoff) + 1);
    for (int i = 0; i <= cutoff; ++i) {
        f.labels[static_cast<std::size_t>(i)] = i;
    }
    return FockSpace({std::move(f)});
}

FockSpace FockSpace::qubit() { return FockSpace({Factor{"S", {0, 1}}}); }

int FockSpace::min_label() const noexcept { return *std::min_element(labels_.begin(), labels_.end()); }
int FockSpace::max_label() const noexcept { return *std::max_element(labels_.begin(), labels_.end()); }

std::vector<std::size_t> FockSpace::decompose(std::size_t index) const {
    if (index >= dimension()) {
        throw std::out_of_range("FockSpace::decompose: index out of range");
    }
    std::vector<std::size_t> digits(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        digits[k] = index % factors_[k].dim();
        index /= factors_[k].dim();
    }
    return digits;
}

std::size_t FockSpace::compose(const std::vector<std::size_t>& digits) const {
    if (digits.size() != factors_.size()) {
        throw std::invalid_argument("FockSpace::compose: wrong number of digits");
    }
    std::size_t index = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (digits[k] >= factors_[k].dim()) {
            throw std::out_of_range("FockSpace::compose: digit out of range");
        }
        index = index * factors_[k].dim() + digits[k];
    }
    return index;
}

FockSpace operator*(const FockSpace& a, const FockSpace& b) {
    std::vector<Factor> fs = a.factors_;
    fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
    return FockSpace(std::move(fs));
}

FockSpace FockSpace::subspace(const std::vector<std::size_t>& selected) const {
    std::vector<Factor> fs;
    for (std::size_t k : selected) {
        fs.push_back(factors_.at(k));
    }
    return FockSpace(std::move(fs));
}

bool operator==(const Factor& a, const Factor& b) {
    return a.name == b.name && a.labels == b.labels;
}

bool operator==(const FockSpace& a, const FockSpace& b) { return a.factors_ == b.factors_; }

} // namespace refcons
