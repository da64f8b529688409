// fock_space.hpp — tensor-factor Hilbert spaces with particle-number labels

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace refcons {

/// One tensor factor: its dimension and the particle number carried by each
/// basis index.
struct Factor {
    std::string name;
    std::vector<int> labels;

    std::size_t dim() const noexcept { return labels.size(); }
};

/// Ordered product of factors. Composite indices are row-major with the first
/// factor most significant, and the number label of a composite index is the
/// sum of its factor labels.
class FockSpace {
public:
    explicit FockSpace(std::vector<Factor> factors);

    /// Reference mode holding at most `cutoff` particles: dimension cutoff+1,
    /// label i at index i.
    static FockSpace reference(int cutoff);
    /// Two-level system with labels {0, 1}.
    static FockSpace qubit();

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::size_t factor_count() const noexcept { return factors_.size(); }
    std::size_t dimension() const noexcept { return labels_.size(); }

    int label(std::size_t index) const { return labels_.at(index); }
    const std::vector<int>& labels() const noexcept { return labels_; }
    int min_label() const noexcept;
    int max_label() const noexcept;

    /// Per-factor indices of a composite index.
    std::vector<std::size_t> decompose(std::size_t index) const;
    std::size_t compose(const std::vector<std::size_t>& digits) const;

    /// Concatenation of the factor lists (a first).
    friend FockSpace operator*(const FockSpace& a, const FockSpace& b);
    /// Space made of the selected factors, in their original order.
    FockSpace subspace(const std::vector<std::size_t>& selected) const;

    friend bool operator==(const FockSpace& a, const FockSpace& b);

private:
    std::vector<Factor> factors_;
    std::vector<int> labels_;
};

bool operator==(const Factor& a, const Factor& b);

} // namespace refcons
