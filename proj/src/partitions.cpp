#include "concbound/partitions.hpp"

#include <algorithm>
#include <functional>

#include "concbound/errors.hpp"

namespace concbound {

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 1) throw DomainError("Partition: n must be >= 1");
    std::vector<int> seen(static_cast<std::size_t>(n_), 0);
    for (auto& b : blocks_) {
        if (b.empty()) throw DomainError("Partition: empty block");
        std::sort(b.begin(), b.end());
        for (int i : b) {
            if (i < 0 || i >= n_) throw DomainError("Partition: index out of range");
            if (seen[static_cast<std::size_t>(i)]++) {
                throw DomainError("Partition: index " + std::to_string(i + 1) +
                                  " appears in more than one block");
            }
        }
    }
    for (int i = 0; i < n_; ++i) {
        if (!seen[static_cast<std::size_t>(i)]) {
            throw DomainError("Partition: index " + std::to_string(i + 1) + " is missing");
        }
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Partition Partition::from_restricted_growth(std::span<const int> rgs) {
    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        const auto b = static_cast<std::size_t>(rgs[i]);
        if (rgs[i] < 0 || b > blocks.size()) {
            throw DomainError("from_restricted_growth: not a restricted growth string");
        }
        if (b == blocks.size()) blocks.emplace_back();
        blocks[b].push_back(static_cast<int>(i));
    }
    return Partition(static_cast<int>(rgs.size()), std::move(blocks));
}

Partition Partition::parse(std::string_view text) {
    const std::string where = "partition '" + std::string(text) + "': ";
    // Without commas every digit is one label; with commas labels are
    // comma-separated numbers.
    const bool comma_form = text.find(',') != std::string_view::npos;
    std::vector<std::vector<int>> blocks(1);
    std::string number;
    int max_label = 0;

    auto flush = [&] {
        if (number.empty()) return;
        const int label = std::stoi(number);
        if (label < 1) throw ParseError(where + "labels start at 1");
        blocks.back().push_back(label - 1);
        max_label = std::max(max_label, label);
        number.clear();
    };

    for (char c : text) {
        if (c >= '0' && c <= '9') {
            number.push_back(c);
            if (!comma_form) flush();
        } else if (c == ',') {
            if (number.empty()) throw ParseError(where + "stray comma");
            flush();
        } else if (c == '|') {
            flush();
            if (blocks.back().empty()) throw ParseError(where + "empty block");
            blocks.emplace_back();
        } else if (c != ' ' && c != '\t') {
            throw ParseError(where + "unexpected character '" + std::string(1, c) + "'");
        }
    }
    flush();
    if (blocks.back().empty()) throw ParseError(where + "empty block");
    try {
        return Partition(max_label, std::move(blocks));
    } catch (const DomainError& e) {
        throw ParseError(where + e.what());
    }
}

std::vector<int> Partition::order() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::string Partition::render() const {
    const bool wide = n_ > 9;
    std::string out;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k) out.push_back('|');
        for (std::size_t j = 0; j < blocks_[k].size(); ++j) {
            if (wide && j) out.push_back(',');
            out += std::to_string(blocks_[k][j] + 1);
        }
    }
    return out;
}

std::vector<Partition> enumerate_partitions(int n, int m) {
    if (n < 1 || m < 1 || m > n) {
        throw DomainError("enumerate_partitions: need 1 <= m <= n, got n=" + std::to_string(n) +
                          ", m=" + std::to_string(m));
    }
    std::vector<Partition> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);

    // Position i may open block max+1 only while enough positions remain to
    // reach m blocks.
    std::function<void(int, int)> extend = [&](int i, int used) {
        if (i == n) {
            if (used == m) out.push_back(Partition::from_restricted_growth(rgs));
            return;
        }
        const int remaining = n - i;
        for (int v = 0; v <= std::min(used, m - 1); ++v) {
            const int now_used = std::max(used, v + 1);
            if (m - now_used > remaining - 1) continue;
            rgs[static_cast<std::size_t>(i)] = v;
            extend(i + 1, now_used);
        }
    };
    rgs[0] = 0;
    extend(1, 1);
    return out;
}

namespace {

void require_match(const SubsystemDims& dims, const Partition& p) {
    if (static_cast<std::size_t>(p.n()) != dims.size()) {
        throw DomainError("coarse_grain: partition of " + std::to_string(p.n()) +
                          " subsystems applied to a state with " + std::to_string(dims.size()));
    }
}

}  // namespace

PureState coarse_grain(const PureState& psi, const Partition& p) {
    require_match(psi.dims(), p);
    const auto order = p.order();
    SubsystemDims merged = psi.dims().merged(p.blocks());
    return PureState(std::move(merged), permute_subsystems(psi.amplitudes(), psi.dims(), order));
}

DensityMatrix coarse_grain(const DensityMatrix& rho, const Partition& p) {
    require_match(rho.dims(), p);
    const auto order = p.order();
    SubsystemDims merged = rho.dims().merged(p.blocks());
    return DensityMatrix(std::move(merged), permute_subsystems(rho.matrix(), rho.dims(), order));
}

}  // namespace concbound
