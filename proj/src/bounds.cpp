#include "concbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "concbound/concurrence.hpp"
#include "concbound/errors.hpp"

namespace concbound {
namespace {

constexpr struct {
    Method method;
    std::string_view name;
} kMethodNames[] = {
    {Method::Caf, "caf"},
    {Method::Wang, "wang"},
    {Method::ZhuFei, "zhu-fei"},
    {Method::Tripartite, "tripartite"},
    {Method::Thm1, "thm1"},
    {Method::Thm2, "thm2"},
    {Method::Thm3, "thm3"},
    {Method::Thm4, "thm4"},
    {Method::ThmGeneral, "thm-general"},
    {Method::ReferenceCurve, "reference-curve"},
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string render_cut(std::span<const int> cut) {
    std::string out;
    for (int i : cut) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(i + 1);
    }
    return out;
}

std::optional<PureState> pure_part(const DensityMatrix& rho) {
    if (rho.is_pure()) return rho.dominant_state();
    return std::nullopt;
}

BoundReport cut_lower_impl(const DensityMatrix& rho, const std::optional<PureState>& pure,
                           std::span<const int> cut) {
    if (!pure) return caf_bipartite_lower(rho, cut);
    BoundReport r;
    r.method = Method::Caf;
    r.quantity = Quantity::C;
    r.parties = 2;
    r.value = pure_bipartite_concurrence(*pure, cut).value;
    r.witness_cut = normalize_index_set(cut, rho.dims().size());
    r.params["route"] = "exact";
    return r;
}

void require_parties(const DensityMatrix& rho, std::size_t min_parties, const char* what) {
    if (rho.dims().size() < min_parties) {
        throw DomainError(std::string(what) + ": requires at least " + std::to_string(min_parties) +
                          " subsystems, got " + std::to_string(rho.dims().size()));
    }
}

}  // namespace

Method theorem_method(std::size_t n, int m) {
    if (n == 4 && m == 3) return Method::Thm1;
    if (n == 5 && m == 3) return Method::Thm2;
    if (n == 5 && m == 4) return Method::Thm3;
    return Method::ThmGeneral;
}

std::string_view method_name(Method m) {
    for (const auto& e : kMethodNames) {
        if (e.method == m) return e.name;
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    for (const auto& e : kMethodNames) {
        if (e.name == name) return e.method;
    }
    return std::nullopt;
}

std::string_view quantity_name(Quantity q) { return q == Quantity::C ? "C" : "C-squared"; }

double BoundReport::concurrence() const {
    return quantity == Quantity::C ? value : std::sqrt(std::max(value, 0.0));
}

std::vector<std::vector<int>> bipartite_cuts(std::size_t n) {
    if (n < 2) throw DomainError("bipartite_cuts: need at least two subsystems");
    std::vector<std::vector<int>> out;
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t mask = 1; mask < full; mask += 2) {
        std::vector<int> cut;
        for (std::size_t k = 0; k < n; ++k) {
            if ((mask >> k) & 1U) cut.push_back(static_cast<int>(k));
        }
        out.push_back(std::move(cut));
    }
    return out;
}

BoundReport caf_bipartite_lower(const DensityMatrix& rho, std::span<const int> cut) {
    const std::size_t n = rho.dims().size();
    const auto a = normalize_index_set(cut, n);
    if (a.empty() || a.size() == n) {
        throw DomainError("caf_bipartite_lower: cut must be a nonempty proper subset");
    }
    auto order = a;
    for (int r : complement(a, n)) order.push_back(r);
    const int da = static_cast<int>(rho.dims().total_of(a));
    const int db = static_cast<int>(rho.dims().total()) / da;
    const SubsystemDims bip{da, db};
    const ComplexMatrix m = permute_subsystems(rho.matrix(), rho.dims(), order);

    const double ppt = trace_norm(partial_transpose(m, bip, Side::First));
    const double ccnr = trace_norm(realign(m, bip));
    const double best = std::max(ppt, ccnr);
    const double smaller = std::min(da, db);
    const double excess = best - 1.0 > kCriterionNoiseFloor ? best - 1.0 : 0.0;

    BoundReport r;
    r.method = Method::Caf;
    r.quantity = Quantity::C;
    r.parties = 2;
    r.value = std::sqrt(2.0 / (smaller * (smaller - 1.0))) * excess;
    r.witness_cut = a;
    r.params["route"] = "caf";
    r.params["criterion"] = ppt >= ccnr ? "ppt" : "realignment";
    r.params["ppt_norm"] = fmt(ppt);
    r.params["realignment_norm"] = fmt(ccnr);
    r.params["m"] = std::to_string(static_cast<int>(smaller));
    return r;
}

BoundReport cut_concurrence_lower(const DensityMatrix& rho, std::span<const int> cut) {
    return cut_lower_impl(rho, pure_part(rho), cut);
}

BoundReport wang_lower(const DensityMatrix& rho) {
    require_parties(rho, 3, "wang_lower");
    const std::size_t n = rho.dims().size();
    const auto pure = pure_part(rho);
    const double coef = std::exp2((3.0 - static_cast<double>(n)) / 2.0);

    BoundReport r;
    r.method = Method::Wang;
    r.quantity = Quantity::C;
    r.parties = static_cast<int>(n);
    r.params["route"] = pure ? "exact" : "caf";
    for (const auto& cut : bipartite_cuts(n)) {
        const double v = coef * cut_lower_impl(rho, pure, cut).value;
        if (r.witness_cut.empty() || v > r.value) {
            r.value = v;
            r.witness_cut = cut;
        }
    }
    r.params["witness"] = render_cut(r.witness_cut);
    return r;
}

double zhu_fei_coefficient(int n, int m) {
    if (n < 2 || m < 1 || m >= n) throw DomainError("zhu_fei_coefficient: need 1 <= M < N");
    const double nn = n;
    const double mm = m;
    return std::exp2((1.0 - nn) / 2.0) * std::sqrt(std::exp2(nn - mm) + std::exp2(mm) - 2.0);
}

BoundReport zhu_fei_lower(const DensityMatrix& rho) {
    require_parties(rho, 3, "zhu_fei_lower");
    const std::size_t n = rho.dims().size();
    const auto pure = pure_part(rho);

    BoundReport r;
    r.method = Method::ZhuFei;
    r.quantity = Quantity::C;
    r.parties = static_cast<int>(n);
    r.params["route"] = pure ? "exact" : "caf";
    // Each unordered cut is visited once; the coefficient is symmetric in
    // M <-> N - M, so both orientations give the same term.
    for (const auto& cut : bipartite_cuts(n)) {
        const double coef = zhu_fei_coefficient(static_cast<int>(n), static_cast<int>(cut.size()));
        const double v = coef * cut_lower_impl(rho, pure, cut).value;
        if (r.witness_cut.empty() || v > r.value) {
            r.value = v;
            r.witness_cut = cut;
        }
    }
    r.params["witness"] = render_cut(r.witness_cut);
    r.params["M"] = std::to_string(r.witness_cut.size());
    return r;
}

BoundReport tripartite_lower(const DensityMatrix& rho) {
    if (rho.dims().size() != 3) {
        throw DomainError("tripartite_lower: requires exactly 3 factors (coarse-grain first), got " +
                          std::to_string(rho.dims().size()));
    }
    const auto pure = pure_part(rho);
    BoundReport r;
    r.method = Method::Tripartite;
    r.quantity = Quantity::C;
    r.parties = 3;
    r.params["route"] = pure ? "exact" : "caf";
    for (int k = 0; k < 3; ++k) {
        const int cut[] = {k};
        const auto c = cut_lower_impl(rho, pure, cut);
        if (r.witness_cut.empty() || c.value > r.value) {
            r.value = c.value;
            r.witness_cut = c.witness_cut;
            if (auto it = c.params.find("criterion"); it != c.params.end()) {
                r.params["criterion"] = it->second;
            }
        }
    }
    return r;
}

BoundReport thm_general_lower_sq(const DensityMatrix& rho, int m) {
    const std::size_t n = rho.dims().size();
    if (m < 3 || static_cast<std::size_t>(m) >= n) {
        throw DomainError("thm_general_lower_sq: need 3 <= m < N, got m=" + std::to_string(m) +
                          ", N=" + std::to_string(n));
    }
    BoundReport r;
    r.method = theorem_method(n, m);
    r.quantity = Quantity::CSquared;
    r.parties = static_cast<int>(n);
    r.witness_partitions = enumerate_partitions(static_cast<int>(n), m);
    r.params["m"] = std::to_string(m);
    r.params["partitions"] = std::to_string(r.witness_partitions.size());

    if (const auto pure = pure_part(rho)) {
        r.value = avg_partition_concurrence_sq(*pure, m);
        r.params["route"] = "exact";
        return r;
    }

    std::string path = "m=" + std::to_string(m);
    double sum = 0.0;
    for (const auto& p : r.witness_partitions) {
        const DensityMatrix cg = coarse_grain(rho, p);
        if (m == 3) {
            const double c = tripartite_lower(cg).value;
            sum += c * c;
        } else {
            const auto inner = thm_general_lower_sq(cg, m - 1);
            sum += inner.value;
            path = "m=" + std::to_string(m) + ">" + inner.params.at("recursion").substr(2);
        }
    }
    r.value = sum / static_cast<double>(r.witness_partitions.size());
    r.params["route"] = "criterion";
    r.params["recursion"] = path;
    return r;
}

BoundReport thm1_lower_sq(const DensityMatrix& rho) {
    if (rho.dims().size() != 4) {
        throw DomainError("thm1_lower_sq: requires exactly 4 factors, got " +
                          std::to_string(rho.dims().size()));
    }
    return thm_general_lower_sq(rho, 3);
}

BoundReport bipartite_average_sq(const DensityMatrix& rho) {
    const std::size_t n = rho.dims().size();
    require_parties(rho, 3, "bipartite_average_sq");
    const auto pure = pure_part(rho);
    const auto cuts = bipartite_cuts(n);
    double sum = 0.0;
    for (const auto& cut : cuts) {
        const double coef = zhu_fei_coefficient(static_cast<int>(n), static_cast<int>(cut.size()));
        const double c = coef * cut_lower_impl(rho, pure, cut).value;
        sum += c * c;
    }
    BoundReport r;
    r.method = Method::ThmGeneral;
    r.quantity = Quantity::CSquared;
    r.parties = static_cast<int>(n);
    r.value = sum / static_cast<double>(cuts.size());
    r.params["m"] = "2";
    r.params["route"] = pure ? "exact" : "caf";
    r.params["m2_term"] = "mean over bipartitions of (zhu-fei coefficient * cut bound)^2";
    return r;
}

BoundReport thm4_combined(const DensityMatrix& rho, std::span<const double> weights) {
    const std::size_t n = rho.dims().size();
    require_parties(rho, 3, "thm4_combined");
    if (weights.size() != n - 2) {
        throw DomainError("thm4_combined: expected " + std::to_string(n - 2) + " weights, got " +
                          std::to_string(weights.size()));
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw DomainError("thm4_combined: weights must be nonnegative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw DomainError("thm4_combined: weights must sum to 1 (to 1e-10), got " + fmt(total));
    }

    BoundReport r;
    r.method = Method::Thm4;
    r.quantity = Quantity::CSquared;
    r.parties = static_cast<int>(n);
    r.params["max_interpretation"] = "identity";
    std::string weights_text;
    std::string components_text;
    for (std::size_t i = 1; i <= n - 2; ++i) {
        const int m = static_cast<int>(n - i);
        const BoundReport part = m >= 3 ? thm_general_lower_sq(rho, m) : bipartite_average_sq(rho);
        r.value += weights[i - 1] * part.value;
        if (i > 1) {
            weights_text.push_back(',');
            components_text.push_back(',');
        }
        weights_text += fmt(weights[i - 1]);
        components_text += fmt(part.value);
        if (m == 2) r.params["m2_term"] = part.params.at("m2_term");
    }
    r.params["weights"] = weights_text;
    r.params["components"] = components_text;
    return r;
}

ReferenceCurves reference_curves(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("reference_curves: t must lie in [0, 1], got " + fmt(t));
    }
    ReferenceCurves c;
    const double t2 = t * t;
    if (t <= 1.0 / 9.0) return c;
    if (t <= 1.0 / 5.0) {
        c.a = (81.0 * t2 - 18.0 * t + 1.0) / 192.0;
        c.combined = (81.0 * t2 - 18.0 * t + 1.0) / 576.0;
        return c;
    }
    c.a = (181.0 * t2 - 58.0 * t + 5.0) / 192.0;
    c.b = (175.0 * t2 - 70.0 * t + 7.0) / 192.0;
    c.combined = (531.0 * t2 - 198.0 * t + 19.0) / 576.0;
    return c;
}

}  // namespace concbound
