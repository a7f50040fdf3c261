#include "concbound/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include <boost/random/uniform_int_distribution.hpp>

#include "concbound/concurrence.hpp"
#include "concbound/errors.hpp"
#include "concbound/parallel.hpp"
#include "concbound/partitions.hpp"

namespace concbound {

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == nullptr || *end != '\0') {
            throw DomainError(std::string(kSeedEnvVar) + " is not an unsigned integer: '" + env + "'");
        }
        return v;
    }
    return kDefaultSeed;
}

AnyState resolve_state(const StateRequest& req) {
    const std::string& s = req.source;
    if (s == "double-bell") return make_double_bell();
    if (s.size() > 3 && s.rfind("ghz", 0) == 0 &&
        std::all_of(s.begin() + 3, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return make_generalized_ghz(std::stoi(s.substr(3)), req.theta);
    }
    if (s == "isotropic") {
        if (req.of == "isotropic") throw DomainError("isotropic: --of must name a pure builtin");
        StateRequest inner = req;
        inner.source = req.of;
        const AnyState base = resolve_state(inner);
        const auto* psi = std::get_if<PureState>(&base);
        if (psi == nullptr) throw DomainError("isotropic: --of must name a pure state");
        return make_isotropic_mixture(*psi, req.t);
    }
    return read_state_file(s);
}

std::string format_csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string join_row(const std::vector<double>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line.push_back(',');
        line += format_csv_number(values[i]);
    }
    line.push_back('\n');
    return line;
}

void require_points(int points) {
    if (points < 2) throw DomainError("grid resolution must be >= 2, got " + std::to_string(points));
}

}  // namespace

std::string ghz_sweep_csv(int n, const SweepOptions& opt) {
    if (n < 3) throw DomainError("ghz-sweep: n must be >= 3, got " + std::to_string(n));
    require_points(opt.points);

    std::string header = "theta,exact";
    std::vector<int> ms;
    if (n == 3) {
        header += ",thm4";
    } else {
        for (int m = 3; m < n; ++m) {
            ms.push_back(m);
            const Method tag = theorem_method(static_cast<std::size_t>(n), m);
            header += ",";
            header += tag == Method::ThmGeneral ? "thm-general-m" + std::to_string(m)
                                                : std::string(method_name(tag));
        }
    }
    header += ",zhu-fei,wang\n";

    const auto count = static_cast<std::size_t>(opt.points);
    std::vector<std::string> rows(count);
    parallel_for(count, opt.threads, [&](std::size_t k) {
        const double theta = (std::numbers::pi / 2.0) * static_cast<double>(k) /
                             static_cast<double>(count - 1);
        const PureState psi = make_generalized_ghz(n, theta);
        const DensityMatrix rho = DensityMatrix::from_pure(psi);
        std::vector<double> row{theta, pure_concurrence_full(psi).value};
        if (n == 3) {
            const double w[] = {1.0};
            row.push_back(thm4_combined(rho, w).concurrence());
        } else {
            for (int m : ms) row.push_back(thm_general_lower_sq(rho, m).concurrence());
        }
        row.push_back(zhu_fei_lower(rho).value);
        row.push_back(wang_lower(rho).value);
        rows[k] = join_row(row);
    });

    std::string out = header;
    for (const auto& r : rows) out += r;
    return out;
}

ExampleSweep example_sweep(const ExampleSweepOptions& opt) {
    require_points(opt.points);
    const auto count = static_cast<std::size_t>(opt.points);
    const PureState phi = make_double_bell();

    struct Row {
        double t, computed, reference, wang, zhu, roof;
    };
    std::vector<Row> rows(count);
    RoofOptions roof = opt.roof;
    roof.threads = 1;
    parallel_for(count, opt.threads, [&](std::size_t k) {
        const double t = static_cast<double>(k) / static_cast<double>(count - 1);
        const DensityMatrix rho = make_isotropic_mixture(phi, t);
        Row& r = rows[k];
        r.t = t;
        r.computed = thm1_lower_sq(rho).value;
        r.reference = reference_curves(t).combined;
        r.wang = wang_lower(rho).value;
        r.zhu = zhu_fei_lower(rho).value;
        if (opt.with_roof) {
            const double c = convex_roof_upper(rho, roof).value;
            r.roof = c * c;
        }
    });

    ExampleSweep out;
    out.csv = "t,thm1,reference,thm1-minus-reference,wang,zhu-fei";
    if (opt.with_roof) out.csv += ",roof";
    out.csv += '\n';
    for (const Row& r : rows) {
        std::vector<double> v{r.t, r.computed, r.reference, r.computed - r.reference, r.wang, r.zhu};
        if (opt.with_roof) v.push_back(r.roof);
        out.csv += join_row(v);
        out.max_discrepancy = std::max(out.max_discrepancy, std::abs(r.computed - r.reference));
        if (!out.onset && r.computed > 0.0) out.onset = r.t;
        out.t.push_back(r.t);
        out.computed.push_back(r.computed);
        out.reference.push_back(r.reference);
    }
    return out;
}

std::string partitions_text(int n, int m) {
    std::string out;
    for (const auto& p : enumerate_partitions(n, m)) {
        out += p.render();
        out.push_back('\n');
    }
    return out;
}

BoundReport compute_bound(const DensityMatrix& rho, Method method,
                          const std::vector<double>& weights) {
    const std::size_t n = rho.dims().size();
    switch (method) {
        case Method::Caf:
            if (n != 2) throw DomainError("caf: requires a two-factor state (bipartite cut)");
            return caf_bipartite_lower(rho, std::vector<int>{0});
        case Method::Wang:
            return wang_lower(rho);
        case Method::ZhuFei:
            return zhu_fei_lower(rho);
        case Method::Tripartite:
            return tripartite_lower(rho);
        case Method::Thm1:
            return thm1_lower_sq(rho);
        case Method::Thm2:
            if (n != 5) throw DomainError("thm2: requires a 5-party state, got " + std::to_string(n));
            return thm_general_lower_sq(rho, 3);
        case Method::Thm3:
            if (n != 5) throw DomainError("thm3: requires a 5-party state, got " + std::to_string(n));
            return thm_general_lower_sq(rho, 4);
        case Method::Thm4: {
            if (n < 3) throw DomainError("thm4: requires at least 3 parties");
            std::vector<double> w = weights;
            if (w.empty()) w.assign(n - 2, 1.0 / static_cast<double>(n - 2));
            return thm4_combined(rho, w);
        }
        case Method::ThmGeneral:
            if (n < 4) throw DomainError("thm-general: requires at least 4 parties");
            return thm_general_lower_sq(rho, static_cast<int>(n) - 1);
        case Method::ReferenceCurve:
            break;
    }
    throw DomainError("bound: method '" + std::string(method_name(method)) +
                      "' is not available here (see example-sweep)");
}

std::string format_report(const BoundReport& r) {
    std::ostringstream out;
    out << '[' << method_name(r.method) << "]\n";
    out << "quantity = " << quantity_name(r.quantity) << '\n';
    out << "value = " << format_csv_number(r.value) << '\n';
    out << "concurrence = " << format_csv_number(r.concurrence()) << '\n';
    out << "normalization = " << r.parties << "-party pure-state concurrence\n";
    if (!r.witness_cut.empty()) {
        out << "witness_cut = ";
        for (std::size_t i = 0; i < r.witness_cut.size(); ++i) {
            out << (i ? "," : "") << r.witness_cut[i] + 1;
        }
        out << '\n';
    }
    if (!r.witness_partitions.empty()) {
        out << "witness_partitions =";
        for (const auto& p : r.witness_partitions) out << ' ' << p.render();
        out << '\n';
    }
    for (const auto& [k, v] : r.params) out << "param." << k << " = " << v << '\n';
    return out.str();
}

std::string roof_text(const RoofEstimate& e) {
    std::ostringstream out;
    out << "[roof]\n";
    out << "upper_bound = " << format_csv_number(e.value) << '\n';
    out << "parties = " << e.parties << '\n';
    out << "rank = " << e.rank << '\n';
    out << "ensemble_size = " << e.ensemble_size << '\n';
    out << "iterations = " << e.iterations << '\n';
    out << "restarts = " << e.restarts << '\n';
    out << "seed = " << e.seed << '\n';
    out << "generator = " << kRngId << '\n';
    out << "best_restart = " << e.best_restart << '\n';
    out << "converged = " << (e.converged ? "true" : "false") << '\n';
    return out.str();
}

double halved_concurrence_sq_n4(const PureState& psi) {
    if (psi.dims().size() != 4) throw DomainError("halved_concurrence_sq_n4: requires 4 parties");
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        const int keep[] = {i};
        s += 1.0 - reduced_purity(psi, keep);
    }
    for (int i = 1; i < 4; ++i) {
        const int keep[] = {0, i};
        s += 1.0 - reduced_purity(psi, keep);
    }
    return 0.5 * s;
}

double halved_concurrence_sq_n5(const PureState& psi) {
    if (psi.dims().size() != 5) throw DomainError("halved_concurrence_sq_n5: requires 5 parties");
    double s = 0.0;
    for (int i = 0; i < 5; ++i) {
        const int keep[] = {i};
        s += 1.0 - reduced_purity(psi, keep);
    }
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            const int keep[] = {i, j};
            s += 1.0 - reduced_purity(psi, keep);
        }
    }
    return 0.25 * s;
}

namespace {

// Runs `violation(i)` for every sample and records the largest value.
template <typename F>
AuditProperty check_property(std::string name, int samples, double tolerance, unsigned threads,
                             F&& violation) {
    std::vector<double> v(static_cast<std::size_t>(samples), 0.0);
    parallel_for(v.size(), threads, [&](std::size_t i) { v[i] = violation(i); });
    AuditProperty p;
    p.name = std::move(name);
    p.samples = samples;
    p.tolerance = tolerance;
    p.max_violation = v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
    p.pass = p.max_violation <= tolerance;
    return p;
}

ComplexMatrix local_unitary(Rng& rng, const SubsystemDims& dims) {
    ComplexMatrix u = random_unitary(rng, dims[0]);
    for (std::size_t k = 1; k < dims.size(); ++k) u = kron(u, random_unitary(rng, dims[k]));
    return u;
}

}  // namespace

std::string AuditReport::summary() const {
    std::ostringstream out;
    for (const auto& p : properties) {
        char line[256];
        std::snprintf(line, sizeof line, "%-4s %-34s samples=%-5d max_violation=%.3e tolerance=%.0e\n",
                      p.pass ? "PASS" : "FAIL", p.name.c_str(), p.samples, p.max_violation,
                      p.tolerance);
        out << line;
    }
    out << (pass ? "audit passed\n" : "audit FAILED\n");
    return out.str();
}

AuditReport run_audit(const AuditOptions& opt) {
    if (opt.trials < 1) throw DomainError("audit: trials must be >= 1");
    const int n4 = opt.trials;
    const int n5 = std::max(1, opt.trials / 2);
    const int nsub = std::max(1, opt.trials / 2);
    const int nsmall = std::max(1, opt.trials / 10);
    const double scale = opt.corrupt_normalization ? 0.5 : 1.0;

    // All samples are drawn up front from one generator so results do not
    // depend on the number of threads.
    Rng rng(opt.seed);
    const auto q4 = SubsystemDims::qubits(4);
    const auto q5 = SubsystemDims::qubits(5);
    std::vector<PureState> four;
    std::vector<PureState> five;
    for (int i = 0; i < n4; ++i) four.push_back(random_pure(q4, rng));
    for (int i = 0; i < n5; ++i) five.push_back(random_pure(q5, rng));
    std::vector<DensityMatrix> bip23;
    std::vector<DensityMatrix> bip33;
    const SubsystemDims d23{2, 3};
    const SubsystemDims d33{3, 3};
    for (int i = 0; i < nsub; ++i) {
        boost::random::uniform_int_distribution<std::size_t> r23(1, 6);
        bip23.push_back(random_density(d23, r23(rng), rng));
    }
    for (int i = 0; i < nsub; ++i) {
        boost::random::uniform_int_distribution<std::size_t> r33(1, 9);
        bip33.push_back(random_density(d33, r33(rng), rng));
    }
    std::vector<PureState> rotated;
    for (int i = 0; i < nsmall; ++i) {
        const ComplexMatrix u = local_unitary(rng, q4);
        rotated.push_back(PureState::from_unnormalized(q4, u * four[static_cast<std::size_t>(i)].amplitudes()));
    }
    std::vector<DensityMatrix> products;
    const SubsystemDims q1{2};
    for (int i = 0; i < nsmall; ++i) {
        ComplexMatrix m = random_density(q1, 2, rng).matrix();
        for (int k = 1; k < 4; ++k) m = kron(m, random_density(q1, 2, rng).matrix());
        products.emplace_back(q4, m);
    }

    const auto full_sq = [&](const PureState& psi) {
        return scale * pure_concurrence_full(psi).squared;
    };

    AuditReport rep;
    const unsigned th = opt.threads;
    rep.properties.push_back(check_property("thm1 pure N=4 (C4^2 >= avg C3^2)", n4, 1e-10, th, [&](std::size_t i) {
        const auto& psi = four[i];
        return thm_general_lower_sq(DensityMatrix::from_pure(psi), 3).value - full_sq(psi);
    }));
    rep.properties.push_back(check_property("four-party halved identity", n4, 1e-10, th, [&](std::size_t i) {
        return std::abs(full_sq(four[i]) - halved_concurrence_sq_n4(four[i]));
    }));
    rep.properties.push_back(check_property("thm2 pure N=5 (C5^2 >= avg C3^2)", n5, 1e-10, th, [&](std::size_t i) {
        return thm_general_lower_sq(DensityMatrix::from_pure(five[i]), 3).value - full_sq(five[i]);
    }));
    rep.properties.push_back(check_property("thm3 pure N=5 (C5^2 >= avg C4^2)", n5, 1e-10, th, [&](std::size_t i) {
        return thm_general_lower_sq(DensityMatrix::from_pure(five[i]), 4).value - full_sq(five[i]);
    }));
    rep.properties.push_back(check_property("five-party halved identity", n5, 1e-10, th, [&](std::size_t i) {
        return std::abs(full_sq(five[i]) - halved_concurrence_sq_n5(five[i]));
    }));
    const auto subadditivity = [](const DensityMatrix& rho) {
        const int a[] = {0};
        const int b[] = {1};
        const double lhs = 1.0 - rho.purity();
        const double rhs = (1.0 - purity(partial_trace(rho.matrix(), rho.dims(), a))) +
                           (1.0 - purity(partial_trace(rho.matrix(), rho.dims(), b)));
        return lhs - rhs;
    };
    rep.properties.push_back(check_property("linear-entropy subadditivity (2,3)", nsub, 1e-10, th,
                                            [&](std::size_t i) { return subadditivity(bip23[i]); }));
    rep.properties.push_back(check_property("linear-entropy subadditivity (3,3)", nsub, 1e-10, th,
                                            [&](std::size_t i) { return subadditivity(bip33[i]); }));
    rep.properties.push_back(check_property("local-unitary invariance N=4", nsmall, 1e-9, th, [&](std::size_t i) {
        return std::abs(pure_concurrence_full(four[i]).value - pure_concurrence_full(rotated[i]).value);
    }));
    rep.properties.push_back(check_property("bounds vanish on product states", nsmall, 1e-9, th, [&](std::size_t i) {
        const auto& rho = products[i];
        return std::max({thm1_lower_sq(rho).value, wang_lower(rho).value, zhu_fei_lower(rho).value});
    }));

    rep.pass = std::all_of(rep.properties.begin(), rep.properties.end(),
                           [](const AuditProperty& p) { return p.pass; });
    return rep;
}

}  // namespace concbound
