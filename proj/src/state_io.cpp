#include "concbound/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "concbound/errors.hpp"

namespace concbound {
namespace {

std::vector<std::string> tokens(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

template <typename T>
T parse_number(const std::string& tok, std::size_t lineno) {
    std::istringstream in(tok);
    T value{};
    in >> value;
    if (in.fail() || !in.eof()) {
        throw ParseError("line " + std::to_string(lineno) + ": cannot parse number '" + tok + "'");
    }
    return value;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

AnyState parse_state(std::string_view text) {
    std::vector<int> dims;
    std::string kind;
    bool have_dims = false;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> entries;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tok = tokens(line);
        if (tok.empty()) continue;

        if (!have_dims) {
            if (tok[0] != "dims" || tok.size() < 2) {
                throw ParseError("line " + std::to_string(lineno) + ": expected 'dims d1 ... dN'");
            }
            for (std::size_t k = 1; k < tok.size(); ++k) dims.push_back(parse_number<int>(tok[k], lineno));
            have_dims = true;
        } else if (kind.empty()) {
            if (tok.size() != 2 || tok[0] != "kind" || (tok[1] != "pure" && tok[1] != "mixed")) {
                throw ParseError("line " + std::to_string(lineno) + ": expected 'kind pure|mixed'");
            }
            kind = tok[1];
        } else {
            entries.emplace_back(lineno, std::move(tok));
        }
    }
    if (!have_dims) throw ParseError("missing 'dims' line");
    if (kind.empty()) throw ParseError("missing 'kind' line");

    SubsystemDims sd = [&] {
        try {
            return SubsystemDims(dims);
        } catch (const ValidationError& e) {
            throw ParseError(std::string("invalid dims: ") + e.what());
        }
    }();
    const auto d = static_cast<long long>(sd.total());

    try {
        if (kind == "pure") {
            ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(d));
            std::set<long long> seen;
            for (const auto& [ln, tok] : entries) {
                if (tok.size() != 3) throw ParseError("line " + std::to_string(ln) + ": expected 'i re im'");
                const auto i = parse_number<long long>(tok[0], ln);
                if (i < 0 || i >= d) throw ParseError("line " + std::to_string(ln) + ": index out of range");
                if (!seen.insert(i).second) throw ParseError("line " + std::to_string(ln) + ": duplicate index");
                amps(static_cast<Eigen::Index>(i)) =
                    Complex(parse_number<double>(tok[1], ln), parse_number<double>(tok[2], ln));
            }
            return PureState(std::move(sd), std::move(amps));
        }

        ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        std::set<std::pair<long long, long long>> seen;
        for (const auto& [ln, tok] : entries) {
            if (tok.size() != 4) throw ParseError("line " + std::to_string(ln) + ": expected 'i j re im'");
            const auto i = parse_number<long long>(tok[0], ln);
            const auto j = parse_number<long long>(tok[1], ln);
            if (i < 0 || j < 0 || i >= d || j >= d) {
                throw ParseError("line " + std::to_string(ln) + ": index out of range");
            }
            if (i > j) throw ParseError("line " + std::to_string(ln) + ": entry below the diagonal");
            if (!seen.insert({i, j}).second) throw ParseError("line " + std::to_string(ln) + ": duplicate entry");
            const Complex v(parse_number<double>(tok[2], ln), parse_number<double>(tok[3], ln));
            const auto ii = static_cast<Eigen::Index>(i);
            const auto jj = static_cast<Eigen::Index>(j);
            if (i == j) {
                if (std::abs(v.imag()) > kHermitianTolerance) {
                    throw ParseError("line " + std::to_string(ln) +
                                     ": Hermiticity violated (diagonal entry has imaginary part)");
                }
                m(ii, ii) = v.real();
            } else {
                m(ii, jj) = v;
                m(jj, ii) = std::conj(v);
            }
        }
        return DensityMatrix(std::move(sd), std::move(m));
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError& e) {
        throw ParseError(std::string("state violates invariant: ") + e.what());
    }
}

AnyState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open state file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state(buf.str());
}

namespace {

void write_dims(std::ostream& out, const SubsystemDims& dims) {
    out << "dims";
    for (int d : dims.dims()) out << ' ' << d;
    out << '\n';
}

}  // namespace

void write_state(std::ostream& out, const PureState& psi) {
    write_dims(out, psi.dims());
    out << "kind pure\n";
    const auto& a = psi.amplitudes();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) == Complex(0.0, 0.0)) continue;
        out << i << ' ' << format_double(a(i).real()) << ' ' << format_double(a(i).imag()) << '\n';
    }
}

void write_state(std::ostream& out, const DensityMatrix& rho) {
    write_dims(out, rho.dims());
    out << "kind mixed\n";
    const auto& m = rho.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i; j < m.cols(); ++j) {
            if (m(i, j) == Complex(0.0, 0.0)) continue;
            out << i << ' ' << j << ' ' << format_double(m(i, j).real()) << ' '
                << format_double(i == j ? 0.0 : m(i, j).imag()) << '\n';
        }
    }
}

DensityMatrix as_density(const AnyState& state) {
    if (const auto* psi = std::get_if<PureState>(&state)) return DensityMatrix::from_pure(*psi);
    return std::get<DensityMatrix>(state);
}

}  // namespace concbound
