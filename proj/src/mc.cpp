#include "msurg/mc.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace msurg {

namespace {

uint64_t splitmix64(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

bool syndrome_trivial(const CssCode& code, const BitVector& ex, const BitVector& ez) {
    for (const auto& c : code.x_checks)
        if (c.x.dot(ez)) return false;
    for (const auto& c : code.z_checks)
        if (c.z.dot(ex)) return false;
    return true;
}

bool logical_nontrivial(const CssCode& code, const BitVector& ex, const BitVector& ez) {
    for (const auto& l : code.logical_x)
        if (l.x.dot(ez)) return true;
    for (const auto& l : code.logical_z)
        if (l.z.dot(ex)) return true;
    return false;
}

void wilson95(uint64_t k, uint64_t n, double& lo, double& hi) {
    if (n == 0) {
        lo = hi = 0;
        return;
    }
    const double z = 1.959963984540054;
    double phat = double(k) / double(n), z2 = z * z, nn = double(n);
    double denom = 1 + z2 / nn;
    double center = (phat + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / denom;
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

}  // namespace

McResult run_mc(const CssCode& code, const NoiseModel& model, uint64_t trials,
                uint64_t first_trial) {
    if (code.logical_x.empty() && code.logical_z.empty())
        throw std::invalid_argument("run_mc: code has no logical representatives");
    const bool depol = model.kind == "depolarizing";
    if (!depol && model.kind != "independent-xz")
        throw std::invalid_argument("run_mc: unknown noise kind " + model.kind);
    const uint64_t thresh = uint64_t(model.p * 18446744073709551615.0);

    McResult res;
    res.p = model.p;
    res.seed = model.seed;
    res.trials = trials;
    BitVector ex(code.n), ez(code.n);
    for (uint64_t t = 0; t < trials; ++t) {
        // Stream keyed by (seed, absolute trial index): shard-independent.
        uint64_t s = model.seed * 0x9e3779b97f4a7c15ull + (first_trial + t) * 0xda942042e4dd58b5ull + 1;
        bool any = false;
        for (std::size_t q = 0; q < code.n; ++q) {
            if (splitmix64(s) >= thresh) continue;
            if (!any) {
                ex = BitVector(code.n);
                ez = BitVector(code.n);
                any = true;
            }
            if (depol) {
                switch (splitmix64(s) % 3) {
                    case 0: ex.set(q, true); break;
                    case 1: ez.set(q, true); break;
                    default:
                        ex.set(q, true);
                        ez.set(q, true);
                }
            } else {
                uint64_t r = splitmix64(s);
                if (r & 1) ex.set(q, true);
                if (r & 2) ez.set(q, true);
                if (!(r & 3)) ex.set(q, true);
            }
        }
        if (!any) {
            ++res.accepted;
            continue;
        }
        if (!syndrome_trivial(code, ex, ez)) continue;
        ++res.accepted;
        if (logical_nontrivial(code, ex, ez)) ++res.logical_failures;
    }
    res.acceptance_rate = trials ? double(res.accepted) / double(trials) : 0;
    res.post_selected_logical_rate =
        res.accepted ? double(res.logical_failures) / double(res.accepted) : 0;
    wilson95(res.logical_failures, res.accepted, res.ci_low, res.ci_high);
    return res;
}

McResult merge_results(const std::vector<McResult>& shards) {
    if (shards.empty()) throw std::invalid_argument("merge_results: empty");
    McResult res = shards[0];
    for (std::size_t i = 1; i < shards.size(); ++i) {
        res.trials += shards[i].trials;
        res.accepted += shards[i].accepted;
        res.logical_failures += shards[i].logical_failures;
    }
    res.acceptance_rate = res.trials ? double(res.accepted) / double(res.trials) : 0;
    res.post_selected_logical_rate =
        res.accepted ? double(res.logical_failures) / double(res.accepted) : 0;
    wilson95(res.logical_failures, res.accepted, res.ci_low, res.ci_high);
    return res;
}

uint64_t undetected_logical_count(const CssCode& code, std::size_t w) {
    uint64_t bad = 0;
    std::vector<std::size_t> qubits;
    BitVector ex(code.n), ez(code.n);
    // Exact-size supports with every non-identity Pauli on each qubit.
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i == qubits.size()) {
            if (syndrome_trivial(code, ex, ez) && logical_nontrivial(code, ex, ez)) ++bad;
            return;
        }
        std::size_t q = qubits[i];
        for (int pauli = 0; pauli < 3; ++pauli) {
            ex.set(q, pauli != 1);
            ez.set(q, pauli != 0);
            assign(i + 1);
        }
        ex.set(q, false);
        ez.set(q, false);
    };
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start,
                                                               std::size_t left) {
        if (left == 0) {
            assign(0);
            return;
        }
        for (std::size_t q = start; q + left <= code.n; ++q) {
            qubits.push_back(q);
            choose(q + 1, left - 1);
            qubits.pop_back();
        }
    };
    for (std::size_t size = 1; size <= w; ++size) choose(0, size);
    return bad;
}

SlopeFit slope_fit(const std::vector<McResult>& results) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : results)
        if (r.logical_failures > 0)
            pts.push_back({std::log(r.p), std::log(r.post_selected_logical_rate)});
    if (pts.size() < 2) throw std::invalid_argument("slope_fit: need >= 2 nonzero points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = double(pts.size());
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double intercept = (sy - slope * sx) / n;
    double sse = 0;
    for (auto [x, y] : pts) {
        double e = y - (slope * x + intercept);
        sse += e * e;
    }
    double se = pts.size() > 2
                    ? std::sqrt(sse / (n - 2) / (sxx - sx * sx / n))
                    : 0.0;
    return {slope, se};
}

std::string mc_csv(const std::vector<McResult>& results) {
    std::ostringstream out;
    out << "p,seed,trials,accepted,failures,acceptance_rate,post_selected_rate,ci_low,ci_high\n";
    for (const auto& r : results)
        out << r.p << "," << r.seed << "," << r.trials << "," << r.accepted << ","
            << r.logical_failures << "," << r.acceptance_rate << ","
            << r.post_selected_logical_rate << "," << r.ci_low << "," << r.ci_high << "\n";
    return out.str();
}

}  // namespace msurg
