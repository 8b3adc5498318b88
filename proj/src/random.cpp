#include "sep/random.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "sep/errors.hpp"
#include "sep/gamma.hpp"

namespace sep {

namespace {

long long parse_ll(const std::string& s) {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("config: bad integer '" + s + "'");
    return v;
}

// "0.5", "1.5" or "3/2" -> exact rational.
void parse_beta(const std::string& s, long long& num, long long& den) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = parse_ll(s.substr(0, slash));
        den = parse_ll(s.substr(slash + 1));
    } else {
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            num = parse_ll(s);
            den = 1;
        } else {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            num = parse_ll(digits);
            den = 1;
            for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        }
    }
    if (den <= 0 || num <= 0) throw std::invalid_argument("config: beta must be positive");
    long long g = std::gcd(num, den);
    num /= g;
    den /= g;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(static_cast<int>(parse_ll(item)));
    }
    return out;
}

} // namespace

ExperimentConfig parse_experiment_config(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    ExperimentConfig cfg;
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        auto j = nlohmann::json::parse(text);
        if (j.contains("beta")) {
            if (j["beta"].is_string())
                parse_beta(j["beta"].get<std::string>(), cfg.beta_num, cfg.beta_den);
            else
                parse_beta(nlohmann::json(j["beta"]).dump(), cfg.beta_num, cfg.beta_den);
        }
        if (j.contains("n")) cfg.n_values = j["n"].get<std::vector<int>>();
        if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
        if (j.contains("k")) cfg.k = j["k"].get<int>();
        if (j.contains("seed")) cfg.base_seed = j["seed"].get<std::uint64_t>();
        if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    } else {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string s) {
                size_t a = s.find_first_not_of(" \t\r");
                size_t b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (key == "beta")
                parse_beta(value, cfg.beta_num, cfg.beta_den);
            else if (key == "n")
                cfg.n_values = parse_int_list(value);
            else if (key == "trials")
                cfg.trials = static_cast<int>(parse_ll(value));
            else if (key == "k")
                cfg.k = static_cast<int>(parse_ll(value));
            else if (key == "seed")
                cfg.base_seed = static_cast<std::uint64_t>(parse_ll(value));
            else if (key == "threads")
                cfg.threads = static_cast<int>(parse_ll(value));
            else if (!key.empty())
                throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

double er_probability(int n, double beta) { return std::pow(static_cast<double>(n), -beta); }

std::uint64_t trial_seed(std::uint64_t base, int n, int trial) {
    std::uint64_t x = mix64(base ^ 0x5eedc0ffee1234ULL);
    x = mix64(x ^ static_cast<std::uint64_t>(n));
    x = mix64(x ^ static_cast<std::uint64_t>(trial));
    return x;
}

Graph sample_er(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_er: p outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // 53-bit uniform double in [0,1); avoids the
            // implementation-defined std::uniform_real_distribution.
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) es.push_back({i, j});
        }
    }
    return Graph(n, es);
}

BigRat expected_edges(int n, const BigRat& p) { return BigRat(binomial(n, 2)) * p; }

BigRat expected_cycles(int n, const BigRat& p, int ell) {
    if (ell < 3) throw std::invalid_argument("expected_cycles: ell >= 3 required");
    BigInt arrangements = 1;
    for (int i = 2; i < ell; ++i) arrangements *= i; // (ell-1)!
    BigRat pl = 1;
    for (int i = 0; i < ell; ++i) pl *= p;
    return BigRat(binomial(n, ell) * arrangements, 2) * pl;
}

double expected_cycles_er(int n, double beta, int ell) {
    if (ell < 3) throw std::invalid_argument("expected_cycles_er: ell >= 3 required");
    double exact_exp = beta * ell;
    long long rounded = std::llround(exact_exp);
    if (std::abs(exact_exp - static_cast<double>(rounded)) < 1e-12) {
        // p^ell = n^{-beta*ell} is rational here; stay exact, then convert.
        BigRat pl(1, 1);
        BigInt npow = 1;
        for (long long i = 0; i < rounded; ++i) npow *= n;
        pl = BigRat(1, npow);
        BigInt arrangements = 1;
        for (int i = 2; i < ell; ++i) arrangements *= i;
        BigRat v = BigRat(binomial(n, ell) * arrangements, 2) * pl;
        return static_cast<double>(v);
    }
    double count = static_cast<double>(binomial(n, ell));
    for (int i = 2; i < ell; ++i) count *= i;
    return count / 2.0 * std::pow(static_cast<double>(n), -exact_exp);
}

namespace {

SampleRecord make_record(const ExperimentConfig& cfg, int n, int trial) {
    auto t0 = std::chrono::steady_clock::now();
    SampleRecord rec;
    rec.n = n;
    rec.trial = trial;
    rec.seed = trial_seed(cfg.base_seed, n, trial);
    double p = er_probability(n, cfg.beta());
    Graph g = sample_er(n, p, rec.seed);
    rec.edges = g.edge_count();
    rec.connected = is_connected(g);

    int k = cfg.k;
    if (k >= 2) {
        auto counts = count_cycles_by_length(g, 2 * k, CycleLimits{cfg.limits.max_cycles});
        for (int len = 3; len <= 2 * k; ++len) {
            auto it = counts.find(len);
            rec.cycle_counts.push_back(it == counts.end() ? 0 : it->second);
        }
    }

    rec.gamma = gamma_prefix_padded(g, k, cfg.limits);

    // f_{l-1} and n_{l-1} for l = 1..k over the whole sample; these satisfy
    // f + n = 2^l C(m,l) whether or not the sample is connected.
    EdgeOrder order = EdgeOrder::list_order(g.edge_count());
    for (int ell = 1; ell <= k; ++ell) {
        BigInt nf;
        if (ell == 1)
            nf = 0;
        else if (ell == 2)
            nf = bad_pair_count(g, order, CycleLimits{cfg.limits.max_cycles});
        else
            nf = count_nonfaces(g, order, ell, cfg.limits);
        rec.nonfaces.push_back(nf);
        rec.faces.push_back(pow2(ell) * binomial(rec.edges, ell) - nf);
    }

    auto t1 = std::chrono::steady_clock::now();
    rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rec;
}

} // namespace

std::vector<SampleRecord> run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1 || cfg.k < 1) throw std::invalid_argument("run_experiment: trials >= 1, k >= 1");
    for (int n : cfg.n_values) {
        if (n < 3) throw std::invalid_argument("run_experiment: n >= 3 required");
        // Pre-estimate the short-cycle work before touching any sample.
        for (int ell = 3; ell <= 2 * cfg.k; ++ell) {
            double expect = expected_cycles_er(n, cfg.beta(), ell);
            if (expect > static_cast<double>(cfg.limits.max_cycles) / 4.0)
                throw CapExceeded("run_experiment: expected cycle count at n=" + std::to_string(n) +
                                  ", ell=" + std::to_string(ell) + " exceeds the cap");
        }
        if (cfg.k >= 3) {
            double em = static_cast<double>(n) * (n - 1) / 2.0 * er_probability(n, cfg.beta());
            double work = 1.0;
            for (int j = 0; j < cfg.k; ++j) work *= 2.0 * std::max(1.0, (em - j)) / (j + 1);
            if (work > static_cast<double>(cfg.limits.max_faces))
                throw CapExceeded("run_experiment: face-scan estimate at n=" + std::to_string(n) +
                                  ", ell=" + std::to_string(cfg.k) + " exceeds the cap");
        }
    }

    std::vector<std::pair<int, int>> cells; // (n, trial)
    for (int n : cfg.n_values)
        for (int t = 0; t < cfg.trials; ++t) cells.push_back({n, t});
    std::vector<SampleRecord> records(cells.size());

    int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        for (size_t i = 0; i < cells.size(); ++i)
            records[i] = make_record(cfg, cells[i].first, cells[i].second);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                records[i] = make_record(cfg, cells[i].first, cells[i].second);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

void write_csv(const std::vector<SampleRecord>& records, int k, std::ostream& out, bool with_timing) {
    out << "n,trial,seed,edges,connected";
    for (int len = 3; len <= 2 * k; ++len) out << ",x" << len;
    for (int i = 0; i < k; ++i) out << ",nf" << i;
    for (int i = 0; i < k; ++i) out << ",f" << i;
    for (int i = 0; i <= k; ++i) out << ",g" << i;
    out << ",millis\n";
    for (const auto& r : records) {
        out << r.n << ',' << r.trial << ',' << r.seed << ',' << r.edges << ',' << (r.connected ? 1 : 0);
        for (long long x : r.cycle_counts) out << ',' << x;
        for (const auto& v : r.nonfaces) out << ',' << v.str();
        for (const auto& v : r.faces) out << ',' << v.str();
        for (const auto& v : r.gamma) out << ',' << v.str();
        out << ',' << (with_timing ? r.millis : 0) << '\n';
    }
}

ExponentFit estimate_exponent(const std::vector<SampleRecord>& records, int ell) {
    std::map<int, std::pair<double, long long>> by_n; // n -> (sum gamma_ell, count)
    for (const auto& r : records) {
        if (ell >= static_cast<int>(r.gamma.size()))
            throw std::invalid_argument("estimate_exponent: records lack gamma_" + std::to_string(ell));
        by_n[r.n].first += static_cast<double>(r.gamma[static_cast<size_t>(ell)]);
        by_n[r.n].second += 1;
    }
    std::vector<double> xs, ys;
    for (const auto& [n, acc] : by_n) {
        double mean = acc.first / static_cast<double>(acc.second);
        if (mean <= 0.0)
            throw std::invalid_argument("estimate_exponent: mean gamma_" + std::to_string(ell) +
                                        " at n=" + std::to_string(n) + " is not positive");
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(mean));
    }
    if (xs.size() < 3) throw std::invalid_argument("estimate_exponent: need at least 3 distinct n");
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx == 0.0) throw std::invalid_argument("estimate_exponent: degenerate n values");
    ExponentFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (size_t i = 0; i < xs.size(); ++i) fit.residuals.push_back(ys[i] - (fit.intercept + fit.slope * xs[i]));
    return fit;
}

} // namespace sep
