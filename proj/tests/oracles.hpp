#pragma once

// Independent reference implementations used by the tests. Nothing here calls
// into the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

inline double mean(const std::vector<double>& x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

// Textbook two-pass sample correlation.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

inline std::vector<double> sorted(std::vector<double> x) {
    std::sort(x.begin(), x.end());
    return x;
}

// Mean of the k+1..m lowest and the matching highest values (1-based ranks).
inline double gmdr(const std::vector<double>& x, std::size_t k, std::size_t m) {
    const auto s = sorted(x);
    const std::size_t n = s.size();
    double t = 0.0;
    for (std::size_t i = k; i < m; ++i) t += s[i] + s[n - 1 - i];
    return t / (2.0 * static_cast<double>(m - k));
}

inline double truncated_mean(const std::vector<double>& x, std::size_t m) {
    const auto s = sorted(x);
    double t = 0.0;
    for (std::size_t i = m; i + m < s.size(); ++i) t += s[i];
    return t / static_cast<double>(s.size() - 2 * m);
}

inline double median(const std::vector<double>& x) {
    const auto s = sorted(x);
    const std::size_t n = s.size();
    return n % 2 ? s[n / 2] : (s[n / 2 - 1] + s[n / 2]) / 2.0;
}

inline double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    double ab = 0.0;
    double aa = 0.0;
    double bb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ab += a[i] * b[i];
        aa += a[i] * a[i];
        bb += b[i] * b[i];
    }
    return ab / std::sqrt(aa * bb);
}

// (x - c) / ||x - c||_2
inline std::vector<double> unit_deviation(const std::vector<double>& x, double c) {
    std::vector<double> d(x.size());
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        d[i] = x[i] - c;
        s += d[i] * d[i];
    }
    for (double& v : d) v /= std::sqrt(s);
    return d;
}

// Weights of a maximum spanning tree (Prim), sorted descending. s is row-major n x n.
inline std::vector<double> mst_levels(const std::vector<double>& s, std::size_t n) {
    std::vector<bool> in(n, false);
    std::vector<double> best(n, -1.0);
    std::vector<double> out;
    in[0] = true;
    for (std::size_t j = 1; j < n; ++j) best[j] = s[j];
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!in[j] && (pick == n || best[j] > best[pick])) pick = j;
        in[pick] = true;
        out.push_back(best[pick]);
        for (std::size_t j = 0; j < n; ++j)
            if (!in[j]) best[j] = std::max(best[j], s[pick * n + j]);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

inline std::vector<double> uniform_series(std::mt19937_64& g, std::size_t n, double lo = -10.0, double hi = 10.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> x(n);
    for (double& v : x) v = u(g);
    return x;
}

}  // namespace oracle
