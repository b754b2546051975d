#pragma once

// Spectrum of the rough Laplacian on (End_0 T'P^2)(l) over P^2 and on the
// pulled-back endomorphism bundle over S^5.  Eigenvalues come from the
// su(3) Casimir: with Q = a^2 + b^2 + ab + 3a + 3b,
//
//   P^2, twist l:  (4Q - 4l^2)/3 - 8,  complex multiplicity sum of dim(a,b)
//   S^5:           (4Q -  l^2)/3 - 8,  real multiplicity merged over l
//
// over labels (a,b) admissible for l, i.e. contains_target_closed(a,b,l).

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "conic/branching.hpp"
#include "conic/errors.hpp"
#include "conic/rational.hpp"
#include "conic/su3.hpp"

namespace conic {

enum class Space { P2, S5 };

struct LaplacianLine {
    Rational value;
    long long mult = 0;
    std::vector<std::array<long long, 3>> witnesses; // (a,b,l), ordered by (l,a,b)
};

struct SpectrumTable {
    Space space = Space::S5;
    std::optional<long long> twist; // fixed l for P2 tables
    Rational cutoff;
    std::vector<LaplacianLine> lines; // strictly increasing values
};

namespace detail {

inline Rational casimir_q(long long a, long long b)
{
    return Rational(a * a + b * b + a * b + 3 * a + 3 * b);
}

inline void sort_witnesses(std::vector<std::array<long long, 3>>& ws)
{
    std::sort(ws.begin(), ws.end(), [](const auto& x, const auto& y) {
        return std::tie(x[2], x[0], x[1]) < std::tie(y[2], y[0], y[1]);
    });
}

inline SpectrumTable collect(Space space, std::optional<long long> twist, Rational cutoff,
                             std::map<Rational, LaplacianLine>&& merged)
{
    SpectrumTable table;
    table.space = space;
    table.twist = twist;
    table.cutoff = std::move(cutoff);
    for (auto& [value, line] : merged) {
        (void)value;
        sort_witnesses(line.witnesses);
        table.lines.push_back(std::move(line));
    }
    return table;
}

} // namespace detail

// Spectrum of the rough Laplacian on (End_0 T'P^2)(l), complete up to cutoff.
inline SpectrumTable spec_p2(long long l, const Rational& cutoff)
{
    // 4(Q - l^2)/3 - 8 <= cutoff  <=>  Q <= 3(cutoff + 8)/4 + l^2.
    Rational q_max = Rational(3, 4) * (cutoff + 8) + Rational(l * l);
    std::map<Rational, LaplacianLine> merged;
    for (long long a = 0; detail::casimir_q(a, 0) <= q_max; ++a) {
        for (long long b = 0; detail::casimir_q(a, b) <= q_max; ++b) {
            if (!contains_target_closed(a, b, l)) continue;
            Rational value = Rational(4, 3) * (detail::casimir_q(a, b) - l * l) - 8;
            if (value > cutoff) continue;
            LaplacianLine& line = merged[value];
            line.value = value;
            line.mult += dim({a, b});
            line.witnesses.push_back({a, b, l});
        }
    }
    return detail::collect(Space::P2, l, cutoff, std::move(merged));
}

// Spectrum of the rough Laplacian on the pullback bundle over S^5, complete
// up to cutoff.  Labels are scanned under a^2 + b^2 <= cutoff + bound_offset;
// offset 8 is justified by the eigenvalue bound
//
//   (4Q - l^2)/3 - 8 >= a^2 + b^2 - 8   whenever (a,b,l) is admissible,
//
// and validated by re-running with a far larger offset (see tests).  Work is
// split over threads by label; the merge is deterministic.
inline SpectrumTable spec_s5(const Rational& cutoff, const Rational& bound_offset = 8,
                             unsigned threads = 1)
{
    Rational norm_max = cutoff + bound_offset;
    std::vector<std::pair<long long, long long>> labels;
    for (long long a = 0; Rational(a * a) <= norm_max; ++a)
        for (long long b = 0; Rational(a * a + b * b) <= norm_max; ++b) labels.emplace_back(a, b);

    auto scan = [&](std::size_t begin, std::size_t step, std::map<Rational, LaplacianLine>& out) {
        for (std::size_t i = begin; i < labels.size(); i += step) {
            auto [a, b] = labels[i];
            long long lo = std::max(3 - a - 2 * b, b - a - 3);
            long long hi = std::min(2 * a + b - 3, 3 + b - a);
            for (long long l = lo; l <= hi; ++l) {
                if ((a + 2 * b - 3 + l) % 3 != 0) continue;
                Rational value = Rational(4, 3) * detail::casimir_q(a, b) - Rational(l * l, 3) - 8;
                if (value > cutoff) continue;
                LaplacianLine& line = out[value];
                line.value = value;
                line.mult += dim({a, b});
                line.witnesses.push_back({a, b, l});
            }
        }
    };

    if (threads == 0) threads = 1;
    std::map<Rational, LaplacianLine> merged;
    if (threads == 1) {
        scan(0, 1, merged);
    } else {
        std::vector<std::map<Rational, LaplacianLine>> partial(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] { scan(t, threads, partial[t]); });
        for (auto& th : pool) th.join();
        for (auto& part : partial) {
            for (auto& [value, line] : part) {
                LaplacianLine& target = merged[value];
                target.value = value;
                target.mult += line.mult;
                target.witnesses.insert(target.witnesses.end(), line.witnesses.begin(),
                                        line.witnesses.end());
            }
        }
    }
    return detail::collect(Space::S5, std::nullopt, cutoff, std::move(merged));
}

// Cached S^5 spectrum with on-demand extension, serving eigenspace dimensions
// for the operator assembly.  Non-eigenvalues have dimension zero.
class S5Spectrum {
public:
    explicit S5Spectrum(unsigned threads = 1) : threads_(threads) {}

    long long eigenspace_dim(const Rational& value)
    {
        if (!table_ || value > table_->cutoff) extend(value);
        for (const LaplacianLine& line : table_->lines)
            if (line.value == value) return line.mult;
        return 0;
    }

private:
    void extend(const Rational& cutoff)
    {
        Rational target = table_ ? std::max(table_->cutoff, cutoff) : cutoff;
        table_ = spec_s5(target, 8, threads_);
    }

    unsigned threads_;
    std::optional<SpectrumTable> table_;
};

// Eigenspace dimension as a one-shot call.
inline long long eigenspace_dim(Space space, const Rational& value, long long twist = 0)
{
    if (space == Space::S5) {
        S5Spectrum cache;
        return cache.eigenspace_dim(value);
    }
    SpectrumTable table = spec_p2(twist, value);
    for (const LaplacianLine& line : table.lines)
        if (line.value == value) return line.mult;
    return 0;
}

} // namespace conic
