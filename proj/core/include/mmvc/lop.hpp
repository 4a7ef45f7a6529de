#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mmvc/graph.hpp"
#include "mmvc/kernels.hpp"
#include "mmvc/minimal_cover.hpp"
#include "mmvc/rational.hpp"

namespace mmvc {

enum class Orientation { Max, Min };

// A parameterized graph problem wired for the kernel-driven dual
// approximation: a kernel that preserves large (max) / small (min) optima up
// to a parameter drop, its size function s(k), the trivial value bound u(n),
// and an exact oracle for verification at desk scale.
class ProblemAdapter {
public:
    virtual ~ProblemAdapter() = default;

    virtual std::string name() const = 0;
    virtual Orientation orientation() const = 0;

    // Trivial bound u: optimum <= u(instance size); identity for the vertex
    // problems here.
    virtual long long upper_bound(long long n) const { return n; }

    // Kernel size function s(k) and its growth exponent c (s(k) = O(k^c)).
    virtual long long kernel_size(long long k) const = 0;
    virtual Rational size_exponent() const = 0;

    virtual KernelOutcome kernel(const Graph& g, long long k) const = 0;

    // Exact optimum; throws CapExceededError past the oracle's reach.
    virtual long long value_oracle(const Graph& g) const = 0;

    // f(k) of the dual conclusion: u(s(k)) + k + 1 for max problems,
    // u(s(k)) + k for min problems.
    long long f(long long k) const {
        return upper_bound(kernel_size(k)) + k + (orientation() == Orientation::Max ? 1 : 0);
    }
};

// Maximum minimal vertex cover with the general quadratic kernel: s(k) = k^2.
class MmvcAdapter final : public ProblemAdapter {
public:
    explicit MmvcAdapter(int oracle_cap = kDefaultOracleCap) : oracle_cap_(oracle_cap) {}
    std::string name() const override { return "mmvc"; }
    Orientation orientation() const override { return Orientation::Max; }
    long long kernel_size(long long k) const override { return k * k; }
    Rational size_exponent() const override { return Rational(2); }
    KernelOutcome kernel(const Graph& g, long long k) const override;
    long long value_oracle(const Graph& g) const override;

private:
    int oracle_cap_;
};

// Maximum independent set on K_t-free graphs with the size-threshold kernel:
// s(k) = k^(t-1).
class MisKtFreeAdapter final : public ProblemAdapter {
public:
    explicit MisKtFreeAdapter(int t, int exact_cap = kDefaultExactCap)
        : t_(t), exact_cap_(exact_cap) {}
    std::string name() const override { return "mis-K" + std::to_string(t_) + "free"; }
    Orientation orientation() const override { return Orientation::Max; }
    long long kernel_size(long long k) const override { return saturating_pow(k, t_ - 1); }
    Rational size_exponent() const override { return Rational(t_ - 1); }
    KernelOutcome kernel(const Graph& g, long long k) const override;
    long long value_oracle(const Graph& g) const override;
    int t() const { return t_; }

private:
    int t_;
    int exact_cap_;
};

// Minimum vertex cover with the classical high-degree/edge-count kernel:
// s(k) = k^2 + k.
class MinVcAdapter final : public ProblemAdapter {
public:
    explicit MinVcAdapter(int exact_cap = kDefaultExactCap) : exact_cap_(exact_cap) {}
    std::string name() const override { return "minvc"; }
    Orientation orientation() const override { return Orientation::Min; }
    long long kernel_size(long long k) const override { return k * k + k; }
    Rational size_exponent() const override { return Rational(2); }
    KernelOutcome kernel(const Graph& g, long long k) const override;
    long long value_oracle(const Graph& g) const override;

private:
    int exact_cap_;
};

// Minimum vertex cover kernel: repeatedly force vertices of degree > k into
// the cover (decrementing k) and drop isolated vertices; then more than k^2
// remaining edges is a no-instance.  The outcome's `forced` set and
// reduced_to_original map allow reconstructing cover witnesses; an empty
// residual is returned as Reduced(empty, k'), a trivially solved instance.
KernelOutcome buss_min_vc_kernel(const Graph& g, long long k);

// One dual-approximation step (parameter k fixed):
//   max problems answer  "optimum >= k"  or  "optimum < f(k)",
//   min problems answer  "optimum <= f(k)"  or  "optimum > k",
// with f as in ProblemAdapter::f.  AtLeastK carries the kernel witness;
// AtMostF carries a constructive solution of value <= f(k) when one can be
// assembled from the kernel output.
struct DualAnswer {
    enum class Kind { AtLeastK, BelowF, AtMostF, AboveK };
    Kind kind;
    long long k = 0;
    long long f_value = 0;
    std::optional<VertexSet> witness;
};

DualAnswer dual_from_kernel(const ProblemAdapter& adapter, const Graph& g, long long k);

// Value approximation by linear scan over k (0..u(n)):
//   max: k0 = largest k answered AtLeastK; claimed = k0 <= opt
//   min: k0 = smallest k answered AtMostF; claimed = f(k0) >= opt
// If no k qualifies for a max problem the optimum is tiny and the exact
// oracle takes over (exact_fallback).
struct ApproxReport {
    long long k0 = 0;
    long long claimed_value = 0;
    std::optional<VertexSet> witness;
    std::optional<long long> exact_opt; // when the oracle is feasible
    Rational ratio_exponent;            // (c-1)/c for vertex problems
    bool exact_fallback = false;
    std::vector<DualAnswer> answers;
};

ApproxReport value_approx(const ProblemAdapter& adapter, const Graph& g,
                          bool with_oracle = true);

// Closed-form approximation guarantees for a problem whose lop-rules drop the
// parameter by at most a factor and whose kernel has size alpha*k^(a*c) (the
// composition of an a-approximate preprocessing with a size-c kernel of
// coefficient beta gives lambda = alpha*beta^a and exponent d = a*c).
//   a*c > 1:  ratio O(n^((a*c-1)/c))
//   a*c <= 1: constant ratio; max: lambda*2^(a*c) + 3, min: lambda + 1
// Vertex-problem specializations (a = 1, u = id):
//   c > 1: ratio O(n^((c-1)/c))
//   c = 1 (linear kernel, beta*k vertices): max beta + 1 + eps, min beta + 1
struct RatioPrediction {
    bool constant_regime = false;
    Rational exponent;                    // exponent regime
    double constant = 0.0;               // constant regime
    std::optional<double> evaluated_at_n; // n^exponent when n supplied
    std::string formula;
};

RatioPrediction predict_ratio(Rational a, Rational c, Rational alpha, Rational beta,
                              Orientation orientation,
                              std::optional<long long> n = std::nullopt,
                              std::optional<double> epsilon = std::nullopt);

} // namespace mmvc
