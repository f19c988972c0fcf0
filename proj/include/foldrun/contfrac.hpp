#ifndef FOLDRUN_CONTFRAC_HPP
#define FOLDRUN_CONTFRAC_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "foldrun/foldcore.hpp"
#include "foldrun/report.hpp"

namespace foldrun {

using BigInt = boost::multiprecision::cpp_int;
/// Always normalized: positive denominator, lowest terms.
using BigRational = boost::multiprecision::cpp_rational;

/// [a0; a1, ..., at]. Canonical when a_i >= 1 for i >= 1 and a_t >= 2 for
/// t >= 1; intermediate folding results may hold other forms.
struct ContinuedFraction {
    std::vector<BigInt> terms;

    /// Number of partial quotients after a0.
    std::size_t fractional_length() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }

    std::string to_string() const;  // "[0, 1, 4, 3]"

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

ContinuedFraction make_cf(std::initializer_list<long long> terms);

/// Euclidean expansion; always canonical.
ContinuedFraction cf_from_rational(const BigRational& r);

/// Exact value via convergents. Zero quotients are allowed; throws
/// InvalidInput when the expansion has no finite value.
BigRational cf_to_rational(const ContinuedFraction& cf);

/// Removes zero quotients: [.., a, 0, b, ..] -> [.., a+b, ..] and
/// [.., a, b, 0] -> [.., a]. Value preserving.
ContinuedFraction contract_zeros(ContinuedFraction cf);

/// Zero contraction plus [.., a, 1] -> [.., a+1]. Throws InvalidInput on
/// negative quotients after a0.
ContinuedFraction canonicalize(ContinuedFraction cf);

enum class Parity { even, odd };

/// Equal-valued expansion whose fractional length has the given parity,
/// via [.., a] = [.., a-1, 1] (or the reverse merge when a = 1).
/// Throws InvalidInput when the fractional part is empty.
ContinuedFraction set_parity(const ContinuedFraction& cf, Parity parity);

/// p/q + eps/q^2 for cf = [0; a1..at] with t odd:
/// [0, a1, .., a_{t-1}, a_t - eps, a_t + eps, a_{t-1}, .., a1], zero
/// quotients contracted. Throws InvalidInput if a0 != 0, t is even, or some
/// a_i < 1.
ContinuedFraction fold_step(const ContinuedFraction& cf, Sign eps);

/// Parses "+,-,-,+" (or "+--+") into eps_2..eps_n.
std::vector<Sign> parse_sign_vector(std::string_view text);
std::string format_sign_vector(std::span<const Sign> eps);

/// Largest supported n: the denominator of alpha is 2^(2^n).
inline constexpr std::size_t max_alpha_index = 16;

/// 1/2 + 1/4 + sum_{2<=i<=n} eps_i 2^(-2^i) for eps = (eps_2, .., eps_n).
/// Throws InvalidInput for an empty vector or n > max_alpha_index.
BigRational alpha_value(std::span<const Sign> eps);

/// [0, 1, 2R'] where R are the run lengths of P_{1 eps_2 .. eps_n}, doubled,
/// with the last term increased by 1.
ContinuedFraction predicted_cf(std::span<const Sign> eps);

using CfPredictor = std::function<ContinuedFraction(std::span<const Sign>)>;

/// For every sign vector with 2 <= n <= n_max, compares the expansion of
/// alpha with the prediction after canonicalizing both.
CheckReport cf_theorem_check(std::size_t n_max, const CfPredictor& predictor = predicted_cf);

}  // namespace foldrun

#endif  // FOLDRUN_CONTFRAC_HPP
