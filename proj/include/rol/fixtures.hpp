#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rol/matrix.hpp"

namespace rol::fixtures {

using Pair = std::pair<Matrix, Matrix>;

/// A = [1 1], B = [1; 0]: pinv(AB) = 1 but pinv(B) pinv(A) = 1/2.
inline Pair intro()
{
    return {Matrix::real({{1, 1}}), Matrix::real({{1}, {0}})};
}

/// 3x4 and 4x4 pair where the ROL holds although A^*A and BB^* do not commute.
inline Pair counterexample()
{
    return {Matrix::real({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0}}),
            Matrix::real({{2, 4, 3, 2}, {2, 4, 1, 2}, {0, 0, 0, 0}, {0, 0, 0, 0}})};
}

/// pinv(AB) for the counterexample, which equals pinv(B) pinv(A).
inline Matrix counterexample_pinv()
{
    return (1.0 / 48.0) * Matrix::real({{-2, 3, 0}, {-4, 6, 0}, {24, -12, 0}, {-2, 3, 0}});
}

/// [A^*A, BB^*] for the counterexample divided by 81.
inline Matrix counterexample_commutator_pattern()
{
    return Matrix::real({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
}

/// range(A^*) and range(B) meet at angles {0, pi/2}: a {1,2}-inverse only.
inline Pair geometric()
{
    return {Matrix::real({{1, 0, 1}, {0, 1, -1}}), Matrix::real({{1, 0}, {0, 1}, {2, 3}})};
}

/// pinv(B) pinv(A) is a {1,2,3}-inverse of AB but not a {1,2,4}-inverse.
inline Pair class123()
{
    return {Matrix::real({{1, 0}, {0, 0}}), Matrix::real({{1, 1, 0}, {0, 1, 1}})};
}

inline Matrix class123_pinv_ab()
{
    return 0.5 * Matrix::real({{1, 0}, {1, 0}, {0, 0}});
}

inline Matrix class123_reverse()
{
    return (1.0 / 3.0) * Matrix::real({{2, 0}, {1, 0}, {-1, 0}});
}

/// AB = 0 with r_A = 2, r_B = 1.
inline Pair zero_product()
{
    return {Matrix::real({{1, 0, 1}, {0, -1, 0}}), Matrix::real({{1}, {0}, {-1}})};
}

inline std::vector<std::string> names()
{
    return {"intro", "counterexample", "geometric", "class123", "zero_product"};
}

/// Looks a pair up by name; throws InvalidArgument for unknown names.
inline Pair by_name(const std::string& name)
{
    if (name == "intro") return intro();
    if (name == "counterexample") return counterexample();
    if (name == "geometric") return geometric();
    if (name == "class123") return class123();
    if (name == "zero_product") return zero_product();
    throw InvalidArgument("unknown fixture '" + name + "'");
}

} // namespace rol::fixtures
