#include "whitefox/matrix.hpp"

namespace wf::detail {

Laurent det_bareiss_laurent(const Matrix<Laurent>& A) {
    const int k = A.rows();
    Matrix<Laurent> m = A;
    Laurent prev = Laurent::one(A.ring());
    int sign = 1;
    for (int s = 0; s < k - 1; ++s) {
        if (m.at(s, s).is_zero()) {
            int swap_row = -1;
            for (int i = s + 1; i < k; ++i)
                if (!m.at(i, s).is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Laurent::zero(A.ring());
            for (int j = 0; j < k; ++j) std::swap(m.at(s, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = s + 1; i < k; ++i)
            for (int j = s + 1; j < k; ++j)
                m.at(i, j) = laurent_divexact(m.at(i, j) * m.at(s, s) - m.at(i, s) * m.at(s, j), prev);
        prev = m.at(s, s);
    }
    Laurent d = m.at(k - 1, k - 1);
    return sign < 0 ? -d : d;
}

}  // namespace wf::detail
