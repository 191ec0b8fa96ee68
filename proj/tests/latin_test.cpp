#include <doctest.h>

#include <vector>

#include "smp/latin.hpp"

using namespace smp;

namespace {

bool square_is_latin(const std::vector<int>& sq, int n) {
    for (int i = 0; i < n; ++i) {
        std::vector<bool> row(n, false), col(n, false);
        for (int j = 0; j < n; ++j) {
            const int a = sq[i * n + j], b = sq[j * n + i];
            if (a < 1 || a > n || row[a - 1]) return false;
            if (b < 1 || b > n || col[b - 1]) return false;
            row[a - 1] = true;
            col[b - 1] = true;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("count_latin_squares matches the known small values") {
    CHECK(count_latin_squares(1) == 1);
    CHECK(count_latin_squares(2) == 2);
    CHECK(count_latin_squares(3) == 12);
    CHECK(count_latin_squares(4) == 576);
}

TEST_CASE("every emitted square is Latin, in strictly increasing order") {
    for (int n : {1, 2, 3, 4}) {
        std::vector<int> prev;
        int count = 0;
        for_each_latin_square(n, [&](const std::vector<int>& sq) {
            CHECK(square_is_latin(sq, n));
            if (!prev.empty()) CHECK(prev < sq);
            prev = sq;
            ++count;
        });
        CHECK(count == int(count_latin_squares(n)));
    }
}
