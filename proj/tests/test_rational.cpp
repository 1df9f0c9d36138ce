#include <doctest.h>
#include <qav/rational.hpp>

#include "test_support.hpp"

using namespace qav;

TEST_CASE("bigint arithmetic basics") {
    CHECK(BigInt(0).is_zero());
    CHECK((BigInt(2) + BigInt(3)) == BigInt(5));
    CHECK((BigInt(2) - BigInt(3)) == BigInt(-1));
    CHECK((BigInt(-4) * BigInt(-5)) == BigInt(20));
    CHECK((BigInt(-4) * BigInt(5)) == BigInt(-20));
    CHECK(BigInt(123456789).to_string() == "123456789");
    CHECK(BigInt(-42).to_string() == "-42");
}

TEST_CASE("bigint multi-limb and division") {
    BigInt big(1);
    for (int i = 0; i < 5; ++i) big = big * BigInt(1000000007);
    CHECK(big.to_string() == "1000000035000000490000003430000012005000016807");
    BigInt q, r;
    BigInt::divmod(big, BigInt(1000000007), q, r);
    CHECK(r.is_zero());
    BigInt::divmod(big + BigInt(11), BigInt(1000000007), q, r);
    CHECK(r == BigInt(11));
    CHECK(BigInt::gcd(BigInt(12 * 35), BigInt(18 * 35)) == BigInt(6 * 35));
}

TEST_CASE("bigint division agrees with multiplication on random values") {
    qavtest::Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        long long a = static_cast<long long>(rng.next() % 2000000000ull) - 1000000000;
        long long b = static_cast<long long>(rng.next() % 99999ull) + 1;
        BigInt q, r;
        BigInt::divmod(BigInt(a), BigInt(b), q, r);
        CHECK(q * BigInt(b) + r == BigInt(a));
        CHECK(q == BigInt(a / b));
        CHECK(r == BigInt(a % b));
    }
}

TEST_CASE("rationals reduce and compare") {
    CHECK(BigRat::fraction(2, 4) == BigRat::fraction(1, 2));
    CHECK(BigRat::fraction(-2, -4) == BigRat::fraction(1, 2));
    CHECK(BigRat::fraction(2, -4).to_string() == "-1/2");
    CHECK((BigRat::fraction(1, 2) + BigRat::fraction(1, 3)).to_string() == "5/6");
    CHECK((BigRat::fraction(1, 2) * BigRat(4)).to_string() == "2");
    CHECK(BigRat::fraction(3, 7).inverse().to_string() == "7/3");
    CHECK(BigRat::fraction(1, 3) < BigRat::fraction(1, 2));
}
