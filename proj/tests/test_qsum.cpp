#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace quadpart;
using testutil::el;

namespace {

QSum random_qsum(std::mt19937& rng, const QuadField& f, const Int& M) {
    const auto elems = enumerate_totally_positive(f, M);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    std::uniform_int_distribution<int> nterms(0, 5);
    QSum s = QSum::monomial(AlgInt::zero(f), coeff(rng), M);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        s = s + QSum::monomial(elems[pick(rng)], coeff(rng), M);
    }
    return s;
}

} // namespace

TEST_CASE("addition and coefficient lookup") {
    const QuadField q = QuadField::rationals();
    const Int M = 6;
    const QSum a = QSum::one(q, M) + QSum::monomial(el(q, 1), 1, M);
    const QSum b = QSum::monomial(AlgInt::zero(q), 2, M) + QSum::monomial(el(q, 1), -1, M);
    const QSum sum = a + b;
    CHECK(sum.coefficient(AlgInt::zero(q)) == 3);
    CHECK(sum.coefficient(el(q, 1)) == 0);
    CHECK(sum.coefficients().size() == 1);  // cancelled term is not stored
    CHECK(QSum::zero(q, M).coefficient(el(q, 3)) == 0);

    CHECK_THROWS_AS(QSum::one(q, 6) + QSum::one(q, 8), std::invalid_argument);
    CHECK_THROWS_AS(QSum::one(q, 6) + QSum::one(QuadField(2), 6), std::invalid_argument);
    CHECK_THROWS_AS(QSum::monomial(el(QuadField(2), 0, 1), 1, 8), std::domain_error);
}

TEST_CASE("multiplication") {
    const QuadField q = QuadField::rationals();
    const QuadField f2(2);

    SECTION("geometric factor inverts 1 - q^delta inside the window") {
        for (const auto& [f, delta, M] :
             {std::tuple{q, el(q, 1), Int(7)}, std::tuple{f2, el(f2, 2, 1), Int(16)},
              std::tuple{f2, el(f2, 1), Int(12)}}) {
            const QSum one_minus = QSum::one(f, M) + QSum::monomial(delta, -1, M);
            CHECK(one_minus * geometric_factor(delta, M) == QSum::one(f, M));
        }
    }

    SECTION("multiplicative identity") {
        std::mt19937 rng(31337);
        for (int iter = 0; iter < 20; ++iter) {
            const QSum f = random_qsum(rng, f2, 10);
            CHECK(f * QSum::one(f2, 10) == f);
        }
    }

    SECTION("coefficient of q^3 in the squared geometric series counts ordered splits") {
        const QSum g = geometric_factor(el(q, 1), 4);
        CHECK((g * g).coefficient(el(q, 3)) == 4);
    }
}

TEST_CASE("geometric factors") {
    const QuadField q = QuadField::rationals();
    const QuadField f2(2);
    const QSum g = geometric_factor(el(q, 1), 3);
    CHECK(g.coefficients().size() == 4);  // 1 + q + q^2 + q^3
    CHECK(g.coefficient(el(q, 3)) == 1);

    CHECK(geometric_factor(el(q, 9), 3) == QSum::one(q, 3));

    const QSum h = geometric_factor(el(f2, 2, 1), 8);
    CHECK(h.coefficients().size() == 3);
    CHECK(h.coefficient(el(f2, 4, 2)) == 1);

    const QSum b = bounded_geometric_factor(el(q, 1), 2, 9);
    CHECK(b.coefficients().size() == 3);  // 1 + q + q^2

    CHECK(bounded_geometric_factor(el(q, 1), 0, 5) == QSum::one(q, 5));

    CHECK_THROWS_AS(geometric_factor(el(f2, 0, 1), 8), std::domain_error);
    CHECK_THROWS_AS(geometric_factor(AlgInt::zero(q), 8), std::domain_error);
}

TEST_CASE("products over factor families") {
    const QuadField f2(2);
    const Int M = 14;

    SECTION("empty product is one") {
        CHECK(product_over(f2, M, std::vector<QSum>{}) == QSum::one(f2, M));
    }

    SECTION("full partition product reproduces the worked coefficients") {
        std::vector<QSum> factors;
        for (const AlgInt& delta : enumerate_totally_positive(f2, M)) {
            factors.push_back(geometric_factor(delta, M));
        }
        const QSum f = product_over(f2, M, factors);
        CHECK(f.coefficient(el(f2, 7, 4)) == 6);

        std::vector<QSum> distinct_factors;
        for (const AlgInt& delta : enumerate_totally_positive(f2, M)) {
            distinct_factors.push_back(bounded_geometric_factor(delta, 1, M));
        }
        CHECK(product_over(f2, M, distinct_factors).coefficient(el(f2, 7, 4)) == 4);
    }
}

TEST_CASE("partition generating functions, worked examples") {
    const QuadField f2(2);
    const QuadField q = QuadField::rationals();
    const Int M = 12;
    const AlgInt target = el(f2, 6, 2);

    const Ideal s2 = Ideal::from_generators(f2, {el(f2, 0, 1)});
    const QSum all = partition_genfun(f2, M, all_parts);
    CHECK(all.coefficient(target) == 12);

    const QSum avoid = partition_genfun(
        f2, M, [&](const AlgInt& p) { return !s2.contains(p); });
    CHECK(avoid.coefficient(target) == 4);

    const GlaisherData g(s2, 2);
    const QSum in_s = partition_genfun(
        f2, M, [&](const AlgInt& p) { return in_glaisher_S(g, p); }, Int(1));
    CHECK(in_s.coefficient(target) == 4);

    const QSum odd = partition_genfun(
        q, 5, [](const AlgInt& p) { return p.x() % 2 != 0; });
    CHECK(odd.coefficient(el(q, 5)) == 3);

    // constant term is the empty partition
    CHECK(all.coefficient(AlgInt::zero(f2)) == 1);
}

TEST_CASE("ring laws under randomized inputs") {
    std::mt19937 rng(20250101);
    for (long long d : {1, 2, 5}) {
        const QuadField f{Int(d)};
        const Int M = 10;
        for (int iter = 0; iter < 30; ++iter) {
            const QSum a = random_qsum(rng, f, M);
            const QSum b = random_qsum(rng, f, M);
            const QSum c = random_qsum(rng, f, M);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
        }
    }
}

TEST_CASE("truncation is exact on the shared window") {
    const QuadField f3(3);
    for (const Int& M : {Int(8), Int(10)}) {
        const auto parts = enumerate_totally_positive(f3, M);
        auto product_at = [&](const Int& window) {
            std::vector<QSum> factors;
            for (const AlgInt& p : parts) {
                factors.push_back(geometric_factor(p, window));
            }
            return product_over(f3, window, factors);
        };
        const QSum narrow = product_at(M);
        const QSum wide = product_at(M + 2);
        for (const auto& [delta, coeff] : narrow.coefficients()) {
            CHECK(coeff == wide.coefficient(delta));
        }
        for (const auto& [delta, coeff] : wide.coefficients()) {
            if (delta.trace() <= M) {
                CHECK(coeff == narrow.coefficient(delta));
            }
        }
    }
}

TEST_CASE("euler inversion against the paper's part sets") {
    const QuadField f2(2);
    const Int M = 10;
    const Ideal s2 = Ideal::from_generators(f2, {el(f2, 0, 1)});
    const GlaisherData g(s2, 2);
    const std::vector<PartPredicate> sets = {
        all_parts,
        [&](const AlgInt& p) { return !s2.contains(p); },
        [&](const AlgInt& p) { return in_glaisher_S(g, p); },
    };
    for (const auto& pred : sets) {
        QSum finite_product = QSum::one(f2, M);
        for (const AlgInt& delta : enumerate_totally_positive(f2, M)) {
            if (pred(delta)) {
                finite_product =
                    finite_product * (QSum::one(f2, M) + QSum::monomial(delta, -1, M));
            }
        }
        CHECK(finite_product * partition_genfun(f2, M, pred) == QSum::one(f2, M));
    }
}

TEST_CASE("coefficients agree with direct counting") {
    for (long long d : {2, 3}) {
        const QuadField f{Int(d)};
        const Int M = 8;
        const QSum gf = partition_genfun(f, M, all_parts);
        const QSum gf2 = partition_genfun(f, M, all_parts, Int(2));
        for (const AlgInt& delta : enumerate_totally_positive(f, M)) {
            CHECK(gf.coefficient(delta) == count_partitions(delta));
            CHECK(gf2.coefficient(delta) == count_partitions(delta, all_parts, Int(2)));
        }
    }
}
