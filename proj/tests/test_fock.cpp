#include "oracles.hpp"

#include "susyqm/combinatorics.hpp"
#include "susyqm/errors.hpp"
#include "susyqm/fock.hpp"

#include <doctest.h>

using namespace susyqm;

namespace {

std::vector<int> modes_of(const FockState& s) {
    std::vector<int> m;
    for (int i = 1; i <= s.n_modes; ++i) {
        if (s.occupied(i)) m.push_back(i);
    }
    return m;
}

} // namespace

TEST_CASE("sector bases have binomial size and sorted masks") {
    for (int n = 2; n <= 10; ++n) {
        for (int m = 0; m <= n; ++m) {
            const auto b = enumerate_basis(n, m);
            CHECK(static_cast<std::int64_t>(b.size()) == binomial(n, m));
            for (std::size_t i = 0; i < b.size(); ++i) {
                CHECK(b.states[i].fermion_number() == m);
                if (i > 0) CHECK(b.states[i - 1].mask < b.states[i].mask);
                CHECK(b.index_of(b.states[i].mask).value() == i);
            }
        }
    }
    CHECK_THROWS_AS(enumerate_basis(3, 4), Error);
    CHECK_THROWS_AS(enumerate_basis(kMaxModes + 1, 1), Error);
}

TEST_CASE("creation and annihilation signs match the ordered-product oracle") {
    for (int n = 2; n <= 6; ++n) {
        for (int m = 0; m < n; ++m) {
            const auto src = enumerate_basis(n, m);
            const auto dst = enumerate_basis(n, m + 1);
            for (int mode = 1; mode <= n; ++mode) {
                const auto c = creation_matrix(n, m, mode).to_dense();
                for (std::size_t j = 0; j < src.size(); ++j) {
                    const auto res = oracle::create(modes_of(src.states[j]), mode);
                    for (std::size_t i = 0; i < dst.size(); ++i) {
                        const int expect = res.sign != 0 && modes_of(dst.states[i]) == res.modes ? res.sign : 0;
                        CHECK(c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) == expect);
                    }
                }
                const auto a = annihilation_matrix(n, m + 1, mode).to_dense();
                for (std::size_t j = 0; j < dst.size(); ++j) {
                    const auto res = oracle::annihilate(modes_of(dst.states[j]), mode);
                    for (std::size_t i = 0; i < src.size(); ++i) {
                        const int expect = res.sign != 0 && modes_of(src.states[i]) == res.modes ? res.sign : 0;
                        CHECK(a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) == expect);
                    }
                }
            }
        }
    }
}

TEST_CASE("canonical anticommutation relations hold exactly on the full space") {
    const int n = 5;
    const auto id = IntOperator::identity(std::size_t{1} << n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const auto ci = full_creation(n, i), cj = full_creation(n, j);
            const auto ai = full_annihilation(n, i), aj = full_annihilation(n, j);
            const auto anti = ci * aj + aj * ci;
            CHECK(anti == (i == j ? id : IntOperator(id.rows(), id.cols())));
            CHECK((ci * cj + cj * ci).is_zero());
            CHECK((ai * aj + aj * ai).is_zero());
        }
    }
}

TEST_CASE("permutation operator swaps occupations with fermionic sign") {
    const int n = 4;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const auto k = full_permutation(n, i, j);
            CHECK(k * k == IntOperator::identity(16));
            for (int l = 1; l <= n; ++l) {
                const int image = l == i ? j : l == j ? i : l;
                CHECK(k * full_creation(n, l) == full_creation(n, image) * k);
            }
            for (int m = 0; m <= n; ++m) {
                const auto km = permutation_operator(n, m, i, j);
                CHECK(km * km == IntOperator::identity(static_cast<std::size_t>(binomial(n, m))));
            }
        }
    }
    CHECK_THROWS_AS(permutation_operator(3, 1, 2, 2), Error);
    CHECK_THROWS_AS(creation_matrix(3, 0, 4), Error);
}
