#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "momentcara/witness.hpp"
#include "oracles.hpp"

using namespace momentcara;

TEST_CASE("grid point layout") {
    const auto rn = grid_points(2, 2, Domain::Rn);
    REQUIRE(rn.size() == 4);
    CHECK(rn.front() == std::vector<Rat>{1, 1});
    CHECK(rn.back() == std::vector<Rat>{2, 2});
    const auto cube = grid_points(2, 2, Domain::Cube);
    REQUIRE(cube.size() == 9);
    CHECK(cube.front() == std::vector<Rat>{0, 0});
    CHECK(cube.back() == std::vector<Rat>{2, 2});
}

TEST_CASE("grid witnesses certify the closed form") {
    const auto w = build_grid_witness(2, 3, Parity::Even, Domain::Rn);
    CHECK(w.degree == 6);
    CHECK(w.closed_form == 9);
    CHECK(w.certified_cara == 9);
    CHECK(w.certified);

    const auto c = build_grid_witness(2, 2, Parity::Even, Domain::Cube);
    CHECK(c.closed_form == 9);
    CHECK(c.certified_cara == 9);
    CHECK(c.certified);

    // Dependent evaluations: 32 atoms, rank 31.
    const auto big = build_grid_witness(5, 2, Parity::Even, Domain::Rn);
    CHECK(big.measure.atoms.size() == 32);
    CHECK(big.closed_form == 31);
    CHECK(big.certified_cara == 31);
    CHECK(big.certified);
}

TEST_CASE("grid cap refuses oversized witnesses") {
    WitnessOptions options;
    options.max_grid_points = 100;
    try {
        build_grid_witness(3, 4, Parity::Even, Domain::Cube, options);  // 125 points
        FAIL("expected grid_cap");
    } catch (const Error& e) {
        CHECK(e.code() == errc::grid_cap);
        CHECK(std::string(e.what()).find("125") != std::string::npos);
    }
    CHECK_NOTHROW(build_grid_witness(3, 4, Parity::Even, Domain::Rn, options));  // 64 points
}

TEST_CASE("boundary Caratheodory numbers") {
    for (int d = 2; d <= 4; ++d) {
        AtomicMeasure m;
        m.n = 1;
        for (int x = 1; x <= d; ++x) m.atoms.push_back({{Rat(x)}, Rat(1)});
        CHECK(boundary_cara(m, 1, 2 * d) == d);
        CHECK(boundary_cara(m, 1, 2 * d + 1) == d);
    }

    AtomicMeasure one;
    one.n = 2;
    one.atoms.push_back({{Rat(1, 2), Rat(-3)}, Rat(5)});
    for (int degree = 0; degree <= 3; ++degree) CHECK(boundary_cara(one, 2, degree) == 1);

    AtomicMeasure three;
    three.n = 1;
    for (int x : {1, 2, 3}) three.atoms.push_back({{Rat(x)}, Rat(1)});
    CHECK(boundary_cara(three, 1, 2) == 3);
}

TEST_CASE("certificate factors and evaluation") {
    const auto rn = certificate(1, 2, Domain::Rn);
    // (x-1)(x-2) = x^2 - 3x + 2
    CHECK(rn.factors.at(0) == std::vector<Rat>{2, -3, 1});
    CHECK(rn.factor_degree() == 2);
    CHECK(rn.composite_degree() == 4);

    const auto cube = certificate(1, 1, Domain::Cube);
    // x(x-1) = x^2 - x
    CHECK(cube.factors.at(0) == std::vector<Rat>{0, -1, 1});

    const auto plane = certificate(2, 2, Domain::Rn);
    CHECK(plane.evaluate({Rat(0), Rat(0)}) == 8);  // 4 + 4
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) CHECK(plane.evaluate({Rat(a), Rat(b)}) == 0);
    CHECK(plane.evaluate({Rat(1), Rat(3, 2)}) > 0);
}

TEST_CASE("certificate composite matches direct evaluation") {
    std::mt19937_64 rng(13);
    for (const auto& [n, d, domain] :
         std::vector<std::tuple<int, int, Domain>>{{1, 2, Domain::Rn},
                                                   {2, 2, Domain::Cube},
                                                   {3, 1, Domain::Rn}}) {
        const auto cert = certificate(n, d, domain);
        const auto composite = cert.composite();
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rat> x;
            for (int i = 0; i < n; ++i) x.push_back(oracles::random_rational(rng, 6, 4));
            Rat from_map(0);
            for (const auto& [alpha, coeff] : composite) {
                Rat monomial(1);
                for (int i = 0; i < n; ++i)
                    for (int e = 0; e < alpha.entries[i]; ++e) monomial *= x[i];
                from_map += coeff * monomial;
            }
            CHECK(from_map == cert.evaluate(x));
        }
    }
}

TEST_CASE("witness sequence annihilates its certificate") {
    for (const auto& [n, d, parity, domain] : std::vector<std::tuple<int, int, Parity, Domain>>{
             {2, 2, Parity::Even, Domain::Rn},
             {2, 3, Parity::Even, Domain::Rn},
             {2, 2, Parity::Odd, Domain::Rn},
             {2, 2, Parity::Even, Domain::Cube},
             {3, 2, Parity::Odd, Domain::Cube}}) {
        const auto w = build_grid_witness(n, d, parity, domain);
        const auto cert = certificate(n, d, domain);
        // The cube certificate has degree 2d+2 and outgrows the witness
        // truncation; integrate it against the measure's extended moments.
        const int needed = std::max(w.degree, cert.composite_degree());
        const auto extended = atomic_moments(w.measure, n, needed);
        CHECK(riesz_apply(extended, cert.composite()) == 0);

        // Strictly positive off the grid.
        std::mt19937_64 rng(101);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rat> x;
            for (int i = 0; i < n; ++i) {
                Rat c = oracles::random_rational(rng, 12, 5);
                if (i == 0) c += Rat(1, 9);  // denominator 9 never hits the integer grid
                x.push_back(c);
            }
            CHECK(cert.evaluate(x) > 0);
        }
    }
}

TEST_CASE("interpolation point search") {
    {
        int next = 0;
        PointStream stream = [&next]() -> std::optional<std::vector<Rat>> {
            return std::vector<Rat>{Rat(next++)};
        };
        const auto points = interpolation_points(1, 2, stream);
        REQUIRE(points.size() == 3);
        CHECK(points[0] == std::vector<Rat>{0});
        CHECK(points[1] == std::vector<Rat>{1});
        CHECK(points[2] == std::vector<Rat>{2});
    }
    {
        const std::vector<std::vector<Rat>> candidates{
            {Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(1)}};
        std::size_t i = 0;
        PointStream stream = [&]() -> std::optional<std::vector<Rat>> {
            if (i >= candidates.size()) return std::nullopt;
            return candidates[i++];
        };
        const auto points = interpolation_points(2, 1, stream);
        REQUIRE(points.size() == 3);
        CHECK(points[0] == candidates[0]);
        CHECK(points[1] == candidates[1]);
        CHECK(points[2] == candidates[3]);  // (2,0) is rank-stagnant, rejected
    }
    {
        const std::vector<std::vector<Rat>> repeated{{Rat(1)}, {Rat(1)}, {Rat(1)}};
        std::size_t i = 0;
        PointStream stream = [&]() -> std::optional<std::vector<Rat>> {
            if (i >= repeated.size()) return std::nullopt;
            return repeated[i++];
        };
        try {
            interpolation_points(1, 2, stream);
            FAIL("expected stream_exhausted");
        } catch (const Error& e) {
            CHECK(e.code() == errc::stream_exhausted);
            CHECK(std::string(e.what()).find("rank 1") != std::string::npos);
        }
    }
}

TEST_CASE("interpolation points give an exactly invertible matrix") {
    for (const auto& [n, degree] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 1}}) {
        const auto points = interpolation_points(n, degree, integer_point_stream(n));
        const auto m = evaluation_matrix(points, n, degree);
        REQUIRE(m.rows() == m.cols());
        CHECK(m.rank() == m.rows());
    }
}

TEST_CASE("pruning reduces redundant atoms and preserves moments") {
    // Four unit masses at 0,1,2,3 in degree 2: at most three atoms remain.
    AtomicMeasure four;
    four.n = 1;
    for (int x : {0, 1, 2, 3}) four.atoms.push_back({{Rat(x)}, Rat(1)});
    const auto before = atomic_moments(four, 1, 2);
    const auto pruned = prune(four, 1, 2);
    CHECK(pruned.atoms.size() <= 3);
    CHECK(atomic_moments(pruned, 1, 2) == before);
    CHECK(pruned.positive());
    CHECK(before[MultiIndex{0}] == 4);
    CHECK(before[MultiIndex{1}] == 6);
    CHECK(before[MultiIndex{2}] == 14);

    // Independent evaluations come back unchanged.
    AtomicMeasure indep;
    indep.n = 1;
    for (int x : {0, 1, 2}) indep.atoms.push_back({{Rat(x)}, Rat(x + 1)});
    const auto same = prune(indep, 1, 2);
    REQUIRE(same.atoms.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(same.atoms[i].point == indep.atoms[i].point);
        CHECK(same.atoms[i].weight == indep.atoms[i].weight);
    }

    // 32 grid atoms at degree 4 carry exactly one dependence (rank 31): the
    // order-5 parity functional, +1 on half the grid and -1 on the other
    // half.  The maximal step therefore zeroes out all 16 positive-side
    // atoms in one move and the delete-all-ties rule drops them together.
    AtomicMeasure grid;
    grid.n = 5;
    for (const auto& p : grid_points(5, 2, Domain::Rn)) grid.atoms.push_back({p, Rat(1)});
    std::vector<std::vector<Rat>> grid_pts;
    for (const auto& atom : grid.atoms) grid_pts.push_back(atom.point);
    REQUIRE(evaluation_matrix(grid_pts, 5, 4).rank() == 31);
    const auto reduced = prune(grid, 5, 4);
    CHECK(reduced.atoms.size() == 16);
    CHECK(atomic_moments(reduced, 5, 4) == atomic_moments(grid, 5, 4));
    CHECK(reduced.positive());

    AtomicMeasure bad;
    bad.n = 1;
    bad.atoms.push_back({{Rat(0)}, Rat(0)});
    CHECK_THROWS_AS(prune(bad, 1, 1), Error);
}

TEST_CASE("pruning random measures: rank bound, exactness, idempotence") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int degree = 1 + static_cast<int>(rng() % 3);
        const int basis = static_cast<int>(enum_multi_indices(n, degree).size());
        const int atom_count = basis + 1 + static_cast<int>(rng() % basis);

        AtomicMeasure m;
        m.n = n;
        std::set<std::vector<Rat>> used;
        while (static_cast<int>(m.atoms.size()) < atom_count) {
            std::vector<Rat> point;
            for (int i = 0; i < n; ++i) point.push_back(oracles::random_rational(rng, 6, 3));
            if (!used.insert(point).second) continue;
            Rat w = oracles::random_rational(rng, 5, 4);
            if (w < 0) w = -w;
            if (w == 0) w = Rat(1, 3);
            m.atoms.push_back({point, w});
        }

        std::vector<std::vector<Rat>> points;
        for (const auto& atom : m.atoms) points.push_back(atom.point);
        const int rank = evaluation_matrix(points, n, degree).rank();

        const auto once = prune(m, n, degree);
        CHECK(static_cast<int>(once.atoms.size()) <= rank);
        CHECK(once.positive());
        CHECK(atomic_moments(once, n, degree) == atomic_moments(m, n, degree));

        const auto twice = prune(once, n, degree);
        CHECK(twice.atoms.size() == once.atoms.size());
        CHECK(atomic_moments(twice, n, degree) == atomic_moments(m, n, degree));
    }
}
