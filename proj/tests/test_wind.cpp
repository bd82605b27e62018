#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numeric>

#include "pitchsim/wind.hpp"

using namespace pitchsim;

namespace {
WindProfile step_profile() {
    WindProfile p;
    p.kind = WindKind::StepSequence;
    p.steps = {{0.0, 18.0}, {100.0, 22.0}};
    return p;
}

WindProfile ou_profile(std::uint64_t seed, double ti = 0.20) {
    WindProfile p;
    p.kind = WindKind::Stochastic;
    p.mean = 22.0;
    p.turbulence_intensity = ti;
    p.correlation_time = 10.0;
    p.sample_dt = 0.25;
    p.seed = seed;
    return p;
}

double sample_std(const std::vector<double>& v, double mean) {
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(v.size()));
}
} // namespace

TEST_CASE("step profiles hold the last value") {
    const WindSeries s = build_wind(step_profile(), 200.0);
    CHECK(s.sample(50.0) == 18.0);
    CHECK(s.sample(0.0) == 18.0);
    CHECK(s.sample(99.99) == 18.0);
    CHECK(s.sample(100.01) == 22.0);
    CHECK(s.sample(150.0) == 22.0);
}

TEST_CASE("zero turbulence intensity gives the constant mean") {
    const WindSeries s = build_wind(ou_profile(3, 0.0), 600.0);
    for (double t : {0.0, 1.0, 99.5, 599.0}) CHECK(s.sample(t) == 22.0);
}

TEST_CASE("stationary deviation approaches TI times mean") {
    // pooled over three seeds; raw series, before envelope clamping
    std::vector<double> pool;
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        const WindSeries s = build_wind(ou_profile(seed), 600.0);
        const auto& v = s.raw_values();
        pool.insert(pool.end(), v.begin(), v.end());
    }
    const double sd = sample_std(pool, 22.0);
    CHECK(sd == Catch::Approx(4.4).epsilon(0.15));
}

TEST_CASE("identical profile and seed reproduce the series bit for bit") {
    const WindSeries a = build_wind(ou_profile(42), 300.0);
    const WindSeries b = build_wind(ou_profile(42), 300.0);
    REQUIRE(a.raw_values().size() == b.raw_values().size());
    for (std::size_t i = 0; i < a.raw_values().size(); ++i)
        CHECK(a.raw_values()[i] == b.raw_values()[i]);
    const WindSeries c = build_wind(ou_profile(43), 300.0);
    CHECK(a.raw_values()[10] != c.raw_values()[10]);
}

TEST_CASE("emitted samples stay inside the full-load envelope") {
    const WindSeries s = build_wind(ou_profile(5), 600.0);
    for (double t = 0.0; t <= 600.0; t += 0.37) {
        const double v = s.sample(t);
        CHECK(v >= 11.4);
        CHECK(v <= 25.0);
    }
}

TEST_CASE("autocorrelation at one correlation time is near 1/e") {
    const WindSeries s = build_wind(ou_profile(17), 20000.0);
    const auto& v = s.raw_values();
    const auto lag = static_cast<std::size_t>(std::llround(10.0 / s.grid_dt()));
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double c0 = 0.0, cl = 0.0;
    for (std::size_t i = 0; i + lag < v.size(); ++i) {
        c0 += (v[i] - mean) * (v[i] - mean);
        cl += (v[i] - mean) * (v[i + lag] - mean);
    }
    CHECK(cl / c0 == Catch::Approx(std::exp(-1.0)).epsilon(0.20));
}

TEST_CASE("CSV export and file profile round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "pitchsim_wind_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "w.csv").string();

    const WindProfile src = ou_profile(7);
    const WindSeries s = build_wind(src, 100.0);
    write_wind_csv(s, src, path);

    WindProfile file;
    file.kind = WindKind::File;
    file.file_path = path;
    const WindSeries r = build_wind(file, 100.0);
    for (double t : {0.0, 12.25, 50.0, 99.5})
        CHECK(r.sample(t) == Catch::Approx(s.sample(t)).margin(1e-9));

    // sampling past the end of the file data is an error
    CHECK_THROWS_AS(build_wind(file, 500.0), std::out_of_range);
    CHECK_THROWS_AS(r.sample(101.0), std::out_of_range);
}

TEST_CASE("file profile requires the header line") {
    const auto dir = std::filesystem::temp_directory_path() / "pitchsim_wind_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "bad.csv").string();
    {
        std::ofstream out(path);
        out << "0,18\n1,19\n";
    }
    WindProfile p;
    p.kind = WindKind::File;
    p.file_path = path;
    CHECK_THROWS_AS(build_wind(p, 1.0), config_error);
}

TEST_CASE("profile validation catches malformed setups") {
    WindProfile p = step_profile();
    p.steps = {{0.0, 18.0}, {0.0, 19.0}};
    CHECK_THROWS_AS(p.validate(), config_error);
    WindProfile q = ou_profile(1);
    q.correlation_time = -2.0;
    CHECK_THROWS_AS(q.validate(), config_error);
}
