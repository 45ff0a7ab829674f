#include "pierce/generate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "pierce/rng.hpp"

namespace pierce {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool clear_of(const std::vector<Point>& pts, Point p, double floor) {
    for (const Point& q : pts)
        if (dist(p, q) <= floor) return false;
    return true;
}

}  // namespace

const char* to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::UniformSquare: return "uniform-square";
        case GeneratorKind::Gaussian: return "gaussian";
        case GeneratorKind::Clustered: return "clustered";
        case GeneratorKind::CircleBoundary: return "circle-boundary";
    }
    return "?";
}

std::optional<GeneratorKind> generator_from_string(std::string_view name) {
    if (name == "uniform-square") return GeneratorKind::UniformSquare;
    if (name == "gaussian") return GeneratorKind::Gaussian;
    if (name == "clustered") return GeneratorKind::Clustered;
    if (name == "circle-boundary") return GeneratorKind::CircleBoundary;
    return std::nullopt;
}

void validate_config(const RunConfig& config) {
    if (config.trials < 1) throw Error("config: trials must be at least 1");
    if (config.n_min < 2) throw Error("config: n_min must be at least 2");
    if (config.n_min > config.n_max) throw Error("config: n_min exceeds n_max");
}

Instance generate_instance(const RunConfig& config, int trial_index) {
    validate_config(config);
    std::mt19937_64 rng(mix_seed(config.seed, static_cast<std::uint64_t>(trial_index)));
    std::uniform_int_distribution<int> size_dist(config.n_min, config.n_max);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const int n = size_dist(rng);
    const double floor = 4.0 * config.tol.eps_abs;
    std::vector<Point> pts;
    pts.reserve(n);

    const auto emplace_fresh = [&](auto&& draw) {
        for (;;) {
            const Point p = draw();
            if (clear_of(pts, p, floor)) {
                pts.push_back(p);
                return;
            }
        }
    };

    switch (config.generator) {
        case GeneratorKind::UniformSquare:
            for (int k = 0; k < n; ++k)
                emplace_fresh([&] { return Point{unit(rng), unit(rng)}; });
            break;
        case GeneratorKind::Gaussian:
            for (int k = 0; k < n; ++k)
                emplace_fresh([&] { return Point{gauss(rng), gauss(rng)}; });
            break;
        case GeneratorKind::Clustered: {
            const int clusters = std::max(1, n / 8);
            std::vector<Point> centers;
            centers.reserve(clusters);
            for (int k = 0; k < clusters; ++k) centers.push_back(Point{unit(rng), unit(rng)});
            for (int k = 0; k < n; ++k) {
                const Point c = centers[k % clusters];
                emplace_fresh([&] { return Point{c.x + 0.02 * gauss(rng), c.y + 0.02 * gauss(rng)}; });
            }
            break;
        }
        case GeneratorKind::CircleBoundary: {
            const Point center{unit(rng), unit(rng)};
            const double radius = 0.5 + 1.5 * unit(rng);
            const auto at_angle = [&](double a) {
                return Point{center.x + radius * std::cos(a), center.y + radius * std::sin(a)};
            };
            if (n >= 3) {
                const double base = kTwoPi * unit(rng);
                for (int k = 0; k < 3; ++k)
                    pts.push_back(at_angle(base + k * kTwoPi / 3.0));
            }
            while (static_cast<int>(pts.size()) < n)
                emplace_fresh([&] { return at_angle(kTwoPi * unit(rng)); });
            break;
        }
    }

    return make_instance(std::move(pts),
                         std::string(to_string(config.generator)) + "-s" +
                             std::to_string(config.seed) + "-t" + std::to_string(trial_index),
                         config.tol);
}

}  // namespace pierce
