#pragma once

// Seeded random generators for property tests.

#include <array>
#include <random>
#include <string>
#include <vector>

#include "vecinv/coords.hpp"
#include "vecinv/expr.hpp"
#include "vecinv/vecops.hpp"

namespace vecinv::testing {

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    // p/q with 1 <= |p| <= 9, 1 <= q <= 9.
    Rational coefficient() {
        int p = uniform(1, 9) * (uniform(0, 1) ? 1 : -1);
        return make_rational(p, uniform(1, 9));
    }

    // Random polynomial in the three names: 1..max_terms monomials with
    // exponents 0..max_degree per variable.
    Expression polynomial(const std::array<std::string, 3>& names, int max_terms = 4, int max_degree = 3) {
        std::vector<Expression> terms;
        const int n = uniform(1, max_terms);
        for (int t = 0; t < n; ++t) {
            std::vector<Expression> factors{Expression(coefficient())};
            for (const auto& name : names) {
                int e = uniform(0, max_degree);
                if (e > 0) factors.push_back(pow(Expression::variable(name), e));
            }
            terms.push_back(Expression::product(std::move(factors)));
        }
        return Expression::sum(std::move(terms));
    }

    VectorField polynomial_field(const CoordinateSystem& system, int max_terms = 4, int max_degree = 3) {
        return {{polynomial(system.names(), max_terms, max_degree), polynomial(system.names(), max_terms, max_degree),
                 polynomial(system.names(), max_terms, max_degree)},
                system};
    }

    // Random expression tree over x, y, z; negative powers only on atoms.
    Expression expression(int depth) {
        static const std::array<std::string, 3> vars{"x", "y", "z"};
        if (depth <= 0 || uniform(0, 4) == 0) {
            if (uniform(0, 2) == 0) return Expression(coefficient());
            return Expression::variable(vars[static_cast<std::size_t>(uniform(0, 2))]);
        }
        switch (uniform(0, 6)) {
            case 0:
            case 1: {
                std::vector<Expression> children;
                for (int i = uniform(2, 3); i > 0; --i) children.push_back(expression(depth - 1));
                return Expression::sum(std::move(children));
            }
            case 2:
            case 3: {
                std::vector<Expression> children;
                for (int i = uniform(2, 3); i > 0; --i) children.push_back(expression(depth - 1));
                return Expression::product(std::move(children));
            }
            case 4: {
                if (uniform(0, 1) == 0) {
                    return pow(Expression::variable(vars[static_cast<std::size_t>(uniform(0, 2))]), uniform(-2, -1));
                }
                return pow(expression(depth - 1), uniform(1, 3));
            }
            case 5: {
                static const std::array<Function, 3> fns{Function::Sin, Function::Cos, Function::Exp};
                return Expression::apply(fns[static_cast<std::size_t>(uniform(0, 2))], expression(depth - 2));
            }
            default: return Expression::negate(expression(depth - 1));
        }
    }

    Point point(const std::array<std::string, 3>& names, const SamplingBox& box) {
        Point p;
        for (std::size_t i = 0; i < 3; ++i) p[names[i]] = real(box[i].lo, box[i].hi);
        return p;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace vecinv::testing
