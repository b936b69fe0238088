// Copyright 2026 The dunkl-darboux Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "dunkl/darboux.hpp"
#include "dunkl/error.hpp"
#include "dunkl/numerics.hpp"
#include "dunkl/scenarios.hpp"
#include "dunkl/specfun.hpp"

using namespace dunkl::darboux;
using dunkl::numerics::derivative;
using dunkl::numerics::linspace;

namespace {

// Free particle: U = 0, u = cos(k y) at eps = k^2.
Background free_background() {
  return Background{[](double) { return 0.0; }, [](double, int) { return 0.0; }};
}

Solution cosine(double k) {
  return {[k](double y) { return std::cos(k * y); }, [k](double y) { return -k * std::sin(k * y); }};
}

}  // namespace

TEST_CASE("order one Wronskian is the function itself") {
  const auto chain = DarbouxChain::standard({cosine(0.5)}, {0.25}, free_background(), linspace(-1, 1, 11));
  for (double y : {-0.7, 0.1, 0.9}) CHECK(wronskian(chain, y) == doctest::Approx(std::cos(0.5 * y)));
}

TEST_CASE("repeated column gives a vanishing Wronskian") {
  const auto chain = dunkl::scenarios::standard_chain_u12(4.0);
  const ExtraColumn dup{chain.funcs()[0], chain.eps()[0]};
  for (double y : {-1.5, 0.0, 0.8}) {
    const auto w = wronskian_full(chain, y, &dup);
    CHECK(std::fabs(w.w) <= 1e-13 * w.scale);
    CHECK(std::fabs(transformed_solution(chain, dup, y)) <= 1e-10);
  }
}

TEST_CASE("standard order-2 Wronskian derivative") {
  const auto chain = dunkl::scenarios::standard_chain_u12(4.0);
  CHECK(chain.eps()[0] == 0.25);
  CHECK(chain.eps()[1] == -0.75);
  for (double y : {-1.8, -0.5, 0.0, 0.6, 1.0}) {
    const auto w = wronskian_full(chain, y);
    const double want = (chain.eps()[0] - chain.eps()[1]) * chain.funcs()[0].value(y) * chain.funcs()[1].value(y);
    CHECK(w.w1 == doctest::Approx(want).epsilon(1e-12));
    const double stencil = derivative([&](double t) { return wronskian(chain, t); }, y, 1, 1e-3);
    CHECK(std::fabs(stencil - want) <= 1e-8 * std::fabs(want));
    const double stencil2 = derivative([&](double t) { return wronskian(chain, t); }, y, 2, 1e-3);
    CHECK(w.w2 == doctest::Approx(stencil2).epsilon(1e-7));
  }
}

TEST_CASE("empty chain leaves the potential alone") {
  const auto bg = dunkl::scenarios::harmonic_background(4.0);
  const auto chain = DarbouxChain::empty(bg);
  for (double y : {-1.0, 0.5}) CHECK(transformed_potential(chain, y) == doctest::Approx(bg.u(y)).epsilon(1e-14));
}

TEST_CASE("order-1 factorization") {
  const double E = 4.0;
  const auto chain = dunkl::scenarios::standard_chain_u12(E, 1);
  const auto phi = dunkl::scenarios::harmonic_phi({2.5, -1, 1}, E);
  const auto& u = chain.funcs()[0];
  const double e1 = chain.eps()[0];
  const auto bg = chain.background();
  for (double y : {-1.7, -0.4, 0.3, 0.9}) {
    const double u0 = u.value(y), u1 = u.deriv(y);
    const double u2 = (bg.u(y) - e1) * u0;
    const double want_u = bg.u(y) - 2 * (u2 * u0 - u1 * u1) / (u0 * u0);
    CHECK(std::fabs(transformed_potential(chain, y) - want_u) <= 1e-9 * std::max(1.0, std::fabs(want_u)));
    const double want_phi = phi.phi.deriv(y) - u1 / u0 * phi.phi.value(y);
    CHECK(std::fabs(transformed_solution(chain, phi, y) - want_phi) <= 1e-9 * std::max(1.0, std::fabs(want_phi)));
  }
}

TEST_CASE("confluent Wronskian by quadrature") {
  const double E = 4.0;
  const auto chain = dunkl::scenarios::confluent_chain(E);
  const auto& u1 = chain.funcs()[0];
  const double y0 = -2.0;
  const double w0 = wronskian(chain, y0);
  auto w_quad = [&](double y) {
    return w0 - dunkl::numerics::integrate_interval([&](double t) { return u1.value(t) * u1.value(t); }, y0, y).value;
  };
  for (double y : {-1.2, 0.0, 0.7, 1.0}) {
    const double wq = w_quad(y);
    CHECK(wronskian(chain, y) == doctest::Approx(wq).epsilon(1e-6));
    const double w1 = -u1.value(y) * u1.value(y);
    const double w2 = -2 * u1.value(y) * u1.deriv(y);
    const double want = chain.background().u(y) - 2 * (w2 * wq - w1 * w1) / (wq * wq);
    CHECK(transformed_potential(chain, y) == doctest::Approx(want).epsilon(1e-6));
  }
}

TEST_CASE("confluent residuals and exponent") {
  const auto chain = dunkl::scenarios::confluent_chain(4.0);
  CHECK(chain.kind() == ChainKind::Confluent);
  CHECK(chain.eps_of(1) == -2.0);
  const auto grid = dunkl::scenarios::default_y_grid();
  CHECK(chain.member_residual(0, grid) <= 1e-8);
  CHECK(chain.member_residual(1, grid) <= 1e-5);
  // u_1 at eps = -2 carries e^{3y/2}
  const double E = 4.0;
  for (double y : {-1.0, 0.4}) {
    const double z = std::exp(2 * y) / std::sqrt(E);
    const double lag = dunkl::specfun::assoc_laguerre(std::pow(E, 1.5) / 4 - 1.25, 1.5, z).value;
    CHECK(chain.funcs()[0].value(y) == doctest::Approx(std::exp(-z / 2 + 1.5 * y) * lag).epsilon(1e-12));
  }
}

TEST_CASE("degenerate confluent family is rejected") {
  auto fam = [](double, double y) { return std::cos(y); };
  auto dfam = [](double, double y) { return -std::sin(y); };
  CHECK_THROWS_AS(build_confluent_chain(fam, dfam, 1.0, 2, free_background(), linspace(-1, 1, 21)), dunkl::Error);
}

TEST_CASE("transformed solution is linear") {
  const double E = 4.0;
  const auto chain = dunkl::scenarios::standard_chain_u12(E);
  const auto fam = dunkl::scenarios::harmonic_family(E);
  const double eps = -8.75;
  const auto a = fam.at(eps);
  // the reduced Wronskian is multilinear in its columns whether or not they
  // solve the equation, so any smooth second column will do
  const Solution b{[](double y) { return std::sin(y); }, [](double y) { return std::cos(y); }};
  const ExtraColumn p1{a, eps};
  const ExtraColumn p2{b, eps};
  const double alpha = 1.7, beta = -0.4;
  const ExtraColumn mix{{[&](double y) { return alpha * a.value(y) + beta * b.value(y); },
                         [&](double y) { return alpha * a.deriv(y) + beta * b.deriv(y); }},
                        eps};
  for (double y : {-1.0, 0.2}) {
    const double lhs = transformed_solution(chain, mix, y);
    const double rhs = alpha * transformed_solution(chain, p1, y) + beta * transformed_solution(chain, p2, y);
    CHECK(std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, std::fabs(rhs)));
  }
}

TEST_CASE("intertwining of zero and degenerate inputs") {
  const auto chain = dunkl::scenarios::standard_chain_u12(4.0);
  const auto grid = linspace(-1.5, 0.8, 30);
  const ExtraColumn zero{{[](double) { return 0.0; }, [](double) { return 0.0; }}, -8.75};
  const auto out = transform(chain, zero, grid);
  CHECK(intertwining_residual(out, -8.75, 0.5).value == 0.0);
  const auto member = transform(chain, ExtraColumn{chain.funcs()[1], chain.eps()[1]}, grid);
  CHECK(std::fabs(intertwining_residual(member, chain.eps()[1], 0.5).value) < 1e-9);
}

TEST_CASE("intertwining of the standard chain at y = 0.5") {
  const double E = 4.0;
  const auto chain = dunkl::scenarios::standard_chain_u12(E);
  const auto phi = dunkl::scenarios::harmonic_phi({2.5, -1, 1}, E);
  const auto out = transform(chain, phi, dunkl::scenarios::default_y_grid());
  CHECK(out.wronskian_floor > 0.0);
  CHECK(out.poles.empty());
  const auto r = intertwining_residual(out, phi.eps, 0.5);
  CHECK(std::fabs(r.value) <= 1e-6 * r.scale);
}

TEST_CASE("Wronskian zeros and poles") {
  const auto chain = DarbouxChain::standard({cosine(1.0), cosine(2.0)}, {1.0, 4.0}, free_background(),
                                            linspace(-1, 1, 11));
  const auto zeros = wronskian_zeros(chain, -3.0, 3.0, 600);
  REQUIRE(!zeros.empty());
  for (double z : zeros) {
    CHECK(std::fabs(wronskian(chain, z)) < 1e-10);
    CHECK_THROWS_AS(transformed_potential(chain, z), dunkl::Error);
  }
  try {
    transformed_potential(chain, zeros.front());
  } catch (const dunkl::Error& e) {
    CHECK(e.kind() == dunkl::ErrorKind::Singularity);
  }
}

TEST_CASE("chain construction errors") {
  const auto grid = linspace(-1, 1, 11);
  std::vector<Solution> five;
  std::vector<double> eps;
  for (int k = 1; k <= 5; ++k) {
    five.push_back(cosine(k));
    eps.push_back(k * k);
  }
  bool capability = false;
  try {
    const auto chain = DarbouxChain::standard(five, eps, free_background(), grid);
    wronskian(chain, 0.1);
  } catch (const dunkl::Error& e) {
    capability = e.kind() == dunkl::ErrorKind::Capability;
  }
  CHECK(capability);
  CHECK_THROWS_AS(DarbouxChain::standard({cosine(1), cosine(2)}, {1.0, 1.0}, free_background(), grid), dunkl::Error);
  CHECK_THROWS_AS(DarbouxChain::standard({cosine(1)}, {2.0}, free_background(), grid), dunkl::Error);
}

TEST_CASE("energy derivative of the transformed potential") {
  // forward mode against a difference of whole chains, away from the poles
  const double E = 4.0, h = 1e-4;
  const double e1 = dunkl::scenarios::kStandardEps1, e2 = dunkl::scenarios::kStandardEps2;
  auto member_de = [&](double eps) {
    Solution s;
    s.value = [=](double y) {
      return (dunkl::scenarios::harmonic_family(E + h).value(eps, y) -
              dunkl::scenarios::harmonic_family(E - h).value(eps, y)) / (2 * h);
    };
    s.deriv = [=](double y) {
      return (dunkl::scenarios::harmonic_family(E + h).deriv(eps, y) -
              dunkl::scenarios::harmonic_family(E - h).deriv(eps, y)) / (2 * h);
    };
    return s;
  };
  EnergySensitivity sens{{member_de(e1), member_de(e2)}, [=](double y, int k) {
                           return (dunkl::scenarios::harmonic_u_deriv(E + h, y, k) -
                                   dunkl::scenarios::harmonic_u_deriv(E - h, y, k)) / (2 * h);
                         }};
  const auto chain = dunkl::scenarios::standard_chain_u12(E);
  const auto plus = dunkl::scenarios::standard_chain_u12(E + h);
  const auto minus = dunkl::scenarios::standard_chain_u12(E - h);
  for (double y : {-1.5, -0.6, 0.0, 0.4}) {
    const double fd = (transformed_potential(plus, y) - transformed_potential(minus, y)) / (2 * h);
    const double fwd = transformed_potential_energy_derivative(chain, sens, y);
    CHECK(fwd == doctest::Approx(fd).epsilon(1e-6));
  }
}
