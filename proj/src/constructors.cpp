#include "oortlab/constructors.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "oortlab/arith.hpp"
#include "oortlab/errors.hpp"
#include "oortlab/finite_field.hpp"

namespace oortlab {

namespace {

bool is_power_of_two(std::uint32_t n) { return n != 0 && (n & (n - 1)) == 0; }

Group checked(Group g, std::uint64_t expected, const std::string& what) {
  if (g.order() != expected) {
    throw std::logic_error(what + " has order " + std::to_string(g.order()) + ", expected " +
                           std::to_string(expected));
  }
  return g;
}

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t last) {
  std::vector<std::size_t> cyc;
  for (std::size_t i = first; i <= last; ++i) cyc.push_back(i);
  return Permutation::from_cycles(degree, {cyc});
}

using Mat2 = std::array<std::uint32_t, 4>;  // row-major a b / c d

// Fraction-linear action on the projective line: (x : y) -> (ax + by : cx + dy).
// Point a < q is (a : 1), point q is (1 : 0).
Permutation projective_line_action(const Field& F, const Mat2& m) {
  const std::uint32_t q = F.size();
  std::vector<Point> im(q + 1);
  for (std::uint32_t pt = 0; pt <= q; ++pt) {
    std::uint32_t x = pt < q ? pt : 1;
    std::uint32_t y = pt < q ? 1 : 0;
    std::uint32_t nx = F.add(F.mul(m[0], x), F.mul(m[1], y));
    std::uint32_t ny = F.add(F.mul(m[2], x), F.mul(m[3], y));
    im[pt] = static_cast<Point>(ny == 0 ? q : F.mul(nx, F.inv(ny)));
  }
  return Permutation(std::move(im));
}

std::vector<Permutation> sl2_generators(const Field& F) {
  std::vector<Permutation> gens;
  for (auto beta : F.polynomial_basis()) gens.push_back(projective_line_action(F, {1, beta, 0, 1}));
  gens.push_back(projective_line_action(F, {0, F.neg(1), 1, 0}));
  return gens;
}

void check_linear_q(std::uint32_t q) {
  if (q > 64) throw TooLarge("q must be at most 64");
  if (!prime_power(q)) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  if (q < 4) throw RangeError("q must be at least 4");
}

}  // namespace

Group regular_representation(std::uint32_t n,
                             const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul,
                             const std::vector<std::uint32_t>& generators) {
  std::vector<Permutation> gens;
  for (std::uint32_t g : generators) {
    std::vector<Point> im(n);
    for (std::uint32_t x = 0; x < n; ++x) im[x] = static_cast<Point>(mul(g, x));
    gens.emplace_back(std::move(im));
  }
  return Group(n, std::move(gens));
}

Group cyclic(std::uint32_t m) {
  if (m < 1 || m > kMaxDegree) throw RangeError("cyclic order must be in [1, 65535]");
  if (m == 1) return Group::trivial(1);
  return checked(Group(m, {cycle_on(m, 0, m - 1)}), m, "C_" + std::to_string(m));
}

Group dihedral(std::uint32_t two_n) {
  if (two_n < 2 || two_n % 2 != 0 || two_n / 2 > kMaxDegree) {
    throw RangeError("dihedral order must be even and at least 2");
  }
  const std::uint32_t n = two_n / 2;
  if (n == 1) return Group(2, {Permutation::from_cycles(2, {{0, 1}})});
  if (n == 2) {
    return checked(Group(4, {Permutation::from_cycles(4, {{0, 1}}),
                             Permutation::from_cycles(4, {{2, 3}})}),
                   4, "D_4");
  }
  std::vector<Point> refl(n);
  for (std::uint32_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return checked(Group(n, {cycle_on(n, 0, n - 1), Permutation(std::move(refl))}), two_n,
                 "D_" + std::to_string(two_n));
}

Group quaternion(std::uint32_t two_k) {
  if (!is_power_of_two(two_k) || two_k < 8 || two_k > 1024) {
    throw RangeError("quaternion order must be a power of two in [8, 1024]");
  }
  const std::uint32_t N = two_k / 2;  // order of a
  // Code i + N*e is a^i b^e; b a b^-1 = a^-1, b^2 = a^(N/2).
  auto mul = [N](std::uint32_t x, std::uint32_t y) {
    std::uint32_t i = x % N, e = x / N, j = y % N, f = y / N;
    std::uint32_t jj = e ? (N - j) % N : j;
    std::uint32_t exp = (i + jj) % N;
    std::uint32_t b = e + f;
    if (b == 2) {
      exp = (exp + N / 2) % N;
      b = 0;
    }
    return exp + N * b;
  };
  return checked(regular_representation(two_k, mul, {1, N}), two_k,
                 "Q_" + std::to_string(two_k));
}

Group semidihedral(std::uint32_t two_k) {
  if (!is_power_of_two(two_k) || two_k < 16 || two_k > 1024) {
    throw RangeError("semidihedral order must be a power of two in [16, 1024]");
  }
  const std::uint32_t N = two_k / 2;
  // b a b^-1 = a^(N/2 - 1), b^2 = 1.
  auto mul = [N](std::uint32_t x, std::uint32_t y) {
    std::uint32_t i = x % N, e = x / N, j = y % N, f = y / N;
    std::uint32_t jj = e ? static_cast<std::uint32_t>((static_cast<std::uint64_t>(j) * (N / 2 - 1)) % N) : j;
    return (i + jj) % N + N * ((e + f) % 2);
  };
  return checked(regular_representation(two_k, mul, {1, N}), two_k,
                 "SD_" + std::to_string(two_k));
}

Group alternating(std::uint32_t n) {
  if (n < 1 || n > 20) throw RangeError("alternating degree must be in [1, 20]");
  if (n < 3) return Group::trivial(n);
  std::vector<Permutation> gens{cycle_on(n, 0, 2)};
  if (n > 3) gens.push_back(n % 2 == 1 ? cycle_on(n, 0, n - 1) : cycle_on(n, 1, n - 1));
  return checked(Group(n, std::move(gens)), factorial(n) / 2, "A_" + std::to_string(n));
}

Group symmetric(std::uint32_t n) {
  if (n < 1 || n > 20) throw RangeError("symmetric degree must be in [1, 20]");
  if (n == 1) return Group::trivial(1);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) gens.push_back(cycle_on(n, 0, n - 1));
  return checked(Group(n, std::move(gens)), factorial(n), "S_" + std::to_string(n));
}

Group psl2(std::uint32_t q) {
  check_linear_q(q);
  Field F = field(q);
  std::uint64_t qq = q;
  std::uint64_t expected = qq * (qq * qq - 1) / std::gcd<std::uint64_t>(2, qq - 1);
  return checked(Group(q + 1, sl2_generators(F)), expected, "PSL(2," + std::to_string(q) + ")");
}

Group pgl2(std::uint32_t q) {
  check_linear_q(q);
  Field F = field(q);
  auto gens = sl2_generators(F);
  gens.push_back(projective_line_action(F, {F.primitive_element(), 0, 0, 1}));
  std::uint64_t qq = q;
  return checked(Group(q + 1, std::move(gens)), qq * (qq * qq - 1),
                 "PGL(2," + std::to_string(q) + ")");
}

Group psl3_4() {
  Field F = field(4);
  // Normalized vectors (first nonzero coordinate 1) numbered in lexicographic order.
  std::vector<std::array<std::uint32_t, 3>> points;
  std::vector<std::int32_t> point_of(64, -1);
  auto code = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) { return a * 16 + b * 4 + c; };
  auto normalize = [&](std::array<std::uint32_t, 3> v) {
    for (auto x : v) {
      if (x != 0) {
        auto s = F.inv(x);
        for (auto& y : v) y = F.mul(y, s);
        break;
      }
    }
    return v;
  };
  for (std::uint32_t c = 1; c < 64; ++c) {
    std::array<std::uint32_t, 3> v{c / 16, (c / 4) % 4, c % 4};
    if (normalize(v) == v) {
      point_of[c] = static_cast<std::int32_t>(points.size());
      points.push_back(v);
    }
  }
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < 3; ++i) {
    for (std::uint32_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (auto beta : F.polynomial_basis()) {
        // Elementary matrix I + beta * E_ij acting on column vectors.
        std::vector<Point> im(points.size());
        for (std::size_t pt = 0; pt < points.size(); ++pt) {
          auto v = points[pt];
          v[i] = F.add(v[i], F.mul(beta, v[j]));
          auto n = normalize(v);
          im[pt] = static_cast<Point>(point_of[code(n[0], n[1], n[2])]);
        }
        gens.emplace_back(std::move(im));
      }
    }
  }
  return checked(Group(points.size(), std::move(gens)), 20160, "PSL(3,4)");
}

Group abelian_by_dihedral_inversion(std::uint32_t m, std::uint32_t two_k, InversionKernel kernel) {
  if (m < 1 || m % 2 == 0 || m > 255) throw RangeError("m must be odd and in [1, 255]");
  if (!is_power_of_two(two_k) || two_k < 8 || two_k > 256) {
    throw RangeError("dihedral order must be a power of two in [8, 256]");
  }
  const std::uint32_t N = two_k / 2;  // rotation order
  // Code a + m * (i + N * e) for the element (a, rho^i s^e).
  auto chi = [&](std::uint32_t i, std::uint32_t e) -> bool {  // true: acts by inversion
    return kernel == InversionKernel::Cyclic ? e == 1 : (i % 2 == 1);
  };
  auto mul = [&](std::uint32_t x, std::uint32_t y) {
    std::uint32_t a1 = x % m, d1 = x / m, a2 = y % m, d2 = y / m;
    std::uint32_t i = d1 % N, e = d1 / N, j = d2 % N, f = d2 / N;
    std::uint32_t a = (a1 + (chi(i, e) ? (m - a2) % m : a2)) % m;
    std::uint32_t rot = (i + (e ? (N - j) % N : j)) % N;
    return a + m * (rot + N * ((e + f) % 2));
  };
  std::vector<std::uint32_t> gens{m * 1, m * N};
  if (m > 1) gens.insert(gens.begin(), 1);
  return checked(regular_representation(m * two_k, mul, gens), std::uint64_t{m} * two_k,
                 "INV group");
}

Group deleted_perm_semidirect(std::uint32_t r, TopGroup top, bool sign_twist) {
  if (r != 5 && r != 7 && r != 11 && r != 13) throw RangeError("r must be one of 5, 7, 11, 13");
  if (sign_twist && top != TopGroup::S4) throw RangeError("sign twist requires the S4 top group");
  const std::uint32_t n = r * r * r;
  auto index = [r](const std::array<std::uint32_t, 4>& v) { return v[0] + r * v[1] + r * r * v[2]; };
  auto vec = [r](std::uint32_t x) {
    std::array<std::uint32_t, 4> v{x % r, (x / r) % r, x / (r * r), 0};
    v[3] = (4 * r - v[0] - v[1] - v[2]) % r;
    return v;
  };
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < 3; ++i) {
    std::vector<Point> im(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      auto v = vec(x);
      v[i] = (v[i] + 1) % r;
      im[x] = static_cast<Point>(index(v));
    }
    gens.emplace_back(std::move(im));
  }
  // Coordinate permutations sigma: (sigma v)_{sigma(i)} = v_i, with sign for odd sigma.
  std::vector<std::pair<std::array<std::uint32_t, 4>, bool>> tops;
  if (top == TopGroup::A4) {
    tops.push_back({{1, 2, 0, 3}, false});
    tops.push_back({{1, 0, 3, 2}, false});
  } else {
    tops.push_back({{1, 2, 3, 0}, true});
    tops.push_back({{1, 0, 2, 3}, true});
  }
  for (const auto& [sigma, odd] : tops) {
    const bool negate = sign_twist && odd;
    std::vector<Point> im(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      auto v = vec(x);
      std::array<std::uint32_t, 4> w{};
      for (std::uint32_t i = 0; i < 4; ++i) w[sigma[i]] = negate ? (r - v[i]) % r : v[i];
      im[x] = static_cast<Point>(index(w));
    }
    gens.emplace_back(std::move(im));
  }
  std::uint64_t expected = std::uint64_t{n} * (top == TopGroup::A4 ? 12 : 24);
  return checked(Group(n, std::move(gens)), expected, "DELPERM group");
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t da = a.degree(), db = b.degree();
  if (da + db > kMaxDegree) throw TooLarge("direct product degree exceeds the limit");
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> im(da + db);
    std::iota(im.begin(), im.end(), Point{0});
    for (std::size_t i = 0; i < da; ++i) im[i] = g(static_cast<Point>(i));
    gens.emplace_back(std::move(im));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> im(da + db);
    std::iota(im.begin(), im.end(), Point{0});
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<Point>(da + g(static_cast<Point>(i)));
    gens.emplace_back(std::move(im));
  }
  return checked(Group(da + db, std::move(gens)), a.order() * b.order(), "direct product");
}

}  // namespace oortlab
