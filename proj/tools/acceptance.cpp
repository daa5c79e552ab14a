// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "boxcount/dtsign.hpp"
#include "boxcount/enum3d.hpp"
#include "boxcount/fock.hpp"
#include "boxcount/formulas.hpp"
#include "boxcount/operator_suite.hpp"
#include "boxcount/pyramid.hpp"
#include "boxcount/pyramid_words.hpp"

using namespace boxcount;

namespace {

using Outcome = std::optional<std::string>;

Outcome differ(const std::string& what, const Series& a, const Series& b) {
  auto d = first_difference(a, b);
  if (!d) return std::nullopt;
  return what + ": first difference at " + detail::format_exponents(a.variables(), d->exponents) + " (" +
         d->left.str() + " vs " + d->right.str() + ")";
}

// Returns the first failure among several checks.
Outcome first_of(std::initializer_list<std::function<Outcome()>> checks) {
  for (const auto& c : checks)
    if (auto r = c()) return r;
  return std::nullopt;
}

int failures = 0;

void criterion(int id, const std::string& text, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    result = body();
  } catch (const std::exception& e) {
    result = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!result && secs > budget_seconds)
    result = "took " + std::to_string(secs) + " s, budget " + std::to_string(budget_seconds) + " s";
  if (result) ++failures;
  std::cout << (result ? "FAIL " : "PASS ") << std::setw(2) << id << "  " << text << "  [" << std::fixed
            << std::setprecision(2) << secs << " s]";
  if (result) std::cout << "  -- " << *result;
  std::cout << std::endl;
}

Outcome pyramid_structure() {
  std::vector<std::vector<Brick>> pyramids;
  enumerate_pyramids(8, [&](const std::vector<Brick>& b) { pyramids.push_back(b); });
  for (const auto& bricks : pyramids) {
    PyramidPartition p(bricks);
    for (const auto& b : bricks)
      if (words::endpoint(words::representative(b)) != slice_colour(brick_slice(b)))
        return std::string("colour table disagrees with the quiver");
    for (int m = 0; m <= 8; ++m) {
      if (!interlaces(pyramid_slice(p, 2 * m), pyramid_slice(p, 2 * m + 1)) ||
          !interlaces(pyramid_slice(p, -2 * m - 1), pyramid_slice(p, -2 * m - 2)))
        return std::string("unprimed interlacing fails");
      if (!interlaces(transpose(pyramid_slice(p, 2 * m + 1)), transpose(pyramid_slice(p, 2 * m + 2))) ||
          !interlaces(transpose(pyramid_slice(p, -2 * m)), transpose(pyramid_slice(p, -2 * m - 1))))
        return std::string("transposed interlacing fails");
    }
  }
  // words up to length 6: classes are positions, endpoints are colours, prefixes are parents
  const auto ws = words::words_up_to(6);
  const auto cls = words::word_classes(ws);
  std::map<int, Brick> class_position;
  std::set<Brick> positions;
  std::map<Brick, std::set<Brick>> prefix_parents;
  for (const auto& [w, c] : cls) {
    const Brick b = words::position(w);
    if (class_position.emplace(c, b).first->second != b) return std::string("class with two positions");
    if (!is_valid_brick(b) || words::endpoint(w) != brick_colour(b)) return std::string("word endpoint mismatch");
    positions.insert(b);
    if (!w.empty()) prefix_parents[b].insert(words::position(words::Word(w.begin(), w.end() - 1)));
  }
  if (positions.size() != class_position.size()) return std::string("two classes share a position");
  std::size_t valid = 0;
  for (int y = 0; y <= 6; ++y)
    for (int x = -y; x <= y; ++x)
      for (int z = -y; z <= y; ++z) valid += is_valid_brick({x, y, z});
  if (positions.size() != valid) return std::string("positions do not cover the valid bricks");
  for (const auto& [b, ps] : prefix_parents)
    if (std::vector<Brick>(ps.begin(), ps.end()) != parents(b)) return std::string("prefix parents differ");
  return std::nullopt;
}

}  // namespace

int main() {
  criterion(1, "plane partition counts = M(1,q) through degree 14", 30, [] {
    auto v = GroupSpec::cyclic(1).variables();
    return differ("enumeration vs MacMahon", coloured_series(OctantColouring::cyclic(1), 14),
                  mac_M(v, Monomial::one(), Monomial::variable(0), 14));
  });

  criterion(2, "Z_n coloured enumeration = product formula, n = 2,3,4, degree 12", 300, [] {
    for (int n : {2, 3, 4})
      if (auto r = differ("Z_" + std::to_string(n), coloured_series(OctantColouring::cyclic(n), 12), closed_Zn(n, 12)))
        return r;
    return Outcome{};
  });

  criterion(3, "Klein coloured enumeration = product formula, degree 12", 300, [] {
    return differ("Klein", coloured_series(OctantColouring::klein(), 12), closed_Klein(12));
  });

  criterion(4, "pyramid partition enumeration = product formula, degree 12", 300,
            [] { return differ("pyramid", pyramid_series(12), closed_pyramid(12)); });

  criterion(5, "Klein product = M~(qa qb, q) * pyramid product, degree 14", 10, [] {
    auto v = pyramid_variables();
    auto qab = Monomial::of(*v, {{"qa", 1}, {"qb", 1}});
    auto q = Monomial::of(*v, {{"q0", 1}, {"qa", 1}, {"qb", 1}, {"qc", 1}});
    return differ("factorisation", closed_Klein(14), mac_Mtilde(v, qab, q, 14) * closed_pyramid(14));
  });

  criterion(6, "transfer products = enumerations (Z_1..Z_3, pyramid at 10; both pyramid slicings at 8)", 600, [] {
    return first_of({
        [] { return differ("Z_1", transfer_Zn(1, 10), coloured_series(OctantColouring::cyclic(1), 10)); },
        [] { return differ("Z_2", transfer_Zn(2, 10), coloured_series(OctantColouring::cyclic(2), 10)); },
        [] { return differ("Z_3", transfer_Zn(3, 10), coloured_series(OctantColouring::cyclic(3), 10)); },
        [] { return differ("pyramid", transfer_pyramid(10), pyramid_series(10)); },
        [] { return differ("pyramid slicings", transfer_pyramid(8), transfer_pyramid_checkerboard(8)); },
    });
  });

  criterion(7, "operator identities on all partitions up to size 6 (Heisenberg up to 8)", 600, []() -> Outcome {
    auto checks = commutator_checks(6);
    checks.insert(checks.begin(), heisenberg_check(4, 8));
    for (const auto& c : checks)
      if (auto r = c.run()) return c.name + ": " + *r;
    return std::nullopt;
  });

  criterion(8, "skew Schur matrix coefficients of Gamma_-(q) and Gamma'_-(q), sizes up to 6", 60,
            [] { return skew_schur_check(6).run(); });

  criterion(9, "fixed-point parity sign = closed-form sign for all diagrams up to 8 boxes", 600, []() -> Outcome {
    std::vector<Diagram3D> diagrams;
    enumerate_diagrams(8, [&](const SliceChain& s) { diagrams.push_back(slices_to_diagram(s)); });
    for (const char* name : {"zn:2", "zn:3", "zn:4", "zn:5", "klein", "z3diag"}) {
      const auto g = parse_group(name);
      for (const auto& d : diagrams)
        if ((invariant_parity(d, g) ? -1 : 1) != sign_closed_form(d, g))
          return std::string(name) + ": sign mismatch on a diagram with " + std::to_string(d.size()) + " boxes";
    }
    return std::nullopt;
  });

  criterion(10, "signed enumeration = sign-substituted enumeration = DT product, degree 10", 600, []() -> Outcome {
    for (const char* name : {"zn:2", "zn:3", "klein"}) {
      const auto g = parse_group(name);
      const auto plain = coloured_series(g.colouring(), 10);
      const auto flipped = g.kind == ColouringKind::klein ? substitute_signs(plain, std::vector<std::size_t>{1, 2, 3})
                                                          : substitute_signs(plain, std::vector<std::size_t>{0});
      const auto signed_series = dt_signed_series(g, 10);
      if (auto r = differ(std::string(name) + " signed vs flipped", signed_series, flipped)) return r;
      if (auto r = differ(std::string(name) + " flipped vs product", flipped, dt_orbifold(g, 10))) return r;
    }
    return std::nullopt;
  });

  criterion(11, "crepant resolution identity for Z_2, Z_3, Klein, degree 12", 60, []() -> Outcome {
    for (const char* name : {"zn:2", "zn:3", "klein"}) {
      const auto g = parse_group(name);
      if (auto r = differ(name, dt_orbifold(g, 12), crc_rhs(g, 12))) return r;
    }
    return std::nullopt;
  });

  criterion(12, "pyramid slice colours and interlacing (up to 8 bricks), word model (length up to 6)", 600,
            pyramid_structure);

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
