#include "milnor/validate.hpp"

#include <numeric>
#include <optional>
#include <set>

#include "milnor/ehrhart.hpp"
#include "milnor/oracles.hpp"

namespace milnor {
namespace {

using Outcome = std::optional<std::string>;  // failure detail, nullopt on success

std::string entry(int p, int q, const RootOfUnity& a, Int v) {
  return "e^{" + std::to_string(p) + "," + std::to_string(q) + "}_" + a.str() + " = " + std::to_string(v);
}

class Runner {
 public:
  template <class Fn>
  void run(const std::string& name, Fn&& fn) {
    ValidationCheck check{name, true, ""};
    try {
      if (Outcome failure = fn()) {
        check.pass = false;
        check.detail = *failure;
      }
    } catch (const std::exception& e) {
      check.pass = false;
      check.detail = e.what();
    }
    report.checks.push_back(std::move(check));
  }

  ValidationReport report;
};

Outcome conjugation(const HodgeTable& t, const std::string& what) {
  for (const auto& [idx, v] : t.entries()) {
    const Int w = t.get(idx.q, idx.p, idx.alpha.inverse());
    if (w != v) return what + ": " + entry(idx.p, idx.q, idx.alpha, v) + " but " + entry(idx.q, idx.p, idx.alpha.inverse(), w);
  }
  return std::nullopt;
}

Outcome steenbrink_saito(const HodgeTable& total, int n) {
  for (const auto& [idx, v] : total.entries()) {
    const auto [p, q, a] = idx;
    if (!a.is_one()) {
      if (p < 0 || q < 0 || p > n - 1 || q > n - 1) return "entry outside [0,n-1]^2: " + entry(p, q, a, v);
      const Int w = total.get(n - 1 - q, n - 1 - p, a);
      if (w != v) return entry(p, q, a, v) + " but " + entry(n - 1 - q, n - 1 - p, a, w);
    } else {
      if (p == 0 && q == 0) continue;
      if (p < 1 || q < 1 || p > n - 1 || q > n - 1) return "entry outside {(0,0)} and [1,n-1]^2: " + entry(p, q, a, v);
      const Int w = total.get(n - q, n - p, a);
      if (w != v) return entry(p, q, a, v) + " but " + entry(n - q, n - p, a, w);
    }
  }
  if (total.get(0, 0, RootOfUnity()) != 1) return entry(0, 0, RootOfUnity(), total.get(0, 0, RootOfUnity())) + ", expected 1";
  return std::nullopt;
}

std::vector<RootOfUnity> nontrivial_candidates(const NewtonPolyhedron& np) {
  std::set<RootOfUnity> out;
  for (const auto& face : np.faces)
    for (Int den = 2; den <= face.d; ++den)
      if (face.d % den == 0)
        for (Int num = 1; num < den; ++num)
          if (std::gcd(num, den) == 1) out.insert(RootOfUnity(num, den));
  return {out.begin(), out.end()};
}

}  // namespace

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate(const NewtonPolyhedron& np, const ValidationOptions& options) {
  const int n = np.n();
  const RootOfUnity one;
  Runner r;

  MotivicTable mt = motivic_milnor_table(np);
  if (options.tamper) options.tamper(mt);
  std::vector<FaceChart> charts;
  for (const auto& face : np.faces) charts.push_back(face_chart(np, face));

  r.run("face-euler-characteristic", [&]() -> Outcome {
    for (const auto& face : np.faces) {
      const FaceChart& fc = charts[face.id];
      const FaceTables& ft = mt.faces[face.id];
      const Int want_delta = sign_power(fc.delta.dim() - 1) * normalized_volume(fc.delta);
      if (ft.delta.total() != want_delta)
        return "pyramid over " + describe_face(face) + ": total " + std::to_string(ft.delta.total()) + " != " +
               std::to_string(want_delta);
      if (face.dim >= 1) {
        const Int want_gamma = sign_power(face.dim - 1) * normalized_volume(fc.gamma);
        if (ft.gamma.total() != want_gamma)
          return describe_face(face) + ": total " + std::to_string(ft.gamma.total()) + " != " + std::to_string(want_gamma);
      }
    }
    return std::nullopt;
  });

  r.run("face-conjugation-symmetry", [&]() -> Outcome {
    for (const auto& face : np.faces) {
      if (auto f = conjugation(mt.faces[face.id].delta, "pyramid over " + describe_face(face))) return f;
      if (auto f = conjugation(mt.faces[face.id].gamma, describe_face(face))) return f;
    }
    return std::nullopt;
  });

  r.run("pyramid-identity", [&]() -> Outcome {
    for (const auto& face : np.faces) {
      const PyramidCheck pc = pyramid_identity(np, face);
      if (!pc.pass) return pc.detail;
    }
    return std::nullopt;
  });

  r.run("global-identity", [&]() -> Outcome {
    HodgeTable sum(n);
    for (const auto& face : np.faces) {
      const FaceTables& ft = mt.faces[face.id];
      sum += lefschetz_twist(ft.delta + ft.gamma, face.m + 1);
    }
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        const Int want = (p == 0 && q == 0) ? 1 : (p == n && q == n) ? -1 : 0;
        if (sum.get(p, q, one) != want) return entry(p, q, one, sum.get(p, q, one)) + ", expected " + std::to_string(want);
      }
    for (const auto& [idx, v] : sum.entries())
      if (idx.alpha.is_one() && (idx.p > n || idx.q > n)) return entry(idx.p, idx.q, one, v) + ", expected 0";
    return std::nullopt;
  });

  r.run("ehrhart-shift", [&]() -> Outcome {
    for (const auto& face : np.faces) {
      const FaceChart& fc = charts[face.id];
      const PhiTable& big = p_alpha(fc.delta, fc.character);
      const PhiTable& small = p_alpha(fc.gamma, Character::trivial(face.dim));
      for (int j = 0; j <= face.dim + 2; ++j) {
        const Int want = j == 0 ? 0 : small.phi(one, j - 1);
        if (big.phi(one, j) != want)
          return "pyramid over " + describe_face(face) + ": coefficient " + std::to_string(j) + " is " +
                 std::to_string(big.phi(one, j)) + ", shifted face gives " + std::to_string(want);
      }
    }
    return std::nullopt;
  });

  r.run("steenbrink-saito", [&]() { return steenbrink_saito(mt.total, n); });

  r.run("eigenvalue-one-routes", [&]() -> Outcome {
    const UnipotentRoutes routes = unipotent_routes(mt);
    for (int k = 1; k < n; ++k)
      if (routes.via_total[k] != routes.via_first_sum[k])
        return "N_{>=" + std::to_string(k) + "}: " + std::to_string(routes.via_total[k]) + " vs " +
               std::to_string(routes.via_first_sum[k]);
    return std::nullopt;
  });

  r.run("pseudo-prime-row-sums", [&]() -> Outcome {
    for (const auto& face : np.faces) {
      const FaceChart& fc = charts[face.id];
      if (primeness(fc.delta) == Primeness::Neither) continue;
      const HodgeTable& t = mt.faces[face.id].delta;
      std::set<RootOfUnity> alphas = t.alphas();
      for (const auto& [a, coeffs] : p_alpha(fc.delta, fc.character).coefficients) alphas.insert(a);
      for (const auto& a : alphas) {
        if (a.is_one()) continue;
        for (const auto& [row, value] : pseudo_prime_row_sums(fc.delta, fc.character, a))
          if (t.antidiagonal(row, a) != value)
            return "pyramid over " + describe_face(face) + ", eigenvalue " + a.str() + ", p+q=" + std::to_string(row) +
                   ": table " + std::to_string(t.antidiagonal(row, a)) + ", closed formula " + std::to_string(value);
      }
    }
    return std::nullopt;
  });

  std::optional<JordanSpectrum> spectrum;
  std::string spectrum_error;
  try {
    spectrum = jordan_blocks(mt);
  } catch (const std::exception& e) {
    spectrum_error = e.what();
  }
  auto with_spectrum = [&](auto&& fn) -> Outcome {
    if (!spectrum) return "no spectrum: " + spectrum_error;
    return fn(*spectrum);
  };
  const std::vector<RootOfUnity> lambdas = nontrivial_candidates(np);

  r.run("block-counts", [&]() {
    return with_spectrum([&](const JordanSpectrum& js) -> Outcome {
      std::set<RootOfUnity> seen{one};
      for (const auto& [key, c] : js.blocks) seen.insert(key.first);
      Int mu = 0;
      for (const auto& lambda : seen) {
        const int bound = lambda.is_one() ? n - 1 : n;
        Int weighted = 0;
        for (int k = 1; k <= n + 1; ++k) {
          const Int c = js.count(lambda, k);
          if (c < 0) return "negative count at " + lambda.str() + " size " + std::to_string(k);
          if (c > 0 && k > bound) return "block of size " + std::to_string(k) + " for eigenvalue " + lambda.str();
          if (js.at_least(lambda, k + 1) > js.at_least(lambda, k)) return "non-monotone counts at " + lambda.str();
          weighted += k * c;
        }
        auto it = js.multiplicities.find(lambda);
        const Int mult = it == js.multiplicities.end() ? 0 : it->second;
        if (weighted != mult) return "sizes of " + lambda.str() + " blocks add to " + std::to_string(weighted);
        mu += mult;
      }
      if (mu != js.mu) return std::string("multiplicities do not add up to mu");
      return std::nullopt;
    });
  });

  r.run("milnor-number", [&]() {
    return with_spectrum([&](const JordanSpectrum& js) -> Outcome {
      const Int oracle = kouchnirenko_mu(np);
      if (js.mu != oracle) return "mu " + std::to_string(js.mu) + " vs Kouchnirenko " + std::to_string(oracle);
      const Int fast = newton_number(np);
      if (fast != oracle) return "face-volume Newton number " + std::to_string(fast) + " vs " + std::to_string(oracle);
      return std::nullopt;
    });
  });

  r.run("fastpath-top", [&]() {
    return with_spectrum([&](const JordanSpectrum& js) -> Outcome {
      for (const auto& lambda : lambdas) {
        const auto [top, next] = fastpath_top(np, lambda);
        if (top != js.count(lambda, n) || next != js.count(lambda, n - 1))
          return lambda.str() + ": closed formula (" + std::to_string(top) + "," + std::to_string(next) +
                 "), general (" + std::to_string(js.count(lambda, n)) + "," + std::to_string(js.count(lambda, n - 1)) + ")";
      }
      return std::nullopt;
    });
  });

  r.run("fastpath-unipotent", [&]() {
    return with_spectrum([&](const JordanSpectrum& js) -> Outcome {
      const auto [a, b] = fastpath_unipotent(np);
      const Int want_b = n >= 3 ? js.count(one, n - 2) : 0;
      if (a != js.count(one, n - 1) || b != want_b)
        return "closed formula (" + std::to_string(a) + "," + std::to_string(b) + "), general (" +
               std::to_string(js.count(one, n - 1)) + "," + std::to_string(want_b) + ")";
      return std::nullopt;
    });
  });

  r.run("prime-face-blocks", [&]() {
    return with_spectrum([&](const JordanSpectrum& js) -> Outcome {
      if (first_non_prime_face(np) >= 0) return std::nullopt;
      for (const auto& lambda : lambdas)
        for (int k = 1; k <= n; ++k) {
          const Int closed = prime_face_blocks(np, lambda, k);
          if (closed != js.at_least(lambda, k))
            return lambda.str() + ", size >= " + std::to_string(k) + ": closed formula " + std::to_string(closed) +
                   ", general " + std::to_string(js.at_least(lambda, k));
        }
      return std::nullopt;
    });
  });

  r.run("quasi-homogeneous-semisimple", [&]() {
    return with_spectrum([&](const JordanSpectrum& js) -> Outcome {
      for (const auto& face : np.faces) {
        if (face.dim != n - 1) continue;
        const FaceChart& fc = charts[face.id];
        bool all_on = true;
        for (const auto& p : np.support.points) all_on = all_on && fc.height(p) == 0;
        if (!all_on) continue;
        for (const auto& [key, c] : js.blocks)
          if (key.second > 1) return "quasi-homogeneous support has a size-" + std::to_string(key.second) + " block at " + key.first.str();
      }
      return std::nullopt;
    });
  });

  r.run("brieskorn-pham", [&]() {
    return with_spectrum([&](const JordanSpectrum& js) -> Outcome {
      const auto exps = brieskorn_pham_exponents(np.support);
      if (!exps) return std::nullopt;
      const BrieskornPham bp = brieskorn_pham_spectrum(*exps);
      if (bp.spectrum.blocks != js.blocks) return std::string("Jordan spectrum differs from the Brieskorn-Pham oracle");
      if (bp.spectrum.mu != js.mu) return "mu " + std::to_string(js.mu) + " vs " + std::to_string(bp.spectrum.mu);
      return std::nullopt;
    });
  });

  return r.report;
}

}  // namespace milnor
