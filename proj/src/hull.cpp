#include "desire/hull.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "desire/errors.hpp"

namespace desire {
namespace detail {

namespace {

// Canonical form for deduplication: scale so the largest absolute
// coefficient (or the rhs for constant rows) is 1.
void normalize(Inequality& row) {
  Rational scale = 0;
  for (const Rational& c : row.coeffs) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (a > scale) scale = a;
  }
  if (scale == 0) {
    Rational a = row.rhs < 0 ? Rational(-row.rhs) : row.rhs;
    if (a != 0) scale = a;
  }
  if (scale == 0 || scale == 1) return;
  for (Rational& c : row.coeffs) c /= scale;
  row.rhs /= scale;
}

bool row_less(const Inequality& a, const Inequality& b) {
  if (a.rhs != b.rhs) return a.rhs < b.rhs;
  return a.coeffs < b.coeffs;
}

}  // namespace

bool feasible_fm(int nvars, std::vector<Inequality> rows) {
  for (int v = 0; v < nvars; ++v) {
    std::vector<Inequality> lower, upper, rest;
    for (Inequality& r : rows) {
      const Rational& c = r.coeffs[v];
      if (c > 0) {
        upper.push_back(std::move(r));
      } else if (c < 0) {
        lower.push_back(std::move(r));
      } else {
        rest.push_back(std::move(r));
      }
    }
    for (const Inequality& lo : lower) {
      for (const Inequality& up : upper) {
        // lo: c_lo x_v + ... <= rhs_lo with c_lo < 0, up: c_up > 0.
        // Combine up/c_up + lo/(-c_lo) to cancel x_v.
        Inequality out;
        out.coeffs.resize(nvars);
        const Rational a = up.coeffs[v];
        const Rational b = -lo.coeffs[v];
        for (int j = 0; j < nvars; ++j) {
          out.coeffs[j] = up.coeffs[j] / a + lo.coeffs[j] / b;
        }
        out.rhs = up.rhs / a + lo.rhs / b;
        normalize(out);
        rest.push_back(std::move(out));
      }
    }
    std::sort(rest.begin(), rest.end(), row_less);
    rest.erase(std::unique(rest.begin(), rest.end(),
                           [](const Inequality& x, const Inequality& y) {
                             return x.rhs == y.rhs && x.coeffs == y.coeffs;
                           }),
               rest.end());
    rows = std::move(rest);
  }
  for (const Inequality& r : rows) {
    if (r.rhs < 0) return false;
  }
  return true;
}

namespace {

// Dense exact simplex tableau. Columns are kept in canonical form with
// respect to the basis at all times.
struct Tableau {
  int m = 0;
  int n = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<int> basis;

  void pivot(int row, int col) {
    const Rational p = a[row][col];
    for (int j = 0; j < n; ++j) a[row][j] /= p;
    b[row] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      const Rational f = a[i][col];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    basis[row] = col;
  }

  // Minimizes c.x from the current basic feasible solution with Bland's
  // rule. Our uses are bounded below, so unboundedness never arises.
  Rational minimize(const std::vector<Rational>& c) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < n && enter < 0; ++j) {
        Rational reduced = c[j];
        for (int i = 0; i < m; ++i) reduced -= c[basis[i]] * a[i][j];
        if (reduced < 0) enter = j;
      }
      if (enter < 0) break;
      int leave = -1;
      Rational best = 0;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        const Rational ratio = b[i] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) {
        throw Error("unbounded linear program in feasibility check");
      }
      pivot(leave, enter);
    }
    Rational value = 0;
    for (int i = 0; i < m; ++i) value += c[basis[i]] * b[i];
    return value;
  }
};

}  // namespace

bool feasible_simplex(int nvars, const std::vector<Inequality>& rows) {
  // Free x is split as u - v with u, v >= 0; each row gains a slack.
  // Rows with negative rhs are negated, turning their slack coefficient
  // to -1, so those rows get artificial variables instead.
  const int m = static_cast<int>(rows.size());
  if (m == 0) return true;
  Tableau t;
  t.m = m;
  std::vector<int> art_col(m, -1);
  int n = 2 * nvars + m;
  int arts = 0;
  for (int i = 0; i < m; ++i) {
    if (rows[i].rhs < 0) art_col[i] = n + arts++;
  }
  t.n = n + arts;
  t.a.assign(m, std::vector<Rational>(t.n, Rational(0)));
  t.b.resize(m);
  t.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    const bool flip = rows[i].rhs < 0;
    const Rational sign = flip ? -1 : 1;
    for (int j = 0; j < nvars; ++j) {
      t.a[i][j] = sign * rows[i].coeffs[j];
      t.a[i][nvars + j] = -sign * rows[i].coeffs[j];
    }
    t.a[i][2 * nvars + i] = sign;  // slack
    t.b[i] = sign * rows[i].rhs;
    if (flip) {
      t.a[i][art_col[i]] = 1;
      t.basis[i] = art_col[i];
    } else {
      t.basis[i] = 2 * nvars + i;
    }
  }
  if (arts == 0) return true;
  std::vector<Rational> c(t.n, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (art_col[i] >= 0) c[art_col[i]] = 1;
  }
  return t.minimize(c) == 0;
}

bool feasible(int nvars, const std::vector<Inequality>& rows, HullEngine engine) {
  switch (engine) {
    case HullEngine::fourier_motzkin:
      return feasible_fm(nvars, rows);
    case HullEngine::simplex:
      return feasible_simplex(nvars, rows);
    case HullEngine::automatic:
      return nvars <= 6 ? feasible_fm(nvars, rows)
                        : feasible_simplex(nvars, rows);
  }
  return false;
}

}  // namespace detail

namespace {

void check_dims(const RationalVector& target,
                const std::vector<RationalVector>& generators) {
  for (const auto& g : generators) {
    if (g.size() != target.size()) {
      throw DimensionMismatch("generator dimension differs from target");
    }
  }
}

// Builds the system lambda >= 0, sum lambda_i g_i = target over variables
// lambda_0..lambda_{k-1}.
std::vector<detail::Inequality> combination_system(
    const RationalVector& target, const std::vector<RationalVector>& gens) {
  const int k = static_cast<int>(gens.size());
  const int d = static_cast<int>(target.size());
  std::vector<detail::Inequality> rows;
  for (int i = 0; i < k; ++i) {
    detail::Inequality nonneg;
    nonneg.coeffs.assign(k, Rational(0));
    nonneg.coeffs[i] = -1;
    nonneg.rhs = 0;
    rows.push_back(std::move(nonneg));
  }
  for (int x = 0; x < d; ++x) {
    detail::Inequality le, ge;
    le.coeffs.resize(k);
    ge.coeffs.resize(k);
    for (int i = 0; i < k; ++i) {
      le.coeffs[i] = gens[i][x];
      ge.coeffs[i] = -gens[i][x];
    }
    le.rhs = target[x];
    ge.rhs = -target[x];
    rows.push_back(std::move(le));
    rows.push_back(std::move(ge));
  }
  return rows;
}

}  // namespace

bool member_positive_hull(const RationalVector& target,
                          const std::vector<RationalVector>& generators,
                          HullEngine engine) {
  check_dims(target, generators);
  if (generators.empty()) return false;
  const int k = static_cast<int>(generators.size());
  const bool target_zero =
      std::all_of(target.begin(), target.end(),
                  [](const Rational& c) { return c == 0; });
  if (!target_zero) {
    return detail::feasible(k, combination_system(target, generators), engine);
  }
  // target = 0 needs a nontrivial lambda; any solution scales, so it is
  // enough that some coordinate can be pinned to 1.
  for (int i = 0; i < k; ++i) {
    auto rows = combination_system(target, generators);
    detail::Inequality le, ge;
    le.coeffs.assign(k, Rational(0));
    ge.coeffs.assign(k, Rational(0));
    le.coeffs[i] = 1;
    le.rhs = 1;
    ge.coeffs[i] = -1;
    ge.rhs = -1;
    rows.push_back(std::move(le));
    rows.push_back(std::move(ge));
    if (detail::feasible(k, rows, engine)) return true;
  }
  return false;
}

bool member_convex_hull(const RationalVector& target,
                        const std::vector<RationalVector>& generators,
                        HullEngine engine) {
  check_dims(target, generators);
  if (generators.empty()) return false;
  const int k = static_cast<int>(generators.size());
  auto rows = combination_system(target, generators);
  detail::Inequality le, ge;
  le.coeffs.assign(k, Rational(1));
  le.rhs = 1;
  ge.coeffs.assign(k, Rational(-1));
  ge.rhs = -1;
  rows.push_back(std::move(le));
  rows.push_back(std::move(ge));
  return detail::feasible(k, rows, engine);
}

Assessment preset_assessment(const Universe& u, AssessmentPreset preset,
                             const std::vector<std::string>& positive_prizes,
                             const std::vector<std::string>& negative_prizes) {
  if (preset == AssessmentPreset::none) return Assessment{};
  if (u.payload_kind() != PayloadKind::rational_vector) {
    throw WrongPayload("preset assessments need a rational-vector universe");
  }
  Assessment out;
  if (preset == AssessmentPreset::lottery) {
    const int nprizes = static_cast<int>(u.prizes().size());
    const int nstates = std::max<int>(1, static_cast<int>(u.states().size()));
    if (nprizes == 0) {
      throw WrongPayload("lottery preset needs a declared prize list");
    }
    std::vector<bool> pos(nprizes, false), neg(nprizes, false);
    const auto prize_index = [&u](const std::string& p) {
      auto it = std::find(u.prizes().begin(), u.prizes().end(), p);
      if (it == u.prizes().end()) {
        throw UnknownThing("unknown prize '" + p + "'");
      }
      return static_cast<std::size_t>(it - u.prizes().begin());
    };
    for (const auto& p : positive_prizes) pos[prize_index(p)] = true;
    for (const auto& p : negative_prizes) neg[prize_index(p)] = true;
    for (int t = 0; t < u.size(); ++t) {
      const auto& v = u.vector_of(t);
      bool all_pos = true, all_neg = true;
      for (int s = 0; s < nstates; ++s) {
        Rational pos_mass = 0, neg_mass = 0, total = 0;
        for (int r = 0; r < nprizes; ++r) {
          const Rational& c = v[s * nprizes + r];
          total += c;
          if (pos[r]) pos_mass += c;
          if (neg[r]) neg_mass += c;
        }
        if (pos_mass != total || total == 0) all_pos = false;
        if (neg_mass != total || total == 0) all_neg = false;
      }
      if (all_pos) out.required = out.required.with(t);
      if (all_neg) out.forbidden = out.forbidden.with(t);
    }
    return out;
  }
  for (int t = 0; t < u.size(); ++t) {
    const auto& v = u.vector_of(t);
    bool all_le0 = true, all_ge0 = true, some_gt0 = false, all_gt0 = true;
    for (const Rational& c : v) {
      if (c > 0) {
        all_le0 = false;
        some_gt0 = true;
      }
      if (c < 0) all_ge0 = false;
      if (c <= 0) all_gt0 = false;
    }
    if (all_le0) out.forbidden = out.forbidden.with(t);
    if (preset == AssessmentPreset::gambles_default) {
      if (all_ge0 && some_gt0) out.required = out.required.with(t);
    } else {
      if (all_gt0) out.required = out.required.with(t);
    }
  }
  return out;
}

Verdict validate_horse_lottery(const Universe& u) {
  if (u.payload_kind() != PayloadKind::rational_vector || u.prizes().empty()) {
    throw WrongPayload("horse lotteries need a state-by-prize grid universe");
  }
  const int nprizes = static_cast<int>(u.prizes().size());
  const int nstates = std::max<int>(1, static_cast<int>(u.states().size()));
  for (int t = 0; t < u.size(); ++t) {
    const auto& v = u.vector_of(t);
    for (int s = 0; s < nstates; ++s) {
      Rational sum = 0;
      for (int r = 0; r < nprizes; ++r) {
        const Rational& c = v[s * nprizes + r];
        if (c < 0) {
          Certificate cert;
          cert.axiom = "grid";
          cert.sets = {ThingSet::singleton(t)};
          cert.note = "negative mass for '" + u.id_of(t) + "'";
          return Verdict::violated(cert);
        }
        sum += c;
      }
      if (sum != 1) {
        Certificate cert;
        cert.axiom = "grid";
        cert.sets = {ThingSet::singleton(t)};
        cert.note = "state row of '" + u.id_of(t) + "' sums to " +
                    format_rational(sum);
        return Verdict::violated(cert);
      }
    }
  }
  return Verdict::verified();
}

}  // namespace desire
