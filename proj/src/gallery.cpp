#include "stringy/gallery.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "stringy/errors.hpp"
#include "stringy/hodge.hpp"

namespace stringy {

namespace {

HodgeTable table_of(const HodgeDiamond& d) { return d.entries(); }

StratumData stratum(const BiPoly& e, std::optional<Rat> c1_cd1, std::optional<Rat> pullback,
                    std::map<int, Rat> restrictions = {}) {
  StratumData s;
  s.e = e;
  s.euler = e.value_at_one();
  s.c1_cd1 = std::move(c1_cd1);
  s.pullback_c1_cd1 = std::move(pullback);
  s.normal_restrictions = std::move(restrictions);
  return s;
}

// A smooth projective variety as its own trivial resolution; rho^* c_1(X)
// is c_1(Y) itself, so the pullback number equals c_1 c_{n-1}.
GalleryEntry smooth(std::string name, std::string description, const HodgeDiamond& diamond,
                    const Rat& c1_cn1, bool calabi_yau, const std::string& chern_provenance) {
  const int n = diamond.dimension();
  const BiPoly e = e_polynomial(diamond);
  ResolutionData data(n, {});
  data.stratum(0) = stratum(e, c1_cn1, n > 0 ? std::optional<Rat>(c1_cn1) : std::nullopt);

  const Rat euler(e.value_at_one());
  const Rat c_st = n > 0 ? c1_cn1 : Rat(0);
  GalleryEntry g{std::move(name), std::move(description), std::move(data), {}, {}, {}, calabi_yau};
  g.expected["euler"] = {euler, "alternating sum of the Hodge diamond"};
  g.expected["c1_cn1"] = {c1_cn1, chern_provenance};
  g.expected["e_st"] = {euler, "no exceptional divisors: e_st is the Euler number"};
  g.expected["c_st_1_n1"] = {c_st, "no exceptional divisors: c_st is c_1 c_{n-1}"};
  g.expected["d1_at_one"] = {Rat(n, 2) * euler, "(n/2) times the Euler number"};
  g.expected["d2_at_one"] = {Rat(3 * n * n - 5 * n, 12) * euler + c1_cn1 / Rat(6),
                             "((3n^2-5n)/12) c_n + c_1 c_{n-1} / 6"};
  g.expected_hodge = table_of(diamond);
  g.hodge_provenance = "smooth variety: stringy Hodge numbers are the Hodge numbers";
  return g;
}

// Y -> X contracting one smooth rational curve D (E = 1 + uv) on a surface Y
// with E(Y) = 1 + 2uv + (uv)^2 and K_Y^2 = 8. With D^2 = -k the adjunction
// formula gives K_Y . D = k - 2, and K_Y = rho^* K_X + a D with
// rho^* K_X . D = 0 forces a = (2 - k)/k.
GalleryEntry contracted_curve(std::string name, std::string description, int k) {
  const Rat a(2 - k, k);
  ResolutionData data(2, {{1, a}});
  const BiPoly y{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
  const BiPoly d{{{0, 0}, 1}, {{1, 1}, 1}};
  const Rat kd(k - 2);  // K_Y . D
  // rho^* c_1(X) = -K_Y + a D
  const Rat pullback_y = Rat(8) - a * kd;  // (-K_Y + aD).(-K_Y)
  data.stratum(0) = stratum(y, Rat(8), pullback_y, {{1, -kd}});
  data.stratum(1) = stratum(d, Rat(2), Rat(0), {{1, Rat(-k)}});

  const Rat c0 = -a / (a + 1);
  const Rat f1 = -a / (Rat(2) * (a + 1));
  const Rat f2 = a * (a + 2) / (Rat(6) * (a + 1));
  GalleryEntry g{std::move(name), std::move(description), std::move(data), {}, {}, {}, false};
  g.expected["e_st"] = {Rat(4) + Rat(2) * c0, "e(Y) + e(D) (-a/(a+1))"};
  g.expected["c_st_1_n1"] = {pullback_y,
                            "(-K_Y + aD).(-K_Y) = K_Y^2 - a K_Y.D; the curve term vanishes"};
  // E_st(u,1) = (1+u)^2 + (1+u) f_a(u)
  g.expected["d1_at_one"] = {Rat(4) + c0 + Rat(2) * f1, "product rule on (1+u)^2 + (1+u) f_a(u)"};
  g.expected["d2_at_one"] = {Rat(2) + Rat(2) * f1 + Rat(2) * f2,
                            "product rule on (1+u)^2 + (1+u) f_a(u)"};
  return g;
}

std::vector<std::string> make_names() {
  return {"point", "p1",        "p2",   "p3",    "k3",
          "abelian_surface", "quintic", "sextic_cy4", "wp112", "wp113",
          "blowup_p2_point"};
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = make_names();
  return names;
}

GalleryEntry builtin(std::string_view name) {
  if (name == "point") {
    return smooth("point", "a single point", diamonds::point(), Rat(0), true,
                  "zero-dimensional: c_{-1} = 0");
  }
  if (name == "p1") {
    return smooth("p1", "projective line", diamonds::projective_space(1), Rat(2), false,
                  "c_1(P^1) = 2 points");
  }
  if (name == "p2") {
    return smooth("p2", "projective plane", diamonds::projective_space(2), Rat(9), false,
                  "c_1 = 3H, c_1^2 = 9");
  }
  if (name == "p3") {
    return smooth("p3", "projective 3-space", diamonds::projective_space(3), Rat(24), false,
                  "c_1 = 4H, c_2 = 6H^2, c_1 c_2 = 24");
  }
  if (name == "k3") {
    return smooth("k3", "K3 surface", diamonds::k3(), Rat(0), true, "c_1 = 0");
  }
  if (name == "abelian_surface") {
    return smooth("abelian_surface", "abelian surface", diamonds::abelian_surface(), Rat(0),
                  true, "c_1 = 0");
  }
  if (name == "quintic") {
    return smooth("quintic", "quintic threefold in P^4", diamonds::quintic_threefold(), Rat(0),
                  true, "c_1 = 0");
  }
  if (name == "sextic_cy4") {
    return smooth("sextic_cy4", "sextic fourfold in P^5", diamonds::sextic_fourfold(), Rat(0),
                  true, "c_1 = 0");
  }
  if (name == "wp112") {
    GalleryEntry g = contracted_curve(
        "wp112", "weighted projective plane P(1,1,2), crepant resolution by the surface F_2", 2);
    g.expected_hodge = HodgeTable{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
    g.hodge_provenance = "crepant resolution: E_st = E(F_2) = 1 + 2uv + (uv)^2";
    return g;
  }
  if (name == "wp113") {
    return contracted_curve(
        "wp113", "weighted projective plane P(1,1,3), resolved by the surface F_3 (a = -1/3)", 3);
  }
  if (name == "blowup_p2_point") {
    GalleryEntry g = contracted_curve(
        "blowup_p2_point", "projective plane resolved by blowing up a point (a = 1)", 1);
    g.expected_hodge = HodgeTable{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}};
    g.hodge_provenance = "(1+uv)^2 + (1+uv)(1/(1+uv) - 1) = 1 + uv + (uv)^2";
    return g;
  }
  throw DomainError("unknown gallery entry '" + std::string(name) + "'");
}

// ------------------------------------------------------------- generator

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  long in(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(long numerator, long denominator) { return in(1, denominator) <= numerator; }

 private:
  std::mt19937_64 rng_;
};

BiPoly random_atom(Draw& draw, int max_dim) {
  const int dim = static_cast<int>(draw.in(1, std::min(max_dim, 3)));
  switch (dim) {
    case 1: return e_polynomial(diamonds::curve(static_cast<int>(draw.in(0, 2))));
    case 2:
      switch (draw.in(0, 3)) {
        case 0: return e_polynomial(diamonds::projective_space(2));
        case 1: return e_polynomial(diamonds::k3());
        case 2: return e_polynomial(diamonds::abelian_surface());
        default: return e_polynomial(diamonds::curve(0)) * e_polynomial(diamonds::curve(1));
      }
    default:
      return draw.chance(1, 2) ? e_polynomial(diamonds::projective_space(3))
                               : e_polynomial(diamonds::quintic_threefold());
  }
}

BiPoly random_e_polynomial(Draw& draw, int d, bool connected) {
  BiPoly e = BiPoly::constant(1);
  int remaining = d;
  while (remaining > 0) {
    BiPoly atom = random_atom(draw, remaining);
    remaining -= atom.degree_u();
    e = e * atom;
  }
  if (!connected && draw.chance(1, 3)) e *= Integer(draw.in(2, 3));
  return e;
}

}  // namespace

ResolutionData random_consistent(std::uint64_t seed, int n, int r, int max_denominator) {
  if (n < 1) throw DomainError("generator needs dimension >= 1");
  if (r < 0 || static_cast<std::size_t>(r) > ResolutionData::kMaxDivisors) {
    throw DomainError("unsupported divisor count");
  }
  if (max_denominator < 1) throw DomainError("max_denominator must be positive");
  Draw draw(seed);

  std::vector<DivisorInfo> divisors;
  for (int i = 0; i < r; ++i) {
    const long q = draw.in(1, max_denominator);
    const long p = draw.in(-q + 1, 3 * q);
    divisors.push_back({i + 1, Rat(p, q)});
  }
  ResolutionData data(n, std::move(divisors));

  std::vector<Subset> order(data.subset_count());
  for (Subset j = 0; j < order.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(),
                   [](Subset a, Subset b) { return subset_size(a) < subset_size(b); });

  for (Subset j : order) {
    const int d = data.stratum_dimension(j);
    if (d < 0) continue;
    bool possible = true;
    for (std::size_t i = 0; i < data.divisor_count(); ++i) {
      if (contains(j, i) && data.stratum(j & ~(Subset{1} << i)).empty()) possible = false;
    }
    if (!possible || (subset_size(j) >= 2 && draw.chance(1, 4))) continue;
    StratumData& s = data.stratum(j);
    s.e = random_e_polynomial(draw, d, j == 0);
    s.euler = s.e.value_at_one();
    s.c1_cd1 = d == 0 ? Rat(0) : inferred_c1_cn1(s.e, d);
  }

  auto restriction_of = [&](Subset s, std::size_t i) -> Rat {
    const StratumData& st = data.stratum(s);
    if (st.empty() || data.stratum_dimension(s) <= 0) return Rat(0);
    return st.normal_restrictions.at(data.divisors()[i].id);
  };
  // free values c_1(O_{D_J}(D_j)) c_{d-1}(D_J) for j in J
  for (Subset j : order) {
    StratumData& s = data.stratum(j);
    if (s.empty() || data.stratum_dimension(j) <= 0) continue;
    for (std::size_t i = 0; i < data.divisor_count(); ++i) {
      if (contains(j, i)) {
        s.normal_restrictions[data.divisors()[i].id] = Rat(draw.in(-6, 6));
      }
    }
  }
  // j outside K: determined by the adjunction recursion on K + j
  for (Subset k : order) {
    StratumData& s = data.stratum(k);
    if (s.empty() || data.stratum_dimension(k) <= 0) continue;
    for (std::size_t i = 0; i < data.divisor_count(); ++i) {
      if (contains(k, i)) continue;
      const Subset j = k | (Subset{1} << i);
      s.normal_restrictions[data.divisors()[i].id] =
          restriction_of(j, i) + Rat(data.stratum(j).e.value_at_one());
    }
  }

  // pullback numbers: free off Y, then solve the relative-divisor relation
  auto weight = [&](Subset j) {
    Rat w(1);
    for (std::size_t i = 0; i < data.divisor_count(); ++i) {
      if (contains(j, i)) w *= correction_limit(data.divisors()[i].discrepancy);
    }
    return w;
  };
  Rat lhs, rest;
  for (Subset j = 0; j < data.subset_count(); ++j) {
    StratumData& s = data.stratum(j);
    if (s.empty()) continue;
    const int d = data.stratum_dimension(j);
    const Rat w = weight(j);
    if (d > 0) {
      lhs += *s.c1_cd1 * w;
      if (j != 0) {
        s.pullback_c1_cd1 = Rat(draw.in(-12, 12), draw.in(1, max_denominator));
        rest += *s.pullback_c1_cd1 * w;
      }
    }
    Rat shift;
    for (std::size_t i = 0; i < data.divisor_count(); ++i) {
      if (contains(j, i)) shift += data.divisors()[i].discrepancy + 1;
    }
    rest += shift * Rat(s.e.value_at_one()) * w;
  }
  data.stratum(0).pullback_c1_cd1 = lhs - rest;
  return data;
}

}  // namespace stringy
