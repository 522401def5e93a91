#include "dgaut/chartab.hpp"

#include <algorithm>
#include <numeric>

#include "dgaut/characters.hpp"

namespace dgaut {

namespace {

using u64 = unsigned long long;

u64 modpow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 modinv(u64 a, u64 p) { return modpow(a % p, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// first prime p = 1 (mod e) with p >= start
u64 dixon_prime(u64 start, u64 e) {
  u64 p = start + ((1 + e - start % e) % e);
  while (p % e != 1) ++p;
  for (; p < 100000000ull; p += e)
    if (is_prime(p)) return p;
  throw invariant_error("dixon: no suitable prime found");
}

// element of multiplicative order e mod p
u64 root_of_order(u64 e, u64 p) {
  for (u64 g = 2; g < p; ++g) {
    u64 z = modpow(g, (p - 1) / e, p);
    // check exact order e
    bool ok = z != 1;
    for (u64 d = 1; d < e && ok; ++d)
      if (e % d == 0 && d < e && modpow(z, d, p) == 1) ok = false;
    if (ok && modpow(z, e, p) == 1) return z;
  }
  throw invariant_error("dixon: no element of required order");
}

struct ModMatrix {
  int n = 0;
  u64 p = 0;
  std::vector<u64> a;
  u64 &at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  u64 at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

u64 det_mod(ModMatrix m) {
  u64 det = 1;
  for (int c = 0; c < m.n; ++c) {
    int piv = -1;
    for (int r = c; r < m.n; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < m.n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = m.p - det;
      if (det == m.p) det = 0;
    }
    det = det * m.at(c, c) % m.p;
    u64 inv = modinv(m.at(c, c), m.p);
    for (int r = c + 1; r < m.n; ++r) {
      if (m.at(r, c) == 0) continue;
      u64 f = m.at(r, c) * inv % m.p;
      for (int j = c; j < m.n; ++j)
        m.at(r, j) = (m.at(r, j) + (m.p - f) * m.at(c, j)) % m.p;
    }
  }
  return det;
}

// characteristic polynomial det(A - x I) by interpolation at x = 0..n
std::vector<u64> charpoly_mod(const ModMatrix &m) {
  int n = m.n;
  u64 p = m.p;
  std::vector<u64> xs(n + 1), ys(n + 1);
  for (int t = 0; t <= n; ++t) {
    ModMatrix s = m;
    for (int i = 0; i < n; ++i) s.at(i, i) = (s.at(i, i) + p - static_cast<u64>(t) % p) % p;
    xs[t] = t;
    ys[t] = det_mod(s);
  }
  // Lagrange: poly = sum_t ys[t] * prod_{u != t} (x - xs[u]) / (xs[t] - xs[u])
  std::vector<u64> poly(n + 1, 0);
  for (int t = 0; t <= n; ++t) {
    std::vector<u64> num{1};  // running product of (x - xs[u])
    u64 denom = 1;
    for (int u = 0; u <= n; ++u) {
      if (u == t) continue;
      std::vector<u64> nxt(num.size() + 1, 0);
      for (size_t i = 0; i < num.size(); ++i) {
        nxt[i + 1] = (nxt[i + 1] + num[i]) % p;
        nxt[i] = (nxt[i] + num[i] * ((p - xs[u]) % p)) % p;
      }
      num = std::move(nxt);
      denom = denom * ((xs[t] + p - xs[u]) % p) % p;
    }
    u64 c = ys[t] * modinv(denom, p) % p;
    for (size_t i = 0; i < num.size(); ++i) poly[i] = (poly[i] + c * num[i]) % p;
  }
  return poly;
}

// reduced row echelon basis of the nullspace of m
std::vector<std::vector<u64>> nullspace_mod(ModMatrix m) {
  int n = m.n;
  u64 p = m.p;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    u64 inv = modinv(m.at(rank, c), p);
    for (int j = 0; j < n; ++j) m.at(rank, j) = m.at(rank, j) * inv % p;
    for (int r = 0; r < n; ++r) {
      if (r == rank || m.at(r, c) == 0) continue;
      u64 f = m.at(r, c);
      for (int j = 0; j < n; ++j) m.at(r, j) = (m.at(r, j) + (p - f) * m.at(rank, j)) % p;
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<u64>> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<u64> v(n, 0);
    v[c] = 1;
    for (int r = 0; r < rank; ++r)
      v[pivot_col[r]] = (p - m.at(r, c)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

CharacterTable abelian_table(const FiniteGroup &g, const CycContext &cyc) {
  DualGroup dual(g);
  CharacterTable t;
  t.group = &g;
  t.cyc = &cyc;
  int k = g.class_count();
  require(k == g.order(), "abelian table: classes are not singletons");
  for (int chi = 0; chi < dual.size(); ++chi) {
    std::vector<CycScalar> row;
    for (int c = 0; c < k; ++c) row.push_back(CycScalar::root(cyc, dual.value(chi, g.class_rep(c))));
    t.rows.push_back(std::move(row));
    t.degrees.push_back(1);
  }
  return t;
}

void sort_rows(CharacterTable &t) {
  int k = t.group->class_count();
  std::vector<int> order(t.rows.size());
  std::iota(order.begin(), order.end(), 0);
  // precompute canonical forms for comparisons
  std::vector<std::vector<std::vector<Rational>>> red(t.rows.size());
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (int c = 0; c < k; ++c) red[i].push_back(t.rows[i][c].reduced());
  auto is_trivial = [&](int i) {
    for (int c = 0; c < k; ++c)
      if (!(t.rows[i][c] == CycScalar::one(*t.cyc))) return false;
    return true;
  };
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    bool ti = is_trivial(i), tj = is_trivial(j);
    if (ti != tj) return ti;
    if (t.degrees[i] != t.degrees[j]) return t.degrees[i] < t.degrees[j];
    return red[i] < red[j];
  });
  std::vector<std::vector<CycScalar>> rows;
  std::vector<int> degs;
  for (int i : order) {
    rows.push_back(std::move(t.rows[i]));
    degs.push_back(t.degrees[i]);
  }
  t.rows = std::move(rows);
  t.degrees = std::move(degs);
}

}  // namespace

CharacterTable compute_character_table(const FiniteGroup &g, const CycContext &cyc) {
  require(cyc.conductor() % g.exponent() == 0,
          "character table: conductor not divisible by exp(G)");
  CharacterTable t;
  if (g.is_abelian()) {
    t = abelian_table(g, cyc);
    sort_rows(t);
    validate_character_table(t);
    return t;
  }
  t.group = &g;
  t.cyc = &cyc;

  int k = g.class_count();
  int n = g.order();
  u64 e = static_cast<u64>(g.exponent());
  u64 p = dixon_prime(2ull * n * e + 1, e);
  u64 z = root_of_order(e, p);

  // class constants a[i][j][l] = #{(x,y) in C_i x C_j : xy = z_l}
  std::vector<std::vector<std::vector<u64>>> a(
      k, std::vector<std::vector<u64>>(k, std::vector<u64>(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int x : g.class_elements(i))
      for (int l = 0; l < k; ++l) {
        int y = g.mul(g.inv(x), g.class_rep(l));
        a[i][g.class_of(y)][l] += 1;
      }

  // split the class-function space into common eigenspaces
  std::vector<std::vector<std::vector<u64>>> spaces;
  {
    std::vector<std::vector<u64>> full;
    for (int i = 0; i < k; ++i) {
      std::vector<u64> v(k, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    // M_i acting by (M_i w)_j = sum_l a[i][j][l] w_l
    std::vector<std::vector<std::vector<u64>>> next;
    for (auto &space : spaces) {
      int d = static_cast<int>(space.size());
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // express M_i restricted to the space: solve coordinates via echelon
      // basis happens to be echelonized by construction (nullspace output)
      // use generic solve: build matrix B (d x k) and images (d x k)
      std::vector<std::vector<u64>> img(d, std::vector<u64>(k, 0));
      for (int r = 0; r < d; ++r)
        for (int j = 0; j < k; ++j) {
          u64 s = 0;
          for (int l = 0; l < k; ++l)
            if (space[r][l]) s = (s + a[i][j][l] % p * space[r][l]) % p;
          img[r][j] = s;
        }
      // solve img[r] = sum_c coef[r][c] * space[c] by echelonizing the basis
      std::vector<std::vector<u64>> basis = space;
      std::vector<std::vector<u64>> trans(d, std::vector<u64>(d, 0));  // basis in space coords
      for (int r = 0; r < d; ++r) trans[r][r] = 1;
      std::vector<int> lead(d, -1);
      for (int r = 0; r < d; ++r) {
        int lc = -1;
        for (int c = 0; c < k; ++c)
          if (basis[r][c] != 0) {
            lc = c;
            break;
          }
        require(lc >= 0, "dixon: degenerate subspace basis");
        u64 inv = modinv(basis[r][lc], p);
        for (int c = 0; c < k; ++c) basis[r][c] = basis[r][c] * inv % p;
        for (int c = 0; c < d; ++c) trans[r][c] = trans[r][c] * inv % p;
        for (int r2 = 0; r2 < d; ++r2) {
          if (r2 == r || basis[r2][lc] == 0) continue;
          u64 f = basis[r2][lc];
          for (int c = 0; c < k; ++c)
            basis[r2][c] = (basis[r2][c] + (p - f) * basis[r][c]) % p;
          for (int c = 0; c < d; ++c)
            trans[r2][c] = (trans[r2][c] + (p - f) * trans[r][c]) % p;
        }
        lead[r] = lc;
      }
      ModMatrix rest;
      rest.n = d;
      rest.p = p;
      rest.a.assign(static_cast<size_t>(d) * d, 0);
      for (int r = 0; r < d; ++r) {
        // coordinates of img[r] against echelonized basis, then back through trans
        std::vector<u64> v = img[r];
        std::vector<u64> coef(d, 0);
        for (int r2 = 0; r2 < d; ++r2) {
          u64 f = v[lead[r2]] % p;
          coef[r2] = f;
          if (f)
            for (int c = 0; c < k; ++c) v[c] = (v[c] + (p - f) * basis[r2][c]) % p;
        }
        for (int c = 0; c < k; ++c) require(v[c] == 0, "dixon: subspace not invariant");
        for (int c = 0; c < d; ++c) {
          u64 s = 0;
          for (int r2 = 0; r2 < d; ++r2) s = (s + coef[r2] * trans[r2][c]) % p;
          rest.at(r, c) = s;
        }
      }
      auto poly = charpoly_mod(rest);
      // roots by scanning F_p
      std::vector<u64> roots;
      for (u64 lam = 0; lam < p; ++lam) {
        u64 v = 0;
        for (size_t ci = poly.size(); ci-- > 0;) v = (v * lam + poly[ci]) % p;
        if (v == 0) roots.push_back(lam);
      }
      bool split_any = roots.size() > 1;
      if (!split_any) {
        next.push_back(std::move(space));
        continue;
      }
      for (u64 lam : roots) {
        // subspace coordinates y satisfy y^T rest = lam y^T: use the transpose
        ModMatrix shifted;
        shifted.n = d;
        shifted.p = p;
        shifted.a.assign(static_cast<size_t>(d) * d, 0);
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) shifted.at(c, r) = rest.at(r, c);
        for (int r = 0; r < d; ++r)
          shifted.at(r, r) = (shifted.at(r, r) + p - lam) % p;
        auto null_basis = nullspace_mod(shifted);
        require(!null_basis.empty(), "dixon: eigenvalue without eigenvector");
        std::vector<std::vector<u64>> sub;
        for (auto &coords : null_basis) {
          std::vector<u64> v(k, 0);
          for (int r = 0; r < d; ++r) {
            if (coords[r] == 0) continue;
            for (int c = 0; c < k; ++c)
              v[c] = (v[c] + coords[r] * space[r][c]) % p;
          }
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
    bool all_one = true;
    for (auto &s : spaces) all_one &= s.size() == 1;
    if (all_one) break;
  }
  require(static_cast<int>(spaces.size()) == k, "dixon: did not split into k eigenspaces");

  // identity class must be class 0
  require(g.class_rep(0) == 0, "dixon: identity class not first");
  std::vector<int> inv_class(k);
  for (int l = 0; l < k; ++l) inv_class[l] = g.class_of(g.inv(g.class_rep(l)));

  for (auto &space : spaces) {
    auto &v = space[0];
    require(v[0] != 0, "dixon: eigenvector vanishes on the identity class");
    u64 scale = modinv(v[0], p);
    std::vector<u64> omega(k);
    for (int l = 0; l < k; ++l) omega[l] = v[l] * scale % p;
    // chi(1)^2 = |G| / sum_l omega_l omega_{l*} / |C_l|
    u64 s = 0;
    for (int l = 0; l < k; ++l)
      s = (s + omega[l] * omega[inv_class[l]] % p * modinv(g.class_size(l), p)) % p;
    u64 dsq = static_cast<u64>(n) % p * modinv(s, p) % p;
    int deg = -1;
    for (int d = 1; static_cast<long long>(d) * d <= n; ++d)
      if (static_cast<u64>(d) * d % p == dsq) {
        deg = d;
        break;
      }
    require(deg > 0, "dixon: no degree matches");
    // chi(g_l) mod p
    std::vector<u64> chi(k);
    for (int l = 0; l < k; ++l)
      chi[l] = static_cast<u64>(deg) * omega[l] % p * modinv(g.class_size(l), p) % p;

    // lift each class value to an exact sum of roots of unity
    std::vector<CycScalar> row;
    for (int l = 0; l < k; ++l) {
      int gl = g.class_rep(l);
      int o = g.element_order(gl);
      CycScalar val = CycScalar::zero(cyc);
      u64 zo = modpow(z, e / static_cast<u64>(o), p);  // order o
      u64 oinv = modinv(static_cast<u64>(o), p);
      for (int u = 0; u < o; ++u) {
        u64 nu = 0;
        int x = gl;
        // v = 1..o with g^v cycling; start from v = 0
        x = 0;
        for (int v = 0; v < o; ++v) {
          u64 zexp = modpow(zo, static_cast<u64>((static_cast<long long>(u) * v) % o), p);
          nu = (nu + chi[g.class_of(x)] * modinv(zexp, p)) % p;
          x = g.mul(x, gl);
        }
        nu = nu * oinv % p;
        require(nu <= static_cast<u64>(deg), "dixon: multiplicity lift out of range");
        if (nu > 0)
          val += CycScalar::root(cyc, static_cast<long long>(e / o) * u)
                     .scaled(Rational(static_cast<long long>(nu)));
      }
      row.push_back(std::move(val));
    }
    t.rows.push_back(std::move(row));
    t.degrees.push_back(deg);
  }

  sort_rows(t);
  validate_character_table(t);
  return t;
}

int CharacterTable::row_matching(const std::vector<CycScalar> &values) const {
  for (int i = 0; i < irr_count(); ++i) {
    bool ok = true;
    for (size_t c = 0; c < values.size() && ok; ++c) ok = rows[i][c] == values[c];
    if (ok) return i;
  }
  return -1;
}

void validate_character_table(const CharacterTable &t) {
  const FiniteGroup &g = *t.group;
  int k = g.class_count();
  require(t.irr_count() == k, "character table: row count != class count");
  long long degsum = 0;
  for (int i = 0; i < k; ++i) {
    require(t.degrees[i] >= 1 && g.order() % t.degrees[i] == 0,
            "character table: degree does not divide |G|");
    require(t.rows[i][0] == CycScalar::from_rational(*t.cyc, Rational(t.degrees[i])),
            "character table: value at identity != degree");
    degsum += static_cast<long long>(t.degrees[i]) * t.degrees[i];
  }
  require(degsum == g.order(), "character table: sum of squared degrees != |G|");
  for (int c = 0; c < k; ++c)
    require(t.rows[0][c] == CycScalar::one(*t.cyc), "character table: first row not trivial");

  std::vector<int> inv_class(k);
  for (int l = 0; l < k; ++l) inv_class[l] = g.class_of(g.inv(g.class_rep(l)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      CycScalar s = CycScalar::zero(*t.cyc);
      for (int l = 0; l < k; ++l)
        s += (t.rows[i][l] * t.rows[j][inv_class[l]]).scaled(Rational(g.class_size(l)));
      CycScalar expect = i == j ? CycScalar::from_rational(*t.cyc, Rational(g.order()))
                                : CycScalar::zero(*t.cyc);
      require(s == expect, "character table: row orthogonality fails");
    }
  for (int l = 0; l < k; ++l)
    for (int m = 0; m < k; ++m) {
      CycScalar s = CycScalar::zero(*t.cyc);
      for (int i = 0; i < k; ++i) s += t.rows[i][l] * t.rows[i][inv_class[m]];
      CycScalar expect = l == m ? CycScalar::from_rational(
                                      *t.cyc, Rational(g.order() / g.class_size(l)))
                                : CycScalar::zero(*t.cyc);
      require(s == expect, "character table: column orthogonality fails");
    }
}

CharacterTable character_table_from_json(const FiniteGroup &g, const CycContext &cyc,
                                         const nlohmann::json &j) {
  CharacterTable t;
  t.group = &g;
  t.cyc = &cyc;
  if (!j.contains("classes") || !j.contains("values"))
    throw parse_error("character table json: missing classes/values");
  const auto &classes = j.at("classes");
  if (static_cast<int>(classes.size()) != g.class_count())
    throw parse_error("character table json: class count mismatch");
  for (int c = 0; c < g.class_count(); ++c) {
    std::vector<int> elems = classes.at(c).get<std::vector<int>>();
    std::vector<int> expect = g.class_elements(c);
    if (elems != expect) throw parse_error("character table json: class ordering mismatch");
  }
  for (const auto &jrow : j.at("values")) {
    std::vector<CycScalar> row;
    for (const auto &jval : jrow) {
      auto coeffs = jval.get<std::vector<std::string>>();
      if (static_cast<int>(coeffs.size()) != cyc.degree())
        throw parse_error("character table json: coefficient length mismatch");
      CycScalar v = CycScalar::zero(cyc);
      for (size_t i = 0; i < coeffs.size(); ++i) {
        QMod1 dummy;  // reuse rational parsing
        auto slash = coeffs[i].find('/');
        Rational r = slash == std::string::npos
                         ? Rational(std::stoll(coeffs[i]))
                         : Rational(std::stoll(coeffs[i].substr(0, slash)),
                                    std::stoll(coeffs[i].substr(slash + 1)));
        (void)dummy;
        v += CycScalar::root(cyc, static_cast<long long>(i)).scaled(r);
      }
      row.push_back(std::move(v));
    }
    t.rows.push_back(std::move(row));
    Rational d = t.rows.back()[0].as_rational();
    require(d.is_integer(), "character table json: non-integer degree");
    t.degrees.push_back(static_cast<int>(d.num));
  }
  validate_character_table(t);
  return t;
}

nlohmann::json character_table_to_json(const CharacterTable &t) {
  nlohmann::json j;
  for (int c = 0; c < t.group->class_count(); ++c)
    j["classes"].push_back(t.group->class_elements(c));
  for (int i = 0; i < t.irr_count(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < t.group->class_count(); ++c) {
      nlohmann::json val = nlohmann::json::array();
      for (const auto &r : t.rows[i][c].reduced()) val.push_back(r.str());
      row.push_back(val);
    }
    j["values"].push_back(row);
  }
  return j;
}

QMod1 CentralCharacter::at(int z) const {
  const auto &elems = group->center().elems;
  auto it = std::lower_bound(elems.begin(), elems.end(), z);
  require(it != elems.end() && *it == z, "CentralCharacter: element not central");
  return on_center[static_cast<size_t>(it - elems.begin())];
}

CentralCharacter central_character(const CharacterTable &t, int irr) {
  const FiniteGroup &g = *t.group;
  const CycContext &cyc = *t.cyc;
  CentralCharacter out;
  out.group = &g;
  Rational dim(t.degrees[irr]);
  for (int z : g.center().elems) {
    const CycScalar &val = t.value_at(irr, z);
    bool found = false;
    for (int k = 0; k < cyc.conductor() && !found; ++k) {
      if (val == CycScalar::root(cyc, k).scaled(dim)) {
        out.on_center.push_back(QMod1(k, cyc.conductor()));
        found = true;
      }
    }
    require(found, "central_character: eta(z)/eta(1) is not a root of unity");
  }
  // multiplicativity
  const auto &elems = g.center().elems;
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j)
      require(out.at(g.mul(elems[i], elems[j])) == out.on_center[i] + out.on_center[j],
              "central_character: not multiplicative");
  return out;
}

}  // namespace dgaut
