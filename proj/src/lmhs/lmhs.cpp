#include "degen/lmhs/lmhs.hpp"

namespace degen::lmhs {

namespace {

std::string pw(long p, long w) { return "(" + std::to_string(p) + "," + std::to_string(w) + ")"; }

}  // namespace

void HodgeDeligneTable::set_dims(std::map<Key, long> dims) {
  const long k = k_, n = n_;
  if (n < 1) throw ValidationError("/n", "fiber dimension must be >= 1");
  if (k < 0 || k > 2 * n)
    throw ValidationError("/k", "degree " + std::to_string(k) + " outside [0, 2n]");
  for (const auto& [key, d] : dims) {
    const auto [p, w] = key;
    const std::string at = "/table/" + pw(p, w);
    if (d < 0) throw ValidationError(at, "negative dimension");
    if (d == 0) continue;
    if (w < 0 || w > 2 * k) throw ValidationError(at, "weight outside [0, 2k]");
    if (p < 0 || p > w) throw ValidationError(at, "Hodge level outside [0, w]");
    if (p > n || w - p > n) throw ValidationError(at, "Hodge type exceeds the fiber dimension");
    d_[key] = d;
  }
}

HodgeDeligneTable HodgeDeligneTable::unchecked(long k, long n, std::map<Key, long> dims) {
  HodgeDeligneTable t(k, n);
  t.set_dims(std::move(dims));
  return t;
}

HodgeDeligneTable::HodgeDeligneTable(long k, long n, std::map<Key, long> dims,
                                     std::optional<long> betti)
    : k_(k), n_(n) {
  set_dims(std::move(dims));
  for (const auto& [key, d] : d_) {
    const auto [p, w] = key;
    if (dim(w - p, w) != d)
      throw ValidationError("/table/" + pw(p, w), "Hodge symmetry d[p][w] = d[w-p][w] violated");
    const long r = w - k;
    if (r != 0 && dim(p - r, k - r) != d)
      throw ValidationError("/table/" + pw(p, w),
                            "nilpotent symmetry d[p][k+r] = d[p-r][k-r] violated");
  }
  if (betti && *betti != this->betti())
    throw ValidationError("/betti", "table dimensions sum to " + std::to_string(this->betti()) +
                                        ", expected Betti number " + std::to_string(*betti));
}

long HodgeDeligneTable::dim(long p, long w) const {
  auto it = d_.find({p, w});
  return it == d_.end() ? 0 : it->second;
}

long HodgeDeligneTable::betti() const {
  long s = 0;
  for (const auto& [key, d] : d_) s += d;
  return s;
}

long HodgeDeligneTable::level_dim(long p) const {
  long s = 0;
  for (const auto& [key, d] : d_)
    if (key.first == p) s += d;
  return s;
}

LimitingMHS::LimitingMHS(long n, std::map<long, DegreeData> degrees)
    : n_(n), degrees_(std::move(degrees)) {
  for (auto& [k, data] : degrees_) {
    const std::string at = "/degrees/" + std::to_string(k);
    if (data.table.degree() != k) throw ValidationError(at + "/k", "degree key mismatch");
    if (data.table.fiber_dim() != n) throw ValidationError(at, "fiber dimension mismatch");
    for (const auto& [p, rots] : data.rotations) {
      const long want = data.table.level_dim(p);
      if (static_cast<long>(rots.size()) != want)
        throw ValidationError(at + "/rotations/" + std::to_string(p),
                              "level has " + std::to_string(rots.size()) +
                                  " rotations but dimension " + std::to_string(want));
    }
    for (long p = 0; p <= std::min(k, n); ++p) {
      const long want = data.table.level_dim(p);
      if (want > 0 && !data.rotations.count(p))
        data.rotations[p] = RotationMultiset(static_cast<std::size_t>(want), RotationNumber());
    }
    for (auto& [p, rots] : data.rotations) rots = exactalg::sorted(rots);
  }
}

const DegreeData& LimitingMHS::degree(long k) const {
  auto it = degrees_.find(k);
  if (it == degrees_.end()) throw MissingData("limiting MHS has no data for degree " + std::to_string(k));
  return it->second;
}

bool LimitingMHS::unipotent() const {
  for (const auto& [k, data] : degrees_)
    for (const auto& [p, rots] : data.rotations)
      for (const auto& r : rots)
        if (!r.value().is_zero()) return false;
  return true;
}

exactalg::Integer LimitingMHS::rotation_denominator() const {
  exactalg::Integer l(1);
  for (const auto& [k, data] : degrees_)
    for (const auto& [p, rots] : data.rotations)
      for (const auto& r : rots) l = exactalg::lcm(l, r.value().den());
  return l;
}

Rational alpha(const LimitingMHS& mhs, long p, long q, Branch branch) {
  const DegreeData& d = mhs.degree(p + q);
  auto it = d.rotations.find(p);
  if (it == d.rotations.end()) return Rational(0);
  Rational s(0);
  for (const auto& r : it->second) s += branch == Branch::Lower ? r.value() : r.upper().value();
  return s;
}

Rational beta(const LimitingMHS& mhs, long p, long q) {
  const long k = p + q;
  const HodgeDeligneTable& t = mhs.degree(k).table;
  Rational s(0);
  for (long r = -k; r <= k; ++r) s += Rational(r) * Rational(t.dim(p, k + r));
  return s;
}

BetaSymmetryReport beta_symmetry_check(const LimitingMHS& mhs) {
  BetaSymmetryReport rep;
  const long n = mhs.fiber_dim();
  for (const auto& [k, data] : mhs.degrees()) {
    for (long p = 0; p <= k; ++p) {
      const long q = k - p;
      const Rational b = beta(mhs, p, q);
      if (b != -beta(mhs, q, p)) {
        rep.antisymmetry = false;
        rep.failures.push_back("beta^{" + std::to_string(p) + "," + std::to_string(q) + "} = " +
                               b.str() + " but beta^{" + std::to_string(q) + "," +
                               std::to_string(p) + "} = " + beta(mhs, q, p).str());
      }
      if (p > n || q > n || !mhs.has_degree(2 * n - k)) continue;
      ++rep.lefschetz_pairs_checked;
      const Rational b2 = beta(mhs, n - q, n - p);
      if (b != b2) {
        rep.lefschetz = false;
        rep.failures.push_back("beta^{" + std::to_string(p) + "," + std::to_string(q) + "} = " +
                               b.str() + " but beta^{" + std::to_string(n - q) + "," +
                               std::to_string(n - p) + "} = " + b2.str());
      }
    }
  }
  return rep;
}

AsymptoticExpansion hodge_expansion(const LimitingMHS& mhs, long p, long q) {
  return {alpha(mhs, p, q, Branch::Lower), beta(mhs, p, q)};
}

namespace {

void check_diamond(long n, const HodgeDiamond& h) {
  if (static_cast<long>(h.size()) != n + 1) throw ValidationError("/hodge", "expected n+1 rows");
  for (long p = 0; p <= n; ++p) {
    const auto& row = h[static_cast<std::size_t>(p)];
    if (static_cast<long>(row.size()) != n + 1)
      throw ValidationError("/hodge/" + std::to_string(p), "expected n+1 entries");
    for (long q = 0; q <= n; ++q) {
      const long v = row[static_cast<std::size_t>(q)];
      const std::string at = "/hodge/" + std::to_string(p) + "/" + std::to_string(q);
      if (v < 0) throw ValidationError(at, "negative Hodge number");
      if (v != h[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)])
        throw ValidationError(at, "inconsistent Hodge numbers: h^{p,q} != h^{q,p}");
      if (v != h[static_cast<std::size_t>(n - p)][static_cast<std::size_t>(n - q)])
        throw ValidationError(at, "inconsistent Hodge numbers: h^{p,q} != h^{n-p,n-q}");
    }
  }
}

HodgeDeligneTable pure_table(long n, long k, const HodgeDiamond& h) {
  std::map<HodgeDeligneTable::Key, long> d;
  for (long p = std::max(0L, k - n); p <= std::min(k, n); ++p) {
    const long v = h[static_cast<std::size_t>(p)][static_cast<std::size_t>(k - p)];
    if (v) d[{p, k}] = v;
  }
  return HodgeDeligneTable(k, n, std::move(d));
}

}  // namespace

LimitingMHS nodal_elliptic() {
  std::map<long, DegreeData> deg;
  deg.emplace(0, DegreeData{HodgeDeligneTable(0, 1, {{{0, 0}, 1}}), {}});
  // Picard-Lefschetz: N maps the (1,1) class of weight 2 onto the weight 0 class.
  deg.emplace(1, DegreeData{HodgeDeligneTable(1, 1, {{{1, 2}, 1}, {{0, 0}, 1}}), {}});
  deg.emplace(2, DegreeData{HodgeDeligneTable(2, 1, {{{1, 2}, 1}}), {}});
  return LimitingMHS(1, std::move(deg));
}

LimitingMHS odp(long n, long count, const std::optional<HodgeDiamond>& hodge) {
  if (n < 2) throw ValidationError("/n", "ordinary double point preset needs n >= 2");
  if (count < 1) throw ValidationError("/count", "node count must be >= 1");
  HodgeDiamond h(static_cast<std::size_t>(n + 1), std::vector<long>(static_cast<std::size_t>(n + 1), 0));
  if (hodge) {
    check_diamond(n, *hodge);
    h = *hodge;
  } else {
    h[0][0] = 1;
    h[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = 1;
  }
  std::map<long, DegreeData> deg;
  for (long k = 0; k <= 2 * n; ++k) {
    if (k == n) continue;
    HodgeDeligneTable t = pure_table(n, k, h);
    if (!hodge && t.betti() == 0) continue;
    deg.emplace(k, DegreeData{std::move(t), {}});
  }
  const long m = n / 2;
  std::map<HodgeDeligneTable::Key, long> d;
  for (long p = 0; p <= n; ++p) {
    const long v = hodge ? h[static_cast<std::size_t>(p)][static_cast<std::size_t>(n - p)] : 0;
    if (v) d[{p, n}] = v;
  }
  GrFRotations rot;
  if (n % 2) {
    // Vanishing cycles: weight n+1 of type ((n+1)/2, (n+1)/2) mapped by N onto
    // weight n-1 of type ((n-1)/2, (n-1)/2); trivial T_s. A given diamond counts
    // these classes among h^{(n+1)/2,(n-1)/2} and h^{(n-1)/2,(n+1)/2}.
    const long hi = (n + 1) / 2, lo = (n - 1) / 2;
    if (hodge) {
      d[{hi, n}] -= count;
      d[{lo, n}] -= count;
      if (d[{hi, n}] < 0 || d[{lo, n}] < 0)
        throw ValidationError("/hodge", "inconsistent Hodge numbers: fewer middle classes than nodes");
      if (d[{hi, n}] == 0) d.erase({hi, n});
      if (d[{lo, n}] == 0) d.erase({lo, n});
    }
    d[{hi, n + 1}] += count;
    d[{lo, n - 1}] += count;
  } else {
    // Gr^W is pure of weight n; T_s acts by -1 on the count vanishing classes
    // of type (n/2, n/2).
    if (hodge) {
      if (d[{m, n}] < count)
        throw ValidationError("/hodge", "inconsistent Hodge numbers: h^{n/2,n/2} < node count");
    } else {
      d[{m, n}] = count;
    }
    const long lvl = d[{m, n}];
    RotationMultiset r(static_cast<std::size_t>(lvl - count), RotationNumber());
    for (long i = 0; i < count; ++i) r.emplace_back(Rational(1, 2));
    rot[m] = r;
  }
  deg.emplace(n, DegreeData{HodgeDeligneTable(n, n, std::move(d)), std::move(rot)});
  return LimitingMHS(n, std::move(deg));
}

LimitingMHS pure(long n, const HodgeDiamond& hodge) {
  check_diamond(n, hodge);
  std::map<long, DegreeData> deg;
  for (long k = 0; k <= 2 * n; ++k) deg.emplace(k, DegreeData{pure_table(n, k, hodge), {}});
  return LimitingMHS(n, std::move(deg));
}

}  // namespace degen::lmhs
