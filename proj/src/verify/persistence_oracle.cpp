#include "zzc/verify/persistence_oracle.hpp"

#include <map>

namespace zzc::verify {

namespace {

// Coefficient arithmetic kept apart from the matrix kernel on purpose.
struct Scalars {
  FieldSpec field;

  Rational norm(const Rational& x) const {
    if (field.is_rational()) return x;
    const BigInt p(field.characteristic);
    BigInt num = boost::multiprecision::numerator(x) % p;
    BigInt den = boost::multiprecision::denominator(x) % p;
    if (num < 0) num += p;
    if (den < 0) den += p;
    const BigInt inv = boost::multiprecision::powm(den, p - 2, p);
    return Rational((num * inv) % p);
  }
  Rational inv(const Rational& x) const {
    if (field.is_rational()) return 1 / x;
    const BigInt p(field.characteristic);
    return Rational(boost::multiprecision::powm(boost::multiprecision::numerator(x), p - 2, p));
  }
};

using Column = std::map<std::size_t, Rational>;  // row -> nonzero coefficient

}  // namespace

std::vector<PersistencePair> persistence_pairs(const Filtration& f, int n, FieldSpec field) {
  const Scalars k{field};
  const SComplex& cx = f.complex();
  const IndexFiltration idx = index_refinement(f);
  const std::size_t size = idx.order.size();
  std::vector<std::size_t> position(size);
  for (std::size_t i = 0; i < size; ++i) position[idx.order[i]] = i;

  std::vector<Column> cols(size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto faces = cx.facets(idx.order[i]);
    // facets() lists faces by the omitted vertex from last to first.
    for (std::size_t t = 0; t < faces.size(); ++t) {
      const std::size_t omitted = faces.size() - 1 - t;
      cols[i][position[faces[t]]] = k.norm(Rational(omitted % 2 == 0 ? 1 : -1));
    }
    std::erase_if(cols[i], [](const auto& kv) { return kv.second == 0; });
  }

  std::map<std::size_t, std::size_t> pivot_owner;  // low row -> column
  std::vector<bool> paired(size, false);
  std::vector<PersistencePair> pairs;
  for (std::size_t j = 0; j < size; ++j) {
    Column& c = cols[j];
    while (!c.empty()) {
      const auto low = c.rbegin()->first;
      const auto owner = pivot_owner.find(low);
      if (owner == pivot_owner.end()) break;
      const Column& other = cols[owner->second];
      const Rational factor = k.norm(c.rbegin()->second * k.inv(other.rbegin()->second));
      for (const auto& [row, v] : other) {
        Rational updated = k.norm(c[row] - factor * v);
        if (updated == 0) {
          c.erase(row);
        } else {
          c[row] = updated;
        }
      }
    }
    if (c.empty()) continue;
    const auto low = c.rbegin()->first;
    pivot_owner[low] = j;
    paired[low] = paired[j] = true;
    if (dimension_of(cx.simplices()[idx.order[low]]) == n) {
      pairs.push_back({idx.block_of[low], idx.block_of[j]});
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (!paired[i] && cols[i].empty() && dimension_of(cx.simplices()[idx.order[i]]) == n) {
      pairs.push_back({idx.block_of[i], 0});
    }
  }
  return pairs;
}

Diagram oracle_diagram(const Filtration& f, int n, FieldSpec field) {
  Diagram d;
  for (const auto& p : persistence_pairs(f, n, field)) {
    if (p.birth_step == p.death_step) continue;
    const Endpoint birth = p.birth_step == 1
                               ? Endpoint::neg_inf()
                               : Endpoint::of(StratumId::vertex(static_cast<std::int64_t>(p.birth_step)));
    const Endpoint death = p.death_step == 0
                               ? Endpoint::pos_inf()
                               : Endpoint::of(StratumId::edge(static_cast<std::int64_t>(p.death_step) - 1));
    ++d[{birth, death}];
  }
  return d;
}

}  // namespace zzc::verify
