#include "pncalc/witness.hpp"

namespace pncalc {

std::string index_string(const std::vector<std::size_t>& index) {
  std::string out = "(";
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(index[i]);
  }
  return out + ")";
}

std::optional<Witness> first_nonzero(const RatFunc& f, const Chart& chart) {
  if (f.is_zero()) return std::nullopt;
  return Witness{{}, f.to_string(chart), {}};
}

template <Variance V>
std::optional<Witness> first_nonzero(const AlternatingField<V>& field) {
  if (field.is_zero()) return std::nullopt;
  const auto& [idx, value] = *field.components().begin();
  std::vector<std::size_t> one_based;
  for (std::size_t i : idx) one_based.push_back(i + 1);
  return Witness{std::move(one_based), value.to_string(field.chart()), {}};
}

template std::optional<Witness> first_nonzero(const Multivector&);
template std::optional<Witness> first_nonzero(const DiffForm&);

std::optional<Witness> first_nonzero(const EndoField& n) {
  for (std::size_t i = 0; i < n.dim(); ++i)
    for (std::size_t j = 0; j < n.dim(); ++j)
      if (!n.at(i, j).is_zero()) return Witness{{i + 1, j + 1}, n.at(i, j).to_string(n.chart()), {}};
  return std::nullopt;
}

std::optional<Witness> first_nonzero(const Torsion& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t.at(i, j, k).is_zero())
          return Witness{{i + 1, j + 1, k + 1}, t.at(i, j, k).to_string(t.chart()), {}};
  return std::nullopt;
}

}  // namespace pncalc
