#include "pncalc/tensor.hpp"

#include <algorithm>

#include "pncalc/error.hpp"

namespace pncalc {

int sort_with_sign(IndexTuple& idx) {
  int sign = 1;
  // Insertion sort: tuples are short, and the swap count gives the parity.
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

void require_same_chart(const Chart& a, const Chart& b) {
  if (!(a == b)) throw ChartMismatch();
}

// ---------------------------------------------------------------------------
// AlternatingField

template <Variance V>
AlternatingField<V> AlternatingField<V>::from_components(Chart chart, std::span<const RatFunc> comps) {
  if (comps.size() != chart.dim()) throw IndexOutOfRange(comps.size(), chart.dim());
  AlternatingField out(std::move(chart), 1);
  for (std::size_t i = 0; i < comps.size(); ++i) out.set({i}, comps[i]);
  return out;
}

template <Variance V>
RatFunc AlternatingField<V>::get(IndexTuple idx) const {
  if (static_cast<int>(idx.size()) != degree_) throw DegreeMismatch(static_cast<int>(idx.size()), degree_);
  const int s = sort_with_sign(idx);
  if (s == 0) return {};
  const auto it = comps_.find(idx);
  if (it == comps_.end()) return {};
  return s > 0 ? it->second : -it->second;
}

template <Variance V>
void AlternatingField<V>::set(IndexTuple idx, const RatFunc& value) {
  if (static_cast<int>(idx.size()) != degree_) throw DegreeMismatch(static_cast<int>(idx.size()), degree_);
  for (auto i : idx)
    if (i >= dim()) throw IndexOutOfRange(i, dim());
  const int s = sort_with_sign(idx);
  if (s == 0) {
    if (!value.is_zero()) throw DegreeMismatch(degree_, degree_);  // repeated index
    return;
  }
  if (value.is_zero()) {
    comps_.erase(idx);
  } else {
    comps_[idx] = s > 0 ? value : -value;
  }
}

template <Variance V>
void AlternatingField<V>::add_to(IndexTuple idx, const RatFunc& value) {
  if (value.is_zero()) return;
  if (static_cast<int>(idx.size()) != degree_) throw DegreeMismatch(static_cast<int>(idx.size()), degree_);
  const int s = sort_with_sign(idx);
  if (s == 0) return;
  auto it = comps_.find(idx);
  if (it == comps_.end()) {
    comps_.emplace(std::move(idx), s > 0 ? value : -value);
    return;
  }
  if (s > 0) {
    it->second += value;
  } else {
    it->second -= value;
  }
  if (it->second.is_zero()) comps_.erase(it);
}

template <Variance V>
void AlternatingField<V>::check_compatible(const AlternatingField& other) const {
  require_same_chart(chart_, other.chart_);
  if (degree_ != other.degree_) throw DegreeMismatch(degree_, other.degree_);
}

template <Variance V>
AlternatingField<V> AlternatingField<V>::operator-() const {
  AlternatingField out(*this);
  for (auto& [k, v] : out.comps_) v = -v;
  return out;
}

template <Variance V>
AlternatingField<V>& AlternatingField<V>::operator+=(const AlternatingField& other) {
  check_compatible(other);
  for (const auto& [k, v] : other.comps_) add_to(k, v);
  return *this;
}

template <Variance V>
AlternatingField<V>& AlternatingField<V>::operator-=(const AlternatingField& other) {
  check_compatible(other);
  for (const auto& [k, v] : other.comps_) add_to(k, -v);
  return *this;
}

template <Variance V>
AlternatingField<V>& AlternatingField<V>::operator*=(const RatFunc& f) {
  if (f.is_zero()) {
    comps_.clear();
    return *this;
  }
  for (auto& [k, v] : comps_) v *= f;
  return *this;
}

template <Variance V>
std::string AlternatingField<V>::to_string() const {
  const auto& names = chart_.names();
  if (degree_ == 0) return value().to_string(names);
  if (degree_ == 1) {
    std::string out = "(";
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i > 0) out += ", ";
      out += get({i}).to_string(names);
    }
    return out + ")";
  }
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : comps_) {
    if (!first) out += ", ";
    first = false;
    out += "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(k[i] + 1);
    }
    out += "): " + v.to_string(names);
  }
  return out + "}";
}

template class AlternatingField<Variance::contravariant>;
template class AlternatingField<Variance::covariant>;

Multivector coordinate_vector(const Chart& chart, std::size_t i) {
  Multivector out(chart, 1);
  out.set({i}, RatFunc(1));
  return out;
}

DiffForm coordinate_covector(const Chart& chart, std::size_t i) {
  DiffForm out(chart, 1);
  out.set({i}, RatFunc(1));
  return out;
}

template <Variance V>
AlternatingField<V> wedge(const AlternatingField<V>& a, const AlternatingField<V>& b) {
  require_same_chart(a.chart(), b.chart());
  AlternatingField<V> out(a.chart(), a.degree() + b.degree());
  if (a.degree() < 0 || b.degree() < 0) return out;
  for (const auto& [ia, fa] : a.components()) {
    for (const auto& [ib, fb] : b.components()) {
      IndexTuple idx(ia);
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_to(std::move(idx), fa * fb);
    }
  }
  return out;
}

template Multivector wedge(const Multivector&, const Multivector&);
template DiffForm wedge(const DiffForm&, const DiffForm&);

// ---------------------------------------------------------------------------
// EndoField / ContraTensor2

EndoField::EndoField(Chart chart) : chart_(std::move(chart)), entries_(chart_.dim() * chart_.dim()) {}

EndoField EndoField::identity(const Chart& chart) { return scalar(chart, RatFunc(1)); }

EndoField EndoField::scalar(const Chart& chart, const RatFunc& f) {
  EndoField out(chart);
  for (std::size_t i = 0; i < out.dim(); ++i) out.set(i, i, f);
  return out;
}

EndoField EndoField::diagonal(const Chart& chart, std::span<const RatFunc> entries) {
  if (entries.size() != chart.dim()) throw IndexOutOfRange(entries.size(), chart.dim());
  EndoField out(chart);
  for (std::size_t i = 0; i < out.dim(); ++i) out.set(i, i, entries[i]);
  return out;
}

bool EndoField::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const RatFunc& f) { return f.is_zero(); });
}

EndoField EndoField::operator-() const {
  EndoField out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

EndoField& EndoField::operator+=(const EndoField& other) {
  require_same_chart(chart_, other.chart_);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

EndoField& EndoField::operator-=(const EndoField& other) {
  require_same_chart(chart_, other.chart_);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

EndoField operator*(const RatFunc& f, const EndoField& n) {
  EndoField out(n);
  for (auto& e : out.entries_) e *= f;
  return out;
}

std::string EndoField::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i > 0) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < dim(); ++j) {
      if (j > 0) out += ", ";
      out += at(i, j).to_string(chart_);
    }
    out += "]";
  }
  return out + "]";
}

ContraTensor2::ContraTensor2(Chart chart) : chart_(std::move(chart)), entries_(chart_.dim() * chart_.dim()) {}

// ---------------------------------------------------------------------------
// Contractions

namespace {

void require_degree(int actual, int expected) {
  if (actual != expected) throw DegreeMismatch(actual, expected);
}

}  // namespace

Multivector bivector_sharp(const Multivector& p, const DiffForm& alpha) {
  require_same_chart(p.chart(), alpha.chart());
  require_degree(p.degree(), 2);
  require_degree(alpha.degree(), 1);
  Multivector out(p.chart(), 1);
  for (const auto& [ij, pij] : p.components()) {
    // Stored entry P^{ij} with i < j; P^{ji} = -P^{ij}.
    const std::size_t i = ij[0];
    const std::size_t j = ij[1];
    out.add_to({j}, pij * alpha.get({i}));
    out.add_to({i}, -(pij * alpha.get({j})));
  }
  return out;
}

RatFunc bivector_eval(const Multivector& p, const DiffForm& alpha, const DiffForm& beta) {
  return pairing(beta, bivector_sharp(p, alpha));
}

Multivector endo_apply(const EndoField& n, const Multivector& x) {
  require_same_chart(n.chart(), x.chart());
  require_degree(x.degree(), 1);
  Multivector out(x.chart(), 1);
  for (std::size_t i = 0; i < n.dim(); ++i) {
    RatFunc s;
    for (const auto& [j, xj] : x.components()) s += n.at(i, j[0]) * xj;
    out.set({i}, s);
  }
  return out;
}

DiffForm endo_transpose_apply(const EndoField& n, const DiffForm& alpha) {
  require_same_chart(n.chart(), alpha.chart());
  require_degree(alpha.degree(), 1);
  DiffForm out(alpha.chart(), 1);
  for (std::size_t j = 0; j < n.dim(); ++j) {
    RatFunc s;
    for (const auto& [i, ai] : alpha.components()) s += n.at(i[0], j) * ai;
    out.set({j}, s);
  }
  return out;
}

EndoField endo_compose(const EndoField& n, const EndoField& m) {
  require_same_chart(n.chart(), m.chart());
  EndoField out(n.chart());
  const std::size_t d = n.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      RatFunc s;
      for (std::size_t k = 0; k < d; ++k) {
        if (n.at(i, k).is_zero() || m.at(k, j).is_zero()) continue;
        s += n.at(i, k) * m.at(k, j);
      }
      out.set(i, j, s);
    }
  }
  return out;
}

EndoField endo_power(const EndoField& n, unsigned k) {
  EndoField out = EndoField::identity(n.chart());
  for (unsigned i = 0; i < k; ++i) out = endo_compose(out, n);
  return out;
}

RatFunc endo_trace(const EndoField& n) {
  RatFunc s;
  for (std::size_t i = 0; i < n.dim(); ++i) s += n.at(i, i);
  return s;
}

ContraTensor2 endo_bivector(const EndoField& n, const Multivector& p) {
  require_same_chart(n.chart(), p.chart());
  require_degree(p.degree(), 2);
  ContraTensor2 out(p.chart());
  const std::size_t d = n.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      RatFunc s;
      for (std::size_t k = 0; k < d; ++k) {
        if (n.at(i, k).is_zero() || k == j) continue;
        s += n.at(i, k) * p.get({k, j});
      }
      out.set(i, j, s);
    }
  }
  return out;
}

bool is_skew(const ContraTensor2& t) {
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i; j < t.dim(); ++j)
      if (!(t.at(i, j) + t.at(j, i)).is_zero()) return false;
  return true;
}

Multivector to_bivector(const ContraTensor2& t) {
  if (!is_skew(t)) throw NotSkew();
  Multivector out(t.chart(), 2);
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) out.set({i, j}, t.at(i, j));
  return out;
}

RatFunc pairing(const DiffForm& omega, const Multivector& a) {
  require_same_chart(omega.chart(), a.chart());
  if (omega.degree() != a.degree()) throw DegreeMismatch(omega.degree(), a.degree());
  RatFunc s;
  const auto& small = omega.components().size() <= a.components().size() ? omega.components() : a.components();
  for (const auto& [idx, v] : small) {
    (void)v;
    const RatFunc w = omega.get(idx);
    if (w.is_zero()) continue;
    const RatFunc x = a.get(idx);
    if (x.is_zero()) continue;
    s += w * x;
  }
  return s;
}

}  // namespace pncalc
