#include "pncalc/calculus.hpp"

#include "pncalc/error.hpp"

namespace pncalc {

namespace {

IndexTuple without(const IndexTuple& idx, std::size_t pos) {
  IndexTuple out;
  out.reserve(idx.size() - 1);
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (i != pos) out.push_back(idx[i]);
  return out;
}

IndexTuple concat(IndexTuple a, const IndexTuple& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

// ---------------------------------------------------------------------------
// Forms

DiffForm ext_d(const DiffForm& omega) {
  DiffForm out(omega.chart(), omega.degree() + 1);
  for (const auto& [idx, w] : omega.components()) {
    for (std::size_t l = 0; l < omega.dim(); ++l) {
      RatFunc dw = w.partial(l);
      if (dw.is_zero()) continue;
      IndexTuple t{l};
      t.insert(t.end(), idx.begin(), idx.end());
      out.add_to(std::move(t), dw);
    }
  }
  return out;
}

DiffForm contract_coordinate(const DiffForm& omega, std::size_t i) {
  DiffForm out(omega.chart(), omega.degree() - 1);
  for (const auto& [idx, w] : omega.components()) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (idx[a] != i) continue;
      out.add_to(without(idx, a), parity_sign(a) == 1 ? w : -w);
    }
  }
  return out;
}

DiffForm int_vec(const Multivector& x, const DiffForm& omega) {
  require_same_chart(x.chart(), omega.chart());
  if (x.degree() != 1) throw DegreeMismatch(x.degree(), 1);
  DiffForm out(omega.chart(), omega.degree() - 1);
  for (const auto& [idx, w] : omega.components()) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const RatFunc xi = x.get({idx[a]});
      if (xi.is_zero()) continue;
      const RatFunc term = xi * w;
      out.add_to(without(idx, a), parity_sign(a) == 1 ? term : -term);
    }
  }
  return out;
}

DiffForm int_endo(const EndoField& n, const DiffForm& omega) {
  require_same_chart(n.chart(), omega.chart());
  DiffForm out(omega.chart(), omega.degree());
  for (const auto& [idx, w] : omega.components()) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t m = 0; m < n.dim(); ++m) {
        const RatFunc& nm = n.at(idx[a], m);
        if (nm.is_zero()) continue;
        IndexTuple t(idx);
        t[a] = m;
        out.add_to(std::move(t), nm * w);
      }
    }
  }
  return out;
}

DiffForm int_biv(const Multivector& p, const DiffForm& omega) {
  require_same_chart(p.chart(), omega.chart());
  if (p.degree() != 2) throw DegreeMismatch(p.degree(), 2);
  DiffForm out(omega.chart(), omega.degree() - 2);
  for (const auto& [ij, pij] : p.components()) {
    // Stored i < j: contributes P^{ij} i_{d_j} i_{d_i} omega.
    out += pij * contract_coordinate(contract_coordinate(omega, ij[0]), ij[1]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vector fields

RatFunc directional_derivative(const Multivector& x, const RatFunc& f) {
  if (x.degree() != 1) throw DegreeMismatch(x.degree(), 1);
  RatFunc s;
  for (const auto& [i, xi] : x.components()) {
    RatFunc df = f.partial(i[0]);
    if (!df.is_zero()) s += xi * df;
  }
  return s;
}

Multivector lie_bracket(const Multivector& x, const Multivector& y) {
  require_same_chart(x.chart(), y.chart());
  if (x.degree() != 1) throw DegreeMismatch(x.degree(), 1);
  if (y.degree() != 1) throw DegreeMismatch(y.degree(), 1);
  Multivector out(x.chart(), 1);
  for (std::size_t i = 0; i < x.dim(); ++i)
    out.set({i}, directional_derivative(x, y.get({i})) - directional_derivative(y, x.get({i})));
  return out;
}

DiffForm lie_deriv(const Multivector& x, const DiffForm& omega) {
  require_same_chart(x.chart(), omega.chart());
  return int_vec(x, ext_d(omega)) + ext_d(int_vec(x, omega));
}

Multivector lie_deriv(const Multivector& x, const Multivector& a) { return schouten(x, a); }

EndoField lie_deriv(const Multivector& x, const EndoField& n) {
  require_same_chart(x.chart(), n.chart());
  EndoField out(n.chart());
  for (std::size_t j = 0; j < n.dim(); ++j) {
    const Multivector ej = coordinate_vector(n.chart(), j);
    const Multivector col = lie_bracket(x, endo_apply(n, ej)) - endo_apply(n, lie_bracket(x, ej));
    for (std::size_t i = 0; i < n.dim(); ++i) out.set(i, j, col.get({i}));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Schouten brackets

namespace {

/// Schouten bracket of the algebroid with anchor N (identity when null):
///   [f d_I, g d_J] = fg [d_I, d_J]_N + f [d_I, g]_N ^ d_J
///                    - (-1)^{(a-1)(b-1)} g [d_J, f]_N ^ d_I
/// with [d_I, g]_N = sum_r (-1)^{a-r} (N d_{i_r})(g) d_{I \ i_r} and
/// [d_I, d_J]_N = sum_{r,s} (-1)^{r+s} [d_{i_r}, d_{j_s}]_N ^ d_{I\r} ^ d_{J\s}.
class AlgebroidSchouten {
 public:
  AlgebroidSchouten(const Chart& chart, const EndoField* anchor) : chart_(chart), anchor_(anchor) {
    if (anchor_ == nullptr) return;
    const std::size_t n = chart_.dim();
    coord_brackets_.assign(n * n, Multivector(chart_, 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Multivector c(chart_, 1);
        for (std::size_t k = 0; k < n; ++k)
          c.set({k}, anchor_->at(k, j).partial(i) - anchor_->at(k, i).partial(j));
        coord_brackets_[j * n + i] = -c;
        coord_brackets_[i * n + j] = std::move(c);
      }
    }
  }

  Multivector operator()(const Multivector& a, const Multivector& b) const {
    require_same_chart(a.chart(), b.chart());
    const int da = a.degree();
    const int db = b.degree();
    Multivector out(chart_, da + db - 1);
    if (da < 0 || db < 0 || da + db == 0) return out;
    const int cross_sign = ((da - 1) * (db - 1)) % 2 == 0 ? -1 : 1;
    for (const auto& [ia, f] : a.components()) {
      const auto anchored_f = anchored_partials(f);
      for (const auto& [jb, g] : b.components()) {
        const auto anchored_g = anchored_partials(g);
        if (anchor_ != nullptr && !ia.empty() && !jb.empty()) add_frame_term(out, ia, jb, f * g);
        // f [d_I, g]_N ^ d_J
        for (std::size_t r = 0; r < ia.size(); ++r) {
          const RatFunc& ng = anchored_g[ia[r]];
          if (ng.is_zero()) continue;
          const RatFunc c = f * ng;
          out.add_to(concat(without(ia, r), jb), parity_sign(ia.size() - 1 - r) == 1 ? c : -c);
        }
        // -(-1)^{(a-1)(b-1)} g [d_J, f]_N ^ d_I
        for (std::size_t s = 0; s < jb.size(); ++s) {
          const RatFunc& nf = anchored_f[jb[s]];
          if (nf.is_zero()) continue;
          const RatFunc c = g * nf;
          const int sign = cross_sign * parity_sign(jb.size() - 1 - s);
          out.add_to(concat(without(jb, s), ia), sign == 1 ? c : -c);
        }
      }
    }
    return out;
  }

 private:
  /// (N d_i)(h) for every i.
  std::vector<RatFunc> anchored_partials(const RatFunc& h) const {
    const std::size_t n = chart_.dim();
    std::vector<RatFunc> d(n);
    if (h.is_constant()) return d;
    for (std::size_t k = 0; k < n; ++k) d[k] = h.partial(k);
    if (anchor_ == nullptr) return d;
    std::vector<RatFunc> out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (!d[k].is_zero() && !anchor_->at(k, i).is_zero()) out[i] += anchor_->at(k, i) * d[k];
    return out;
  }

  void add_frame_term(Multivector& out, const IndexTuple& ia, const IndexTuple& jb, const RatFunc& fg) const {
    const std::size_t n = chart_.dim();
    for (std::size_t r = 0; r < ia.size(); ++r) {
      for (std::size_t s = 0; s < jb.size(); ++s) {
        const Multivector& c = coord_brackets_[ia[r] * n + jb[s]];
        if (c.is_zero()) continue;
        const IndexTuple rest = concat(without(ia, r), without(jb, s));
        const int sign = parity_sign(r + s);
        for (const auto& [k, ck] : c.components()) {
          const RatFunc term = fg * ck;
          out.add_to(concat(k, rest), sign == 1 ? term : -term);
        }
      }
    }
  }

  Chart chart_;
  const EndoField* anchor_;
  std::vector<Multivector> coord_brackets_;
};

}  // namespace

Multivector schouten(const Multivector& a, const Multivector& b) {
  return AlgebroidSchouten(a.chart(), nullptr)(a, b);
}

Multivector deformed_schouten(const EndoField& n, const Multivector& a, const Multivector& b) {
  require_same_chart(n.chart(), a.chart());
  return AlgebroidSchouten(a.chart(), &n)(a, b);
}

Multivector deformed_bracket(const EndoField& n, const Multivector& x, const Multivector& y) {
  return lie_bracket(endo_apply(n, x), y) + lie_bracket(x, endo_apply(n, y)) -
         endo_apply(n, lie_bracket(x, y));
}

// ---------------------------------------------------------------------------
// Torsion

Torsion::Torsion(Chart chart) : chart_(std::move(chart)), comps_(chart_.dim() * chart_.dim() * chart_.dim()) {}

bool Torsion::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

Multivector Torsion::apply(const Multivector& x, const Multivector& y) const {
  Multivector out(chart_, 1);
  for (std::size_t i = 0; i < dim(); ++i) {
    RatFunc s;
    for (const auto& [j, xj] : x.components())
      for (const auto& [k, yk] : y.components())
        if (!at(i, j[0], k[0]).is_zero()) s += at(i, j[0], k[0]) * xj * yk;
    out.set({i}, s);
  }
  return out;
}

Torsion nijenhuis_torsion(const EndoField& n) {
  Torsion t(n.chart());
  const std::size_t d = n.dim();
  for (std::size_t j = 0; j < d; ++j) {
    const Multivector ej = coordinate_vector(n.chart(), j);
    for (std::size_t k = j + 1; k < d; ++k) {
      const Multivector ek = coordinate_vector(n.chart(), k);
      const Multivector v =
          lie_bracket(endo_apply(n, ej), endo_apply(n, ek)) - endo_apply(n, deformed_bracket(n, ej, ek));
      for (std::size_t i = 0; i < d; ++i) {
        const RatFunc c = v.get({i});
        t.set(i, j, k, c);
        t.set(i, k, j, -c);
      }
    }
  }
  return t;
}

DiffForm koszul_bracket(const Multivector& p, const DiffForm& alpha, const DiffForm& beta) {
  require_same_chart(p.chart(), alpha.chart());
  require_same_chart(p.chart(), beta.chart());
  return lie_deriv(bivector_sharp(p, alpha), beta) - lie_deriv(bivector_sharp(p, beta), alpha) -
         ext_d(DiffForm::scalar(p.chart(), bivector_eval(p, alpha, beta)));
}

// ---------------------------------------------------------------------------
// Graded operators

GradedOperator graded_commutator(const GradedOperator& a, const GradedOperator& b) {
  const bool both_odd = a.odd && b.odd;
  return {a.degree + b.degree, a.odd != b.odd, [a, b, both_odd](const DiffForm& w) {
            const DiffForm ab = a(b(w));
            const DiffForm ba = b(a(w));
            return both_odd ? ab + ba : ab - ba;
          }};
}

GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) {
  if (a.degree != b.degree || a.odd != b.odd) throw DegreeMismatch(a.degree, b.degree);
  return {a.degree, a.odd, [a, b](const DiffForm& w) { return a(w) - b(w); }};
}

GradedOperator d_operator() { return {1, true, [](const DiffForm& w) { return ext_d(w); }}; }

GradedOperator i_endo_operator(const EndoField& n) {
  return {0, false, [n](const DiffForm& w) { return int_endo(n, w); }};
}

GradedOperator i_biv_operator(const Multivector& p) {
  return {-2, false, [p](const DiffForm& w) { return int_biv(p, w); }};
}

GradedOperator i_vec_operator(const Multivector& x) {
  return {-1, true, [x](const DiffForm& w) { return int_vec(x, w); }};
}

GradedOperator d_N(const EndoField& n) { return graded_commutator(i_endo_operator(n), d_operator()); }

Multivector d_P(const Multivector& p, const Multivector& a) { return schouten(p, a); }

GradedOperator dN_iP_commutator(const EndoField& n, const Multivector& p) {
  return graded_commutator(d_N(n), i_biv_operator(p));
}

GradedOperator derived_bracket_op(const EndoField& n, const Multivector& p) {
  const ContraTensor2 np = endo_bivector(n, p);
  if (!is_skew(np)) throw NotAdmissible();
  return dN_iP_commutator(n, p) - graded_commutator(d_operator(), i_biv_operator(to_bivector(np)));
}

}  // namespace pncalc
